#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoco/build.hpp"

using namespace hoco;

// independent count of jointly nondegenerate tuples by direct enumeration of
// monotone tuples into the factor vertex orders (oracle for cube cell counts)
static int chain_count(int k, int d) {
  // strict chains of length d+1 in {0,1}^k == nondegenerate d-cells of cube^k
  // counted by inclusion-exclusion over weak chains: sum (-1)^i C(d,i) (d+1-i+1)^k
  long long total = 0;
  auto binom = [](int n, int r) {
    long long v = 1;
    for (int i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
    return v;
  };
  for (int i = 0; i <= d; ++i) {
    long long weak = 1;
    for (int q = 0; q < k; ++q) weak *= (d - i + 2);  // #monotone [d-i] -> [1]
    total += (i % 2 == 0 ? 1 : -1) * binom(d, i) * weak;
  }
  return static_cast<int>(total);
}

TEST_CASE("binary product of simplices") {
  auto d1 = standard(1);
  auto P = product(d1.set, d1.set, 4);
  CHECK(validate(*P.set).ok);
  CHECK(P.set->truncation == -1);
  CHECK(P.set->size(0) == 4);
  CHECK(P.set->size(1) == 5);
  CHECK(P.set->size(2) == 2);
  CHECK(P.set->size(3) == 0);
  CHECK(validate(P.proj[0]).ok);
  CHECK(validate(P.proj[1]).ok);

  auto d2 = standard(2);
  auto Q = product(d2.set, d1.set, 4);
  CHECK(validate(*Q.set).ok);
  // shuffle count: top cells of Delta^2 x Delta^1 = C(3,1) = 3
  CHECK(Q.set->size(3) == 3);
}

TEST_CASE("cubes with boundaries and open boxes") {
  for (int k = 0; k <= 3; ++k) {
    auto c = cube(k, 4);
    CHECK(validate(*c.set).ok);
    for (int d = 0; d <= k; ++d) CHECK(c.set->size(d) == chain_count(k, d));
    CHECK(c.set->size(k + 1) == 0);
    if (k >= 1) {
      auto bd = cube_boundary_sub(c);
      CHECK(is_face_closed(bd));
      // boundary omits exactly the cells through both endpoints in every axis;
      // top cells all touch the boundary except the nondegenerate k-cells
      CHECK(!bd.contains(CellId{k, 0}));
      auto bdr = restrict_subcomplex(bd);
      CHECK(validate(*bdr.set).ok);
      CHECK(bdr.set->size(k) == 0);
      // oracle: the open box omits from the boundary exactly the cells whose
      // only constant coordinate is x_j = 1-e, i.e. the interior cells of a
      // (k-1)-cube; count those by direct tuple enumeration
      int interior = 0;
      for (int d = 0; d <= k - 1; ++d) {
        auto comps = all_monotone(d, 1);
        std::vector<size_t> pick(static_cast<size_t>(k - 1), 0);
        auto rec = [&](auto&& self, int pos, std::vector<SOp>& cur) -> void {
          if (pos == k - 1) {
            for (auto& r : cur) {
              bool constant = true;
              for (int v : r.img)
                if (v != r.img[0]) constant = false;
              if (constant) return;
            }
            for (int i = 0; i + 1 <= d; ++i) {
              bool flat = true;
              for (auto& r : cur)
                if (r(i) != r(i + 1)) flat = false;
              if (flat) return;
            }
            ++interior;
            return;
          }
          for (auto& r : comps) {
            cur.push_back(r);
            self(self, pos + 1, cur);
            cur.pop_back();
          }
        };
        std::vector<SOp> cur;
        if (k - 1 > 0)
          rec(rec, 0, cur);
        else if (d == 0)
          ++interior;  // the point is its own interior cell
      }
      for (int j = 0; j < k; ++j)
        for (int e = 0; e <= 1; ++e) {
          auto hs = cube_horn_sub(c, j, e);
          CHECK(is_face_closed(hs));
          auto hr = restrict_subcomplex(hs);
          CHECK(validate(*hr.set).ok);
          int missing = 0;
          for (int d = 0; d <= k; ++d) missing += bdr.set->size(d) - hr.set->size(d);
          CHECK(missing == interior);
        }
    }
  }
}

TEST_CASE("cube coordinates and named simplices") {
  auto c = cube(2, 4);
  // the two nondegenerate squares, via explicit coordinate tuples
  SOp r01{1, {0, 0, 1}}, r02{1, {0, 1, 1}};
  EZ s1 = c.simplex({r01, r02});
  EZ s2 = c.simplex({r02, r01});
  CHECK(!s1.degenerate());
  CHECK(!s2.degenerate());
  CHECK(s1.cell != s2.cell);
  for (int q = 0; q <= 1; ++q) {
    CHECK(c.coord(s1, 0) == r01);
    CHECK(c.coord(s1, 1) == r02);
  }
  // degenerate tuple normalises
  SOp flat{1, {0, 0}};
  EZ d = c.simplex({flat, flat});
  CHECK(d.degenerate());
  CHECK(d.cell == c.vertex({0, 0}));
}

TEST_CASE("join with a point") {
  auto d1 = standard(1);
  auto J = join_with_point(d1.set);
  CHECK(validate(*J.set).ok);
  CHECK(J.set->size(0) == 3);
  CHECK(J.set->size(1) == 3);
  CHECK(J.set->size(2) == 1);
  // boundary * pt = outer horn on the last vertex
  auto d2 = standard(2);
  auto bd = restrict_subcomplex(boundary_sub(d2));
  auto JB = join_with_point(bd.set);
  CHECK(validate(*JB.set).ok);
  auto d3 = standard(3);
  auto horn = restrict_subcomplex(horn_sub(d3, 3));
  for (int d = 0; d <= 3; ++d) CHECK(JB.set->size(d) == horn.set->size(d));
}

TEST_CASE("quotients and suspensions") {
  auto d1 = standard(1);
  auto rs = right_suspension(d1.set);
  CHECK(validate(*rs.set).ok);
  CHECK(rs.set->size(0) == 2);
  CHECK(rs.set->size(1) == 2);
  CHECK(rs.set->size(2) == 1);
  CHECK(validate(rs.quot.projection).ok);

  auto s = suspension(d1.set, 4);
  CHECK(validate(*s.set).ok);
  CHECK(s.set->size(0) == 2);
  CHECK(s.set->size(1) == 3);
  CHECK(s.set->size(2) == 2);
  CHECK(validate(s.quot.projection).ok);

  // suspension of a point: Delta^1 with both cells surviving? no: both ends
  // collapse, leaving the two class vertices joined by one edge
  auto d0 = standard(0);
  auto s0 = suspension(d0.set, 3);
  CHECK(validate(*s0.set).ok);
  CHECK(s0.set->size(0) == 2);
  CHECK(s0.set->size(1) == 1);
}

TEST_CASE("opposite sets") {
  auto d2 = standard(2);
  auto op = opposite(d2.set);
  CHECK(validate(*op).ok);
  auto opop = opposite(op);
  // double dual is the identity on face tables
  for (int d = 1; d <= 2; ++d)
    for (int i = 0; i < d2.set->size(d); ++i)
      CHECK(opop->cell(CellId{d, i}).faces == d2.set->cell(CellId{d, i}).faces);
  // the first face of the opposite 2-cell is the last face of the original
  CHECK(op->face(CellId{2, 0}, 0) == d2.set->face(CellId{2, 0}, 2));
}

TEST_CASE("disjoint union") {
  auto d1 = standard(1);
  auto d2 = standard(2);
  SMap inl, inr;
  auto u = disjoint_union(d1.set, d2.set, &inl, &inr);
  CHECK(validate(*u).ok);
  CHECK(u->size(0) == 5);
  CHECK(u->size(1) == 4);
  CHECK(u->size(2) == 1);
  CHECK(validate(inl).ok);
  CHECK(validate(inr).ok);
}
