#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoco/build.hpp"
#include "hoco/extend.hpp"

using namespace hoco;

static long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

TEST_CASE("standard simplices validate and have the right cells") {
  for (int n = 0; n <= 5; ++n) {
    auto st = standard(n);
    CHECK(validate(*st.set).ok);
    for (int d = 0; d <= n; ++d) CHECK(st.set->size(d) == binom(n + 1, d + 1));
    // total simplices of dimension m = #monotone [m] -> [n]
    for (int m = 0; m <= n + 1 && m <= 4; ++m)
      CHECK(static_cast<long long>(st.set->simplices(m).size()) == binom(n + m + 1, m + 1));
  }
}

TEST_CASE("operator action is functorial") {
  auto st = standard(3);
  for (int m = 0; m <= 3; ++m)
    for (auto& s : st.set->simplices(m))
      for (int k = 0; k <= 3; ++k)
        for (auto& b : all_monotone(k, m)) {
          EZ sb = st.set->act(s, b);
          for (int q = 0; q <= 2; ++q)
            for (auto& a : all_monotone(q, k))
              CHECK(st.set->act(sb, a) == st.set->act(s, compose(b, a)));
        }
}

TEST_CASE("action on the standard simplex matches vertex composition") {
  auto st = standard(4);
  for (int m = 0; m <= 3; ++m)
    for (auto& a : all_monotone(m, 4)) {
      EZ s = st.set->act(nondeg(st.id_of({0, 1, 2, 3, 4})), a);
      CHECK(s == st.simplex(a));
    }
}

TEST_CASE("boundary and horn subcomplexes") {
  for (int n = 1; n <= 4; ++n) {
    auto st = standard(n);
    auto bd = restrict_subcomplex(boundary_sub(st));
    CHECK(validate(*bd.set).ok);
    CHECK(validate(bd.inclusion).ok);
    CHECK(bd.set->size(n) == 0);
    CHECK(bd.set->size(n - 1) == n + 1);
    for (int k = 0; k <= n; ++k) {
      auto hn = restrict_subcomplex(horn_sub(st, k));
      CHECK(validate(*hn.set).ok);
      CHECK(hn.set->size(n - 1) == n);
    }
  }
}

TEST_CASE("vertices of simplices") {
  auto st = standard(3);
  EZ top = nondeg(st.id_of({0, 1, 2, 3}));
  for (int v = 0; v <= 3; ++v) CHECK(st.set->vertex(top, v) == st.id_of({v}));
  EZ degen = st.set->act(top, op_sigma(3, 1));
  CHECK(degen.degenerate());
  CHECK(st.set->vertex(degen, 2) == st.id_of({1}));
}

TEST_CASE("map validation catches a broken assignment") {
  auto d1 = standard(1);
  auto d2 = standard(2);
  SMap f;
  f.src = d1.set;
  f.tgt = d2.set;
  f.assign = {{nondeg(d2.id_of({0})), nondeg(d2.id_of({2}))},
              {nondeg(d2.id_of({0, 1}))}};  // edge endpoints disagree
  CHECK_FALSE(validate(f).ok);
  f.assign[1][0] = nondeg(d2.id_of({0, 2}));
  CHECK(validate(f).ok);
}

TEST_CASE("map enumeration counts maps Delta^m -> Delta^n") {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      auto A = standard(m), B = standard(n);
      auto maps = enumerate_maps(A.set, B.set);
      CHECK(static_cast<long long>(maps.size()) == binom(n + m + 1, m + 1));
      for (auto& f : maps) CHECK(validate(f).ok);
    }
}

TEST_CASE("extension solving fills an inner horn of a nerve-like target") {
  // lift Lambda^2_1 -> Delta^2 against itself: the unique filler is the identity
  auto st = standard(2);
  auto hn = restrict_subcomplex(horn_sub(st, 1));
  ExtensionProblem p;
  p.domain = st.set;
  p.target = st.set;
  p.init_tables();
  // fix the horn part to the inclusion, leave face 1 and the top cell free
  for (int d = 0; d <= 1; ++d)
    for (int i = 0; i < st.set->size(d); ++i)
      if (horn_sub(st, 1).contains(CellId{d, i})) p.fix(CellId{d, i}, nondeg(CellId{d, i}));
  auto sol = first_extension(p);
  REQUIRE(sol.has_value());
  CHECK(sol->on_cell(CellId{2, 0}) == nondeg(CellId{2, 0}));
}
