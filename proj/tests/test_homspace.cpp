#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hoco/homspace.hpp"

using namespace hoco;

TEST_CASE("connected components") {
  auto st = standard(2);
  auto B = restrict_subcomplex(boundary_sub(st)).set;
  CHECK(pi0_count(B) == 1);
  auto two = disjoint_union(B, standard(0).set);
  CHECK(pi0_count(two) == 2);
}

TEST_CASE("homotopy category of a classical nerve recovers the category") {
  auto M = nerve_of_category(linear_cat(2), 3);
  auto H = homotopy_category(M.set);
  CHECK(validate(H.cat).ok);
  CHECK(H.cat.n_obj == 3);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      CHECK(H.cat.hom(a, b).size() == (a <= b ? 1u : 0u));
  auto W = nerve_of_category(cyclic2_cat(), 3);
  auto HW = homotopy_category(W.set);
  CHECK(validate(HW.cat).ok);
  CHECK(HW.cat.n_mor() == 2);
  CHECK(HW.cat.inverse(1).has_value());
}

TEST_CASE("groupoidal core keeps exactly the invertible part") {
  auto M = nerve_of_category(linear_cat(2), 3);
  auto core = groupoidal_core(M.set);
  CHECK(core.set->size(0) == 3);
  CHECK(core.set->size(1) == 0);
  auto W = nerve_of_category(walking_iso_cat(), 3);
  auto cw = groupoidal_core(W.set);
  for (int d = 0; d <= 3; ++d) CHECK(cw.set->size(d) == W.set->size(d));
}

TEST_CASE("right hom spaces in classical nerves are discrete hom sets") {
  auto M = nerve_of_category(linear_cat(2), 4);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      auto R = right_hom(M.set, a, b, 2);
      CHECK(validate(*R.set).ok);
      CHECK(R.set->size(0) == (a <= b ? 1 : 0));
      CHECK(R.set->size(1) == 0);
      CHECK(R.set->size(2) == 0);
    }
  auto W = nerve_of_category(cyclic2_cat(), 4);
  auto R = right_hom(W.set, 0, 0, 2);
  CHECK(R.set->size(0) == 2);
  CHECK(pi0_count(R.set) == 2);
  auto L = left_hom(W.set, 0, 0, 2);
  CHECK(L.set->size(0) == 2);
}

TEST_CASE("cylinder hom spaces and the one sided comparison") {
  auto M = nerve_of_category(linear_cat(2), 4);
  auto H = hom_space(M.set, 0, 2, 2);
  CHECK(validate(*H.set).ok);
  // vertices of hom(0,2): edges from 0 to 2, one per factorization witness
  CHECK(pi0_count(H.set) == 1);
  auto R = right_hom(M.set, 0, 2, 2);
  SMap u = u_comparison(R, H);
  CHECK(validate(u).ok);
  std::set<std::pair<int, int>> seen;
  for (int d = 0; d <= 2; ++d)
    for (int i = 0; i < R.set->size(d); ++i) {
      const EZ& im = u.on_cell(CellId{d, i});
      CHECK(im.epi.is_identity());
      CHECK(!seen.count({d, im.cell.idx}));
      seen.insert({d, im.cell.idx});
    }
}

TEST_CASE("components of hom spaces are the hom sets of the homotopy category") {
  auto W = nerve_of_category(cyclic2_cat(), 4);
  auto HW = homotopy_category(W.set);
  auto H = hom_space(W.set, 0, 0, 2);
  CHECK(pi0_count(H.set) == static_cast<int>(HW.cat.hom(0, 0).size()));
  auto M = nerve_of_category(linear_cat(2), 4);
  auto HM = homotopy_category(M.set);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      auto Hab = hom_space(M.set, a, b, 1);
      CHECK(pi0_count(Hab.set) == static_cast<int>(HM.cat.hom(a, b).size()));
    }
}

// one object enriched category on the classifying space of Z/2, as in the
// nerve tests
static SCat bz2_scat(int hom_bound) {
  SCat C;
  C.n_obj = 1;
  C.obj_names = {"*"};
  C.name = "B(Z/2)";
  auto N = std::make_shared<NerveSSet>(nerve_of_category(cyclic2_cat(), hom_bound));
  C.fun = {{N->set}};
  C.id_vertex = {0};
  C.comp = [N](int, int, int, const EZ& x, const EZ& y) {
    auto [s1, w1] = N->string_of_simplex(x);
    auto [s2, w2] = N->string_of_simplex(y);
    (void)s2;
    std::vector<int> w;
    for (size_t i = 0; i < w1.size(); ++i) w.push_back(N->cat.then(w1[i], w2[i]));
    return N->simplex_of(w, s1);
  };
  return C;
}

TEST_CASE("function complexes embed in right hom spaces of the nerve") {
  auto C = bz2_scat(2);
  auto N = coherent_nerve(C, 3);
  auto R = right_hom(N.set, 0, 0, 2);
  SMap f = fun_to_rhom(N, 0, 0, R);
  CHECK(validate(f).ok);
  std::set<std::pair<std::pair<int, int>, SOp>> seen;
  for (int d = 0; d <= f.src->top_dim(); ++d)
    for (int i = 0; i < f.src->size(d); ++i) {
      const EZ& im = f.on_cell(CellId{d, i});
      auto key = std::make_pair(std::make_pair(im.cell.dim, im.cell.idx), im.epi);
      CHECK(!seen.count(key));
      seen.insert(key);
    }
  // the discrete case: an isomorphism onto the right hom space
  auto S = scat_of_fincat(linear_cat(2));
  auto ND = coherent_nerve(S.cat, 3);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      auto RD = right_hom(ND.set, a, b, 2);
      SMap g = fun_to_rhom(ND, a, b, RD);
      CHECK(validate(g).ok);
      CHECK(g.src->size(0) == RD.set->size(0));
    }
}
