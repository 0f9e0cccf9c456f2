#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hoco/nerve.hpp"

using namespace hoco;

// one object enriched category with hom space the classifying space of Z/2;
// strings multiply letterwise, which is a valid composition because the
// group is abelian
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

TEST_CASE("nerve of a discrete enriched category is the classical nerve") {
  std::vector<FinCat> cats = {linear_cat(3), cyclic2_cat()};
  for (auto& D : cats) {
    auto S = scat_of_fincat(D);
    CHECK(validate_scat(S.cat, 2).ok);
    auto N = coherent_nerve(S.cat, 3);
    CHECK(validate(*N.set).ok);
    auto M = nerve_of_category(D, 3);
    for (int d = 0; d <= 3; ++d) CHECK(N.set->size(d) == M.set->size(d));
  }
}

TEST_CASE("nerve of an ordered linear category fills inner horns only") {
  auto S = scat_of_fincat(linear_cat(3));
  auto N = coherent_nerve(S.cat, 3);
  CHECK(quasicategory_check(N.set, 3).ok);
  CHECK(!kan_check(N.set, 2).ok);
}

TEST_CASE("nerve of a group classifying category fills all horns") {
  auto C = bz2_scat(4);
  CHECK(validate_scat(C, 2).ok);
  auto N = coherent_nerve(C, 3);
  CHECK(validate(*N.set).ok);
  CHECK(kan_check(N.set, 3).ok);
}

TEST_CASE("horn fillers are genuine extensions") {
  auto S = scat_of_fincat(linear_cat(2));
  auto N = coherent_nerve(S.cat, 3);
  auto st = standard(2);
  auto horn = restrict_subcomplex(horn_sub(st, 1));
  auto maps = enumerate_maps(horn.set, N.set, 100000);
  CHECK(!maps.empty());
  for (auto& m : maps) {
    auto fill = fill_horn(N.set, 2, 1, m, st, horn);
    REQUIRE(fill.has_value());
    CHECK(validate(*fill).ok);
    for (int d = 0; d <= horn.set->top_dim(); ++d)
      for (int i = 0; i < horn.set->size(d); ++i) {
        EZ via = fill->apply(horn.inclusion.on_cell(CellId{d, i}));
        CHECK(via == m.on_cell(CellId{d, i}));
      }
  }
}

TEST_CASE("functor enumeration honours fixed data") {
  auto C = bz2_scat(3);
  auto shape = coherent_simplex(2);
  std::vector<std::vector<std::optional<EZ>>> atom_fixed(2);
  atom_fixed[1].assign(static_cast<size_t>(shape.comp.size(1)), std::nullopt);
  auto all = enumerate_sfunctors(shape.comp, C, {}, {});
  CHECK(all.size() == 2);
  // pin the coherence cell to the nondegenerate loop
  EZ g = nondeg(CellId{1, 0});
  atom_fixed[1][0] = g;
  auto some = enumerate_sfunctors(shape.comp, C, {}, atom_fixed);
  CHECK(some.size() == 1);
  CHECK(validate(some[0]).ok);
  CHECK(some[0].atom_image(AtomId{1, 0}) == g);
}

TEST_CASE("nerve duality") {
  auto S = scat_of_fincat(linear_cat(2));
  auto NC = coherent_nerve(S.cat, 3);
  auto NCd = coherent_nerve(op_scat(S.cat), 3);
  SMap f = nerve_duality_map(NC, opposite(NC.set), NCd);
  CHECK(validate(f).ok);
  for (int d = 0; d <= 3; ++d) {
    CHECK(NC.set->size(d) == NCd.set->size(d));
    std::set<int> seen;
    for (int i = 0; i < NC.set->size(d); ++i) {
      const EZ& im = f.on_cell(CellId{d, i});
      CHECK(im.epi.is_identity());
      seen.insert(im.cell.idx);
    }
    CHECK(static_cast<int>(seen.size()) == NC.set->size(d));
  }
}
