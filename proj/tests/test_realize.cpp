#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoco/realize.hpp"

using namespace hoco;

static SMap standard_op_map(const StandardSSet& a, const StandardSSet& b, const SOp& op) {
  // the simplicial map between standard simplices named by a monotone op
  SMap f;
  f.src = a.set;
  f.tgt = b.set;
  f.assign.resize(static_cast<size_t>(a.set->top_dim()) + 1);
  for (int d = 0; d <= a.set->top_dim(); ++d)
    for (int i = 0; i < a.set->size(d); ++i) {
      auto verts = a.verts_of(CellId{d, i});
      SOp comp_op;
      comp_op.target = b.n;
      for (int v : verts) comp_op.img.push_back(op(v));
      f.assign[static_cast<size_t>(d)].push_back(b.simplex(comp_op));
    }
  return f;
}

TEST_CASE("realizing standard simplices matches the flag presentation") {
  for (int n = 0; n <= 4; ++n) {
    auto st = standard(n);
    auto R = realize(st.set);
    CHECK(validate(R.comp).ok);
    auto C = coherent_simplex(n);
    for (int r = 0; r <= C.comp.top_dim(); ++r) CHECK(R.comp.size(r) == C.comp.size(r));
    CFunctor F = realization_vs_flags(R, st, C);
    CHECK(validate(F).ok);
    CHECK(subcomputad_check(F).ok);  // injective on atoms, so an isomorphism
  }
}

TEST_CASE("realizing boundaries and horns") {
  for (int n = 2; n <= 4; ++n) {
    auto st = standard(n);
    auto bnd = restrict_subcomplex(boundary_sub(st));
    auto Rb = realize(bnd.set);
    CHECK(validate(Rb.comp).ok);
    auto Cb = coherent_simplex(n, boundary_top_filter(n));
    for (int r = 0; r <= Cb.comp.top_dim(); ++r) CHECK(Rb.comp.size(r) == Cb.comp.size(r));
    for (int k = 0; k <= n; ++k) {
      auto horn = restrict_subcomplex(horn_sub(st, k));
      auto Rh = realize(horn.set);
      CHECK(validate(Rh.comp).ok);
      auto Ch = coherent_simplex(n, horn_top_filter(n, k));
      for (int r = 0; r <= Ch.comp.top_dim(); ++r) CHECK(Rh.comp.size(r) == Ch.comp.size(r));
    }
  }
}

TEST_CASE("realization is functorial in the simplicial set") {
  auto s2 = standard(2);
  auto s3 = standard(3);
  auto R2 = realize(s2.set);
  auto R3 = realize(s3.set);
  for (int j = 0; j <= 3; ++j) {
    SMap dj = standard_op_map(s2, s3, op_delta(3, j));
    REQUIRE(validate(dj).ok);
    CFunctor F = realize_map(dj, R2, R3);
    CHECK(validate(F).ok);
  }
  // a degeneracy: the image of the top bead is an identity word
  SMap s0 = standard_op_map(s3, s2, op_sigma(2, 0));
  REQUIRE(validate(s0).ok);
  CFunctor G = realize_map(s0, R3, R2);
  CHECK(validate(G).ok);
  // composite of coface then codegeneracy realizes to the composite functor
  for (int j = 0; j <= 3; ++j) {
    SMap dj = standard_op_map(s2, s3, op_delta(3, j));
    CFunctor F = realize_map(dj, R2, R3);
    CFunctor H = realize_map(compose(s0, dj), R2, R2);
    for (int r = 0; r <= R2.comp.top_dim(); ++r)
      for (int i = 0; i < R2.comp.size(r); ++i)
        CHECK(H.atom_image(AtomId{r, i}) == G.apply(F.atom_image(AtomId{r, i})));
  }
}

TEST_CASE("realizing a product keeps word normal forms coherent") {
  auto P = product(standard(1).set, standard(1).set, 4);
  auto R = realize(P.set);
  CHECK(validate(R.comp).ok);
  // vertices 4, beads in dim 0: one per nondegenerate edge, of which there
  // are 5; in dim 1 each triangle carries 1 shape
  CHECK(R.comp.n_objects == 4);
  CHECK(R.comp.size(0) == 5);
  CHECK(R.comp.size(1) == 2);
}
