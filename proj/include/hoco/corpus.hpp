#ifndef HOCO_CORPUS_HPP
#define HOCO_CORPUS_HPP

#include <memory>

#include "hoco/fibration.hpp"

namespace hoco {

/// Category with the given objects and no other morphisms.
inline FinCat discrete_cat(int n, std::string name) {
  FinCatBuilder b;
  b.n_obj = n;
  b.name = std::move(name);
  return b.build([](const FinCat&, int, int) { return -1; });
}

/// Functor into a category whose relevant hom-sets are singletons, given only
/// the object assignment.
inline FinFunctor functor_by_objects(const FinCat& C, const FinCat& D, std::vector<int> on_obj) {
  FinFunctor F;
  F.src = &C;
  F.tgt = &D;
  F.on_obj = std::move(on_obj);
  for (int m = 0; m < C.n_mor(); ++m) {
    const auto& mm = C.mors[static_cast<size_t>(m)];
    auto h = D.hom(F.obj(mm.src), F.obj(mm.tgt));
    if (h.size() != 1) throw invalid_input("functor_by_objects: hom not a singleton");
    F.on_mor.push_back(h[0]);
  }
  return F;
}

/// One-object enriched category with function complex the nerve of Z/2,
/// composed letterwise. Kan-enriched: every hom is the nerve of a groupoid.
inline SCat bz2_scat(int hom_bound) {
  auto N = std::make_shared<NerveSSet>(nerve_of_category(cyclic2_cat(), hom_bound));
  SCat S;
  S.n_obj = 1;
  S.obj_names = {"*"};
  S.name = "B(Z/2)";
  S.fun = {{N->set}};
  S.id_vertex = {0};
  S.comp = [N](int, int, int, const EZ& x, const EZ& y) {
    auto [sx, wx] = N->string_of_simplex(x);
    auto [sy, wy] = N->string_of_simplex(y);
    (void)sy;
    std::vector<int> w;
    for (size_t i = 0; i < wx.size(); ++i) w.push_back(N->cat.then(wx[i], wy[i]));
    return N->simplex_of(w, sx);
  };
  return S;
}

// ---------------------------------------------------------------------------
// Grothendieck instances
// ---------------------------------------------------------------------------

/// Base the arrow category, both fibres the arrow poset, identity transition.
inline std::shared_ptr<Grothendieck> groth_square() {
  auto G = std::make_shared<Grothendieck>();
  G->base = linear_cat(1);
  G->fibre = {linear_cat(1), linear_cat(1)};
  G->transition.push_back(identity_functor(G->fibre[0]));
  G->transition.push_back(identity_functor(G->fibre[1]));
  FinFunctor T = functor_by_objects(G->fibre[0], G->fibre[1], {0, 1});
  G->transition.push_back(T);
  build_total(*G);
  return G;
}

/// Base the group Z/2, fibre the arrow poset, identity transition along the
/// flip. The total category has invertible transport edges over a
/// non-invertible fibre.
inline std::shared_ptr<Grothendieck> groth_flip() {
  auto G = std::make_shared<Grothendieck>();
  G->base = cyclic2_cat();
  G->fibre = {linear_cat(1)};
  G->transition.push_back(identity_functor(G->fibre[0]));
  G->transition.push_back(identity_functor(G->fibre[0]));
  build_total(*G);
  return G;
}

/// Base the arrow category, discrete two-object fibre mapping into the arrow
/// poset: the transition functor is not invertible.
inline std::shared_ptr<Grothendieck> groth_collapse() {
  auto G = std::make_shared<Grothendieck>();
  G->base = linear_cat(1);
  G->fibre = {discrete_cat(2, "pair"), linear_cat(1)};
  G->transition.push_back(identity_functor(G->fibre[0]));
  G->transition.push_back(identity_functor(G->fibre[1]));
  G->transition.push_back(functor_by_objects(G->fibre[0], G->fibre[1], {0, 1}));
  build_total(*G);
  return G;
}

/// Base the composable pair, fibres pair -> arrow -> point: both transitions
/// and their composite are non-invertible.
inline std::shared_ptr<Grothendieck> groth_chain() {
  auto G = std::make_shared<Grothendieck>();
  G->base = linear_cat(2);
  G->fibre = {discrete_cat(2, "pair"), linear_cat(1), linear_cat(0)};
  auto arrow = [&](int a, int b) {
    for (int m : G->base.hom(a, b))
      if (!G->base.is_id(m)) return m;
    throw invalid_input("corpus: missing base arrow");
  };
  G->transition.resize(static_cast<size_t>(G->base.n_mor()));
  G->transition[static_cast<size_t>(G->base.id(0))] = identity_functor(G->fibre[0]);
  G->transition[static_cast<size_t>(G->base.id(1))] = identity_functor(G->fibre[1]);
  G->transition[static_cast<size_t>(G->base.id(2))] = identity_functor(G->fibre[2]);
  G->transition[static_cast<size_t>(arrow(0, 1))] =
      functor_by_objects(G->fibre[0], G->fibre[1], {0, 1});
  G->transition[static_cast<size_t>(arrow(1, 2))] =
      functor_by_objects(G->fibre[1], G->fibre[2], {0, 0});
  G->transition[static_cast<size_t>(arrow(0, 2))] =
      functor_by_objects(G->fibre[0], G->fibre[2], {0, 0});
  build_total(*G);
  return G;
}

inline std::vector<std::shared_ptr<Grothendieck>> grothendieck_corpus() {
  return {groth_square(), groth_flip(), groth_collapse(), groth_chain()};
}

/// A Grothendieck instance realized as a map of nerves.
struct GrothBundle {
  std::shared_ptr<Grothendieck> G;
  std::shared_ptr<NerveSSet> NE, NB;
  SMap proj;

  EZ edge_of_total(int m) const { return NE->simplex_of({m}); }
  EZ edge_of_base(int m) const { return NB->simplex_of({m}); }
};

inline GrothBundle bundle_of(std::shared_ptr<Grothendieck> G, int bound) {
  GrothBundle B;
  B.G = G;
  B.NE = std::make_shared<NerveSSet>(nerve_of_category(G->total, bound));
  B.NB = std::make_shared<NerveSSet>(nerve_of_category(G->base, bound));
  B.proj = nerve_of_functor(G->proj, *B.NE, *B.NB);
  return B;
}

// ---------------------------------------------------------------------------
// the shape-3 conservativity instance
// ---------------------------------------------------------------------------

/// Coherent 3-simplex over the flip instance: all objects are the total and
/// base nerves, all edges identities, and the coherence arrows into the last
/// object are the transport transformation along the flip (an identity-to-
/// identity transformation with invertible transport components).
inline Cone3Data cone3_flip_instance(const GrothBundle& bdl) {
  Cone3Data d;
  const Grothendieck& G = *bdl.G;
  SSetPtr E = bdl.NE->set;
  SSetPtr B = bdl.NB->set;
  MultiProduct ecyl = product(E, standard(1).set, std::max(E->top_dim(), 0) + 1);
  MultiProduct bcyl = product(B, standard(1).set, std::max(B->top_dim(), 0) + 1);
  int flip = 1;  // the non-identity base morphism
  std::vector<int> alpha_total;
  for (int o = 0; o < G.total.n_obj; ++o) {
    int x = G.obj_key[static_cast<size_t>(o)].second;
    alpha_total.push_back(G.total_mor(flip, x, G.fibre[0].id(x)));
  }
  std::vector<int> alpha_base = {flip};
  std::vector<int> id_total, id_base;
  for (int o = 0; o < G.total.n_obj; ++o) id_total.push_back(G.total.id(o));
  id_base.push_back(G.base.id(0));
  FinFunctor idE = identity_functor(G.total);
  FinFunctor idB = identity_functor(G.base);
  SMap eta = nerve_of_transformation(idE, idE, alpha_total, *bdl.NE, *bdl.NE, ecyl);
  SMap eta_b = nerve_of_transformation(idB, idB, alpha_base, *bdl.NB, *bdl.NB, bcyl);
  SMap triv = nerve_of_transformation(idE, idE, id_total, *bdl.NE, *bdl.NE, ecyl);
  SMap triv_b = nerve_of_transformation(idB, idB, id_base, *bdl.NB, *bdl.NB, bcyl);
  for (int i = 0; i < 4; ++i) {
    d.E[i] = E;
    d.B[i] = B;
    d.p[i] = bdl.proj;
    d.e_cyl[i] = ecyl;
    d.b_cyl[i] = bcyl;
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      d.e_edge[{i, j}] = identity_smap(E);
      d.b_edge[{i, j}] = identity_smap(B);
    }
  d.e_tri[{0, 1, 2}] = eta;
  d.e_tri[{0, 1, 3}] = eta;
  d.e_tri[{0, 2, 3}] = eta;
  d.e_tri[{1, 2, 3}] = triv;
  d.b_tri[{0, 1, 2}] = eta_b;
  d.b_tri[{0, 1, 3}] = eta_b;
  d.b_tri[{0, 2, 3}] = eta_b;
  d.b_tri[{1, 2, 3}] = triv_b;
  return d;
}

}  // namespace hoco

#endif
