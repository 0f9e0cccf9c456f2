#ifndef HOCO_FIBRATION_HPP
#define HOCO_FIBRATION_HPP

#include <array>

#include "hoco/homspace.hpp"

namespace hoco {

inline SMap identity_smap(SSetPtr X) {
  SMap m;
  m.src = X;
  m.tgt = X;
  m.assign.resize(static_cast<size_t>(X->top_dim()) + 1);
  for (int d = 0; d <= X->top_dim(); ++d)
    for (int i = 0; i < X->size(d); ++i)
      m.assign[static_cast<size_t>(d)].push_back(nondeg(CellId{d, i}));
  return m;
}

inline SMap compose_smap(const SMap& f, const SMap& g) {
  SMap m;
  m.src = f.src;
  m.tgt = g.tgt;
  m.assign.resize(f.assign.size());
  for (size_t d = 0; d < f.assign.size(); ++d)
    for (auto& im : f.assign[d]) m.assign[d].push_back(g.apply(im));
  return m;
}

// ---------------------------------------------------------------------------
// lifting engine
// ---------------------------------------------------------------------------

/// A lifting square: a subcomplex inclusion on the left, a partial map into
/// the total set on top, the full map into the base on the bottom, and the
/// fibration on the right.
struct LiftingProblem {
  RestrictedSSet sub;  // the included part, restricted from `domain`
  SSetPtr domain;
  SMap top;     // sub.set -> total
  SMap bottom;  // domain -> base
  const SMap* fib = nullptr;
};

inline ExtensionProblem lift_to_extension(const LiftingProblem& L) {
  ExtensionProblem p;
  p.domain = L.domain;
  p.target = L.top.tgt;
  p.init_tables();
  for (int d = 0; d <= L.domain->top_dim(); ++d)
    for (int i = 0; i < L.domain->size(d); ++i) {
      auto sc = L.sub.to_sub(CellId{d, i});
      if (sc) p.fix(CellId{d, i}, L.top.on_cell(*sc));
    }
  p.proj = L.fib;
  p.bottom.resize(static_cast<size_t>(L.domain->top_dim()) + 1);
  for (int d = 0; d <= L.domain->top_dim(); ++d)
    for (int i = 0; i < L.domain->size(d); ++i)
      p.bottom[static_cast<size_t>(d)].push_back(L.bottom.on_cell(CellId{d, i}));
  return p;
}

inline std::optional<SMap> solve_lift(const LiftingProblem& L) {
  return first_extension(lift_to_extension(L));
}

/// Re-verification of a claimed lift: exact restriction and projection.
inline bool lift_ok(const LiftingProblem& L, const SMap& w) {
  if (!validate(w).ok) return false;
  for (int d = 0; d <= L.domain->top_dim(); ++d)
    for (int i = 0; i < L.domain->size(d); ++i) {
      CellId c{d, i};
      auto sc = L.sub.to_sub(c);
      if (sc && !(w.on_cell(c) == L.top.on_cell(*sc))) return false;
      if (L.fib && !(L.fib->apply(w.on_cell(c)) == L.bottom.on_cell(c))) return false;
    }
  return true;
}

struct LiftReport {
  bool ok = true;
  long long problems = 0;
  int fail_n = -1, fail_k = -1;
  std::string note;
};

namespace detail {

/// All maps of a horn into the total set, optionally with one cell pinned,
/// each paired with every compatible base filler; calls `check` per lifting
/// problem and stops on the first failure.
inline void for_each_horn_problem(const SMap& p, int n, int k,
                                  const std::optional<std::pair<CellId, EZ>>& pin,
                                  LiftReport& rep,
                                  const std::function<bool(const LiftingProblem&)>& check) {
  auto st = standard(n);
  auto horn = restrict_subcomplex(horn_sub(st, k));
  ExtensionProblem tops;
  tops.domain = horn.set;
  tops.target = p.src;
  tops.init_tables();
  if (pin) tops.fix(pin->first, pin->second);
  for (auto& u : all_extensions(tops)) {
    // base fillers extending the projected horn
    ExtensionProblem bots;
    bots.domain = st.set;
    bots.target = p.tgt;
    bots.init_tables();
    for (int d = 0; d <= horn.set->top_dim(); ++d)
      for (int i = 0; i < horn.set->size(d); ++i)
        bots.fix(horn.inclusion.on_cell(CellId{d, i}).cell, p.apply(u.on_cell(CellId{d, i})));
    for (auto& v : all_extensions(bots)) {
      LiftingProblem L;
      L.sub = horn;
      L.domain = st.set;
      L.top = u;
      L.bottom = v;
      L.fib = &p;
      ++rep.problems;
      if (!check(L)) {
        rep.ok = false;
        rep.fail_n = n;
        rep.fail_k = k;
        return;
      }
    }
  }
}

}  // namespace detail

/// Right lifting against inner horns through dimension D.
inline LiftReport is_inner_fibration(const SMap& p, int D) {
  LiftReport rep;
  for (int n = 2; n <= D && rep.ok; ++n)
    for (int k = 1; k <= n - 1 && rep.ok; ++k)
      detail::for_each_horn_problem(p, n, k, std::nullopt, rep,
                                    [&](const LiftingProblem& L) { return solve_lift(L).has_value(); });
  if (!rep.ok) rep.note = "inner horn lifting fails";
  return rep;
}

/// Inner fibration that additionally lifts invertible edges: every edge of
/// the base that is invertible in its homotopy category lifts, starting at
/// any vertex of the total set above its source, to an edge invertible in the
/// homotopy category of the total set.
inline LiftReport is_isofibration(const SMap& p, int D) {
  LiftReport rep = is_inner_fibration(p, D);
  if (!rep.ok) return rep;
  HoCat hE = homotopy_category(p.src);
  HoCat hB = homotopy_category(p.tgt);
  for (auto& e : p.tgt->simplices(1)) {
    if (!hB.cat.inverse(hB.mor_of(e))) continue;
    int a = p.tgt->vertex(e, 0).idx;
    for (int x = 0; x < p.src->size(0); ++x) {
      if (p.on_cell(CellId{0, x}).cell.idx != a) continue;
      ++rep.problems;
      bool found = false;
      for (auto& cand : p.src->simplices(1)) {
        if (p.src->vertex(cand, 0).idx != x) continue;
        if (!(p.apply(cand) == e)) continue;
        if (!hE.cat.inverse(hE.mor_of(cand))) continue;
        found = true;
        break;
      }
      if (!found) {
        rep.ok = false;
        rep.note = "invertible edge fails to lift";
        return rep;
      }
    }
  }
  return rep;
}

/// Initial-vertex horn lifting for a single edge: chi is p-cocartesian when
/// every outer horn problem whose first edge is chi has a solution.
inline LiftReport is_cocartesian_edge(const SMap& p, const EZ& chi, int D) {
  LiftReport rep;
  for (int n = 2; n <= D && rep.ok; ++n) {
    auto st = standard(n);
    auto horn = restrict_subcomplex(horn_sub(st, 0));
    CellId first_edge = *horn.to_sub(st.id_of({0, 1}));
    detail::for_each_horn_problem(p, n, 0, std::make_pair(first_edge, chi), rep,
                                  [&](const LiftingProblem& L) { return solve_lift(L).has_value(); });
  }
  if (!rep.ok) rep.note = "initial-vertex horn lifting fails";
  return rep;
}

struct CocartWitness {
  EZ base_edge;
  int src_vertex = 0;
  EZ lift;
};

struct CocartReport {
  bool ok = true;
  long long problems = 0;
  std::vector<CocartWitness> witnesses;
  std::string note;
};

/// Every base edge with a lifted source admits a cocartesian lift. The chosen
/// witness is the first valid lift in canonical simplex order, which prefers
/// degenerate edges, then minimal cell id.
inline CocartReport is_cocartesian_fibration(const SMap& p, int D) {
  CocartReport rep;
  for (auto& e : p.tgt->simplices(1)) {
    int a = p.tgt->vertex(e, 0).idx;
    for (int x = 0; x < p.src->size(0); ++x) {
      if (p.on_cell(CellId{0, x}).cell.idx != a) continue;
      ++rep.problems;
      bool found = false;
      for (auto& cand : p.src->simplices(1)) {
        if (p.src->vertex(cand, 0).idx != x) continue;
        if (!(p.apply(cand) == e)) continue;
        if (!is_cocartesian_edge(p, cand, D).ok) continue;
        rep.witnesses.push_back(CocartWitness{e, x, cand});
        found = true;
        break;
      }
      if (!found) {
        rep.ok = false;
        rep.note = "no cocartesian lift for a base edge";
        return rep;
      }
    }
  }
  return rep;
}

/// Closure of cocartesian edges over all triangles: composition, right
/// cancellation, and conservativity.
inline ValidationReport cocartesian_closure_check(const SMap& p, int D) {
  ValidationReport rep;
  std::map<EZ, bool> cache;
  auto cocart = [&](const EZ& e) {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    bool r = is_cocartesian_edge(p, e, D).ok;
    cache[e] = r;
    return r;
  };
  HoCat hE = homotopy_category(p.src);
  HoCat hB = homotopy_category(p.tgt);
  for (auto& t : p.src->simplices(2)) {
    EZ f = p.src->act(t, op_delta(2, 2));
    EZ g = p.src->act(t, op_delta(2, 0));
    EZ h = p.src->act(t, op_delta(2, 1));
    if (cocart(f) && cocart(g) && !cocart(h)) rep.fail("composition closure fails");
    if (cocart(f) && cocart(h) && !cocart(g)) rep.fail("right cancellation fails");
    if (cocart(f) && cocart(h) && hB.cat.inverse(hB.mor_of(p.apply(g))) &&
        !hE.cat.inverse(hE.mor_of(g)))
      rep.fail("conservativity fails");
  }
  return rep;
}

/// Dual entry points: cartesian notions via the opposite sets.
inline SMap opposite_fibration(const SMap& p) {
  return opposite_map(p, opposite(p.src), opposite(p.tgt));
}
inline LiftReport is_cartesian_edge(const SMap& p, const EZ& chi, int D) {
  return is_cocartesian_edge(opposite_fibration(p), EZ{op_dual(chi.epi), chi.cell}, D);
}
inline CocartReport is_cartesian_fibration(const SMap& p, int D) {
  return is_cocartesian_fibration(opposite_fibration(p), D);
}

// ---------------------------------------------------------------------------
// fibres and pullbacks
// ---------------------------------------------------------------------------

/// Strict fibre over a vertex of the base.
inline RestrictedSSet fibre(const SMap& p, int b) {
  Subcomplex sub = empty_subcomplex(p.src);
  for (int d = 0; d <= p.src->top_dim(); ++d)
    for (int i = 0; i < p.src->size(d); ++i) {
      const EZ& im = p.on_cell(CellId{d, i});
      if (im.cell.dim == 0 && im.cell.idx == b)
        sub.member[static_cast<size_t>(d)][static_cast<size_t>(i)] = 1;
    }
  return restrict_subcomplex(sub);
}

/// Strict pullback of a cospan, realized inside the product.
struct Pullback {
  MultiProduct prod;   // ambient product of the two sources
  RestrictedSSet res;  // restricted from the product
  SSetPtr set;
  SMap to_left, to_right;

  /// The member cell with the given component pair, if any.
  std::optional<EZ> cell_of(const EZ& left, const EZ& right) const {
    EZ amb = prod.simplex({left, right});
    auto back = res.to_sub(amb);
    if (!back) return std::nullopt;
    return back;
  }
};

inline Pullback pullback(const SMap& f, const SMap& g, int dim_bound) {
  Pullback P;
  P.prod = product(f.src, g.src, dim_bound);
  const MultiProduct& prod = P.prod;
  Subcomplex sub = empty_subcomplex(prod.set);
  for (int d = 0; d <= prod.set->top_dim(); ++d)
    for (int i = 0; i < prod.set->size(d); ++i) {
      const TupleKey& key = prod.keys[static_cast<size_t>(d)][static_cast<size_t>(i)];
      if (f.apply(key[0]) == g.apply(key[1]))
        sub.member[static_cast<size_t>(d)][static_cast<size_t>(i)] = 1;
    }
  P.res = restrict_subcomplex(sub);
  P.set = P.res.set;
  P.to_left.src = P.set;
  P.to_left.tgt = f.src;
  P.to_right.src = P.set;
  P.to_right.tgt = g.src;
  P.to_left.assign.resize(static_cast<size_t>(P.set->top_dim()) + 1);
  P.to_right.assign.resize(static_cast<size_t>(P.set->top_dim()) + 1);
  for (int d = 0; d <= P.set->top_dim(); ++d)
    for (int i = 0; i < P.set->size(d); ++i) {
      CellId amb = P.res.inclusion.on_cell(CellId{d, i}).cell;
      const TupleKey& key = prod.keys[static_cast<size_t>(amb.dim)][static_cast<size_t>(amb.idx)];
      P.to_left.assign[static_cast<size_t>(d)].push_back(key[0]);
      P.to_right.assign[static_cast<size_t>(d)].push_back(key[1]);
    }
  return P;
}

// ---------------------------------------------------------------------------
// cocartesian cylinders and comprehension
// ---------------------------------------------------------------------------

/// Whether a cylinder map Y x interval -> total is pointwise cocartesian: the
/// edge over every vertex of Y is a cocartesian edge. A cache can be shared
/// between repeated calls on the same fibration.
inline bool pointwise_cocartesian(const SMap& p, const SMap& cyl_map, const MultiProduct& cyl,
                                  SSetPtr Y, int D, std::map<EZ, bool>* cache = nullptr) {
  for (int y = 0; y < Y->size(0); ++y) {
    EZ ydeg{op_const(1, 0, 0), CellId{0, y}};
    EZ edge = cyl_map.apply(cyl.simplex({ydeg, nondeg(CellId{1, 0})}));
    bool good;
    if (cache && cache->count(edge)) {
      good = (*cache)[edge];
    } else {
      good = is_cocartesian_edge(p, edge, D).ok;
      if (cache) (*cache)[edge] = good;
    }
    if (!good) return false;
  }
  return true;
}

/// First extension of a partial cylinder over a prescribed base cylinder that
/// is pointwise cocartesian, in canonical order.
inline std::optional<SMap> cylinder_extension(
    const SMap& p, const MultiProduct& cyl, SSetPtr Y,
    const std::function<std::optional<EZ>(CellId)>& fixed, const SMap& base, int D) {
  ExtensionProblem prob;
  prob.domain = cyl.set;
  prob.target = p.src;
  prob.init_tables();
  for (int d = 0; d <= cyl.set->top_dim(); ++d)
    for (int i = 0; i < cyl.set->size(d); ++i)
      if (auto v = fixed(CellId{d, i})) prob.fix(CellId{d, i}, *v);
  prob.proj = &p;
  prob.bottom.resize(static_cast<size_t>(cyl.set->top_dim()) + 1);
  for (int d = 0; d <= cyl.set->top_dim(); ++d)
    for (int i = 0; i < cyl.set->size(d); ++i)
      prob.bottom[static_cast<size_t>(d)].push_back(base.on_cell(CellId{d, i}));
  detail::ExtSearch s(prob);
  std::optional<SMap> out;
  std::map<EZ, bool> cache;
  s.emit = [&](const SMap& cand) {
    if (!pointwise_cocartesian(p, cand, cyl, Y, D, &cache)) return true;
    out = cand;
    return false;
  };
  s.run(0, 0);
  return out;
}

/// Transport along a base edge: the cocartesian cylinder over the fibre of
/// the source vertex, factored at its far end through the fibre of the
/// target.
struct CompEdge {
  RestrictedSSet Fa, Fb;
  SMap cylinder;   // Fa x interval -> total
  SMap transport;  // Fa.set -> Fb.set
};

inline CompEdge comprehension_edge(const SMap& p, const EZ& e, int D) {
  CompEdge C;
  int a = p.tgt->vertex(e, 0).idx;
  int b = p.tgt->vertex(e, 1).idx;
  C.Fa = fibre(p, a);
  C.Fb = fibre(p, b);
  SSetPtr Y = C.Fa.set;
  MultiProduct cyl = product(Y, standard(1).set, std::max(Y->top_dim(), 0) + 1);
  SMap base;
  base.src = cyl.set;
  base.tgt = p.tgt;
  base.assign.resize(static_cast<size_t>(cyl.set->top_dim()) + 1);
  for (int d = 0; d <= cyl.set->top_dim(); ++d)
    for (auto& key : cyl.keys[static_cast<size_t>(d)])
      base.assign[static_cast<size_t>(d)].push_back(
          p.tgt->act(e, op_of_standard(standard(1), key[1])));
  auto fixed = [&](CellId c) -> std::optional<EZ> {
    const TupleKey& key = cyl.keys[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
    if (key[1].cell.dim == 0 && key[1].cell.idx == 0) return C.Fa.inclusion.apply(key[0]);
    return std::nullopt;
  };
  auto filled = cylinder_extension(p, cyl, Y, fixed, base, D);
  if (!filled) throw invalid_input("comprehension: no pointwise cocartesian cylinder");
  C.cylinder = *filled;
  C.transport.src = Y;
  C.transport.tgt = C.Fb.set;
  C.transport.assign.resize(static_cast<size_t>(Y->top_dim()) + 1);
  for (int d = 0; d <= Y->top_dim(); ++d)
    for (int i = 0; i < Y->size(d); ++i) {
      EZ top = cyl.simplex({nondeg(CellId{d, i}), EZ{op_const(d, 0, 0), CellId{0, 1}}});
      auto back = C.Fb.to_sub(C.cylinder.apply(top));
      if (!back) throw invalid_input("comprehension: far end escapes the fibre");
      C.transport.assign[static_cast<size_t>(d)].push_back(*back);
    }
  return C;
}

/// Functor induced on homotopy categories by a simplicial map.
inline FinFunctor h_functor(const SMap& m, const HoCat& hs, const HoCat& ht) {
  FinFunctor F;
  F.src = &hs.cat;
  F.tgt = &ht.cat;
  for (int v = 0; v < m.src->size(0); ++v)
    F.on_obj.push_back(m.on_cell(CellId{0, v}).cell.idx);
  for (int mm = 0; mm < hs.cat.n_mor(); ++mm) {
    // any representative edge of the class
    EZ rep{op_const(1, 0, 0), CellId{0, 0}};
    bool found = false;
    for (size_t i = 0; i < hs.edges.size() && !found; ++i)
      if (hs.mor_of_edge[i] == mm) {
        rep = hs.edges[i];
        found = true;
      }
    F.on_mor.push_back(ht.mor_of(m.apply(rep)));
  }
  return F;
}

// ---------------------------------------------------------------------------
// right fibration check and the yoneda projection
// ---------------------------------------------------------------------------

/// Right lifting against all horns with 0 < k <= n <= D.
inline LiftReport is_right_fibration(const SMap& p, int D) {
  LiftReport rep;
  for (int n = 1; n <= D && rep.ok; ++n)
    for (int k = 1; k <= n && rep.ok; ++k) {
      if (n == 1 && k == 1) {
        // lift every edge of the base given a lift of its target
        for (auto& e : p.tgt->simplices(1)) {
          int b = p.tgt->vertex(e, 1).idx;
          for (int x = 0; x < p.src->size(0) && rep.ok; ++x) {
            if (p.on_cell(CellId{0, x}).cell.idx != b) continue;
            ++rep.problems;
            bool found = false;
            for (auto& cand : p.src->simplices(1))
              if (p.src->vertex(cand, 1).idx == x && p.apply(cand) == e) {
                found = true;
                break;
              }
            if (!found) {
              rep.ok = false;
              rep.fail_n = 1;
              rep.fail_k = 1;
            }
          }
        }
        continue;
      }
      detail::for_each_horn_problem(p, n, k, std::nullopt, rep,
                                    [&](const LiftingProblem& L) { return solve_lift(L).has_value(); });
    }
  if (!rep.ok) rep.note = "right horn lifting fails";
  return rep;
}

// ---------------------------------------------------------------------------
// external action of the hom space on fibres
// ---------------------------------------------------------------------------

/// The action (a|b) x E_a -> E_b of the two-sided hom space of two base
/// vertices on the fibres, built from one pointwise cocartesian cylinder over
/// the whole product.
struct ExternalAction {
  Comma hom;  // hom space of (a, b) in the base
  RestrictedSSet Fa, Fb;
  MultiProduct dom;  // hom x Fa
  SMap cylinder;     // dom x interval -> total
  SMap action;       // dom -> Fb.set
};

inline ExternalAction external_action(const SMap& p, int a, int b, int hom_bound, int D) {
  ExternalAction X;
  X.hom = hom_space(p.tgt, a, b, hom_bound);
  X.Fa = fibre(p, a);
  X.Fb = fibre(p, b);
  int bound = std::max(X.hom.set->top_dim(), 0) + std::max(X.Fa.set->top_dim(), 0);
  X.dom = product(X.hom.set, X.Fa.set, bound);
  MultiProduct cyl = product(X.dom.set, standard(1).set, X.dom.set->top_dim() + 1);
  // split a cylinder cell into hom, fibre, and interval components
  auto parts = [&](CellId c) {
    const TupleKey& key = cyl.keys[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
    const TupleKey& dk =
        X.dom.keys[static_cast<size_t>(key[0].cell.dim)][static_cast<size_t>(key[0].cell.idx)];
    EZ h = X.hom.set->act(dk[0], key[0].epi);
    EZ e = X.Fa.set->act(dk[1], key[0].epi);
    return std::tuple<EZ, EZ, EZ>{h, e, key[1]};
  };
  SMap base;
  base.src = cyl.set;
  base.tgt = p.tgt;
  base.assign.resize(static_cast<size_t>(cyl.set->top_dim()) + 1);
  for (int d = 0; d <= cyl.set->top_dim(); ++d)
    for (int i = 0; i < cyl.set->size(d); ++i) {
      auto [h, e, t] = parts(CellId{d, i});
      int hd = h.cell.dim;
      const Comma::Trip& tr = X.hom.trip(h.cell);
      EZ in = X.hom.cyls[static_cast<size_t>(hd)].simplex(
          {X.hom.stds[static_cast<size_t>(hd)].simplex(h.epi), t});
      base.assign[static_cast<size_t>(d)].push_back(tr.theta.apply(in));
    }
  auto fixed = [&](CellId c) -> std::optional<EZ> {
    auto [h, e, t] = parts(c);
    (void)h;
    if (t.cell.dim == 0 && t.cell.idx == 0) return X.Fa.inclusion.apply(e);
    return std::nullopt;
  };
  auto filled = cylinder_extension(p, cyl, X.dom.set, fixed, base, D);
  if (!filled) throw invalid_input("external action: no pointwise cocartesian cylinder");
  X.cylinder = *filled;
  X.action.src = X.dom.set;
  X.action.tgt = X.Fb.set;
  X.action.assign.resize(static_cast<size_t>(X.dom.set->top_dim()) + 1);
  for (int d = 0; d <= X.dom.set->top_dim(); ++d)
    for (int i = 0; i < X.dom.set->size(d); ++i) {
      EZ top = cyl.simplex({nondeg(CellId{d, i}), EZ{op_const(d, 0, 0), CellId{0, 1}}});
      auto back = X.Fb.to_sub(X.cylinder.apply(top));
      if (!back) throw invalid_input("external action: far end escapes the fibre");
      X.action.assign[static_cast<size_t>(d)].push_back(*back);
    }
  return X;
}

/// Restrict the action along one vertex of the hom space.
inline SMap action_at(const ExternalAction& X, int g) {
  SMap m;
  m.src = X.Fa.set;
  m.tgt = X.Fb.set;
  m.assign.resize(static_cast<size_t>(X.Fa.set->top_dim()) + 1);
  for (int d = 0; d <= X.Fa.set->top_dim(); ++d)
    for (int i = 0; i < X.Fa.set->size(d); ++i) {
      EZ dc = X.dom.simplex({EZ{op_const(d, 0, 0), CellId{0, g}}, nondeg(CellId{d, i})});
      m.assign[static_cast<size_t>(d)].push_back(X.action.apply(dc));
    }
  return m;
}

// ---------------------------------------------------------------------------
// low-dimensional cocartesian cocone extensions
// ---------------------------------------------------------------------------

/// Shape 1: the extension is just the fibre pullback square.
inline Pullback cone_extension_dim1(const SMap& p, const SMap& b01, int dim_bound) {
  return pullback(b01, p, dim_bound);
}

/// Shape 2 data: the nadir fibration, the base triangle, and its coherence
/// cylinder from the direct edge to the composite.
struct Cone2Data {
  SMap p;  // E2 -> B2
  SSetPtr B0, B1;
  SMap b01, b02, b12;
  MultiProduct b_cyl;  // B0 x interval
  SMap b_tri;          // b_cyl.set -> B2, end 0 = b02, end 1 = b12 o b01
};

struct Cone2Ext {
  Pullback E0, E1;
  SMap e_tri;  // pointwise cocartesian cylinder E0 x interval -> E2
  SMap e01;    // induced map E0 -> E1 over b01
};

/// Lift the base coherence cylinder, whiskered along the pullback projection,
/// to a pointwise cocartesian cylinder; then induce the missing edge map by
/// the universal property of the other pullback.
inline Cone2Ext cone_extension_dim2(const Cone2Data& d, int dim_bound, int D) {
  Cone2Ext out;
  out.E0 = pullback(d.b02, d.p, dim_bound);
  out.E1 = pullback(d.b12, d.p, dim_bound);
  MultiProduct cyl =
      product(out.E0.set, standard(1).set, std::max(out.E0.set->top_dim(), 0) + 1);
  SMap base;
  base.src = cyl.set;
  base.tgt = d.p.tgt;
  base.assign.resize(static_cast<size_t>(cyl.set->top_dim()) + 1);
  for (int q = 0; q <= cyl.set->top_dim(); ++q)
    for (auto& key : cyl.keys[static_cast<size_t>(q)])
      base.assign[static_cast<size_t>(q)].push_back(
          d.b_tri.apply(d.b_cyl.simplex({out.E0.to_left.apply(key[0]), key[1]})));
  auto fixed = [&](CellId c) -> std::optional<EZ> {
    const TupleKey& key = cyl.keys[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
    if (key[1].cell.dim == 0 && key[1].cell.idx == 0) return out.E0.to_right.apply(key[0]);
    return std::nullopt;
  };
  auto filled = cylinder_extension(d.p, cyl, out.E0.set, fixed, base, D);
  if (!filled) throw invalid_input("cone extension: no pointwise cocartesian cylinder");
  out.e_tri = *filled;
  out.e01.src = out.E0.set;
  out.e01.tgt = out.E1.set;
  out.e01.assign.resize(static_cast<size_t>(out.E0.set->top_dim()) + 1);
  for (int q = 0; q <= out.E0.set->top_dim(); ++q)
    for (int i = 0; i < out.E0.set->size(q); ++i) {
      EZ end1 = cyl.simplex({nondeg(CellId{q, i}), EZ{op_const(q, 0, 0), CellId{0, 1}}});
      EZ left = d.b01.apply(out.E0.to_left.on_cell(CellId{q, i}));
      auto c = out.E1.cell_of(left, out.e_tri.apply(end1));
      if (!c) throw invalid_input("cone extension: induced map misses the pullback");
      out.e01.assign[static_cast<size_t>(q)].push_back(*c);
    }
  return out;
}

// ---------------------------------------------------------------------------
// shape 3: conservativity of the extension
// ---------------------------------------------------------------------------

/// A coherent 3-simplex of quasicategory models mapping down to another: four
/// sets each, a map per edge, and a coherence cylinder per triangle running
/// from the direct edge to the two-step composite. Cylinder products must be
/// built as product(obj, interval, top_dim(obj) + 1) so the invertibility
/// witnesses glue against the same tabulation.
struct Cone3Data {
  SSetPtr E[4], B[4];
  SMap p[4];  // E_i -> B_i
  std::map<std::pair<int, int>, SMap> e_edge, b_edge;
  std::map<std::array<int, 3>, SMap> e_tri, b_tri;  // cylinder on obj i, into obj k
  MultiProduct e_cyl[4], b_cyl[4];
};

struct ConservativityReport {
  bool coherent = false;
  bool nadir_cocartesian = false;
  bool square_pullback = false;
  bool arrows_cocartesian = false;
  bool base_arrow_invertible = false;
  bool projections_invertible = false;
  bool conclusion = false;
  bool ok = false;
  std::string note;
};

namespace detail {

/// end-of-cylinder composite against an edge map
inline bool cylinder_ends_ok(const SMap& tri, const MultiProduct& cyl, SSetPtr obj,
                             const SMap& direct, const SMap& step1, const SMap& step2) {
  for (int d = 0; d <= obj->top_dim(); ++d)
    for (int i = 0; i < obj->size(d); ++i) {
      EZ c0 = cyl.simplex({nondeg(CellId{d, i}), EZ{op_const(d, 0, 0), CellId{0, 0}}});
      EZ c1 = cyl.simplex({nondeg(CellId{d, i}), EZ{op_const(d, 0, 0), CellId{0, 1}}});
      if (!(tri.apply(c0) == direct.on_cell(CellId{d, i}))) return false;
      if (!(tri.apply(c1) == step2.apply(step1.on_cell(CellId{d, i})))) return false;
    }
  return true;
}

/// postcompose a cylinder with a map of targets
inline SMap cylinder_then(const SMap& tri, const SMap& g) { return compose_smap(tri, g); }

/// restriction of a cylinder map to one end of the interval
inline SMap cylinder_end(const MultiProduct& cyl, SSetPtr X, const SMap& e, int end) {
  SMap f;
  f.src = X;
  f.tgt = e.tgt;
  f.assign.resize(static_cast<size_t>(X->top_dim()) + 1);
  for (int d = 0; d <= X->top_dim(); ++d)
    for (int i = 0; i < X->size(d); ++i)
      f.assign[static_cast<size_t>(d)].push_back(
          e.apply(cyl.simplex({nondeg(CellId{d, i}), EZ{op_const(d, 0, 0), CellId{0, end}}})));
  return f;
}

/// constant homotopy at a map X -> Y, as a map out of the cylinder
inline SMap constant_cylinder(const MultiProduct& cyl, const SMap& u) {
  SMap f;
  f.src = cyl.set;
  f.tgt = u.tgt;
  f.assign.resize(static_cast<size_t>(cyl.set->top_dim()) + 1);
  for (int q = 0; q <= cyl.set->top_dim(); ++q)
    for (auto& key : cyl.keys[static_cast<size_t>(q)])
      f.assign[static_cast<size_t>(q)].push_back(u.apply(key[0]));
  return f;
}

/// Search for a triangle in the function complex with the prescribed edge
/// cylinders (null = unconstrained); cells of X x Delta^2 hitting all three
/// interval vertices stay free. Returns any filler, in deterministic order.
inline std::optional<SMap> triangle_filler(SSetPtr X, const MultiProduct& cyl, SSetPtr Y,
                                           const SMap* f01, const SMap* f12, const SMap* f02) {
  StandardSSet s1 = standard(1);
  StandardSSet s2 = standard(2);
  MultiProduct P = product(X, s2.set, X->top_dim() + 2);
  ExtensionProblem pr;
  pr.domain = P.set;
  pr.target = Y;
  pr.init_tables();
  for (int q = 0; q <= P.set->top_dim(); ++q)
    for (size_t ci = 0; ci < P.keys[static_cast<size_t>(q)].size(); ++ci) {
      const TupleKey& key = P.keys[static_cast<size_t>(q)][ci];
      const EZ& t = key[1];
      auto verts = s2.verts_of(t.cell);
      std::vector<int> w(static_cast<size_t>(q) + 1);
      bool has[3] = {false, false, false};
      for (int i = 0; i <= q; ++i) {
        w[static_cast<size_t>(i)] = verts[static_cast<size_t>(t.epi.img[static_cast<size_t>(i)])];
        has[w[static_cast<size_t>(i)]] = true;
      }
      if (has[0] && has[1] && has[2]) continue;
      // pick an edge of Delta^2 through which the cell factors, preferring one
      // whose cylinder is prescribed
      const SMap* f = nullptr;
      int hiv = -1;
      auto consider = [&](const SMap* g, int a, int b) {
        if (f || has[3 - a - b]) return;
        f = g;
        hiv = b;
      };
      consider(f01, 0, 1);
      consider(f12, 1, 2);
      consider(f02, 0, 2);
      if (!f) {
        f = nullptr;
        // vertex-constant cells can still be pinned through another edge
        if (!has[2] && f01) { f = f01; hiv = 1; }
        else if (!has[0] && f12) { f = f12; hiv = 2; }
        else if (!has[1] && f02) { f = f02; hiv = 2; }
      }
      if (!f) continue;
      std::vector<int> m(static_cast<size_t>(q) + 1);
      for (int i = 0; i <= q; ++i) m[static_cast<size_t>(i)] = w[static_cast<size_t>(i)] == hiv;
      EZ t1 = s1.simplex(SOp{1, m});
      pr.fix(CellId{q, static_cast<int>(ci)}, f->apply(cyl.simplex({key[0], t1})));
    }
  return first_extension(pr);
}

/// A cylinder edge of the function complex is invertible in the homotopy
/// category iff it admits a left inverse and a right inverse up to homotopy.
/// Both witnesses are found as explicit triangle fillers, never by tabulating
/// the whole function complex.
inline bool edge_invertible_in_exp(SSetPtr X, const MultiProduct& cyl, SSetPtr Y,
                                   const SMap& e) {
  SMap u = cylinder_end(cyl, X, e, 0);
  SMap v = cylinder_end(cyl, X, e, 1);
  SMap idu = constant_cylinder(cyl, u);
  SMap idv = constant_cylinder(cyl, v);
  bool left = triangle_filler(X, cyl, Y, &e, nullptr, &idu).has_value();
  bool right = triangle_filler(X, cyl, Y, nullptr, &e, &idv).has_value();
  return left && right;
}

}  // namespace detail

/// Mechanized form of the shape-3 conservativity statement: when the nadir is
/// a cocartesian fibration, the last naturality square is a pullback, the
/// three coherence arrows into the last object are pointwise cocartesian, and
/// the base triangle arrow is invertible in the function complex, then the
/// total triangle arrow is invertible in its function complex. Every
/// hypothesis and the conclusion are verified exhaustively.
inline ConservativityReport extension_conservativity(const Cone3Data& d, int D) {
  ConservativityReport rep;
  // coherence: cylinder ends match composites, and p is strictly natural
  rep.coherent = true;
  for (int i = 0; i < 4 && rep.coherent; ++i)
    for (int j = i + 1; j < 4 && rep.coherent; ++j) {
      if (!(compose_smap(d.e_edge.at({i, j}), d.p[j]) ==
            compose_smap(d.p[i], d.b_edge.at({i, j}))))
        rep.coherent = false;
      for (int k = j + 1; k < 4 && rep.coherent; ++k) {
        if (!detail::cylinder_ends_ok(d.e_tri.at({i, j, k}), d.e_cyl[i], d.E[i],
                                      d.e_edge.at({i, k}), d.e_edge.at({i, j}),
                                      d.e_edge.at({j, k})))
          rep.coherent = false;
        if (!detail::cylinder_ends_ok(d.b_tri.at({i, j, k}), d.b_cyl[i], d.B[i],
                                      d.b_edge.at({i, k}), d.b_edge.at({i, j}),
                                      d.b_edge.at({j, k})))
          rep.coherent = false;
        // p o e_tri == b_tri o (p_i x id)
        const SMap& et = d.e_tri.at({i, j, k});
        for (int q = 0; q <= d.e_cyl[i].set->top_dim() && rep.coherent; ++q)
          for (size_t ci = 0; ci < d.e_cyl[i].keys[static_cast<size_t>(q)].size(); ++ci) {
            const TupleKey& key = d.e_cyl[i].keys[static_cast<size_t>(q)][ci];
            EZ lhs = d.p[k].apply(et.on_cell(CellId{q, static_cast<int>(ci)}));
            EZ rhs = d.b_tri.at({i, j, k})
                         .apply(d.b_cyl[i].simplex({d.p[i].apply(key[0]), key[1]}));
            if (!(lhs == rhs)) rep.coherent = false;
          }
      }
    }
  if (!rep.coherent) {
    rep.note = "coherence data inconsistent";
    return rep;
  }
  rep.nadir_cocartesian = is_cocartesian_fibration(d.p[3], D).ok;
  // comparison of E2 with the pullback of the last naturality square
  {
    Pullback P = pullback(d.b_edge.at({2, 3}), d.p[3], std::max(d.E[2]->top_dim(), 0));
    bool iso = true;
    for (int q = 0; q <= d.E[2]->top_dim() && iso; ++q) {
      if (P.set->size(q) != d.E[2]->size(q)) iso = false;
      std::set<EZ> seen;
      for (int i = 0; i < d.E[2]->size(q) && iso; ++i) {
        auto c = P.cell_of(d.p[2].on_cell(CellId{q, i}),
                           d.e_edge.at({2, 3}).on_cell(CellId{q, i}));
        if (!c || !c->epi.is_identity() || seen.count(*c)) iso = false;
        if (c) seen.insert(*c);
      }
    }
    rep.square_pullback = iso;
  }
  rep.arrows_cocartesian =
      pointwise_cocartesian(d.p[3], d.e_tri.at({1, 2, 3}), d.e_cyl[1], d.E[1], D) &&
      pointwise_cocartesian(d.p[3], d.e_tri.at({0, 1, 3}), d.e_cyl[0], d.E[0], D) &&
      pointwise_cocartesian(d.p[3], d.e_tri.at({0, 2, 3}), d.e_cyl[0], d.E[0], D);
  rep.base_arrow_invertible =
      detail::edge_invertible_in_exp(d.B[0], d.b_cyl[0], d.B[2], d.b_tri.at({0, 1, 2}));
  // the two pullback projections of the triangle arrow
  {
    SMap down = compose_smap(d.e_tri.at({0, 1, 2}), d.p[2]);
    SMap whisk = compose_smap(d.e_tri.at({0, 1, 2}), d.e_edge.at({2, 3}));
    rep.projections_invertible =
        detail::edge_invertible_in_exp(d.E[0], d.e_cyl[0], d.B[2], down) &&
        detail::edge_invertible_in_exp(d.E[0], d.e_cyl[0], d.E[3], whisk);
  }
  rep.conclusion =
      detail::edge_invertible_in_exp(d.E[0], d.e_cyl[0], d.E[2], d.e_tri.at({0, 1, 2}));
  rep.ok = rep.nadir_cocartesian && rep.square_pullback && rep.arrows_cocartesian &&
           rep.base_arrow_invertible && rep.projections_invertible && rep.conclusion;
  if (!rep.ok) rep.note = "hypotheses or conclusion failed";
  return rep;
}

/// The slice projection of a vertex: comma of the identity and the vertex,
/// with its projection to the ambient set.
struct YonedaObject {
  Comma slice;
  SMap proj;  // slice -> ambient
};

inline YonedaObject yoneda_object(SSetPtr A, int a, int bound) {
  YonedaObject Y;
  Y.slice = comma_of_cospan(identity_smap(A), vertex_smap(A, a), bound);
  Y.proj.src = Y.slice.set;
  Y.proj.tgt = A;
  Y.proj.assign.resize(static_cast<size_t>(Y.slice.set->top_dim()) + 1);
  for (int d = 0; d <= Y.slice.set->top_dim(); ++d)
    for (int i = 0; i < Y.slice.set->size(d); ++i)
      Y.proj.assign[static_cast<size_t>(d)].push_back(Y.slice.trip(CellId{d, i}).left);
  return Y;
}

}  // namespace hoco

#endif
