#ifndef HOCO_NERVE_HPP
#define HOCO_NERVE_HPP

#include "hoco/cat.hpp"
#include "hoco/exp.hpp"

namespace hoco {

/// All simplicial functors from a computad into an enriched category,
/// subject to optional fixed values on objects and atoms. Search runs over
/// atoms in canonical order, pruning on face compatibility.
inline std::vector<SFunctor> enumerate_sfunctors(
    const Computad& K, const SCat& C,
    const std::vector<std::optional<int>>& obj_fixed,
    const std::vector<std::vector<std::optional<EZ>>>& atom_fixed, long long limit = -1) {
  std::vector<SFunctor> found;
  SFunctor cur;
  cur.src = &K;
  cur.tgt = &C;
  cur.on_obj.assign(static_cast<size_t>(K.n_objects), 0);
  cur.on_atom.resize(static_cast<size_t>(std::max(K.top_dim() + 1, 0)));
  std::vector<AtomId> order;
  for (int r = 0; r <= K.top_dim(); ++r) {
    cur.on_atom[static_cast<size_t>(r)].resize(static_cast<size_t>(K.size(r)));
    for (int i = 0; i < K.size(r); ++i) order.push_back(AtomId{r, i});
  }
  auto fixed_obj = [&](int o) -> std::optional<int> {
    if (o < static_cast<int>(obj_fixed.size())) return obj_fixed[static_cast<size_t>(o)];
    return std::nullopt;
  };
  auto fixed_atom = [&](AtomId a) -> std::optional<EZ> {
    if (a.dim < static_cast<int>(atom_fixed.size()) &&
        a.idx < static_cast<int>(atom_fixed[static_cast<size_t>(a.dim)].size()))
      return atom_fixed[static_cast<size_t>(a.dim)][static_cast<size_t>(a.idx)];
    return std::nullopt;
  };
  auto atoms_rec = [&](auto&& self, size_t pos) -> bool {
    if (limit >= 0 && static_cast<long long>(found.size()) >= limit) return false;
    if (pos == order.size()) {
      found.push_back(cur);
      return true;
    }
    AtomId aid = order[pos];
    const CAtom& at = K.atom(aid);
    int s = cur.obj(at.src), t = cur.obj(at.tgt);
    SSetPtr H = C.fun[static_cast<size_t>(s)][static_cast<size_t>(t)];
    if (H->truncation >= 0 && aid.dim > H->truncation)
      throw invalid_input("functor search: hom space not tabulated to dimension " +
                          std::to_string(aid.dim));
    auto try_one = [&](const EZ& cand) {
      if (cand.dim() != aid.dim) return;
      for (int j = 0; j <= aid.dim && aid.dim >= 1; ++j) {
        cur.on_atom[static_cast<size_t>(aid.dim)][static_cast<size_t>(aid.idx)] = cand;
        if (!(H->act(cand, op_delta(aid.dim, j)) ==
              cur.apply(at.faces[static_cast<size_t>(j)])))
          return;
      }
      cur.on_atom[static_cast<size_t>(aid.dim)][static_cast<size_t>(aid.idx)] = cand;
      self(self, pos + 1);
    };
    if (auto f = fixed_atom(aid)) {
      try_one(*f);
      return true;
    }
    for (auto& cand : H->simplices(aid.dim)) try_one(cand);
    return true;
  };
  auto objs_rec = [&](auto&& self, int o) -> void {
    if (limit >= 0 && static_cast<long long>(found.size()) >= limit) return;
    if (o == K.n_objects) {
      atoms_rec(atoms_rec, 0);
      return;
    }
    if (auto f = fixed_obj(o)) {
      cur.on_obj[static_cast<size_t>(o)] = *f;
      self(self, o + 1);
      return;
    }
    for (int v = 0; v < C.n_obj; ++v) {
      cur.on_obj[static_cast<size_t>(o)] = v;
      self(self, o + 1);
    }
  };
  objs_rec(objs_rec, 0);
  return found;
}

/// The homotopy coherent nerve of an enriched category, tabulated through a
/// fixed simplex dimension. An n-cell is a simplicial functor out of the
/// realized n-simplex; operators act by precomposition with the realized
/// operator.
struct CoherentNerve {
  SSetPtr set;
  const SCat* C = nullptr;
  int bound = 0;
  std::vector<std::shared_ptr<CoherentSimplex>> shapes;
  std::vector<std::vector<SFunctor>> cells_;
  using Key = std::pair<std::vector<int>, std::vector<EZ>>;
  std::vector<std::map<Key, EZ>> index;

  static Key key_of(const SFunctor& F) {
    Key k;
    k.first = F.on_obj;
    for (auto& layer : F.on_atom)
      for (auto& e : layer) k.second.push_back(e);
    return k;
  }
  const SFunctor& functor_of_cell(CellId c) const {
    return cells_[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
  }
  EZ classify(const SFunctor& F, int n) const {
    auto it = index[static_cast<size_t>(n)].find(key_of(F));
    if (it == index[static_cast<size_t>(n)].end())
      throw invalid_input("coherent nerve: unknown simplex");
    return it->second;
  }
  /// Precompose a level-n functor with the realization of beta : [m] -> [n].
  SFunctor act_functor(const SFunctor& F, int n, const SOp& beta) const {
    int m = beta.source_dim();
    const CoherentSimplex& sm = *shapes[static_cast<size_t>(m)];
    const CoherentSimplex& sn = *shapes[static_cast<size_t>(n)];
    SFunctor G;
    G.src = &sm.comp;
    G.tgt = C;
    for (int i = 0; i <= m; ++i) G.on_obj.push_back(F.obj(beta(i)));
    G.on_atom.resize(static_cast<size_t>(std::max(sm.comp.top_dim() + 1, 0)));
    for (int r = 0; r <= sm.comp.top_dim(); ++r)
      for (int i = 0; i < sm.comp.size(r); ++i)
        G.on_atom[static_cast<size_t>(r)].push_back(
            F.apply(sn.word_of(flag_image(sm.flag_of(AtomId{r, i}), beta))));
    return G;
  }
  SFunctor functor_of(const EZ& s) const {
    return act_functor(functor_of_cell(s.cell), s.cell.dim, s.epi);
  }
};

inline CoherentNerve coherent_nerve(const SCat& C, int bound) {
  CoherentNerve N;
  N.C = &C;
  N.bound = bound;
  for (int n = 0; n <= bound; ++n)
    N.shapes.push_back(std::make_shared<CoherentSimplex>(coherent_simplex(n)));
  auto out = std::make_shared<SSet>();
  out->name = "nerve(" + C.name + ")";
  out->truncation = bound;
  out->cells.resize(static_cast<size_t>(bound) + 1);
  N.cells_.resize(static_cast<size_t>(bound) + 1);
  N.index.resize(static_cast<size_t>(bound) + 1);
  for (int n = 0; n <= bound; ++n) {
    for (int k = 0; k < n; ++k)
      for (size_t i = 0; i < N.cells_[static_cast<size_t>(k)].size(); ++i)
        for (auto& epi : all_epis(n, k)) {
          if (epi.is_identity()) continue;
          SFunctor G = N.act_functor(N.cells_[static_cast<size_t>(k)][i], k, epi);
          N.index[static_cast<size_t>(n)][CoherentNerve::key_of(G)] =
              EZ{epi, CellId{k, static_cast<int>(i)}};
        }
    auto all = enumerate_sfunctors(N.shapes[static_cast<size_t>(n)]->comp, C, {}, {});
    std::sort(all.begin(), all.end(), [](const SFunctor& a, const SFunctor& b) {
      return CoherentNerve::key_of(a) < CoherentNerve::key_of(b);
    });
    for (auto& F : all) {
      auto key = CoherentNerve::key_of(F);
      if (N.index[static_cast<size_t>(n)].count(key)) continue;
      int idx = static_cast<int>(N.cells_[static_cast<size_t>(n)].size());
      N.index[static_cast<size_t>(n)][key] = nondeg(CellId{n, idx});
      N.cells_[static_cast<size_t>(n)].push_back(F);
      out->cells[static_cast<size_t>(n)].push_back(Cell{});
    }
  }
  for (int n = 1; n <= bound; ++n)
    for (size_t i = 0; i < N.cells_[static_cast<size_t>(n)].size(); ++i) {
      Cell& c = out->cells[static_cast<size_t>(n)][i];
      for (int j = 0; j <= n; ++j) {
        SFunctor G = N.act_functor(N.cells_[static_cast<size_t>(n)][i], n, op_delta(n, j));
        auto it = N.index[static_cast<size_t>(n - 1)].find(CoherentNerve::key_of(G));
        if (it == N.index[static_cast<size_t>(n - 1)].end())
          throw invalid_input("coherent nerve: face escaped the tabulation");
        c.faces.push_back(it->second);
      }
    }
  N.set = out;
  return N;
}

/// The enriched category of a finite ordinary category: discrete hom spaces.
struct DiscreteSCat {
  SCat cat;
  std::shared_ptr<FinCat> base;
  std::shared_ptr<std::vector<std::vector<std::vector<int>>>> hom_mors;  // [a][b] -> mor ids
  std::shared_ptr<std::vector<std::vector<int>>> vertex_of_mor;          // by [a], mor -> vertex
};

inline DiscreteSCat scat_of_fincat(const FinCat& D0) {
  DiscreteSCat S;
  S.base = std::make_shared<FinCat>(D0);
  const FinCat& D = *S.base;
  S.cat.n_obj = D.n_obj;
  S.cat.obj_names = D.obj_names;
  S.cat.name = "disc(" + D.name + ")";
  S.hom_mors = std::make_shared<std::vector<std::vector<std::vector<int>>>>(
      static_cast<size_t>(D.n_obj), std::vector<std::vector<int>>(static_cast<size_t>(D.n_obj)));
  S.vertex_of_mor = std::make_shared<std::vector<std::vector<int>>>(
      static_cast<size_t>(D.n_obj), std::vector<int>(D.mors.size(), -1));
  S.cat.fun.resize(static_cast<size_t>(D.n_obj));
  for (int a = 0; a < D.n_obj; ++a)
    for (int b = 0; b < D.n_obj; ++b) {
      auto s = std::make_shared<SSet>();
      s->name = "hom(" + std::to_string(a) + "," + std::to_string(b) + ")";
      for (size_t m = 0; m < D.mors.size(); ++m)
        if (D.mors[m].src == a && D.mors[m].tgt == b) {
          (*S.vertex_of_mor)[static_cast<size_t>(a)][m] =
              static_cast<int>((*S.hom_mors)[static_cast<size_t>(a)][static_cast<size_t>(b)].size());
          (*S.hom_mors)[static_cast<size_t>(a)][static_cast<size_t>(b)].push_back(
              static_cast<int>(m));
          if (s->cells.empty()) s->cells.resize(1);
          Cell c;
          c.label = D.mors[m].name;
          s->cells[0].push_back(std::move(c));
        }
      S.cat.fun[static_cast<size_t>(a)].push_back(s);
    }
  for (int a = 0; a < D.n_obj; ++a)
    S.cat.id_vertex.push_back((*S.vertex_of_mor)[static_cast<size_t>(a)][static_cast<size_t>(D.id(a))]);
  auto hom_mors = S.hom_mors;
  auto vom = S.vertex_of_mor;
  auto base = S.base;
  S.cat.comp = [hom_mors, vom, base](int a, int b, int c, const EZ& x, const EZ& y) {
    int mx = (*hom_mors)[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(x.cell.idx)];
    int my = (*hom_mors)[static_cast<size_t>(b)][static_cast<size_t>(c)][static_cast<size_t>(y.cell.idx)];
    int m = base->then(mx, my);
    return EZ{op_const(x.dim(), 0, 0),
              CellId{0, (*vom)[static_cast<size_t>(a)][static_cast<size_t>(m)]}};
  };
  return S;
}

/// The enriched dual: hom spaces transposed, composition reversed.
inline SCat op_scat(const SCat& C) {
  SCat D;
  D.n_obj = C.n_obj;
  D.obj_names = C.obj_names;
  D.name = C.name + "^op";
  D.id_vertex = C.id_vertex;
  D.fun.resize(static_cast<size_t>(C.n_obj));
  for (int a = 0; a < C.n_obj; ++a)
    for (int b = 0; b < C.n_obj; ++b)
      D.fun[static_cast<size_t>(a)].push_back(C.fun[static_cast<size_t>(b)][static_cast<size_t>(a)]);
  auto comp = C.comp;
  D.comp = [comp](int a, int b, int c, const EZ& x, const EZ& y) {
    return comp(c, b, a, y, x);
  };
  return D;
}

/// Reverse a flag through the ordinal dual of [0,n].
inline Flag dual_flag(const Flag& f, int n) {
  Flag g;
  for (Mask t : f.T) {
    Mask u = 0;
    for (int v : mask_bits(t)) u |= 1u << (n - v);
    g.T.push_back(u);
  }
  return g;
}

/// Cell-level comparison between the opposite of the nerve and the nerve of
/// the enriched dual.
inline SMap nerve_duality_map(const CoherentNerve& NC, SSetPtr NCop_set,
                              const CoherentNerve& NCd) {
  SMap f;
  f.src = NCop_set;
  f.tgt = NCd.set;
  f.assign.resize(static_cast<size_t>(NC.bound) + 1);
  for (int n = 0; n <= NC.bound; ++n)
    for (size_t i = 0; i < NC.cells_[static_cast<size_t>(n)].size(); ++i) {
      const SFunctor& F = NC.cells_[static_cast<size_t>(n)][i];
      const CoherentSimplex& sh = *NC.shapes[static_cast<size_t>(n)];
      SFunctor G;
      G.src = &NCd.shapes[static_cast<size_t>(n)]->comp;
      G.tgt = NCd.C;
      for (int v = n; v >= 0; --v) G.on_obj.push_back(F.obj(v));
      G.on_atom.resize(F.on_atom.size());
      for (int r = 0; r <= sh.comp.top_dim(); ++r)
        for (int j = 0; j < sh.comp.size(r); ++j) {
          Flag d = dual_flag(NCd.shapes[static_cast<size_t>(n)]->flag_of(AtomId{r, j}), n);
          G.on_atom[static_cast<size_t>(r)].push_back(F.atom_image(sh.atom_of(d)));
        }
      f.assign[static_cast<size_t>(n)].push_back(NCd.classify(G, n));
    }
  return f;
}

// ---------------------------------------------------------------------------
// horn filling
// ---------------------------------------------------------------------------

/// Extension problem for a map defined on a subcomplex of the domain.
inline ExtensionProblem extension_along_subcomplex(const RestrictedSSet& A, SSetPtr domain,
                                                   SSetPtr target, const SMap& f) {
  ExtensionProblem p;
  p.domain = domain;
  p.target = target;
  p.init_tables();
  for (int d = 0; d <= domain->top_dim(); ++d)
    for (int i = 0; i < domain->size(d); ++i) {
      auto sc = A.to_sub(CellId{d, i});
      if (!sc) continue;
      p.fix(CellId{d, i}, f.on_cell(*sc));
    }
  return p;
}

/// Fill one horn; returns the filling map of the whole simplex if it exists.
inline std::optional<SMap> fill_horn(SSetPtr X, int n, int k, const SMap& horn_map,
                                     const StandardSSet& st, const RestrictedSSet& horn) {
  ExtensionProblem p = extension_along_subcomplex(horn, st.set, X, horn_map);
  return first_extension(p);
}

struct HornReport {
  bool ok = true;
  int fail_n = -1, fail_k = -1;
  long long horns_checked = 0;
  std::string note;
};

/// Check horn filling for all maps out of horns of dimension 2..D. With
/// inner_only set this is the quasi-category test, otherwise the Kan test.
inline HornReport horn_check(SSetPtr X, int D, bool inner_only, long long map_limit = 2000000) {
  HornReport rep;
  for (int n = 2; n <= D; ++n) {
    auto st = standard(n);
    for (int k = inner_only ? 1 : 0; k <= (inner_only ? n - 1 : n); ++k) {
      auto horn = restrict_subcomplex(horn_sub(st, k));
      auto maps = enumerate_maps(horn.set, X, map_limit);
      for (auto& m : maps) {
        ++rep.horns_checked;
        if (!fill_horn(X, n, k, m, st, horn)) {
          rep.ok = false;
          rep.fail_n = n;
          rep.fail_k = k;
          rep.note = "unfillable horn";
          return rep;
        }
      }
    }
  }
  return rep;
}

inline HornReport kan_check(SSetPtr X, int D) { return horn_check(X, D, false); }
inline HornReport quasicategory_check(SSetPtr X, int D) { return horn_check(X, D, true); }

/// alpha[x] : F(x) -> G(x) must commute with every morphism image.
inline ValidationReport validate_transformation(const FinFunctor& F, const FinFunctor& G,
                                                const std::vector<int>& alpha) {
  ValidationReport r;
  const FinCat& D = *F.tgt;
  for (int o = 0; o < F.src->n_obj; ++o) {
    const auto& a = D.mors[static_cast<size_t>(alpha[static_cast<size_t>(o)])];
    if (a.src != F.obj(o) || a.tgt != G.obj(o))
      r.fail("component endpoints wrong at " + std::to_string(o));
  }
  if (!r.ok) return r;
  for (int m = 0; m < F.src->n_mor(); ++m) {
    const auto& mm = F.src->mors[static_cast<size_t>(m)];
    if (D.then(F.mor(m), alpha[static_cast<size_t>(mm.tgt)]) !=
        D.then(alpha[static_cast<size_t>(mm.src)], G.mor(m)))
      r.fail("naturality fails at morphism " + std::to_string(m));
  }
  return r;
}

/// The cylinder nerve(C) x interval -> nerve(D) packaging a natural
/// transformation F => G: a cell over the string (m_1, ..., m_q) with
/// interval heights v_0 <= ... <= v_q maps to the string whose i-th step is
/// F(m_i), G(m_i), or the composite through the component at the step where
/// the height jumps.
inline SMap nerve_of_transformation(const FinFunctor& F, const FinFunctor& G,
                                    const std::vector<int>& alpha, const NerveSSet& NC,
                                    const NerveSSet& ND, const MultiProduct& cyl) {
  auto chk = validate_transformation(F, G, alpha);
  if (!chk.ok) throw invalid_input("transformation cylinder: " + chk.errors[0]);
  const FinCat& D = *F.tgt;
  auto iv = standard(1);
  SMap out;
  out.src = cyl.set;
  out.tgt = ND.set;
  out.assign.resize(static_cast<size_t>(cyl.set->top_dim()) + 1);
  for (int q = 0; q <= cyl.set->top_dim(); ++q)
    for (auto& key : cyl.keys[static_cast<size_t>(q)]) {
      auto [start, str] = NC.string_of_simplex(key[0]);
      auto tverts = iv.verts_of(key[1].cell);
      auto height = [&](int i) { return tverts[static_cast<size_t>(key[1].epi(i))]; };
      std::vector<int> objs{start};
      for (int m : str) objs.push_back(NC.cat.mors[static_cast<size_t>(m)].tgt);
      std::vector<int> img;
      for (int i = 1; i <= q; ++i) {
        int m = str[static_cast<size_t>(i - 1)];
        if (height(i - 1) == 0 && height(i) == 0)
          img.push_back(F.mor(m));
        else if (height(i - 1) == 1)
          img.push_back(G.mor(m));
        else
          img.push_back(D.then(F.mor(m), alpha[static_cast<size_t>(objs[static_cast<size_t>(i)])]));
      }
      int base = height(0) == 0 ? F.obj(start) : G.obj(start);
      out.assign[static_cast<size_t>(q)].push_back(ND.simplex_of(img, img.empty() ? base : -1));
    }
  return out;
}

}  // namespace hoco

#endif
