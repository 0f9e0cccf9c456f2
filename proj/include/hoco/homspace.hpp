#ifndef HOCO_HOMSPACE_HPP
#define HOCO_HOMSPACE_HPP

#include "hoco/nerve.hpp"

namespace hoco {

/// Connected component of every vertex, numbered in order of first
/// appearance.
inline std::vector<int> pi0(SSetPtr X) {
  int n = X->size(0);
  std::vector<int> parent(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (int i = 0; i < X->size(1); ++i) {
    int a = X->vertex(nondeg(CellId{1, i}), 0).idx;
    int b = X->vertex(nondeg(CellId{1, i}), 1).idx;
    parent[static_cast<size_t>(find(a))] = find(b);
  }
  std::vector<int> out(static_cast<size_t>(n), -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (out[static_cast<size_t>(r)] < 0) out[static_cast<size_t>(r)] = next++;
    out[static_cast<size_t>(i)] = out[static_cast<size_t>(r)];
  }
  return out;
}

inline int pi0_count(SSetPtr X) {
  auto c = pi0(X);
  int m = 0;
  for (int v : c) m = std::max(m, v + 1);
  return m;
}

/// Homotopy category of a quasi-category tabulated through dimension two:
/// edges modulo the relation witnessed by triangles with a degenerate outer
/// face, composed through arbitrary triangles.
struct HoCat {
  FinCat cat;
  SSetPtr amb;
  std::vector<EZ> edges;
  std::map<EZ, int> edge_index;
  std::vector<int> mor_of_edge;

  int mor_of(const EZ& e) const {
    auto it = edge_index.find(e);
    if (it == edge_index.end()) throw invalid_input("homotopy category: unknown edge");
    return mor_of_edge[static_cast<size_t>(it->second)];
  }
};

inline HoCat homotopy_category(SSetPtr X) {
  if (X->truncation >= 0 && X->truncation < 2)
    throw invalid_input("homotopy category needs simplices through dimension 2");
  HoCat H;
  H.amb = X;
  H.edges = X->simplices(1);
  int ne = static_cast<int>(H.edges.size());
  for (int i = 0; i < ne; ++i) H.edge_index[H.edges[static_cast<size_t>(i)]] = i;
  std::vector<int> parent(static_cast<size_t>(ne));
  for (int i = 0; i < ne; ++i) parent[static_cast<size_t>(i)] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  auto idx = [&](const EZ& e) { return H.edge_index.at(e); };
  auto tris = X->simplices(2);
  for (auto& t : tris) {
    EZ e0 = X->act(t, op_delta(2, 0));
    EZ e1 = X->act(t, op_delta(2, 1));
    EZ e2 = X->act(t, op_delta(2, 2));
    if (e2.cell.dim == 0) parent[static_cast<size_t>(find(idx(e0)))] = find(idx(e1));
    if (e0.cell.dim == 0) parent[static_cast<size_t>(find(idx(e2)))] = find(idx(e1));
  }
  // morphism numbering: identity classes first, in object order
  int nv = X->size(0);
  std::vector<int> mor_of_root(static_cast<size_t>(ne), -1);
  std::vector<FinCat::Mor> mors;
  for (int o = 0; o < nv; ++o) {
    EZ id_edge{op_const(1, 0, 0), CellId{0, o}};
    int r = find(idx(id_edge));
    if (mor_of_root[static_cast<size_t>(r)] >= 0)
      throw invalid_input("homotopy category: identities of distinct objects merged");
    mor_of_root[static_cast<size_t>(r)] = o;
    mors.push_back(FinCat::Mor{o, o, "id_" + std::to_string(o)});
  }
  for (int i = 0; i < ne; ++i) {
    int r = find(i);
    if (mor_of_root[static_cast<size_t>(r)] >= 0) continue;
    const EZ& e = H.edges[static_cast<size_t>(r)];
    mor_of_root[static_cast<size_t>(r)] = static_cast<int>(mors.size());
    mors.push_back(FinCat::Mor{X->vertex(e, 0).idx, X->vertex(e, 1).idx,
                               "[" + std::to_string(r) + "]"});
  }
  H.mor_of_edge.resize(static_cast<size_t>(ne));
  for (int i = 0; i < ne; ++i)
    H.mor_of_edge[static_cast<size_t>(i)] = mor_of_root[static_cast<size_t>(find(i))];
  int nm = static_cast<int>(mors.size());
  H.cat.n_obj = nv;
  for (int o = 0; o < nv; ++o) H.cat.obj_names.push_back(std::to_string(o));
  H.cat.mors = mors;
  H.cat.name = "ho(" + X->name + ")";
  H.cat.then_.assign(static_cast<size_t>(nm), std::vector<int>(static_cast<size_t>(nm), -1));
  for (auto& t : tris) {
    int a = H.mor_of(X->act(t, op_delta(2, 2)));
    int b = H.mor_of(X->act(t, op_delta(2, 0)));
    int c = H.mor_of(X->act(t, op_delta(2, 1)));
    int& slot = H.cat.then_[static_cast<size_t>(a)][static_cast<size_t>(b)];
    if (slot >= 0 && slot != c)
      throw invalid_input("homotopy category: composite not well defined");
    slot = c;
  }
  return H;
}

/// Largest subcomplex all of whose edges become invertible in the homotopy
/// category.
inline RestrictedSSet groupoidal_core(SSetPtr X) {
  HoCat H = homotopy_category(X);
  std::vector<char> inv(H.cat.mors.size(), 0);
  for (int m = 0; m < H.cat.n_mor(); ++m)
    if (H.cat.inverse(m)) inv[static_cast<size_t>(m)] = 1;
  Subcomplex sub = empty_subcomplex(X);
  for (int d = 0; d <= X->top_dim(); ++d)
    for (int i = 0; i < X->size(d); ++i) {
      bool good = true;
      for (int u = 0; u < d + 1 && good; ++u)
        for (int v = u + 1; v < d + 1 && good; ++v) {
          SOp pick;
          pick.target = d;
          pick.img = {u, v};
          if (!inv[static_cast<size_t>(H.mor_of(X->act(nondeg(CellId{d, i}), pick)))])
            good = false;
        }
      if (good) sub.member[static_cast<size_t>(d)][static_cast<size_t>(i)] = 1;
    }
  return restrict_subcomplex(sub);
}

// ---------------------------------------------------------------------------
// one sided hom spaces
// ---------------------------------------------------------------------------

/// Right hom space of two vertices: an n-simplex is an (n+1)-simplex of the
/// ambient set whose front face is constant at the source vertex and whose
/// last vertex is the target. Operators act through alpha |-> alpha * [0].
struct RightHom {
  SSetPtr set;
  SSetPtr amb;
  int a = 0, b = 0, bound = 0;
  std::vector<std::vector<EZ>> cells_;  // representing ambient (n+1)-simplices
  std::vector<std::map<EZ, EZ>> index;

  const EZ& rep(CellId c) const {
    return cells_[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
  }
  EZ classify(const EZ& x, int n) const {
    auto it = index[static_cast<size_t>(n)].find(x);
    if (it == index[static_cast<size_t>(n)].end())
      throw invalid_input("right hom: unknown simplex");
    return it->second;
  }
};

inline RightHom right_hom(SSetPtr A, int a, int b, int bound) {
  if (A->truncation >= 0 && A->truncation < bound + 1)
    throw invalid_input("right hom: ambient set not tabulated deep enough");
  RightHom R;
  R.amb = A;
  R.a = a;
  R.b = b;
  R.bound = bound;
  auto out = std::make_shared<SSet>();
  out->name = "homr(" + A->name + ";" + std::to_string(a) + "," + std::to_string(b) + ")";
  out->truncation = bound;
  out->cells.resize(static_cast<size_t>(bound) + 1);
  R.cells_.resize(static_cast<size_t>(bound) + 1);
  R.index.resize(static_cast<size_t>(bound) + 1);
  for (int n = 0; n <= bound; ++n) {
    for (int k = 0; k < n; ++k)
      for (size_t i = 0; i < R.cells_[static_cast<size_t>(k)].size(); ++i)
        for (auto& epi : all_epis(n, k)) {
          if (epi.is_identity()) continue;
          EZ x = A->act(R.cells_[static_cast<size_t>(k)][i], op_join_point(epi));
          R.index[static_cast<size_t>(n)][x] = EZ{epi, CellId{k, static_cast<int>(i)}};
        }
    for (auto& x : A->simplices(n + 1)) {
      if (A->vertex(x, n + 1).idx != b) continue;
      EZ front = A->act(x, op_delta(n + 1, n + 1));
      if (!(front == EZ{op_const(n, 0, 0), CellId{0, a}})) continue;
      if (R.index[static_cast<size_t>(n)].count(x)) continue;
      int idx = static_cast<int>(R.cells_[static_cast<size_t>(n)].size());
      R.index[static_cast<size_t>(n)][x] = nondeg(CellId{n, idx});
      R.cells_[static_cast<size_t>(n)].push_back(x);
      out->cells[static_cast<size_t>(n)].push_back(Cell{});
    }
  }
  for (int n = 1; n <= bound; ++n)
    for (size_t i = 0; i < R.cells_[static_cast<size_t>(n)].size(); ++i) {
      Cell& c = out->cells[static_cast<size_t>(n)][i];
      for (int j = 0; j <= n; ++j)
        c.faces.push_back(R.classify(
            A->act(R.cells_[static_cast<size_t>(n)][i], op_join_point(op_delta(n, j))), n - 1));
    }
  R.set = out;
  return R;
}

/// Left hom space, realized as a right hom space in the opposite set.
inline RightHom left_hom(SSetPtr A, int a, int b, int bound) {
  RightHom R = right_hom(opposite(A), b, a, bound);
  auto named = std::make_shared<SSet>(*R.set);
  named->name = "homl(" + A->name + ";" + std::to_string(a) + "," + std::to_string(b) + ")";
  R.set = named;
  return R;
}

// ---------------------------------------------------------------------------
// comma construction
// ---------------------------------------------------------------------------

inline SOp op_of_standard(const StandardSSet& st, const EZ& s) {
  auto verts = st.verts_of(s.cell);
  SOp o;
  o.target = st.n;
  for (int v = 0; v <= s.dim(); ++v)
    o.img.push_back(verts[static_cast<size_t>(s.epi(v))]);
  return o;
}

/// Comma of a cospan f : B -> A <- C : g, built from cylinders: an n-simplex
/// is a simplex of B and one of C together with a map of the cylinder on the
/// n-simplex landing in A, matching f and g on the two ends.
struct Comma {
  SSetPtr set;
  SMap f, g;
  int bound = 0;
  std::vector<StandardSSet> stds;
  std::vector<MultiProduct> cyls;  // Delta^d x Delta^1
  struct Trip {
    EZ left, right;
    SMap theta;
    bool operator==(const Trip& o) const {
      return left == o.left && right == o.right && theta == o.theta;
    }
  };
  std::vector<std::vector<Trip>> cells_;
  std::vector<std::map<std::tuple<EZ, EZ, std::vector<std::vector<EZ>>>, EZ>> index;

  Trip act_trip(const Trip& t, int d, const SOp& alpha) const {
    int e = alpha.source_dim();
    Trip out;
    out.left = f.src->act(t.left, alpha);
    out.right = g.src->act(t.right, alpha);
    out.theta.src = cyls[static_cast<size_t>(e)].set;
    out.theta.tgt = t.theta.tgt;
    out.theta.assign.resize(static_cast<size_t>(out.theta.src->top_dim()) + 1);
    const MultiProduct& Pe = cyls[static_cast<size_t>(e)];
    const MultiProduct& Pd = cyls[static_cast<size_t>(d)];
    for (int q = 0; q <= out.theta.src->top_dim(); ++q)
      for (auto& key : Pe.keys[static_cast<size_t>(q)]) {
        SOp sigma = op_of_standard(stds[static_cast<size_t>(e)], key[0]);
        EZ tgt_cell = Pd.simplex(
            {stds[static_cast<size_t>(d)].simplex(hoco::compose(alpha, sigma)), key[1]});
        out.theta.assign[static_cast<size_t>(q)].push_back(t.theta.apply(tgt_cell));
      }
    return out;
  }
  EZ classify(const Trip& t, int d) const {
    auto it = index[static_cast<size_t>(d)].find({t.left, t.right, t.theta.assign});
    if (it == index[static_cast<size_t>(d)].end())
      throw invalid_input("comma: unknown simplex");
    return it->second;
  }
  const Trip& trip(CellId c) const {
    return cells_[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
  }
};

inline Comma comma_of_cospan(const SMap& f, const SMap& g, int bound, int limit = 1000000) {
  Comma K;
  K.f = f;
  K.g = g;
  K.bound = bound;
  SSetPtr A = f.tgt;
  auto out = std::make_shared<SSet>();
  out->name = "comma(" + f.src->name + "," + g.src->name + ")";
  out->truncation = bound;
  out->cells.resize(static_cast<size_t>(bound) + 1);
  K.cells_.resize(static_cast<size_t>(bound) + 1);
  K.index.resize(static_cast<size_t>(bound) + 1);
  for (int d = 0; d <= bound; ++d) {
    K.stds.push_back(standard(d));
    K.cyls.push_back(product(K.stds.back().set, standard(1).set, d + 1));
  }
  auto interval_vertex = [&](const EZ& s) -> int {
    // which end of the interval a product component sits at, or -1
    if (s.cell.dim != 0) return -1;
    return s.cell.idx;
  };
  for (int d = 0; d <= bound; ++d) {
    for (int k = 0; k < d; ++k)
      for (size_t i = 0; i < K.cells_[static_cast<size_t>(k)].size(); ++i)
        for (auto& epi : all_epis(d, k)) {
          if (epi.is_identity()) continue;
          Comma::Trip t = K.act_trip(K.cells_[static_cast<size_t>(k)][i], k, epi);
          K.index[static_cast<size_t>(d)][{t.left, t.right, t.theta.assign}] =
              EZ{epi, CellId{k, static_cast<int>(i)}};
        }
    const MultiProduct& P = K.cyls[static_cast<size_t>(d)];
    for (auto& bl : f.src->simplices(d))
      for (auto& cr : g.src->simplices(d)) {
        ExtensionProblem p;
        p.domain = P.set;
        p.target = A;
        p.init_tables();
        for (int q = 0; q <= P.set->top_dim(); ++q)
          for (size_t i = 0; i < P.keys[static_cast<size_t>(q)].size(); ++i) {
            const TupleKey& key = P.keys[static_cast<size_t>(q)][i];
            int end = interval_vertex(key[1]);
            if (end < 0) continue;
            SOp sigma = op_of_standard(K.stds[static_cast<size_t>(d)], key[0]);
            EZ src_simplex = end == 0 ? f.src->act(bl, sigma) : g.src->act(cr, sigma);
            EZ im = end == 0 ? f.apply(src_simplex) : g.apply(src_simplex);
            p.fix(CellId{q, static_cast<int>(i)}, im);
          }
        for (auto& theta : all_extensions(p, limit)) {
          Comma::Trip t{bl, cr, theta};
          if (K.index[static_cast<size_t>(d)].count({t.left, t.right, t.theta.assign})) continue;
          int idx = static_cast<int>(K.cells_[static_cast<size_t>(d)].size());
          K.index[static_cast<size_t>(d)][{t.left, t.right, t.theta.assign}] =
              nondeg(CellId{d, idx});
          K.cells_[static_cast<size_t>(d)].push_back(t);
          out->cells[static_cast<size_t>(d)].push_back(Cell{});
        }
      }
  }
  for (int d = 1; d <= bound; ++d)
    for (size_t i = 0; i < K.cells_[static_cast<size_t>(d)].size(); ++i) {
      Cell& c = out->cells[static_cast<size_t>(d)][i];
      for (int j = 0; j <= d; ++j)
        c.faces.push_back(
            K.classify(K.act_trip(K.cells_[static_cast<size_t>(d)][i], d, op_delta(d, j)), d - 1));
    }
  K.set = out;
  return K;
}

inline SMap vertex_smap(SSetPtr A, int v) {
  SMap m;
  m.src = point_sset();
  m.tgt = A;
  m.assign = {{nondeg(CellId{0, v})}};
  return m;
}

/// Two sided hom space of two vertices as a comma of the vertex inclusions.
inline Comma hom_space(SSetPtr A, int a, int b, int bound) {
  Comma K = comma_of_cospan(vertex_smap(A, a), vertex_smap(A, b), bound);
  auto named = std::make_shared<SSet>(*K.set);
  named->name = "hom(" + A->name + ";" + std::to_string(a) + "," + std::to_string(b) + ")";
  K.set = named;
  return K;
}

/// Comparison embedding of the right hom space into the cylinder hom space:
/// an (n+1)-simplex restricts along the map collapsing the cylinder top.
inline SMap u_comparison(const RightHom& R, const Comma& H) {
  SMap u;
  u.src = R.set;
  u.tgt = H.set;
  u.assign.resize(static_cast<size_t>(R.bound) + 1);
  for (int n = 0; n <= R.bound; ++n)
    for (size_t i = 0; i < R.cells_[static_cast<size_t>(n)].size(); ++i) {
      const EZ& x = R.cells_[static_cast<size_t>(n)][i];
      Comma::Trip t;
      t.left = EZ{op_const(n, 0, 0), CellId{0, 0}};
      t.right = t.left;
      const MultiProduct& P = H.cyls[static_cast<size_t>(n)];
      t.theta.src = P.set;
      t.theta.tgt = R.amb;
      t.theta.assign.resize(static_cast<size_t>(P.set->top_dim()) + 1);
      for (int q = 0; q <= P.set->top_dim(); ++q)
        for (auto& key : P.keys[static_cast<size_t>(q)]) {
          SOp sigma = op_of_standard(H.stds[static_cast<size_t>(n)], key[0]);
          SOp tau = op_of_standard(standard(1), key[1]);  // [q] -> [1]
          SOp gamma;
          gamma.target = n + 1;
          for (int v = 0; v <= q; ++v)
            gamma.img.push_back(tau(v) == 0 ? sigma(v) : n + 1);
          t.theta.assign[static_cast<size_t>(q)].push_back(R.amb->act(x, gamma));
        }
      u.assign[static_cast<size_t>(n)].push_back(H.classify(t, n));
    }
  return u;
}

/// From the function complex of two objects of an enriched category to the
/// right hom space of the corresponding vertices in the nerve: an n-simplex
/// phi becomes the functor out of the realized (n+1)-simplex that collapses
/// the base to the source object and evaluates phi on cone flags.
inline SMap fun_to_rhom(const CoherentNerve& N, int a, int b, const RightHom& R) {
  SSetPtr Fun = N.C->fun[static_cast<size_t>(a)][static_cast<size_t>(b)];
  SMap m;
  m.src = Fun;
  m.tgt = R.set;
  m.assign.resize(static_cast<size_t>(Fun->top_dim()) + 1);
  for (int n = 0; n <= Fun->top_dim(); ++n) {
    if (n > R.bound) throw invalid_input("fun_to_rhom: hom space bound too small");
    const CoherentSimplex& sh = *N.shapes[static_cast<size_t>(n + 1)];
    for (int i = 0; i < Fun->size(n); ++i) {
      SFunctor F;
      F.src = &sh.comp;
      F.tgt = N.C;
      for (int v = 0; v <= n; ++v) F.on_obj.push_back(a);
      F.on_obj.push_back(b);
      F.on_atom.resize(static_cast<size_t>(std::max(sh.comp.top_dim() + 1, 0)));
      for (int r = 0; r <= sh.comp.top_dim(); ++r)
        for (int j = 0; j < sh.comp.size(r); ++j) {
          const Flag& fl = sh.flag_of(AtomId{r, j});
          if (fl.hi() <= n) {
            F.on_atom[static_cast<size_t>(r)].push_back(N.C->identity(a, r));
          } else {
            SOp alpha = cone_flag_operator(fl, n + 1, n);
            F.on_atom[static_cast<size_t>(r)].push_back(Fun->act(nondeg(CellId{n, i}), alpha));
          }
        }
      EZ y = N.classify(F, n + 1);
      m.assign[static_cast<size_t>(n)].push_back(R.classify(y, n));
    }
  }
  return m;
}

}  // namespace hoco

#endif
