#ifndef HOCO_CAT_HPP
#define HOCO_CAT_HPP

#include <map>
#include <optional>
#include <set>

#include "hoco/sset.hpp"

namespace hoco {

/// A finite category with an explicit composition table. By convention the
/// first `n_obj` morphisms are the identities, mors[o] = id_o.
struct FinCat {
  struct Mor {
    int src = 0, tgt = 0;
    std::string name;
  };
  int n_obj = 0;
  std::vector<std::string> obj_names;
  std::vector<Mor> mors;
  std::vector<std::vector<int>> then_;  // then_[f][g] = g o f, or -1
  std::string name;

  int n_mor() const { return static_cast<int>(mors.size()); }
  int id(int o) const { return o; }
  bool is_id(int m) const { return m < n_obj; }
  /// Diagrammatic composite: f : a -> b followed by g : b -> c.
  int then(int f, int g) const {
    int r = then_[static_cast<size_t>(f)][static_cast<size_t>(g)];
    if (r < 0) throw invalid_input("category: morphisms not composable");
    return r;
  }
  std::vector<int> hom(int a, int b) const {
    std::vector<int> out;
    for (int m = 0; m < n_mor(); ++m)
      if (mors[static_cast<size_t>(m)].src == a && mors[static_cast<size_t>(m)].tgt == b)
        out.push_back(m);
    return out;
  }
  std::optional<int> inverse(int m) const {
    const Mor& f = mors[static_cast<size_t>(m)];
    for (int g : hom(f.tgt, f.src))
      if (then(m, g) == id(f.src) && then(g, m) == id(f.tgt)) return g;
    return std::nullopt;
  }
  bool is_iso(int m) const { return inverse(m).has_value(); }
};

inline ValidationReport validate(const FinCat& C) {
  ValidationReport r;
  if (static_cast<int>(C.then_.size()) != C.n_mor()) {
    r.fail("composition table size mismatch");
    return r;
  }
  for (int o = 0; o < C.n_obj; ++o)
    if (C.mors[static_cast<size_t>(o)].src != o || C.mors[static_cast<size_t>(o)].tgt != o)
      r.fail("identity convention broken at object " + std::to_string(o));
  for (int f = 0; f < C.n_mor(); ++f) {
    const auto& mf = C.mors[static_cast<size_t>(f)];
    if (C.then_[static_cast<size_t>(f)][static_cast<size_t>(C.id(mf.tgt))] != f ||
        C.then_[static_cast<size_t>(C.id(mf.src))][static_cast<size_t>(f)] != f)
      r.fail("unit law fails at morphism " + std::to_string(f));
    for (int g = 0; g < C.n_mor(); ++g) {
      const auto& mg = C.mors[static_cast<size_t>(g)];
      int fg = C.then_[static_cast<size_t>(f)][static_cast<size_t>(g)];
      if ((mf.tgt == mg.src) != (fg >= 0)) {
        r.fail("composability mismatch " + std::to_string(f) + "," + std::to_string(g));
        continue;
      }
      if (fg < 0) continue;
      const auto& mfg = C.mors[static_cast<size_t>(fg)];
      if (mfg.src != mf.src || mfg.tgt != mg.tgt)
        r.fail("composite endpoints wrong " + std::to_string(f) + "," + std::to_string(g));
      for (int h = 0; h < C.n_mor(); ++h) {
        if (C.mors[static_cast<size_t>(h)].src != mg.tgt) continue;
        if (C.then_[static_cast<size_t>(fg)][static_cast<size_t>(h)] !=
            C.then_[static_cast<size_t>(f)][static_cast<size_t>(
                C.then_[static_cast<size_t>(g)][static_cast<size_t>(h)])])
          r.fail("associativity fails at " + std::to_string(f) + "," + std::to_string(g) + "," +
                 std::to_string(h));
      }
    }
  }
  return r;
}

/// Assemble a category from object count and non-identity arrows with a
/// composition rule given on all composable pairs (including identities).
struct FinCatBuilder {
  int n_obj = 0;
  std::vector<std::string> obj_names;
  std::vector<FinCat::Mor> arrows;  // non-identity morphisms, in desired order
  std::string name;

  /// `rule(f, g)`: composite index of f;g where indices address the final
  /// morphism list (identities first).
  FinCat build(const std::function<int(const FinCat&, int, int)>& rule) const {
    FinCat C;
    C.n_obj = n_obj;
    C.obj_names = obj_names;
    C.name = name;
    if (C.obj_names.empty())
      for (int o = 0; o < n_obj; ++o) C.obj_names.push_back("o" + std::to_string(o));
    for (int o = 0; o < n_obj; ++o)
      C.mors.push_back(FinCat::Mor{o, o, "id_" + C.obj_names[static_cast<size_t>(o)]});
    for (auto& a : arrows) C.mors.push_back(a);
    C.then_.assign(static_cast<size_t>(C.n_mor()),
                   std::vector<int>(static_cast<size_t>(C.n_mor()), -1));
    for (int f = 0; f < C.n_mor(); ++f)
      for (int g = 0; g < C.n_mor(); ++g) {
        if (C.mors[static_cast<size_t>(f)].tgt != C.mors[static_cast<size_t>(g)].src) continue;
        int r;
        if (C.is_id(f))
          r = g;
        else if (C.is_id(g))
          r = f;
        else
          r = rule(C, f, g);
        C.then_[static_cast<size_t>(f)][static_cast<size_t>(g)] = r;
      }
    return C;
  }
};

/// The poset category of [n] under <=.
inline FinCat linear_cat(int n) {
  FinCatBuilder b;
  b.n_obj = n + 1;
  b.name = "[" + std::to_string(n) + "]";
  std::map<std::pair<int, int>, int> idx;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      idx[{i, j}] = b.n_obj + static_cast<int>(b.arrows.size());
      b.arrows.push_back(FinCat::Mor{i, j, std::to_string(i) + "->" + std::to_string(j)});
    }
  return b.build([idx](const FinCat& C, int f, int g) {
    return idx.at({C.mors[static_cast<size_t>(f)].src, C.mors[static_cast<size_t>(g)].tgt});
  });
}

/// One-object category of a finite group given by its multiplication table;
/// element 0 must be the unit. mult[a][b] = a then b.
inline FinCat group_cat(const std::vector<std::vector<int>>& mult, std::string name) {
  FinCatBuilder b;
  b.n_obj = 1;
  b.name = std::move(name);
  int n = static_cast<int>(mult.size());
  for (int a = 1; a < n; ++a) b.arrows.push_back(FinCat::Mor{0, 0, "g" + std::to_string(a)});
  return b.build([&mult, n](const FinCat&, int f, int g) {
    int a = f == 0 ? 0 : f;  // morphism index: 0 = id = unit, k = element k
    int bb = g == 0 ? 0 : g;
    int r = mult[static_cast<size_t>(a)][static_cast<size_t>(bb)];
    (void)n;
    return r;  // element r is morphism r (unit = identity = 0)
  });
}

inline FinCat cyclic2_cat() { return group_cat({{0, 1}, {1, 0}}, "BZ2"); }

/// The free-standing isomorphism: two objects, mutually inverse arrows.
inline FinCat walking_iso_cat() {
  FinCatBuilder b;
  b.n_obj = 2;
  b.name = "I";
  b.arrows.push_back(FinCat::Mor{0, 1, "f"});
  b.arrows.push_back(FinCat::Mor{1, 0, "f^-1"});
  return b.build([](const FinCat& C, int f, int g) {
    return C.id(C.mors[static_cast<size_t>(f)].src);  // fg and gf are identities
  });
}

struct FinFunctor {
  const FinCat* src = nullptr;
  const FinCat* tgt = nullptr;
  std::vector<int> on_obj;
  std::vector<int> on_mor;
  int obj(int o) const { return on_obj[static_cast<size_t>(o)]; }
  int mor(int m) const { return on_mor[static_cast<size_t>(m)]; }
};

inline FinFunctor identity_functor(const FinCat& C) {
  FinFunctor F;
  F.src = &C;
  F.tgt = &C;
  for (int o = 0; o < C.n_obj; ++o) F.on_obj.push_back(o);
  for (int m = 0; m < C.n_mor(); ++m) F.on_mor.push_back(m);
  return F;
}

inline ValidationReport validate(const FinFunctor& F) {
  ValidationReport r;
  const FinCat& C = *F.src;
  const FinCat& D = *F.tgt;
  for (int o = 0; o < C.n_obj; ++o)
    if (F.mor(C.id(o)) != D.id(F.obj(o))) r.fail("functor breaks identity at " + std::to_string(o));
  for (int m = 0; m < C.n_mor(); ++m) {
    const auto& mm = C.mors[static_cast<size_t>(m)];
    const auto& im = D.mors[static_cast<size_t>(F.mor(m))];
    if (im.src != F.obj(mm.src) || im.tgt != F.obj(mm.tgt))
      r.fail("functor breaks endpoints at morphism " + std::to_string(m));
  }
  for (int f = 0; f < C.n_mor(); ++f)
    for (int g = 0; g < C.n_mor(); ++g) {
      if (C.mors[static_cast<size_t>(f)].tgt != C.mors[static_cast<size_t>(g)].src) continue;
      if (F.mor(C.then(f, g)) != D.then(F.mor(f), F.mor(g)))
        r.fail("functor breaks composition at " + std::to_string(f) + "," + std::to_string(g));
    }
  return r;
}

inline FinFunctor compose(const FinFunctor& G, const FinFunctor& F) {
  FinFunctor H;
  H.src = F.src;
  H.tgt = G.tgt;
  for (int o : F.on_obj) H.on_obj.push_back(G.obj(o));
  for (int m : F.on_mor) H.on_mor.push_back(G.mor(m));
  return H;
}

inline bool functor_equal(const FinFunctor& F, const FinFunctor& G) {
  return F.on_obj == G.on_obj && F.on_mor == G.on_mor;
}

// ---------------------------------------------------------------------------
// the classical nerve
// ---------------------------------------------------------------------------

/// Nerve of a finite category: nondegenerate n-cells are composable strings
/// of non-identity morphisms, ordered lexicographically.
struct NerveSSet {
  SSetPtr set;
  FinCat cat;
  std::vector<std::vector<std::vector<int>>> strings;  // per dim, per cell
  std::vector<std::map<std::vector<int>, int>> index;

  CellId id_of_string(const std::vector<int>& s) const {
    int d = static_cast<int>(s.size());
    auto it = index[static_cast<size_t>(d)].find(s);
    if (it == index[static_cast<size_t>(d)].end())
      throw invalid_input("nerve: unknown string");
    return CellId{d, it->second};
  }
  CellId vertex_of(int obj) const { return CellId{0, obj}; }
  int obj_of_vertex(CellId v) const { return v.idx; }
  const std::vector<int>& string_of(CellId c) const {
    return strings[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
  }
  /// EZ normal form of an arbitrary composable string (identities allowed).
  /// For a 0-dimensional simplex pass the object as `base_obj`.
  EZ simplex_of(const std::vector<int>& s, int base_obj = -1) const {
    if (s.empty()) return nondeg(vertex_of(base_obj));
    std::vector<int> core;
    SOp epi;
    int v = 0;
    epi.img.push_back(0);
    for (int m : s) {
      if (!cat.is_id(m)) {
        core.push_back(m);
        ++v;
      }
      epi.img.push_back(v);
    }
    epi.target = v;
    if (core.empty()) {
      int o = cat.mors[static_cast<size_t>(s[0])].src;
      return EZ{epi, vertex_of(o)};
    }
    return EZ{epi, id_of_string(core)};
  }
  /// The string (with identities) of an arbitrary simplex, and its start.
  std::pair<int, std::vector<int>> string_of_simplex(const EZ& s) const {
    const std::vector<int>& core = string_of(s.cell);
    int start = core.empty() ? obj_of_vertex(s.cell)
                             : cat.mors[static_cast<size_t>(core[0])].src;
    // expand: step i of the degenerate string follows epi
    std::vector<int> objs;  // object path of the core string
    objs.push_back(start);
    for (int m : core) objs.push_back(cat.mors[static_cast<size_t>(m)].tgt);
    std::vector<int> out;
    for (int i = 0; i + 1 <= s.dim(); ++i) {
      int a = s.epi(i), b = s.epi(i + 1);
      if (a == b)
        out.push_back(cat.id(objs[static_cast<size_t>(a)]));
      else
        out.push_back(core[static_cast<size_t>(a)]);
    }
    return {start, out};
  }
};

inline NerveSSet nerve_of_category(const FinCat& C, int bound) {
  NerveSSet N;
  N.cat = C;
  auto out = std::make_shared<SSet>();
  out->name = "N(" + C.name + ")";
  N.strings.resize(static_cast<size_t>(bound) + 1);
  N.index.resize(static_cast<size_t>(bound) + 1);
  out->cells.resize(static_cast<size_t>(bound) + 1);
  // dimension 0: objects
  for (int o = 0; o < C.n_obj; ++o) {
    N.index[0][{}] = -1;  // unused sentinel for dim 0
    Cell c;
    c.label = C.obj_names[static_cast<size_t>(o)];
    out->cells[0].push_back(std::move(c));
    N.strings[0].push_back({});
  }
  N.index[0].clear();
  bool exhausted = false;
  for (int d = 1; d <= bound; ++d) {
    // extend each (d-1)-string by one non-identity morphism, lexicographic
    std::vector<std::vector<int>> found;
    if (d == 1) {
      for (int m = C.n_obj; m < C.n_mor(); ++m) found.push_back({m});
    } else {
      for (auto& s : N.strings[static_cast<size_t>(d - 1)]) {
        if (s.empty()) continue;
        int end = C.mors[static_cast<size_t>(s.back())].tgt;
        for (int m = C.n_obj; m < C.n_mor(); ++m)
          if (C.mors[static_cast<size_t>(m)].src == end) {
            auto t = s;
            t.push_back(m);
            found.push_back(t);
          }
      }
      std::sort(found.begin(), found.end());
    }
    for (auto& s : found) {
      N.index[static_cast<size_t>(d)][s] = static_cast<int>(N.strings[static_cast<size_t>(d)].size());
      N.strings[static_cast<size_t>(d)].push_back(s);
      out->cells[static_cast<size_t>(d)].push_back(Cell{});
    }
    if (found.empty()) {
      exhausted = true;
      break;
    }
  }
  out->truncation = exhausted ? -1 : bound;
  while (!out->cells.empty() && out->cells.back().empty()) out->cells.pop_back();
  N.set = out;
  // faces
  for (int d = 1; d <= out->top_dim(); ++d)
    for (size_t i = 0; i < N.strings[static_cast<size_t>(d)].size(); ++i) {
      Cell& c = out->cells[static_cast<size_t>(d)][i];
      const auto& s = N.strings[static_cast<size_t>(d)][i];
      for (int j = 0; j <= d; ++j) {
        std::vector<int> f;
        if (j == 0) {
          f.assign(s.begin() + 1, s.end());
        } else if (j == d) {
          f.assign(s.begin(), s.end() - 1);
        } else {
          f.assign(s.begin(), s.begin() + (j - 1));
          f.push_back(C.then(s[static_cast<size_t>(j - 1)], s[static_cast<size_t>(j)]));
          f.insert(f.end(), s.begin() + j + 1, s.end());
        }
        int base = C.mors[static_cast<size_t>(s[0])].src;
        if (j == 0 && d == 1) base = C.mors[static_cast<size_t>(s[0])].tgt;
        else if (j == 0) base = C.mors[static_cast<size_t>(s[0])].tgt;
        c.faces.push_back(N.simplex_of(f, f.empty() ? base : -1));
      }
    }
  return N;
}

/// Nerve of a functor, between already-built nerves.
inline SMap nerve_of_functor(const FinFunctor& F, const NerveSSet& NS, const NerveSSet& NT) {
  SMap f;
  f.src = NS.set;
  f.tgt = NT.set;
  f.assign.resize(static_cast<size_t>(NS.set->top_dim()) + 1);
  for (int d = 0; d <= NS.set->top_dim(); ++d)
    for (int i = 0; i < NS.set->size(d); ++i) {
      if (d == 0) {
        f.assign[0].push_back(nondeg(NT.vertex_of(F.obj(i))));
        continue;
      }
      std::vector<int> s;
      for (int m : NS.strings[static_cast<size_t>(d)][static_cast<size_t>(i)])
        s.push_back(F.mor(m));
      f.assign[static_cast<size_t>(d)].push_back(NT.simplex_of(s));
    }
  return f;
}

// ---------------------------------------------------------------------------
// strict Grothendieck construction oracle
// ---------------------------------------------------------------------------

/// A strict functor base -> Cat: a fibre category per object and a transition
/// functor per morphism, satisfying functoriality on the nose.
struct Grothendieck {
  FinCat base;
  std::vector<FinCat> fibre;          // per base object
  std::vector<FinFunctor> transition;  // per base morphism

  struct TotalMor {
    int base_mor;
    int fib_src_obj;  // object of fibre over source
    int fib_mor;      // morphism F_f(x) -> x' in fibre over target
  };
  FinCat total;
  FinFunctor proj;
  std::vector<std::pair<int, int>> obj_key;  // total object -> (base obj, fibre obj)
  std::map<std::pair<int, int>, int> obj_index;
  std::vector<TotalMor> mor_key;  // parallel to total.mors
  std::map<std::tuple<int, int, int>, int> mor_index;

  int total_obj(int b, int x) const { return obj_index.at({b, x}); }
  int total_mor(int f, int x, int phi) const { return mor_index.at({f, x, phi}); }
  /// The classical criterion: a morphism is cocartesian over its base
  /// morphism iff its fibre component is invertible.
  bool classically_cocartesian(int m) const {
    const TotalMor& tm = mor_key[static_cast<size_t>(m)];
    int b_tgt = base.mors[static_cast<size_t>(tm.base_mor)].tgt;
    return fibre[static_cast<size_t>(b_tgt)].is_iso(tm.fib_mor);
  }
};

inline ValidationReport validate(const Grothendieck& G) {
  ValidationReport r;
  auto rb = validate(G.base);
  if (!rb.ok) r.fail("base category invalid");
  for (auto& F : G.fibre) {
    auto rf = validate(F);
    if (!rf.ok) r.fail("fibre category invalid");
  }
  for (int m = 0; m < G.base.n_mor(); ++m) {
    const auto& F = G.transition[static_cast<size_t>(m)];
    if (F.src != &G.fibre[static_cast<size_t>(G.base.mors[static_cast<size_t>(m)].src)] ||
        F.tgt != &G.fibre[static_cast<size_t>(G.base.mors[static_cast<size_t>(m)].tgt)])
      r.fail("transition endpoints wrong at " + std::to_string(m));
    auto rf = validate(F);
    if (!rf.ok) r.fail("transition not a functor at " + std::to_string(m));
  }
  for (int o = 0; o < G.base.n_obj; ++o)
    if (!functor_equal(G.transition[static_cast<size_t>(G.base.id(o))],
                       identity_functor(G.fibre[static_cast<size_t>(o)])))
      r.fail("transition at identity not the identity functor");
  for (int f = 0; f < G.base.n_mor(); ++f)
    for (int g = 0; g < G.base.n_mor(); ++g) {
      if (G.base.mors[static_cast<size_t>(f)].tgt != G.base.mors[static_cast<size_t>(g)].src)
        continue;
      if (!functor_equal(G.transition[static_cast<size_t>(G.base.then(f, g))],
                         compose(G.transition[static_cast<size_t>(g)],
                                 G.transition[static_cast<size_t>(f)])))
        r.fail("transition functoriality fails at " + std::to_string(f) + "," + std::to_string(g));
    }
  return r;
}

/// Build the total category and projection. Identities come first; the other
/// morphisms are ordered by (base morphism, fibre source object, fibre
/// morphism), which puts (f, id) before (f, phi) for nontrivial phi.
inline void build_total(Grothendieck& G) {
  G.total = FinCat{};
  G.obj_key.clear();
  G.obj_index.clear();
  G.mor_key.clear();
  G.mor_index.clear();
  for (int b = 0; b < G.base.n_obj; ++b)
    for (int x = 0; x < G.fibre[static_cast<size_t>(b)].n_obj; ++x) {
      G.obj_index[{b, x}] = static_cast<int>(G.obj_key.size());
      G.obj_key.push_back({b, x});
      G.total.obj_names.push_back(G.base.obj_names[static_cast<size_t>(b)] + "." +
                                  G.fibre[static_cast<size_t>(b)]
                                      .obj_names[static_cast<size_t>(x)]);
    }
  G.total.n_obj = static_cast<int>(G.obj_key.size());
  G.total.name = "int(" + G.base.name + ")";
  // identities
  for (int o = 0; o < G.total.n_obj; ++o) {
    auto [b, x] = G.obj_key[static_cast<size_t>(o)];
    G.total.mors.push_back(FinCat::Mor{o, o, "id"});
    Grothendieck::TotalMor tm{G.base.id(b), x, G.fibre[static_cast<size_t>(b)].id(x)};
    G.mor_key.push_back(tm);
    G.mor_index[{tm.base_mor, tm.fib_src_obj, tm.fib_mor}] = o;
  }
  for (int f = 0; f < G.base.n_mor(); ++f) {
    int bs = G.base.mors[static_cast<size_t>(f)].src;
    int bt = G.base.mors[static_cast<size_t>(f)].tgt;
    const FinFunctor& Tf = G.transition[static_cast<size_t>(f)];
    for (int x = 0; x < G.fibre[static_cast<size_t>(bs)].n_obj; ++x)
      for (int phi = 0; phi < G.fibre[static_cast<size_t>(bt)].n_mor(); ++phi) {
        if (G.fibre[static_cast<size_t>(bt)].mors[static_cast<size_t>(phi)].src != Tf.obj(x))
          continue;
        if (G.base.is_id(f) && G.fibre[static_cast<size_t>(bt)].is_id(phi)) continue;
        int xt = G.fibre[static_cast<size_t>(bt)].mors[static_cast<size_t>(phi)].tgt;
        G.mor_index[{f, x, phi}] = static_cast<int>(G.total.mors.size());
        G.mor_key.push_back(Grothendieck::TotalMor{f, x, phi});
        G.total.mors.push_back(FinCat::Mor{G.total_obj(bs, x), G.total_obj(bt, xt),
                                           "(" + G.base.mors[static_cast<size_t>(f)].name + "," +
                                               G.fibre[static_cast<size_t>(bt)]
                                                   .mors[static_cast<size_t>(phi)]
                                                   .name +
                                               ")"});
      }
  }
  int n = G.total.n_mor();
  G.total.then_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  for (int m1 = 0; m1 < n; ++m1)
    for (int m2 = 0; m2 < n; ++m2) {
      if (G.total.mors[static_cast<size_t>(m1)].tgt != G.total.mors[static_cast<size_t>(m2)].src)
        continue;
      const auto& t1 = G.mor_key[static_cast<size_t>(m1)];
      const auto& t2 = G.mor_key[static_cast<size_t>(m2)];
      int f = t1.base_mor, g = t2.base_mor;
      int fg = G.base.then(f, g);
      int btt = G.base.mors[static_cast<size_t>(g)].tgt;
      const FinFunctor& Tg = G.transition[static_cast<size_t>(g)];
      int comp_phi = G.fibre[static_cast<size_t>(btt)].then(Tg.mor(t1.fib_mor), t2.fib_mor);
      G.total.then_[static_cast<size_t>(m1)][static_cast<size_t>(m2)] =
          G.mor_index.at({fg, t1.fib_src_obj, comp_phi});
    }
  // projection functor
  G.proj.src = &G.total;
  G.proj.tgt = &G.base;
  for (auto& [b, x] : G.obj_key) {
    G.proj.on_obj.push_back(b);
    (void)x;
  }
  for (auto& tm : G.mor_key) G.proj.on_mor.push_back(tm.base_mor);
}

}  // namespace hoco

#endif
