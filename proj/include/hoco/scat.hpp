#ifndef HOCO_SCAT_HPP
#define HOCO_SCAT_HPP

#include "hoco/realize.hpp"

namespace hoco {

inline SSetPtr point_sset() { return standard(0).set; }

inline SSetPtr empty_sset() {
  auto s = std::make_shared<SSet>();
  s->name = "empty";
  return s;
}

/// A simplicially enriched category with finitely presented hom spaces:
/// composition acts on normal forms and identities are marked vertices.
/// Composition reads in diagram order: comp(a,b,c, x:a->b, y:b->c) : a->c.
struct SCat {
  int n_obj = 0;
  std::vector<std::string> obj_names;
  std::vector<std::vector<SSetPtr>> fun;  // fun[a][b]
  std::vector<int> id_vertex;             // vertex index in fun[a][a]
  std::function<EZ(int, int, int, const EZ&, const EZ&)> comp;
  std::string name;

  EZ identity(int a, int d) const {
    return EZ{op_const(d, 0, 0), CellId{0, id_vertex[static_cast<size_t>(a)]}};
  }
  EZ then(int a, int b, int c, const EZ& x, const EZ& y) const { return comp(a, b, c, x, y); }
};

/// Check enrichment axioms through dimension check_dim: compatibility of
/// composition with the simplicial operators, identity laws, associativity.
inline ValidationReport validate_scat(const SCat& C, int check_dim) {
  ValidationReport rep;
  if (static_cast<int>(C.fun.size()) != C.n_obj) { rep.fail("hom table shape"); return rep; }
  for (int a = 0; a < C.n_obj; ++a) {
    if (static_cast<int>(C.fun[static_cast<size_t>(a)].size()) != C.n_obj)
      { rep.fail("hom table shape"); return rep; }
    auto vr = validate(*C.fun[static_cast<size_t>(a)][static_cast<size_t>(a)]);
    if (!vr.ok) { rep.fail("hom set invalid: " + vr.errors[0]); return rep; }
  }
  auto level = [&](SSetPtr s, int d) -> std::vector<EZ> {
    if (s->truncation >= 0 && d > s->truncation) return {};
    return s->simplices(d);
  };
  for (int a = 0; a < C.n_obj; ++a)
    for (int b = 0; b < C.n_obj; ++b)
      for (int c = 0; c < C.n_obj; ++c) {
        SSetPtr AB = C.fun[static_cast<size_t>(a)][static_cast<size_t>(b)];
        SSetPtr BC = C.fun[static_cast<size_t>(b)][static_cast<size_t>(c)];
        SSetPtr AC = C.fun[static_cast<size_t>(a)][static_cast<size_t>(c)];
        for (int d = 0; d <= check_dim; ++d)
          for (auto& x : level(AB, d))
            for (auto& y : level(BC, d)) {
              EZ xy = C.comp(a, b, c, x, y);
              if (xy.dim() != d) { rep.fail("composition changes dimension"); return rep; }
              for (int j = 0; j <= d && d >= 1; ++j) {
                EZ lhs = C.comp(a, b, c, AB->act(x, op_delta(d, j)), BC->act(y, op_delta(d, j)));
                if (!(lhs == AC->act(xy, op_delta(d, j))))
                  { rep.fail("composition is not simplicial"); return rep; }
              }
              if (!(C.comp(a, a, c, C.identity(a, d), C.comp(a, b, c, x, y)) == xy))
                { rep.fail("left identity law"); return rep; }
              if (!(C.comp(a, c, c, xy, C.identity(c, d)) == xy))
                { rep.fail("right identity law"); return rep; }
              for (int e = 0; e < C.n_obj; ++e)
                for (auto& z : level(C.fun[static_cast<size_t>(c)][static_cast<size_t>(e)], d)) {
                  EZ l = C.comp(a, c, e, xy, z);
                  EZ r = C.comp(a, b, e, x, C.comp(b, c, e, y, z));
                  if (!(l == r)) { rep.fail("associativity"); return rep; }
                }
            }
      }
  return rep;
}

// ---------------------------------------------------------------------------
// hom spaces of a computad as simplicial sets
// ---------------------------------------------------------------------------

/// The function complex between two objects of a computad: simplices are
/// words, nondegenerate cells the words whose letters share no common
/// degeneracy. Finite exactly when the atom graph is acyclic.
struct WordHom {
  SSetPtr set;
  const Computad* K = nullptr;
  int src_obj = 0, tgt_obj = 0;
  std::vector<std::vector<Word>> words;
  std::vector<std::map<Word, int>> index;

  CellId id_of(const Word& w) const {
    auto it = index[static_cast<size_t>(w.dim)].find(w);
    if (it == index[static_cast<size_t>(w.dim)].end())
      throw invalid_input("word hom: unknown cell word");
    return CellId{w.dim, it->second};
  }
  const Word& word_of_cell(CellId c) const {
    return words[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
  }
  /// EZ normal form of an arbitrary word: extract the common degeneracy.
  EZ simplex(const Word& w) const {
    int d = w.dim;
    std::vector<int> collapse;
    for (int i = 0; i + 1 <= d; ++i) {
      bool all = true;
      for (auto& l : w.letters)
        if (l.epi(i) != l.epi(i + 1)) { all = false; break; }
      if (all) collapse.push_back(i);
    }
    if (collapse.empty()) return EZ{op_identity(d), id_of(w)};
    SOp epi;
    epi.target = d - static_cast<int>(collapse.size());
    {
      int v = 0;
      size_t ci = 0;
      for (int i = 0; i <= d; ++i) {
        epi.img.push_back(v);
        if (ci < collapse.size() && collapse[ci] == i)
          ++ci;
        else
          ++v;
      }
    }
    SOp section;
    section.target = d;
    for (int v = 0; v <= epi.target; ++v)
      for (int i = 0; i <= d; ++i)
        if (epi(i) == v) { section.img.push_back(i); break; }
    Word red;
    red.src = w.src;
    red.tgt = w.tgt;
    red.dim = epi.target;
    for (auto& l : w.letters) red.letters.push_back({hoco::compose(l.epi, section), l.atom});
    return EZ{epi, id_of(red)};
  }
  Word word_of(const EZ& s) const { return K->act_word(word_of_cell(s.cell), s.epi); }
};

inline WordHom word_hom(const Computad& K, int a, int b) {
  WordHom H;
  H.K = &K;
  H.src_obj = a;
  H.tgt_obj = b;
  // object graph: an edge for every atom; infinite homs come from cycles
  std::vector<std::vector<int>> succ(static_cast<size_t>(K.n_objects));
  for (int d = 0; d <= K.top_dim(); ++d)
    for (int i = 0; i < K.size(d); ++i) {
      const CAtom& at = K.atom(AtomId{d, i});
      succ[static_cast<size_t>(at.src)].push_back(at.tgt);
    }
  std::vector<std::vector<bool>> reach(static_cast<size_t>(K.n_objects),
                                       std::vector<bool>(static_cast<size_t>(K.n_objects), false));
  for (int s = 0; s < K.n_objects; ++s) {
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int o = stack.back();
      stack.pop_back();
      for (int t : succ[static_cast<size_t>(o)])
        if (!reach[static_cast<size_t>(s)][static_cast<size_t>(t)]) {
          reach[static_cast<size_t>(s)][static_cast<size_t>(t)] = true;
          stack.push_back(t);
        }
    }
  }
  for (int o = 0; o < K.n_objects; ++o)
    if (reach[static_cast<size_t>(o)][static_cast<size_t>(o)] &&
        (o == a || reach[static_cast<size_t>(a)][static_cast<size_t>(o)]) &&
        (o == b || reach[static_cast<size_t>(o)][static_cast<size_t>(b)]))
      throw invalid_input("word hom: infinite function complex (cyclic atoms)");

  std::vector<Word> all;
  std::vector<AtomId> path;
  auto emit = [&]() {
    // all jointly nondegenerate epi tuples over the current atom path
    int lo = 0, hi = 0;
    for (auto& aid : path) {
      lo = std::max(lo, aid.dim);
      hi += aid.dim;
    }
    for (int d = lo; d <= hi; ++d) {
      std::vector<std::vector<SOp>> choices;
      for (auto& aid : path) choices.push_back(all_epis(d, aid.dim));
      std::vector<size_t> pick(path.size(), 0);
      std::vector<SOp> cur(path.size());
      auto rec = [&](auto&& self, size_t pos) -> void {
        if (pos == path.size()) {
          for (int i = 0; i + 1 <= d; ++i) {
            bool flat = true;
            for (auto& e : cur)
              if (e(i) != e(i + 1)) { flat = false; break; }
            if (flat) return;
          }
          Word w;
          w.src = a;
          w.tgt = b;
          w.dim = d;
          for (size_t q = 0; q < path.size(); ++q) w.letters.push_back({cur[q], path[q]});
          all.push_back(std::move(w));
          return;
        }
        for (auto& e : choices[pos]) {
          cur[pos] = e;
          self(self, pos + 1);
        }
      };
      rec(rec, 0);
    }
  };
  auto walk = [&](auto&& self, int o) -> void {
    if (o == b) emit();
    for (int d = 0; d <= K.top_dim(); ++d)
      for (int i = 0; i < K.size(d); ++i) {
        const CAtom& at = K.atom(AtomId{d, i});
        if (at.src != o) continue;
        if (at.tgt != b && !reach[static_cast<size_t>(at.tgt)][static_cast<size_t>(b)]) continue;
        path.push_back(AtomId{d, i});
        self(self, at.tgt);
        path.pop_back();
      }
  };
  walk(walk, a);
  int top = -1;
  for (auto& w : all) top = std::max(top, w.dim);
  H.words.resize(static_cast<size_t>(top) + 1);
  H.index.resize(static_cast<size_t>(top) + 1);
  std::sort(all.begin(), all.end());
  auto out = std::make_shared<SSet>();
  out->name = K.name + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  out->cells.resize(static_cast<size_t>(top) + 1);
  for (auto& w : all) {
    H.index[static_cast<size_t>(w.dim)][w] =
        static_cast<int>(H.words[static_cast<size_t>(w.dim)].size());
    H.words[static_cast<size_t>(w.dim)].push_back(w);
    out->cells[static_cast<size_t>(w.dim)].push_back(Cell{});
  }
  H.set = out;
  for (int d = 1; d <= top; ++d)
    for (size_t i = 0; i < H.words[static_cast<size_t>(d)].size(); ++i) {
      Cell& c = out->cells[static_cast<size_t>(d)][i];
      for (int j = 0; j <= d; ++j)
        c.faces.push_back(H.simplex(K.act_word(H.words[static_cast<size_t>(d)][i], op_delta(d, j))));
    }
  return H;
}

/// The simplicial category presented by a computad, with word homs.
struct ComputadSCat {
  SCat cat;
  std::shared_ptr<std::vector<std::vector<WordHom>>> homs;
  const WordHom& hom(int a, int b) const {
    return (*homs)[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }
};

inline ComputadSCat scat_of_computad(const Computad& K) {
  ComputadSCat S;
  S.homs = std::make_shared<std::vector<std::vector<WordHom>>>();
  S.cat.n_obj = K.n_objects;
  S.cat.obj_names = K.obj_names;
  S.cat.name = "cat(" + K.name + ")";
  S.cat.fun.resize(static_cast<size_t>(K.n_objects));
  for (int a = 0; a < K.n_objects; ++a) {
    S.homs->push_back({});
    for (int b = 0; b < K.n_objects; ++b) {
      (*S.homs)[static_cast<size_t>(a)].push_back(word_hom(K, a, b));
      S.cat.fun[static_cast<size_t>(a)].push_back(
          (*S.homs)[static_cast<size_t>(a)][static_cast<size_t>(b)].set);
    }
  }
  for (int a = 0; a < K.n_objects; ++a)
    S.cat.id_vertex.push_back(
        S.hom(a, a).id_of(Word{a, a, 0, {}}).idx);
  auto homs = S.homs;
  const Computad* k = &K;
  S.cat.comp = [homs, k](int a, int b, int c, const EZ& x, const EZ& y) {
    auto& AB = (*homs)[static_cast<size_t>(a)][static_cast<size_t>(b)];
    auto& BC = (*homs)[static_cast<size_t>(b)][static_cast<size_t>(c)];
    auto& AC = (*homs)[static_cast<size_t>(a)][static_cast<size_t>(c)];
    return AC.simplex(k->then(AB.word_of(x), BC.word_of(y)));
  };
  return S;
}

// ---------------------------------------------------------------------------
// the directed suspension categories on two and three objects
// ---------------------------------------------------------------------------

/// Image in the edge Delta^1 of an arbitrary monotone map to [1].
inline EZ delta1_simplex(const SOp& rho) {
  bool c0 = true, c1 = true;
  for (int v : rho.img) {
    if (v != 0) c0 = false;
    if (v != 1) c1 = false;
  }
  if (c0 || c1) return EZ{op_const(rho.source_dim(), 0, 0), CellId{0, c0 ? 0 : 1}};
  auto f = epi_mono_factor(rho);
  return EZ{f.epi, CellId{1, 0}};
}

/// Two objects -,+ with hom(-,+) = U and no other nontrivial homs.
struct TwoCat {
  SCat cat;
  SSetPtr hom;
};

inline TwoCat two_cat(SSetPtr U) {
  TwoCat T;
  T.hom = U;
  T.cat.n_obj = 2;
  T.cat.obj_names = {"-", "+"};
  T.cat.name = "two[" + U->name + "]";
  auto pt = point_sset();
  T.cat.fun = {{pt, U}, {empty_sset(), pt}};
  T.cat.id_vertex = {0, 0};
  T.cat.comp = [](int a, int b, int c, const EZ& x, const EZ& y) {
    if (a == b) return y;
    if (b == c) return x;
    throw invalid_input("two-object category: no such composite");
  };
  return T;
}

/// Three objects -,+,top with hom(-,+) = U, hom(+,top) a point, and
/// hom(-,top) the cylinder on U with the 0 end collapsed; composition pastes
/// a U simplex onto the collapsed end: u . i_plus = [u,1].
struct ThreeCat {
  SCat cat;
  SSetPtr U;
  MultiProduct cyl;
  Quotient cone;

  EZ cone_class(const EZ& u, const SOp& rho) const {
    return cone.map(cyl.simplex({u, delta1_simplex(rho)}));
  }
  CellId basepoint() const { return cone.class_vertex[0]; }  // the i_minus vertex
};

inline ThreeCat three_cat(SSetPtr U) {
  ThreeCat T;
  T.U = U;
  auto d1 = standard(1);
  T.cyl = product(U, d1.set, std::max(U->top_dim(), 0) + 1);
  T.cone = collapse(T.cyl.set, {cylinder_end_sub(T.cyl, 0)});
  T.cat.n_obj = 3;
  T.cat.obj_names = {"-", "+", "top"};
  T.cat.name = "three[" + U->name + "]";
  auto pt = point_sset();
  auto mt = empty_sset();
  T.cat.fun = {{pt, U, T.cone.set}, {mt, pt, pt}, {mt, mt, pt}};
  T.cat.id_vertex = {0, 0, 0};
  MultiProduct cyl = T.cyl;
  Quotient cone = T.cone;
  T.cat.comp = [cyl, cone](int a, int b, int c, const EZ& x, const EZ& y) {
    if (a == b) return y;
    if (b == c) return x;
    if (a == 0 && b == 1 && c == 2)
      return cone.map(cyl.simplex({x, delta1_simplex(op_const(x.dim(), 1, 1))}));
    throw invalid_input("three-object category: no such composite");
  };
  return T;
}

// ---------------------------------------------------------------------------
// simplicial functors out of computads
// ---------------------------------------------------------------------------

/// A simplicial functor from a computad-presented category into an SCat,
/// given by its values on atoms and extended to words by composition.
struct SFunctor {
  const Computad* src = nullptr;
  const SCat* tgt = nullptr;
  std::vector<int> on_obj;
  std::vector<std::vector<EZ>> on_atom;

  int obj(int o) const { return on_obj[static_cast<size_t>(o)]; }
  const EZ& atom_image(AtomId a) const {
    return on_atom[static_cast<size_t>(a.dim)][static_cast<size_t>(a.idx)];
  }
  EZ apply(const Word& w) const {
    int A = obj(w.src);
    EZ acc = tgt->identity(A, w.dim);
    int cur = A;
    for (auto& l : w.letters) {
      const CAtom& at = src->atom(l.atom);
      int s = obj(at.src), t = obj(at.tgt);
      EZ im = tgt->fun[static_cast<size_t>(s)][static_cast<size_t>(t)]->act(atom_image(l.atom), l.epi);
      acc = tgt->comp(A, cur, t, acc, im);
      cur = t;
    }
    return acc;
  }
};

inline ValidationReport validate(const SFunctor& F) {
  ValidationReport rep;
  const Computad& K = *F.src;
  if (static_cast<int>(F.on_obj.size()) != K.n_objects) { rep.fail("object table size"); return rep; }
  if (static_cast<int>(F.on_atom.size()) != K.top_dim() + 1 && K.top_dim() >= 0)
    { rep.fail("atom table size"); return rep; }
  for (int r = 0; r <= K.top_dim(); ++r)
    for (int i = 0; i < K.size(r); ++i) {
      const CAtom& at = K.atom(AtomId{r, i});
      const EZ& im = F.atom_image(AtomId{r, i});
      if (im.dim() != r) { rep.fail("atom image has the wrong dimension"); return rep; }
      int s = F.obj(at.src), t = F.obj(at.tgt);
      SSetPtr H = F.tgt->fun[static_cast<size_t>(s)][static_cast<size_t>(t)];
      for (int j = 0; j <= r && r >= 1; ++j) {
        EZ lhs = F.apply(at.faces[static_cast<size_t>(j)]);
        EZ rhs = H->act(im, op_delta(r, j));
        if (!(lhs == rhs)) {
          rep.fail("face mismatch at atom (" + std::to_string(r) + "," + std::to_string(i) +
                   ") face " + std::to_string(j));
          return rep;
        }
      }
    }
  return rep;
}

inline bool sfunctor_equal(const SFunctor& F, const SFunctor& G) {
  if (F.on_obj != G.on_obj) return false;
  if (F.on_atom.size() != G.on_atom.size()) return false;
  for (size_t r = 0; r < F.on_atom.size(); ++r)
    if (F.on_atom[r] != G.on_atom[r]) return false;
  return true;
}

/// An enriched functor between SCats, with a hom action given pointwise.
struct SCatFunctor {
  const SCat* src = nullptr;
  const SCat* tgt = nullptr;
  std::vector<int> on_obj;
  std::function<EZ(int, int, const EZ&)> on_hom;
};

inline SFunctor compose(const SCatFunctor& G, const SFunctor& F) {
  SFunctor H;
  H.src = F.src;
  H.tgt = G.tgt;
  for (int o : F.on_obj) H.on_obj.push_back(G.on_obj[static_cast<size_t>(o)]);
  H.on_atom.resize(F.on_atom.size());
  for (int r = 0; r <= F.src->top_dim(); ++r)
    for (int i = 0; i < F.src->size(r); ++i) {
      const CAtom& at = F.src->atom(AtomId{r, i});
      H.on_atom[static_cast<size_t>(r)].push_back(
          G.on_hom(F.obj(at.src), F.obj(at.tgt), F.atom_image(AtomId{r, i})));
    }
  return H;
}

// ---------------------------------------------------------------------------
// comparison functors between cocone shapes
// ---------------------------------------------------------------------------

/// Nondegenerate cell of the quotient base mapping onto a surviving cell.
inline CellId quotient_preimage(const Quotient& Q, CellId c) {
  for (int i = 0; i < Q.base->size(c.dim); ++i) {
    const EZ& im = Q.projection.on_cell(CellId{c.dim, i});
    if (im.epi.is_identity() && im.cell == c) return CellId{c.dim, i};
  }
  throw invalid_input("quotient: no preimage for " + c.str());
}

/// The top coordinate collapse of a bead flag over a cone: layer j goes to
/// the largest vertex below the cone apex.
inline SOp cone_flag_operator(const Flag& f, int apex, int target) {
  SOp alpha;
  alpha.target = target;
  for (Mask t : f.T) {
    int best = -1;
    for (int v : mask_bits(t))
      if (v != apex && v > best) best = v;
    if (best < 0) throw invalid_input("cone flag without base vertices");
    alpha.img.push_back(best);
  }
  return alpha;
}

/// Collapse a cocone realization onto the two-object category: beads inside
/// the base become identities, a bead on the cone over an m-cell x with flag
/// T becomes the simplex x.alpha with alpha(j) = max(T^j minus the apex).
inline SFunctor cone_collapse_functor(const Realization& R, const JoinPoint& J, const SCat& two) {
  SFunctor F;
  F.src = &R.comp;
  F.tgt = &two;
  for (int v = 0; v < J.set->size(0); ++v)
    F.on_obj.push_back(J.type_of(CellId{0, v}) == JoinPoint::Type::kApex ? 1 : 0);
  F.on_atom.resize(R.keys.size());
  for (size_t r = 0; r < R.keys.size(); ++r)
    for (auto& [carrier, shape] : R.keys[r]) {
      if (J.type_of(carrier) == JoinPoint::Type::kBase) {
        F.on_atom[r].push_back(two.identity(0, static_cast<int>(r)));
        continue;
      }
      CellId x = J.base_cell(carrier);
      Flag f = flag_of_shape(carrier.dim, shape);
      SOp alpha = cone_flag_operator(f, carrier.dim, x.dim);
      F.on_atom[r].push_back(J.base->act(nondeg(x), alpha));
    }
  return F;
}

/// The same collapse for the realization of a right suspension, whose cells
/// are classes of cone cells.
inline SFunctor suspension_collapse_functor(const Realization& R, const RightSuspension& S,
                                            const SCat& two) {
  SFunctor F;
  F.src = &R.comp;
  F.tgt = &two;
  for (int v = 0; v < S.set->size(0); ++v)
    F.on_obj.push_back(CellId{0, v} == S.plus() ? 1 : 0);
  F.on_atom.resize(R.keys.size());
  SSetPtr U = S.join.base;
  for (size_t r = 0; r < R.keys.size(); ++r)
    for (auto& [carrier, shape] : R.keys[r]) {
      CellId pre = quotient_preimage(S.quot, carrier);
      CellId x = S.join.base_cell(pre);
      Flag f = flag_of_shape(carrier.dim, shape);
      SOp alpha = cone_flag_operator(f, carrier.dim, x.dim);
      F.on_atom[r].push_back(U->act(nondeg(x), alpha));
    }
  return F;
}

/// Comparison from the realization of the cocone over a right suspension to
/// the three-object category. Beads over base classes land in hom(-,+),
/// cone beads land in the collapsed cylinder hom(-,top) via the pair
/// (alpha, rho), where rho records which layers contain the inner apex.
inline SFunctor triple_comparison_functor(const Realization& R, const JoinPoint& J2,
                                          const RightSuspension& S, const ThreeCat& three) {
  SFunctor F;
  F.src = &R.comp;
  F.tgt = &three.cat;
  for (int v = 0; v < J2.set->size(0); ++v) {
    if (J2.type_of(CellId{0, v}) == JoinPoint::Type::kApex)
      F.on_obj.push_back(2);
    else
      F.on_obj.push_back(CellId{0, v} == S.plus() ? 1 : 0);
  }
  SSetPtr U = S.join.base;
  F.on_atom.resize(R.keys.size());
  for (size_t r = 0; r < R.keys.size(); ++r)
    for (auto& [carrier, shape] : R.keys[r]) {
      Flag f = flag_of_shape(carrier.dim, shape);
      if (J2.type_of(carrier) == JoinPoint::Type::kBase) {
        // a class cell of the right suspension: image in hom(-,+) = U
        CellId pre = quotient_preimage(S.quot, carrier);
        CellId x = S.join.base_cell(pre);
        SOp alpha = cone_flag_operator(f, carrier.dim, x.dim);
        F.on_atom[r].push_back(U->act(nondeg(x), alpha));
        continue;
      }
      CellId base = J2.base_cell(carrier);
      if (base == S.quot.class_vertex[0]) {
        // the edge from - to top: collapses to the basepoint of hom(-,top)
        F.on_atom[r].push_back(EZ{op_const(static_cast<int>(r), 0, 0), three.basepoint()});
        continue;
      }
      if (base == S.plus()) {
        // the edge from + to top: the point hom(+,top)
        F.on_atom[r].push_back(EZ{op_const(static_cast<int>(r), 0, 0), CellId{0, 0}});
        continue;
      }
      // cone over a class cell [x^]: flag layers name (alpha, rho)
      CellId pre = quotient_preimage(S.quot, base);
      CellId x = S.join.base_cell(pre);
      int inner_apex = base.dim;  // position of + in the carrier
      int outer_apex = carrier.dim;
      SOp alpha, rho;
      alpha.target = x.dim;
      rho.target = 1;
      for (Mask t : f.T) {
        int best = -1;
        bool has_inner = false;
        for (int v : mask_bits(t)) {
          if (v == inner_apex) has_inner = true;
          else if (v != outer_apex && v > best) best = v;
        }
        alpha.img.push_back(best);
        rho.img.push_back(has_inner ? 1 : 0);
      }
      F.on_atom[r].push_back(three.cone_class(U->act(nondeg(x), alpha), rho));
    }
  return F;
}

/// Quotient comparison from the three-object category onto the two-object
/// category over the two-sided suspension.
inline SCatFunctor quotient_to_suspension_functor(const ThreeCat& three, const Suspension& susp,
                                                  const TwoCat& twoS) {
  SCatFunctor G;
  G.src = &three.cat;
  G.tgt = &twoS.cat;
  G.on_obj = {0, 0, 1};
  MultiProduct tcyl = three.cyl;
  Quotient tcone = three.cone;
  Suspension sus = susp;
  const SCat* tgt = &twoS.cat;
  G.on_hom = [tcyl, tcone, sus, tgt](int a, int b, const EZ& s) -> EZ {
    if (a == b || (a == 0 && b == 1)) return tgt->identity(a == 2 ? 1 : 0, s.dim());
    if (a == 1 && b == 2) return EZ{op_const(s.dim(), 0, 0), sus.plus()};
    // a == 0, b == 2: lift out of the one-ended collapse, project into the
    // two-ended one
    if (s.cell == tcone.class_vertex[0])
      return EZ{op_const(s.dim(), 0, 0), sus.minus()};
    CellId pre = quotient_preimage(tcone, s.cell);
    TupleKey key = tcyl.key_of(pre);
    return sus.quot.map(sus.cyl.set->act(sus.cyl.simplex(key), s.epi));
  };
  return G;
}

/// The natural epimorphism from the two-sided suspension onto the right
/// suspension: bottom layers keep their base simplex, top layers fall into
/// the apex.
inline SMap suspension_comparison_map(const Suspension& susp, const RightSuspension& rsusp) {
  SMap u;
  u.src = susp.set;
  u.tgt = rsusp.set;
  u.assign.resize(static_cast<size_t>(susp.set->top_dim()) + 1);
  for (int d = 0; d <= susp.set->top_dim(); ++d)
    for (int i = 0; i < susp.set->size(d); ++i) {
      CellId c{d, i};
      if (c == susp.minus()) {
        u.assign[0].push_back(nondeg(rsusp.minus()));
        continue;
      }
      if (c == susp.plus()) {
        u.assign[0].push_back(nondeg(rsusp.plus()));
        continue;
      }
      CellId pre = quotient_preimage(susp.quot, c);
      TupleKey key = susp.cyl.key_of(pre);
      const EZ& x = key[0];
      SOp tau;
      tau.target = 1;
      if (key[1].cell.dim == 0)
        tau.img.assign(static_cast<size_t>(d) + 1, key[1].cell.idx);
      else
        tau.img = key[1].epi.img;
      int cpos = -1;
      for (int v = 0; v <= d; ++v)
        if (tau(v) == 0) cpos = v;
      std::optional<EZ> y;
      if (cpos >= 0) {
        SOp iota;
        iota.target = d;
        for (int v = 0; v <= cpos; ++v) iota.img.push_back(v);
        y = susp.cyl.factors[0]->act(x, iota);
      }
      u.assign[static_cast<size_t>(d)].push_back(
          rsusp.quot.map(rsusp.join.simplex(y, d)));
    }
  return u;
}

/// Whiskering a simplicial map into the hom of the two-object category.
inline SCatFunctor two_of_map(const SMap& f, const TwoCat& src, const TwoCat& tgt) {
  SCatFunctor G;
  G.src = &src.cat;
  G.tgt = &tgt.cat;
  G.on_obj = {0, 1};
  const SMap* fp = &f;
  G.on_hom = [fp](int a, int b, const EZ& s) -> EZ {
    if (a == b) return s;
    return fp->apply(s);
  };
  return G;
}

}  // namespace hoco

#endif
