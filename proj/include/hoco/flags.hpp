#ifndef HOCO_FLAGS_HPP
#define HOCO_FLAGS_HPP

#include <cstdint>
#include <sstream>

#include "hoco/build.hpp"
#include "hoco/computad.hpp"

namespace hoco {

using Mask = uint32_t;

inline int mask_min(Mask m) { return __builtin_ctz(m); }
inline int mask_max(Mask m) { return 31 - __builtin_clz(m); }
inline int mask_size(Mask m) { return __builtin_popcount(m); }
inline std::vector<int> mask_bits(Mask m) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (m & (1u << i)) out.push_back(i);
  return out;
}

/// An r-arrow from lo to hi in the coherent realisation of a simplex: a
/// weakly increasing chain of vertex subsets T[0] <= ... <= T[r], each
/// containing both endpoints.
struct Flag {
  std::vector<Mask> T;

  int dim() const { return static_cast<int>(T.size()) - 1; }
  int lo() const { return mask_min(T[0]); }
  int hi() const { return mask_max(T[0]); }
  Mask top() const { return T.back(); }

  bool operator==(const Flag& o) const { return T == o.T; }
  bool operator!=(const Flag& o) const { return !(*this == o); }
  bool operator<(const Flag& o) const {
    if (lo() != o.lo()) return lo() < o.lo();
    if (hi() != o.hi()) return hi() < o.hi();
    return T < o.T;
  }

  bool valid() const {
    if (T.empty() || T[0] == 0) return false;
    Mask ends = (1u << lo()) | (1u << hi());
    for (size_t i = 0; i < T.size(); ++i) {
      if ((T[i] & ends) != ends) return false;
      if (i > 0 && (T[i - 1] & ~T[i]) != 0) return false;
      if (mask_min(T[i]) < lo() || mask_max(T[i]) > hi()) return false;
    }
    return true;
  }
  bool is_identity() const { return lo() == hi(); }
  bool atomic() const { return mask_size(T[0]) == 2 || (mask_size(T[0]) == 1); }
  bool strictly_atomic() const { return mask_size(T[0]) == 2; }
  bool nondegenerate() const {
    for (size_t i = 1; i < T.size(); ++i)
      if (T[i] == T[i - 1]) return false;
    return true;
  }
};

/// Diagrammatic composition: pointwise union of a flag from k to l with one
/// from l to m.
inline Flag flag_then(const Flag& a, const Flag& b) {
  if (a.hi() != b.lo() || a.dim() != b.dim())
    throw invalid_input("flag composition mismatch");
  Flag c;
  for (size_t i = 0; i < a.T.size(); ++i) c.T.push_back(a.T[i] | b.T[i]);
  return c;
}

inline Flag flag_identity(int vertex, int dim) {
  Flag f;
  f.T.assign(static_cast<size_t>(dim) + 1, 1u << vertex);
  return f;
}

/// Simplicial operator action: reindex the chain, (T.a)[i] = T[a(i)].
inline Flag flag_act(const Flag& f, const SOp& a) {
  if (a.target != f.dim()) throw invalid_input("flag action: dimension mismatch");
  Flag g;
  for (int v : a.img) g.T.push_back(f.T[static_cast<size_t>(v)]);
  return g;
}

/// Functorial image along a vertex map b : [n] -> [m].
inline Flag flag_image(const Flag& f, const SOp& b) {
  Flag g;
  for (Mask t : f.T) {
    Mask u = 0;
    for (int i : mask_bits(t)) u |= 1u << b(i);
    g.T.push_back(u);
  }
  return g;
}

/// Unique decomposition into atomic flags, split at the interior points of
/// the bottom subset; identity factors are dropped.
inline std::vector<Flag> flag_atoms(const Flag& f) {
  std::vector<Flag> out;
  if (f.is_identity()) return out;
  auto cuts = mask_bits(f.T[0]);
  for (size_t j = 0; j + 1 < cuts.size(); ++j) {
    int a = cuts[j], b = cuts[j + 1];
    Mask window = 0;
    for (int v = a; v <= b; ++v) window |= 1u << v;
    Flag piece;
    for (Mask t : f.T) piece.T.push_back(t & window);
    out.push_back(std::move(piece));
  }
  return out;
}

/// Extract the degeneracy: f = strict . epi with `strict` nondegenerate.
inline std::pair<SOp, Flag> flag_ez(const Flag& f) {
  Flag strict;
  SOp epi;
  int v = -1;
  for (size_t i = 0; i < f.T.size(); ++i) {
    if (i == 0 || f.T[i] != f.T[i - 1]) {
      strict.T.push_back(f.T[i]);
      ++v;
    }
    epi.img.push_back(v);
  }
  epi.target = v;
  return {epi, strict};
}

/// Compact notation <I0|I1|...|Ir>: I0 is the bottom subset, later blocks are
/// the successive differences.
inline std::string flag_str(const Flag& f) {
  std::ostringstream os;
  os << "<";
  for (size_t i = 0; i < f.T.size(); ++i) {
    if (i) os << "|";
    Mask diff = i == 0 ? f.T[0] : (f.T[i] & ~f.T[i - 1]);
    auto bits = mask_bits(diff);
    for (size_t j = 0; j < bits.size(); ++j) {
      if (j) os << ",";
      os << bits[j];
    }
  }
  os << ">";
  return os.str();
}

inline Flag flag_parse(const std::string& s) {
  if (s.size() < 2 || s.front() != '<' || s.back() != '>')
    throw invalid_input("flag parse: expected <...>");
  std::string body = s.substr(1, s.size() - 2);
  std::vector<Mask> blocks;
  std::string cur;
  auto flush = [&]() {
    Mask m = 0;
    std::string num;
    auto emit = [&]() {
      if (num.empty()) return;
      int v = std::stoi(num);
      if (v < 0 || v > 30) throw invalid_input("flag parse: vertex out of range");
      m |= 1u << v;
      num.clear();
    };
    for (char c : cur) {
      if (c == ',')
        emit();
      else if (c >= '0' && c <= '9')
        num.push_back(c);
      else if (c != ' ')
        throw invalid_input("flag parse: bad character");
    }
    emit();
    blocks.push_back(m);
    cur.clear();
  };
  for (char c : body) {
    if (c == '|')
      flush();
    else
      cur.push_back(c);
  }
  flush();
  Flag f;
  Mask acc = 0;
  for (Mask b : blocks) {
    acc |= b;
    f.T.push_back(acc);
  }
  if (!f.valid()) throw invalid_input("flag parse: invalid flag " + s);
  return f;
}

// ---------------------------------------------------------------------------
// function complexes of the coherent simplex
// ---------------------------------------------------------------------------

/// The simplicial set of arrows from k to l in the coherent realisation of
/// the n-simplex (optionally of a subcomplex of it): nondegenerate r-cells
/// are strictly increasing flags.
struct FlagComplex {
  SSetPtr set;
  int n = 0, k = 0, l = 0;
  std::vector<std::vector<Flag>> flags;  // per dim
  std::vector<std::map<std::vector<Mask>, int>> index;

  CellId id_of(const Flag& f) const {
    auto it = index[static_cast<size_t>(f.dim())].find(f.T);
    if (it == index[static_cast<size_t>(f.dim())].end())
      throw invalid_input("flag complex: unknown flag " + flag_str(f));
    return CellId{f.dim(), it->second};
  }
  const Flag& flag_of(CellId c) const {
    return flags[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
  }
  /// EZ normal form of an arbitrary (weak) flag.
  EZ simplex(const Flag& f) const {
    auto [epi, strict] = flag_ez(f);
    return EZ{epi, id_of(strict)};
  }
  Flag flag_of_simplex(const EZ& s) const { return flag_act(flag_of(s.cell), s.epi); }
};

/// Predicate selecting which top subsets are allowed: for the full simplex
/// every subset; for a subcomplex, the vertex sets of its nondegenerate faces.
using TopFilter = std::function<bool(Mask)>;

inline TopFilter full_top_filter() {
  return [](Mask) { return true; };
}

/// Allowed top subsets for the boundary: everything except the full vertex
/// set [0,n].
inline TopFilter boundary_top_filter(int n) {
  Mask full = (1u << (n + 1)) - 1;
  return [full](Mask m) { return m != full; };
}

/// Allowed top subsets for the horn on vertex k: everything except the full
/// set and the k-th face's vertex set.
inline TopFilter horn_top_filter(int n, int k) {
  Mask full = (1u << (n + 1)) - 1;
  Mask kface = full & ~(1u << k);
  return [full, kface](Mask m) { return m != full && m != kface; };
}

/// Build Fun(k, l) with nondegenerate cells the strict flags whose every
/// member passes the filter... membership is generated by atoms: an arrow
/// belongs to the subcomputad iff each atomic factor's top subset is allowed.
inline FlagComplex flag_complex(int n, int k, int l, const TopFilter& allowed,
                                int dim_bound = -1) {
  FlagComplex F;
  F.n = n;
  F.k = k;
  F.l = l;
  auto out = std::make_shared<SSet>();
  out->name = "Fun(" + std::to_string(k) + "," + std::to_string(l) + ")";
  if (k > l) {
    out->cells.clear();
    F.set = out;
    return F;
  }
  auto member = [&](const Flag& f) {
    for (auto& a : flag_atoms(f))
      if (!allowed(a.top())) return false;
    return true;
  };
  // vertices: subsets T with k,l in T, subset of [k,l]
  std::vector<Mask> verts;
  Mask ends = (1u << k) | (1u << l);
  Mask span = 0;
  for (int v = k; v <= l; ++v) span |= 1u << v;
  for (Mask m = 0; m <= span; ++m) {
    if ((m & ~span) || (m & ends) != ends) continue;
    Flag f;
    f.T = {m};
    if (member(f)) verts.push_back(m);
  }
  std::sort(verts.begin(), verts.end());
  F.flags.push_back({});
  F.index.push_back({});
  for (Mask m : verts) {
    F.index[0][{m}] = static_cast<int>(F.flags[0].size());
    Flag f;
    f.T = {m};
    F.flags[0].push_back(f);
  }
  int max_dim = dim_bound >= 0 ? dim_bound : std::max(l - k, 0);
  for (int r = 1; r <= max_dim; ++r) {
    // extend strict chains by one further superset
    std::vector<Flag> found;
    for (auto& f : F.flags[static_cast<size_t>(r - 1)]) {
      for (Mask m = f.top() + 1; m <= span; ++m) {
        if (m & ~span) continue;
        if ((m & f.top()) != f.top() || m == f.top()) continue;
        Flag g = f;
        g.T.push_back(m);
        if (member(g)) found.push_back(g);
      }
    }
    std::sort(found.begin(), found.end(),
              [](const Flag& a, const Flag& b) { return a.T < b.T; });
    F.flags.push_back({});
    F.index.push_back({});
    for (auto& g : found) {
      F.index[static_cast<size_t>(r)][g.T] = static_cast<int>(F.flags[static_cast<size_t>(r)].size());
      F.flags[static_cast<size_t>(r)].push_back(g);
    }
    if (found.empty()) break;
  }
  while (F.flags.size() > 1 && F.flags.back().empty()) {
    F.flags.pop_back();
    F.index.pop_back();
  }
  out->cells.resize(F.flags.size());
  for (size_t r = 0; r < F.flags.size(); ++r)
    for (auto& f : F.flags[r]) {
      Cell c;
      c.label = flag_str(f);
      out->cells[r].push_back(std::move(c));
    }
  F.set = out;
  auto mut = std::const_pointer_cast<SSet>(F.set);
  for (size_t r = 1; r < F.flags.size(); ++r)
    for (size_t i = 0; i < F.flags[r].size(); ++i) {
      Cell& c = mut->cells[r][i];
      for (int j = 0; j <= static_cast<int>(r); ++j)
        c.faces.push_back(F.simplex(flag_act(F.flags[r][i], op_delta(static_cast<int>(r), j))));
    }
  // truncation: full flag complexes are finite; an explicit dim_bound below
  // the longest chain marks a truncation
  if (dim_bound >= 0 && dim_bound < std::max(l - k, 0)) mut->truncation = dim_bound;
  return F;
}

/// Vertex-level cube comparison: the flag vertex T corresponds to the bit
/// tuple (x_{k+1},...,x_{l-1}), x_i = 1 iff i in T.
inline std::vector<int> cube_bits_of_vertex(int k, int l, Mask T) {
  std::vector<int> bits;
  for (int i = k + 1; i <= l - 1; ++i) bits.push_back((T >> i) & 1u);
  return bits;
}

/// The simplicial isomorphism Fun(k,l) -> cube^(l-k-1).
inline SMap cube_comparison(const FlagComplex& F, const CubeSSet& C) {
  SMap f;
  f.src = F.set;
  f.tgt = C.set;
  f.assign.resize(static_cast<size_t>(F.set->top_dim()) + 1);
  for (int r = 0; r <= F.set->top_dim(); ++r)
    for (auto& fl : F.flags[static_cast<size_t>(r)]) {
      std::vector<SOp> rho;
      for (int i = F.k + 1; i <= F.l - 1; ++i) {
        SOp coordinate;
        coordinate.target = 1;
        for (Mask t : fl.T) coordinate.img.push_back((t >> i) & 1u);
        rho.push_back(coordinate);
      }
      f.assign[static_cast<size_t>(r)].push_back(C.simplex(rho, r));
    }
  return f;
}

/// Insert-1 at the slot of the middle vertex: the image of composition under
/// the cube comparison.
inline std::vector<int> insert_one(int k, int l, int m, const std::vector<int>& a,
                                   const std::vector<int>& b) {
  // a: bits for (k,l), b: bits for (l,m); result bits for (k,m) with 1 at l
  std::vector<int> out = a;
  out.push_back(1);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// ---------------------------------------------------------------------------
// bead shapes and the coherent simplex as a computad
// ---------------------------------------------------------------------------

/// Ordered partitions of a vertex set into r nonempty blocks.
inline std::vector<std::vector<Mask>> ordered_partitions(Mask set, int r) {
  std::vector<std::vector<Mask>> out;
  if (r < 0) return out;
  auto elems = mask_bits(set);
  if (r == 0) {
    if (elems.empty()) out.push_back({});
    return out;
  }
  if (static_cast<int>(elems.size()) < r) return out;
  std::vector<Mask> blocks(static_cast<size_t>(r), 0);
  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == elems.size()) {
      for (auto b : blocks)
        if (b == 0) return;
      out.push_back(blocks);
      return;
    }
    for (auto& b : blocks) {
      b |= 1u << elems[pos];
      self(self, pos + 1);
      b &= ~(1u << elems[pos]);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Shapes of r-dimensional atoms carried by an n-simplex: ordered partitions
/// of the interior [1, n-1] into r nonempty blocks (r = 0 forces n = 1).
using BeadShape = std::vector<Mask>;  // difference blocks I1..Ir

inline std::vector<BeadShape> bead_shapes(int n, int r) {
  if (n < 1 || r < 0 || r > n - 1) return {};
  Mask interior = 0;
  for (int v = 1; v <= n - 1; ++v) interior |= 1u << v;
  return ordered_partitions(interior, r);
}

/// The atomic nondegenerate flag on [0,n] determined by a bead shape.
inline Flag flag_of_shape(int n, const BeadShape& shape) {
  Flag f;
  Mask acc = (1u << 0) | (1u << n);
  f.T.push_back(acc);
  for (Mask b : shape) {
    acc |= b;
    f.T.push_back(acc);
  }
  return f;
}

inline BeadShape shape_of_flag(const Flag& f) {
  BeadShape s;
  for (size_t i = 1; i < f.T.size(); ++i) s.push_back(f.T[i] & ~f.T[i - 1]);
  return s;
}

/// The coherent realisation of the n-simplex (or of a subcomplex selected by
/// a top filter) as a computad whose atoms are atomic nondegenerate flags.
struct CoherentSimplex {
  Computad comp;
  int n = 0;
  std::vector<std::vector<Flag>> atom_flags;  // per dim
  std::vector<std::map<std::vector<Mask>, int>> atom_index;

  AtomId atom_of(const Flag& f) const {
    auto it = atom_index[static_cast<size_t>(f.dim())].find(f.T);
    if (it == atom_index[static_cast<size_t>(f.dim())].end())
      throw invalid_input("coherent simplex: unknown atom " + flag_str(f));
    return AtomId{f.dim(), it->second};
  }
  const Flag& flag_of(AtomId a) const {
    return atom_flags[static_cast<size_t>(a.dim)][static_cast<size_t>(a.idx)];
  }
  /// Normal-form word of an arbitrary valid flag.
  Word word_of(const Flag& f) const {
    Word w;
    w.src = f.lo();
    w.tgt = f.hi();
    w.dim = f.dim();
    for (auto& piece : flag_atoms(f)) {
      auto [epi, strict] = flag_ez(piece);
      w.letters.push_back(Letter{epi, atom_of(strict)});
    }
    return w;
  }
  /// The flag named by a word (inverse of word_of on well-formed words).
  Flag flag_of_word(const Word& w) const {
    Flag acc = flag_identity(w.src, w.dim);
    for (auto& l : w.letters) acc = flag_then(acc, flag_act(flag_of(l.atom), l.epi));
    return acc;
  }
};

inline CoherentSimplex coherent_simplex(int n, const TopFilter& allowed = full_top_filter(),
                                        int dim_bound = -1) {
  CoherentSimplex C;
  C.n = n;
  C.comp.n_objects = n + 1;
  C.comp.name = "F(Delta^" + std::to_string(n) + ")";
  for (int v = 0; v <= n; ++v) C.comp.obj_names.push_back(std::to_string(v));
  int max_dim = dim_bound >= 0 ? dim_bound : std::max(n - 1, 0);
  // collect atoms: strictly atomic nondegenerate flags with every member of
  // the generated arrow allowed (an atom is allowed iff its own top is)
  for (int r = 0; r <= max_dim; ++r) {
    C.atom_flags.push_back({});
    C.atom_index.push_back({});
    std::vector<Flag> found;
    for (int k = 0; k < n + 1; ++k)
      for (int l = k + 1; l <= n; ++l) {
        Mask interior = 0;
        for (int v = k + 1; v <= l - 1; ++v) interior |= 1u << v;
        // atoms from k to l: pick the support inside (k,l), then an ordered
        // partition of it into r nonempty difference blocks
        for (Mask sup = interior;; sup = (sup - 1) & interior) {
          for (auto& shape : ordered_partitions(sup, r)) {
            Flag f;
            Mask acc = (1u << k) | (1u << l);
            f.T.push_back(acc);
            for (Mask b : shape) {
              acc |= b;
              f.T.push_back(acc);
            }
            if (allowed(f.top())) found.push_back(f);
          }
          if (sup == 0) break;
        }
      }
    std::sort(found.begin(), found.end());
    for (auto& f : found) {
      C.atom_index[static_cast<size_t>(r)][f.T] =
          static_cast<int>(C.atom_flags[static_cast<size_t>(r)].size());
      C.atom_flags[static_cast<size_t>(r)].push_back(f);
    }
  }
  while (!C.atom_flags.empty() && C.atom_flags.back().empty()) {
    C.atom_flags.pop_back();
    C.atom_index.pop_back();
  }
  C.comp.atoms.resize(C.atom_flags.size());
  for (size_t r = 0; r < C.atom_flags.size(); ++r)
    for (auto& f : C.atom_flags[r]) {
      CAtom a;
      a.src = f.lo();
      a.tgt = f.hi();
      a.label = flag_str(f);
      C.comp.atoms[r].push_back(std::move(a));
    }
  for (size_t r = 1; r < C.atom_flags.size(); ++r)
    for (size_t i = 0; i < C.atom_flags[r].size(); ++i) {
      CAtom& a = C.comp.atoms[r][i];
      for (int j = 0; j <= static_cast<int>(r); ++j)
        a.faces.push_back(
            C.word_of(flag_act(C.atom_flags[r][i], op_delta(static_cast<int>(r), j))));
    }
  return C;
}

}  // namespace hoco

#endif
