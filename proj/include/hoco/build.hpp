#ifndef HOCO_BUILD_HPP
#define HOCO_BUILD_HPP

#include <map>
#include <tuple>
#include <variant>

#include "hoco/sset.hpp"

namespace hoco {

// ---------------------------------------------------------------------------
// standard simplices, boundaries, horns
// ---------------------------------------------------------------------------

/// Vertex subsets of [0,n] index the nondegenerate cells of the standard
/// n-simplex; cell order within a dimension is lexicographic on the subset.
inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline int subset_rank(int n, const std::vector<int>& s) {
  auto all = subsets_of_size(n, static_cast<int>(s.size()));
  auto it = std::lower_bound(all.begin(), all.end(), s);
  return static_cast<int>(it - all.begin());
}

struct StandardSSet {
  SSetPtr set;
  int n = 0;
  CellId id_of(const std::vector<int>& verts) const {
    return CellId{static_cast<int>(verts.size()) - 1,
                  subset_rank(n, verts)};
  }
  std::vector<int> verts_of(CellId c) const {
    return subsets_of_size(n, c.dim + 1)[static_cast<size_t>(c.idx)];
  }
  /// The simplex of the standard n-simplex named by an arbitrary monotone
  /// a : [m] -> [n].
  EZ simplex(const SOp& a) const {
    auto fac = epi_mono_factor(a);
    std::vector<int> verts(fac.mono.img.begin(), fac.mono.img.end());
    return EZ{fac.epi, id_of(verts)};
  }
};

inline StandardSSet standard(int n) {
  StandardSSet st;
  st.n = n;
  auto out = std::make_shared<SSet>();
  out->name = "Delta^" + std::to_string(n);
  out->cells.resize(static_cast<size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) {
    auto subs = subsets_of_size(n, d + 1);
    for (auto& s : subs) {
      Cell c;
      c.label = "<";
      for (size_t i = 0; i < s.size(); ++i) {
        if (i) c.label += ",";
        c.label += std::to_string(s[i]);
      }
      c.label += ">";
      if (d > 0)
        for (int i = 0; i <= d; ++i) {
          std::vector<int> f = s;
          f.erase(f.begin() + i);
          c.faces.push_back(EZ{op_identity(d - 1), CellId{d - 1, subset_rank(n, f)}});
        }
      out->cells[static_cast<size_t>(d)].push_back(std::move(c));
    }
  }
  st.set = out;
  return st;
}

inline Subcomplex boundary_sub(const StandardSSet& st) {
  Subcomplex s = full_subcomplex(st.set);
  s.member[static_cast<size_t>(st.n)][0] = 0;
  return s;
}

/// The horn on vertex k: remove top cell and the k-th face.
inline Subcomplex horn_sub(const StandardSSet& st, int k) {
  Subcomplex s = boundary_sub(st);
  std::vector<int> f;
  for (int v = 0; v <= st.n; ++v)
    if (v != k) f.push_back(v);
  s.member[static_cast<size_t>(st.n - 1)][static_cast<size_t>(subset_rank(st.n, f))] = 0;
  return s;
}

// ---------------------------------------------------------------------------
// finite products
// ---------------------------------------------------------------------------

/// Key of a product cell: jointly nondegenerate tuple of component simplices.
using TupleKey = std::vector<EZ>;

struct MultiProduct {
  SSetPtr set;
  std::vector<SSetPtr> factors;
  std::vector<SMap> proj;
  std::vector<std::map<TupleKey, int>> index;  // per dimension
  std::vector<std::vector<TupleKey>> keys;

  CellId id_of(const TupleKey& k) const {
    int d = k.empty() ? 0 : k[0].dim();
    auto it = index[static_cast<size_t>(d)].find(k);
    if (it == index[static_cast<size_t>(d)].end())
      throw invalid_input("product: unknown cell key");
    return CellId{d, it->second};
  }
  const TupleKey& key_of(CellId c) const {
    return keys[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
  }
  /// EZ normal form of an arbitrary tuple of equal-dimension simplices. The
  /// dimension argument is only needed for the empty product.
  EZ simplex(const TupleKey& t, int dim = -1) const {
    if (t.empty()) {
      if (dim < 0) throw invalid_input("product: dimension needed for empty tuple");
      return EZ{op_const(dim, 0, 0), id_of({})};
    }
    int d = t[0].dim();
    // indices where every component is degenerate in the same slot
    std::vector<int> collapse;
    for (int i = 0; i + 1 <= d; ++i) {
      bool all = true;
      for (auto& s : t)
        if (s.epi(i) != s.epi(i + 1)) { all = false; break; }
      if (all) collapse.push_back(i);
    }
    if (collapse.empty()) return EZ{op_identity(d), id_of(t)};
    SOp epi;
    epi.target = d - static_cast<int>(collapse.size());
    {
      int v = 0;
      size_t ci = 0;
      for (int i = 0; i <= d; ++i) {
        epi.img.push_back(v);
        if (ci < collapse.size() && collapse[ci] == i)
          ++ci;  // next index maps to the same value
        else
          ++v;
      }
    }
    // section of epi: first index of each fibre
    SOp section;
    section.target = d;
    for (int v = 0; v <= epi.target; ++v) {
      for (int i = 0; i <= d; ++i)
        if (epi(i) == v) { section.img.push_back(i); break; }
    }
    TupleKey reduced;
    for (size_t j = 0; j < t.size(); ++j)
      reduced.push_back(EZ{hoco::compose(t[j].epi, section), t[j].cell});
    return EZ{epi, id_of(reduced)};
  }
  /// Component simplices of an arbitrary product simplex.
  TupleKey components(const EZ& s) const {
    TupleKey t = key_of(s.cell);
    for (auto& c : t) c.epi = hoco::compose(c.epi, s.epi);
    return t;
  }
};

inline MultiProduct multiproduct(std::vector<SSetPtr> factors, int bound) {
  MultiProduct P;
  P.factors = factors;
  auto out = std::make_shared<SSet>();
  out->name = "product";
  int limit = bound;
  for (auto& f : factors) {
    if (f->truncation >= 0) limit = std::min(limit, f->truncation);
  }
  bool finite_everywhere = true;
  for (auto& f : factors)
    if (f->truncation >= 0) finite_everywhere = false;
  P.index.resize(static_cast<size_t>(limit) + 1);
  P.keys.resize(static_cast<size_t>(limit) + 1);
  out->cells.resize(static_cast<size_t>(limit) + 1);

  for (int d = 0; d <= limit; ++d) {
    // enumerate jointly nondegenerate tuples in canonical (lexicographic) order
    std::vector<std::vector<EZ>> comp;
    for (auto& f : factors) comp.push_back(f->simplices(d));
    std::vector<size_t> pick(factors.size(), 0);
    TupleKey cur(factors.size());
    std::vector<TupleKey> found;
    auto rec = [&](auto&& self, size_t pos) -> void {
      if (pos == factors.size()) {
        for (int i = 0; i + 1 <= d; ++i) {
          bool all = true;
          for (auto& s : cur)
            if (s.epi(i) != s.epi(i + 1)) { all = false; break; }
          if (all) return;  // degenerate tuple
        }
        found.push_back(cur);
        return;
      }
      for (auto& s : comp[pos]) {
        cur[pos] = s;
        self(self, pos + 1);
      }
    };
    if (!factors.empty())
      rec(rec, 0);
    else if (d == 0)
      found.push_back({});  // empty product: a point
    for (auto& k : found) {
      int idx = static_cast<int>(P.keys[static_cast<size_t>(d)].size());
      P.index[static_cast<size_t>(d)][k] = idx;
      P.keys[static_cast<size_t>(d)].push_back(k);
      out->cells[static_cast<size_t>(d)].push_back(Cell{});
    }
  }
  // face tables (P.simplex only consults index/keys, already complete)
  for (int d = 1; d <= limit; ++d) {
    for (size_t i = 0; i < P.keys[static_cast<size_t>(d)].size(); ++i) {
      Cell& c = out->cells[static_cast<size_t>(d)][i];
      for (int j = 0; j <= d; ++j) {
        TupleKey t;
        for (size_t q = 0; q < factors.size(); ++q)
          t.push_back(P.factors[q]->act(P.keys[static_cast<size_t>(d)][i][q], op_delta(d, j)));
        c.faces.push_back(P.simplex(t));
      }
    }
  }
  // a product is complete only when every jointly nondegenerate tuple fits
  // under the limit, i.e. limit >= sum of factor top dimensions
  int reach = 0;
  for (auto& f : factors) reach += std::max(f->top_dim(), 0);
  out->truncation = (finite_everywhere && limit >= reach) ? -1 : limit;
  P.set = out;
  // projections
  for (size_t q = 0; q < factors.size(); ++q) {
    SMap pr;
    pr.src = P.set;
    pr.tgt = factors[q];
    pr.assign.resize(static_cast<size_t>(limit) + 1);
    for (int d = 0; d <= limit; ++d)
      for (auto& k : P.keys[static_cast<size_t>(d)]) pr.assign[static_cast<size_t>(d)].push_back(k[q]);
    P.proj.push_back(std::move(pr));
  }
  return P;
}

inline MultiProduct product(SSetPtr X, SSetPtr Y, int bound) {
  return multiproduct({X, Y}, bound);
}

/// The simplicial cube (Delta^1)^k with its boundary and open-box subcomplexes.
struct CubeSSet {
  MultiProduct prod;
  int k = 0;
  SSetPtr set;

  /// Component i of a cube simplex, as a monotone map to [1].
  SOp coord(const EZ& s, int i) const {
    EZ c = prod.components(s)[static_cast<size_t>(i)];
    SOp rho;
    rho.target = 1;
    if (c.cell.dim == 0) {
      rho.img.assign(static_cast<size_t>(c.dim()) + 1, c.cell.idx);
    } else {
      rho.img = c.epi.img;
    }
    return rho;
  }
  /// The cube cell named by a tuple of maps to [1]; for the 0-cube the
  /// dimension must be passed explicitly.
  EZ simplex(const std::vector<SOp>& rho, int dim = -1) const {
    if (rho.empty()) return prod.simplex({}, dim);
    TupleKey t;
    for (auto& r : rho) {
      bool c0 = true, c1 = true;
      for (int v : r.img) {
        if (v != 0) c0 = false;
        if (v != 1) c1 = false;
      }
      if (c0 || c1) {
        t.push_back(EZ{op_const(r.source_dim(), 0, 0), CellId{0, c0 ? 0 : 1}});
      } else {
        auto fac = epi_mono_factor(r);
        t.push_back(EZ{fac.epi, CellId{1, 0}});
      }
    }
    return prod.simplex(t);
  }
  /// Vertex named by a bit tuple.
  CellId vertex(const std::vector<int>& bits) const {
    std::vector<SOp> rho;
    for (int b : bits) rho.push_back(op_const(0, 1, b));
    return simplex(rho, 0).cell;
  }
};

inline CubeSSet cube(int k, int bound) {
  CubeSSet c;
  c.k = k;
  auto d1 = standard(1);
  std::vector<SSetPtr> factors(static_cast<size_t>(k), d1.set);
  c.prod = multiproduct(factors, std::min(bound, std::max(k, 0)));
  c.set = c.prod.set;
  auto mut = std::const_pointer_cast<SSet>(c.set);
  mut->name = "cube^" + std::to_string(k);
  return c;
}

inline Subcomplex cube_boundary_sub(const CubeSSet& c) {
  Subcomplex s = empty_subcomplex(c.set);
  for (int d = 0; d <= c.set->top_dim(); ++d)
    for (int i = 0; i < c.set->size(d); ++i) {
      bool on_boundary = false;
      for (int q = 0; q < c.k; ++q) {
        SOp rho = c.coord(nondeg(CellId{d, i}), q);
        bool constant = true;
        for (int v : rho.img)
          if (v != rho.img[0]) constant = false;
        if (constant) { on_boundary = true; break; }
      }
      if (on_boundary) s.member[static_cast<size_t>(d)][static_cast<size_t>(i)] = 1;
    }
  return s;
}

/// The open box missing the face {x_j = 1-e}: cells with some coordinate
/// other than j constant, or coordinate j constant at e.
inline Subcomplex cube_horn_sub(const CubeSSet& c, int j, int e) {
  Subcomplex s = empty_subcomplex(c.set);
  for (int d = 0; d <= c.set->top_dim(); ++d)
    for (int i = 0; i < c.set->size(d); ++i) {
      bool in_horn = false;
      for (int q = 0; q < c.k; ++q) {
        SOp rho = c.coord(nondeg(CellId{d, i}), q);
        bool constant = true;
        for (int v : rho.img)
          if (v != rho.img[0]) constant = false;
        if (!constant) continue;
        if (q != j || rho.img[0] == e) { in_horn = true; break; }
      }
      if (in_horn) s.member[static_cast<size_t>(d)][static_cast<size_t>(i)] = 1;
    }
  return s;
}

// ---------------------------------------------------------------------------
// join with a point, quotients, suspensions
// ---------------------------------------------------------------------------

/// X * Delta^0. Cells: the cells of X, a cone cell over each, and the apex.
struct JoinPoint {
  SSetPtr set;
  SSetPtr base;
  SMap base_inclusion;  // X -> X * pt
  // cell layout per dimension d: first the cells of X_d, then the cones over
  // X_{d-1} cells, then (d == 0) the apex last.
  CellId from_base(CellId c) const { return c; }
  CellId cone(CellId c) const {
    return CellId{c.dim + 1, base->size(c.dim + 1) + c.idx};
  }
  CellId apex() const { return CellId{0, base->size(0)}; }

  enum class Type { kBase, kCone, kApex };
  Type type_of(CellId c) const {
    if (c.dim == 0 && c.idx == base->size(0)) return Type::kApex;
    return c.idx < base->size(c.dim) ? Type::kBase : Type::kCone;
  }
  CellId base_cell(CellId c) const {  // for kBase / kCone
    if (type_of(c) == Type::kBase) return c;
    return CellId{c.dim - 1, c.idx - base->size(c.dim)};
  }
  /// The join of a base simplex (possibly absent) with a run of apex points.
  /// dim = (y ? y->dim() : -1) + apex_len + ... total simplex dimension q.
  EZ simplex(std::optional<EZ> y, int total_dim) const {
    if (!y) return EZ{op_const(total_dim, 0, 0), apex()};
    int c = y->dim();
    if (c == total_dim) return EZ{y->epi, from_base(y->cell)};
    // cone over the nondegenerate support, degenerate along the apex run
    SOp op;
    op.target = y->cell.dim + 1;
    for (int i = 0; i <= total_dim; ++i)
      op.img.push_back(i <= c ? y->epi(i) : y->cell.dim + 1);
    return EZ{op, cone(y->cell)};
  }
};

inline JoinPoint join_with_point(SSetPtr X) {
  JoinPoint J;
  J.base = X;
  auto out = std::make_shared<SSet>();
  out->name = X->name + "*pt";
  out->truncation = X->truncation >= 0 ? X->truncation + 1 : -1;
  int top = X->top_dim() + 1;
  out->cells.resize(static_cast<size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) {
    for (int i = 0; i < X->size(d); ++i) {
      Cell c = X->cell(CellId{d, i});
      c.faces.clear();
      if (d > 0)
        for (auto& f : X->cell(CellId{d, i}).faces) c.faces.push_back(f);
      out->cells[static_cast<size_t>(d)].push_back(std::move(c));
    }
    if (d >= 1) {
      for (int i = 0; i < X->size(d - 1); ++i) {
        Cell c;
        c.label = X->cell(CellId{d - 1, i}).label + "^";
        out->cells[static_cast<size_t>(d)].push_back(std::move(c));
      }
    }
    if (d == 0) {
      Cell apex;
      apex.label = "top";
      out->cells[0].push_back(std::move(apex));
    }
  }
  J.set = out;
  auto mut = out;
  // cone faces
  for (int d = 1; d <= top; ++d) {
    for (int i = 0; i < X->size(d - 1); ++i) {
      CellId cone_id = J.cone(CellId{d - 1, i});
      Cell& c = mut->cells[static_cast<size_t>(d)][static_cast<size_t>(cone_id.idx)];
      for (int j = 0; j < d; ++j) {
        if (d - 1 == 0) {
          // cone over a vertex: face 0 is the apex
          c.faces.push_back(EZ{op_identity(0), J.apex()});
          continue;
        }
        const EZ& f = X->face(CellId{d - 1, i}, j);
        c.faces.push_back(EZ{op_join_point(f.epi), J.cone(f.cell)});
      }
      if (d - 1 == 0) {
        c.faces.push_back(EZ{op_identity(0), J.from_base(CellId{0, i})});
      } else {
        c.faces.push_back(EZ{op_identity(d - 1), J.from_base(CellId{d - 1, i})});
      }
    }
  }
  J.base_inclusion.src = X;
  J.base_inclusion.tgt = J.set;
  J.base_inclusion.assign.resize(static_cast<size_t>(X->top_dim()) + 1);
  for (int d = 0; d <= X->top_dim(); ++d)
    for (int i = 0; i < X->size(d); ++i)
      J.base_inclusion.assign[static_cast<size_t>(d)].push_back(nondeg(CellId{d, i}));
  return J;
}

/// Quotient collapsing each listed face-closed subcomplex to its own vertex.
/// Subcomplexes must be pairwise disjoint and nonempty.
struct Quotient {
  SSetPtr set;
  SSetPtr base;
  SMap projection;  // base -> set
  std::vector<CellId> class_vertex;

  EZ map(const EZ& s) const { return projection.apply(s); }
};

inline Quotient collapse(SSetPtr X, const std::vector<Subcomplex>& parts) {
  for (auto& p : parts) {
    if (p.ambient != X) throw invalid_input("collapse: subcomplex of a different set");
    if (!is_face_closed(p)) throw invalid_input("collapse: part not face-closed");
  }
  auto cls = [&](CellId c) -> int {
    for (size_t j = 0; j < parts.size(); ++j)
      if (parts[j].contains(c)) return static_cast<int>(j);
    return -1;
  };
  Quotient Q;
  Q.base = X;
  auto out = std::make_shared<SSet>();
  out->name = X->name + "/~";
  out->truncation = X->truncation;
  out->cells.resize(static_cast<size_t>(X->top_dim()) + 1);
  // class vertices first, then surviving cells in order
  for (size_t j = 0; j < parts.size(); ++j) {
    Cell v;
    v.label = "class" + std::to_string(j);
    Q.class_vertex.push_back(CellId{0, static_cast<int>(j)});
    out->cells[0].push_back(std::move(v));
  }
  std::vector<std::vector<int>> newidx(static_cast<size_t>(X->top_dim()) + 1);
  for (int d = 0; d <= X->top_dim(); ++d) {
    newidx[static_cast<size_t>(d)].assign(static_cast<size_t>(X->size(d)), -1);
    for (int i = 0; i < X->size(d); ++i) {
      if (cls(CellId{d, i}) >= 0) continue;
      newidx[static_cast<size_t>(d)][static_cast<size_t>(i)] =
          static_cast<int>(out->cells[static_cast<size_t>(d)].size());
      Cell c;
      c.label = X->cell(CellId{d, i}).label;
      out->cells[static_cast<size_t>(d)].push_back(std::move(c));
    }
  }
  Q.projection.src = X;
  Q.projection.tgt = out;
  Q.projection.assign.resize(static_cast<size_t>(X->top_dim()) + 1);
  for (int d = 0; d <= X->top_dim(); ++d)
    for (int i = 0; i < X->size(d); ++i) {
      int j = cls(CellId{d, i});
      if (j >= 0)
        Q.projection.assign[static_cast<size_t>(d)].push_back(
            EZ{op_const(d, 0, 0), Q.class_vertex[static_cast<size_t>(j)]});
      else
        Q.projection.assign[static_cast<size_t>(d)].push_back(
            nondeg(CellId{d, newidx[static_cast<size_t>(d)][static_cast<size_t>(i)]}));
    }
  // faces of surviving cells via the projection
  for (int d = 1; d <= X->top_dim(); ++d)
    for (int i = 0; i < X->size(d); ++i) {
      int ni = newidx[static_cast<size_t>(d)][static_cast<size_t>(i)];
      if (ni < 0) continue;
      Cell& c = out->cells[static_cast<size_t>(d)][static_cast<size_t>(ni)];
      for (auto& f : X->cell(CellId{d, i}).faces)
        c.faces.push_back(Q.projection.apply(f));
    }
  Q.set = out;
  return Q;
}

/// Opposite simplicial set: same cells, operator action conjugated by the
/// ordinal dual.
inline SSetPtr opposite(SSetPtr X) {
  auto out = std::make_shared<SSet>(*X);
  out->name = X->name + "^op";
  for (int d = 1; d <= X->top_dim(); ++d)
    for (int i = 0; i < X->size(d); ++i) {
      Cell& c = out->cells[static_cast<size_t>(d)][static_cast<size_t>(i)];
      for (int j = 0; j <= d; ++j) {
        const EZ& f = X->face(CellId{d, i}, d - j);
        c.faces[static_cast<size_t>(j)] = EZ{op_dual(f.epi), f.cell};
      }
    }
  return out;
}

/// Map between opposites induced by f : X -> Y.
inline SMap opposite_map(const SMap& f, SSetPtr Xop, SSetPtr Yop) {
  SMap g;
  g.src = Xop;
  g.tgt = Yop;
  g.assign.resize(f.assign.size());
  for (size_t d = 0; d < f.assign.size(); ++d)
    for (auto& im : f.assign[d]) g.assign[d].push_back(EZ{op_dual(im.epi), im.cell});
  return g;
}

/// Right suspension: (X * pt) / X, a cone with the base collapsed.
struct RightSuspension {
  Quotient quot;
  JoinPoint join;
  SSetPtr set;
  CellId minus() const { return quot.class_vertex[0]; }
  CellId plus() const { return quot.map(nondeg(join.apex())).cell; }
};

inline RightSuspension right_suspension(SSetPtr X) {
  RightSuspension S;
  S.join = join_with_point(X);
  Subcomplex basepart = empty_subcomplex(S.join.set);
  for (int d = 0; d <= X->top_dim(); ++d)
    for (int i = 0; i < X->size(d); ++i)
      basepart.member[static_cast<size_t>(d)][static_cast<size_t>(i)] = 1;
  S.quot = collapse(S.join.set, {basepart});
  S.set = S.quot.set;
  auto mut = std::const_pointer_cast<SSet>(S.set);
  mut->name = "rsusp(" + X->name + ")";
  return S;
}

/// Suspension: X x Delta^1 with each end collapsed to a point.
struct Suspension {
  MultiProduct cyl;
  Quotient quot;
  SSetPtr set;
  CellId minus() const { return quot.class_vertex[0]; }
  CellId plus() const { return quot.class_vertex[1]; }
};

inline Subcomplex cylinder_end_sub(const MultiProduct& cyl, int end) {
  Subcomplex s = empty_subcomplex(cyl.set);
  for (int d = 0; d <= cyl.set->top_dim(); ++d)
    for (size_t i = 0; i < cyl.keys[static_cast<size_t>(d)].size(); ++i) {
      const EZ& second = cyl.keys[static_cast<size_t>(d)][i][1];
      if (second.cell.dim == 0 && second.cell.idx == end)
        s.member[static_cast<size_t>(d)][i] = 1;
    }
  return s;
}

inline Suspension suspension(SSetPtr X, int bound) {
  Suspension S;
  auto d1 = standard(1);
  S.cyl = product(X, d1.set, bound);
  S.quot = collapse(S.cyl.set, {cylinder_end_sub(S.cyl, 0), cylinder_end_sub(S.cyl, 1)});
  S.set = S.quot.set;
  auto mut = std::const_pointer_cast<SSet>(S.set);
  mut->name = "susp(" + X->name + ")";
  return S;
}

// ---------------------------------------------------------------------------
// disjoint union (for corpus assembly)
// ---------------------------------------------------------------------------

inline SSetPtr disjoint_union(SSetPtr X, SSetPtr Y, SMap* inl = nullptr, SMap* inr = nullptr) {
  auto out = std::make_shared<SSet>();
  out->name = X->name + "+" + Y->name;
  if (X->truncation >= 0 || Y->truncation >= 0)
    out->truncation = std::min(X->dim_bound(), Y->dim_bound());
  int top = std::max(X->top_dim(), Y->top_dim());
  out->cells.resize(static_cast<size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) {
    for (int i = 0; i < X->size(d); ++i) out->cells[static_cast<size_t>(d)].push_back(X->cell(CellId{d, i}));
    for (int i = 0; i < Y->size(d); ++i) {
      Cell c = Y->cell(CellId{d, i});
      for (auto& f : c.faces) f.cell.idx += X->size(f.cell.dim);
      out->cells[static_cast<size_t>(d)].push_back(std::move(c));
    }
  }
  if (inl) {
    inl->src = X;
    inl->tgt = out;
    inl->assign.resize(static_cast<size_t>(X->top_dim()) + 1);
    for (int d = 0; d <= X->top_dim(); ++d)
      for (int i = 0; i < X->size(d); ++i)
        inl->assign[static_cast<size_t>(d)].push_back(nondeg(CellId{d, i}));
  }
  if (inr) {
    inr->src = Y;
    inr->tgt = out;
    inr->assign.resize(static_cast<size_t>(Y->top_dim()) + 1);
    for (int d = 0; d <= Y->top_dim(); ++d)
      for (int i = 0; i < Y->size(d); ++i)
        inr->assign[static_cast<size_t>(d)].push_back(nondeg(CellId{d, i + X->size(d)}));
  }
  return out;
}

}  // namespace hoco

#endif
