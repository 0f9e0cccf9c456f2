#ifndef HOCO_SSET_HPP
#define HOCO_SSET_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hoco/operators.hpp"

namespace hoco {

struct CellId {
  int dim = -1;
  int idx = -1;
  bool operator==(const CellId& o) const { return dim == o.dim && idx == o.idx; }
  bool operator!=(const CellId& o) const { return !(*this == o); }
  bool operator<(const CellId& o) const {
    if (dim != o.dim) return dim < o.dim;
    return idx < o.idx;
  }
  std::string str() const { return std::to_string(dim) + ":" + std::to_string(idx); }
};

/// Eilenberg-Zilber normal form: a (possibly degenerate) simplex is the
/// degeneracy of a unique nondegenerate cell along a unique epi.
struct EZ {
  SOp epi;      // [m] ->> [k], m the simplex dimension
  CellId cell;  // nondegenerate cell of dimension k

  int dim() const { return epi.source_dim(); }
  bool degenerate() const { return !epi.is_identity(); }
  bool operator==(const EZ& o) const { return epi == o.epi && cell == o.cell; }
  bool operator!=(const EZ& o) const { return !(*this == o); }
  bool operator<(const EZ& o) const {
    if (cell != o.cell) return cell < o.cell;
    return epi < o.epi;
  }
  std::string str() const {
    return degenerate() ? cell.str() + "." + epi.str() : cell.str();
  }
};

inline EZ nondeg(CellId c) { return EZ{op_identity(c.dim), c}; }

struct Cell {
  std::vector<EZ> faces;  // faces[i] = cell . delta_i, EZ normal form
  std::string label;
};

/// A finite simplicial set presented by its nondegenerate cells and EZ face
/// tables. If `truncation >= 0` the data is only faithful up through that
/// dimension (higher cells of the modelled set are not materialised).
struct SSet {
  std::vector<std::vector<Cell>> cells;  // by dimension
  int truncation = -1;
  std::string name;

  int top_dim() const { return static_cast<int>(cells.size()) - 1; }
  int dim_bound() const { return truncation >= 0 ? truncation : top_dim(); }
  int size(int d) const {
    if (d < 0 || d > top_dim()) return 0;
    return static_cast<int>(cells[static_cast<size_t>(d)].size());
  }
  int total_cells() const {
    int n = 0;
    for (auto& layer : cells) n += static_cast<int>(layer.size());
    return n;
  }
  const Cell& cell(CellId c) const {
    return cells[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
  }
  bool has(CellId c) const {
    return c.dim >= 0 && c.dim <= top_dim() && c.idx >= 0 && c.idx < size(c.dim);
  }
  void require_dim(int d) const {
    if (truncation >= 0 && d > truncation)
      throw overflow_limit("set '" + name + "' truncated at dimension " +
                           std::to_string(truncation) + ", need " + std::to_string(d));
  }

  /// The stored face x . delta_i of a nondegenerate cell.
  const EZ& face(CellId c, int i) const {
    return cell(c).faces[static_cast<size_t>(i)];
  }

  /// s . a for an arbitrary simplex s and operator a into dim(s).
  EZ act(const EZ& s, const SOp& a) const {
    SOp b = hoco::compose(s.epi, a);
    auto fac = epi_mono_factor(b);
    EZ down = act_mono(s.cell, fac.mono);
    // down = cell . mono with down possibly degenerate; combine epis
    return EZ{hoco::compose(down.epi, fac.epi), down.cell};
  }

  /// Vertex v of simplex s.
  CellId vertex(const EZ& s, int v) const {
    SOp pick = op_const(0, s.dim(), v);
    return act(s, pick).cell;
  }

  /// All simplices of dimension d in canonical order.
  std::vector<EZ> simplices(int d) const {
    require_dim(d);
    std::vector<EZ> out;
    for (int k = 0; k <= d && k <= top_dim(); ++k) {
      auto epis = all_epis(d, k);
      for (int i = 0; i < size(k); ++i)
        for (auto& e : epis) out.push_back(EZ{e, CellId{k, i}});
    }
    // canonical order: by (cell.dim, cell.idx, epi)
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  EZ act_mono(CellId c, const SOp& mono) const {
    if (mono.is_identity()) return nondeg(c);
    // peel off the largest missing value of the mono as a delta
    int missing = -1;
    {
      std::vector<char> seen(static_cast<size_t>(mono.target) + 1, 0);
      for (int v : mono.img) seen[static_cast<size_t>(v)] = 1;
      for (int v = mono.target; v >= 0; --v)
        if (!seen[static_cast<size_t>(v)]) { missing = v; break; }
    }
    const EZ& f = face(c, missing);  // dimension target-1
    SOp rest;
    rest.target = mono.target - 1;
    for (int v : mono.img) rest.img.push_back(v < missing ? v : v - 1);
    return act(f, rest);
  }
};

using SSetPtr = std::shared_ptr<const SSet>;

/// Structural validity: face tables well-formed and the simplicial identity
/// x.delta_j.delta_i = x.delta_i.delta_{j+1}-style relations hold (checked as
/// x.(delta_j o delta_i) in both evaluation orders).
struct ValidationReport {
  bool ok = true;
  std::vector<std::string> errors;
  void fail(std::string msg) {
    ok = false;
    errors.push_back(std::move(msg));
  }
};

inline ValidationReport validate(const SSet& X) {
  ValidationReport r;
  for (int d = 0; d <= X.top_dim(); ++d) {
    for (int i = 0; i < X.size(d); ++i) {
      CellId c{d, i};
      const Cell& cl = X.cell(c);
      if (d == 0) {
        if (!cl.faces.empty()) r.fail("vertex " + c.str() + " has faces");
        continue;
      }
      if (static_cast<int>(cl.faces.size()) != d + 1) {
        r.fail("cell " + c.str() + " has " + std::to_string(cl.faces.size()) + " faces");
        continue;
      }
      for (int j = 0; j <= d; ++j) {
        const EZ& f = cl.faces[static_cast<size_t>(j)];
        if (f.dim() != d - 1 || !X.has(f.cell) || !f.epi.is_epi() ||
            f.cell.dim != f.epi.target)
          r.fail("cell " + c.str() + " face " + std::to_string(j) + " malformed");
      }
    }
  }
  if (!r.ok) return r;
  for (int d = 2; d <= X.top_dim(); ++d) {
    for (int i = 0; i < X.size(d); ++i) {
      CellId c{d, i};
      for (int j = 0; j <= d; ++j) {
        for (int k = 0; k < j; ++k) {
          // delta_j then delta_k versus the composite operator
          EZ a = X.act(X.face(c, j), op_delta(d - 1, k));
          EZ b = X.act(X.face(c, k), op_delta(d - 1, j - 1));
          if (a != b)
            r.fail("simplicial identity fails at cell " + c.str() + " (" +
                   std::to_string(k) + "," + std::to_string(j) + ")");
        }
      }
    }
  }
  return r;
}

/// A simplicial map, stored on nondegenerate cells of the source.
struct SMap {
  SSetPtr src;
  SSetPtr tgt;
  std::vector<std::vector<EZ>> assign;  // per source cell, image in tgt
  std::string name;

  const EZ& on_cell(CellId c) const {
    return assign[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
  }
  EZ apply(const EZ& s) const {
    return tgt->act(on_cell(s.cell), s.epi);
  }
  bool operator==(const SMap& o) const { return assign == o.assign; }
};

inline ValidationReport validate(const SMap& f) {
  ValidationReport r;
  for (int d = 0; d <= f.src->top_dim(); ++d) {
    if (static_cast<int>(f.assign.size()) <= d ||
        static_cast<int>(f.assign[static_cast<size_t>(d)].size()) != f.src->size(d)) {
      r.fail("assignment table shape mismatch at dimension " + std::to_string(d));
      return r;
    }
    for (int i = 0; i < f.src->size(d); ++i) {
      CellId c{d, i};
      const EZ& im = f.on_cell(c);
      if (im.dim() != d || !f.tgt->has(im.cell)) {
        r.fail("image of " + c.str() + " malformed");
        continue;
      }
      for (int j = 0; j <= d && d > 0; ++j) {
        EZ lhs = f.apply(f.src->face(c, j));
        EZ rhs = f.tgt->act(im, op_delta(d, j));
        if (lhs != rhs)
          r.fail("map not simplicial at " + c.str() + " face " + std::to_string(j));
      }
    }
  }
  return r;
}

inline SMap identity_map(SSetPtr X) {
  SMap f;
  f.src = X;
  f.tgt = X;
  f.assign.resize(static_cast<size_t>(X->top_dim()) + 1);
  for (int d = 0; d <= X->top_dim(); ++d)
    for (int i = 0; i < X->size(d); ++i)
      f.assign[static_cast<size_t>(d)].push_back(nondeg(CellId{d, i}));
  return f;
}

inline SMap compose(const SMap& g, const SMap& f) {
  SMap h;
  h.src = f.src;
  h.tgt = g.tgt;
  h.assign.resize(f.assign.size());
  for (size_t d = 0; d < f.assign.size(); ++d)
    for (auto& im : f.assign[d]) h.assign[d].push_back(g.apply(im));
  return h;
}

/// Constant map to a vertex.
inline SMap const_map(SSetPtr X, SSetPtr Y, CellId v) {
  SMap f;
  f.src = X;
  f.tgt = Y;
  f.assign.resize(static_cast<size_t>(X->top_dim()) + 1);
  for (int d = 0; d <= X->top_dim(); ++d)
    for (int i = 0; i < X->size(d); ++i)
      f.assign[static_cast<size_t>(d)].push_back(EZ{op_const(d, 0, 0), v});
  return f;
}

/// A subcomplex flagged inside an ambient set.
struct Subcomplex {
  SSetPtr ambient;
  std::vector<std::vector<char>> member;  // per cell

  bool contains(CellId c) const {
    return member[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)] != 0;
  }
  bool contains(const EZ& s) const { return contains(s.cell); }
};

inline Subcomplex full_subcomplex(SSetPtr X) {
  Subcomplex s;
  s.ambient = X;
  s.member.resize(static_cast<size_t>(X->top_dim()) + 1);
  for (int d = 0; d <= X->top_dim(); ++d)
    s.member[static_cast<size_t>(d)].assign(static_cast<size_t>(X->size(d)), 1);
  return s;
}

inline Subcomplex empty_subcomplex(SSetPtr X) {
  Subcomplex s;
  s.ambient = X;
  s.member.resize(static_cast<size_t>(X->top_dim()) + 1);
  for (int d = 0; d <= X->top_dim(); ++d)
    s.member[static_cast<size_t>(d)].assign(static_cast<size_t>(X->size(d)), 0);
  return s;
}

/// Close a flagged cell collection downwards under faces.
inline void face_close(Subcomplex& s) {
  const SSet& X = *s.ambient;
  for (int d = X.top_dim(); d >= 1; --d)
    for (int i = 0; i < X.size(d); ++i)
      if (s.member[static_cast<size_t>(d)][static_cast<size_t>(i)])
        for (auto& f : X.cell(CellId{d, i}).faces) {
          s.member[static_cast<size_t>(f.cell.dim)][static_cast<size_t>(f.cell.idx)] = 1;
        }
}

inline bool is_face_closed(const Subcomplex& s) {
  const SSet& X = *s.ambient;
  for (int d = 1; d <= X.top_dim(); ++d)
    for (int i = 0; i < X.size(d); ++i)
      if (s.member[static_cast<size_t>(d)][static_cast<size_t>(i)])
        for (auto& f : X.cell(CellId{d, i}).faces)
          if (!s.contains(f.cell)) return false;
  return true;
}

/// Extract a subcomplex as a standalone set with its inclusion.
struct RestrictedSSet {
  SSetPtr set;
  SMap inclusion;                        // set -> ambient
  std::vector<std::vector<int>> back;    // ambient cell -> cell index in set, or -1
  std::optional<CellId> to_sub(CellId ambient_cell) const {
    int j = back[static_cast<size_t>(ambient_cell.dim)][static_cast<size_t>(ambient_cell.idx)];
    if (j < 0) return std::nullopt;
    return CellId{ambient_cell.dim, j};
  }
  std::optional<EZ> to_sub(const EZ& s) const {
    auto c = to_sub(s.cell);
    if (!c) return std::nullopt;
    return EZ{s.epi, *c};
  }
};

inline RestrictedSSet restrict_subcomplex(const Subcomplex& sub) {
  if (!is_face_closed(sub)) throw invalid_input("restrict: flagged cells not face-closed");
  const SSet& X = *sub.ambient;
  auto out = std::make_shared<SSet>();
  out->truncation = X.truncation;
  out->name = X.name + "|sub";
  RestrictedSSet r;
  r.back.resize(static_cast<size_t>(X.top_dim()) + 1);
  out->cells.resize(static_cast<size_t>(X.top_dim()) + 1);
  for (int d = 0; d <= X.top_dim(); ++d) {
    r.back[static_cast<size_t>(d)].assign(static_cast<size_t>(X.size(d)), -1);
    for (int i = 0; i < X.size(d); ++i)
      if (sub.contains(CellId{d, i})) {
        r.back[static_cast<size_t>(d)][static_cast<size_t>(i)] =
            static_cast<int>(out->cells[static_cast<size_t>(d)].size());
        out->cells[static_cast<size_t>(d)].push_back(X.cell(CellId{d, i}));
      }
  }
  // drop empty top layers
  while (!out->cells.empty() && out->cells.back().empty()) out->cells.pop_back();
  // reindex faces
  for (auto& layer : out->cells)
    for (auto& c : layer)
      for (auto& f : c.faces)
        f.cell.idx = r.back[static_cast<size_t>(f.cell.dim)][static_cast<size_t>(f.cell.idx)];
  r.set = out;
  r.inclusion.src = out;
  r.inclusion.tgt = sub.ambient;
  r.inclusion.assign.resize(out->cells.size());
  for (int d = 0; d <= out->top_dim(); ++d) {
    int j = 0;
    for (int i = 0; i < X.size(d); ++i)
      if (sub.contains(CellId{d, i})) {
        (void)j;
        r.inclusion.assign[static_cast<size_t>(d)].push_back(nondeg(CellId{d, i}));
      }
  }
  return r;
}

}  // namespace hoco

#endif
