#ifndef HOCO_REALIZE_HPP
#define HOCO_REALIZE_HPP

#include "hoco/flags.hpp"

namespace hoco {

/// The coherent realisation of a finite simplicial set as a simplicial
/// computad. Objects are the vertices; the r-dimensional atoms are beads: a
/// nondegenerate carrier cell together with an ordered partition of its
/// interior vertices into r blocks.
struct Realization {
  Computad comp;
  SSetPtr X;
  std::vector<std::vector<std::pair<CellId, BeadShape>>> keys;  // per dim
  std::vector<std::map<std::pair<CellId, BeadShape>, int>> index;

  AtomId bead(CellId carrier, const BeadShape& shape) const {
    int r = static_cast<int>(shape.size());
    auto it = index[static_cast<size_t>(r)].find({carrier, shape});
    if (it == index[static_cast<size_t>(r)].end())
      throw invalid_input("realization: unknown bead on carrier " + carrier.str());
    return AtomId{r, it->second};
  }
  const std::pair<CellId, BeadShape>& key_of(AtomId a) const {
    return keys[static_cast<size_t>(a.dim)][static_cast<size_t>(a.idx)];
  }
  int object_of_vertex(CellId v) const { return v.idx; }
  CellId vertex_of_object(int o) const { return CellId{0, o}; }

  /// The arrow named by a valid flag on the vertex scale of an arbitrary
  /// simplex z of X, in normal form: break into atomic factors, restrict the
  /// carrier to each factor's support, and recurse until nondegenerate
  /// full-support carriers name beads.
  Word push(const EZ& z, const Flag& f) const {
    if (f.hi() > z.dim()) throw invalid_input("realization: flag exceeds simplex");
    Word out;
    out.dim = f.dim();
    out.src = object_of_vertex(X->vertex(z, f.lo()));
    out.tgt = object_of_vertex(X->vertex(z, f.hi()));
    Flag f2 = flag_image(f, z.epi);
    for (auto& piece : flag_atoms(f2)) {
      auto [pi, strict] = flag_ez(piece);
      auto support = mask_bits(strict.top());
      SOp iota;
      iota.target = z.cell.dim;
      for (int v : support) iota.img.push_back(v);
      EZ z2 = X->act(nondeg(z.cell), iota);
      Flag moved;  // strict, relabelled into the support scale
      for (Mask t : strict.T) {
        Mask u = 0;
        for (size_t p = 0; p < support.size(); ++p)
          if (t & (1u << support[p])) u |= 1u << p;
        moved.T.push_back(u);
      }
      Word wb;
      if (z2.epi.is_identity()) {
        AtomId a = bead(z2.cell, shape_of_flag(moved));
        wb = comp.word_of_atom(a);
      } else {
        wb = push(z2, moved);
      }
      Word acted = comp.act_word(wb, pi);
      out.letters.insert(out.letters.end(), acted.letters.begin(), acted.letters.end());
    }
    return out;
  }
};

inline Realization realize(SSetPtr X, int atom_dim_bound = -1) {
  Realization R;
  R.X = X;
  R.comp.n_objects = X->size(0);
  R.comp.name = "F(" + X->name + ")";
  for (int v = 0; v < X->size(0); ++v) {
    const std::string& lbl = X->cell(CellId{0, v}).label;
    R.comp.obj_names.push_back(lbl.empty() ? "v" + std::to_string(v) : lbl);
  }
  int top = std::max(X->top_dim() - 1, 0);
  if (atom_dim_bound >= 0) top = std::min(top, atom_dim_bound);
  for (int r = 0; r <= top; ++r) {
    R.keys.push_back({});
    R.index.push_back({});
    for (int m = r + 1; m <= X->top_dim(); ++m)
      for (int i = 0; i < X->size(m); ++i) {
        Mask interior = 0;
        for (int v = 1; v <= m - 1; ++v) interior |= 1u << v;
        for (auto& shape : ordered_partitions(interior, r)) {
          R.index[static_cast<size_t>(r)][{CellId{m, i}, shape}] =
              static_cast<int>(R.keys[static_cast<size_t>(r)].size());
          R.keys[static_cast<size_t>(r)].push_back({CellId{m, i}, shape});
        }
      }
  }
  while (R.keys.size() > 1 && R.keys.back().empty()) {
    R.keys.pop_back();
    R.index.pop_back();
  }
  R.comp.atoms.resize(R.keys.size());
  for (size_t r = 0; r < R.keys.size(); ++r)
    for (auto& [carrier, shape] : R.keys[r]) {
      CAtom a;
      Flag f = flag_of_shape(carrier.dim, shape);
      a.src = R.object_of_vertex(X->vertex(nondeg(carrier), 0));
      a.tgt = R.object_of_vertex(X->vertex(nondeg(carrier), carrier.dim));
      a.label = carrier.str() + flag_str(f);
      R.comp.atoms[r].push_back(std::move(a));
    }
  for (size_t r = 1; r < R.keys.size(); ++r)
    for (size_t i = 0; i < R.keys[r].size(); ++i) {
      auto& [carrier, shape] = R.keys[r][i];
      Flag f = flag_of_shape(carrier.dim, shape);
      CAtom& a = R.comp.atoms[r][i];
      for (int j = 0; j <= static_cast<int>(r); ++j)
        a.faces.push_back(R.push(nondeg(carrier), flag_act(f, op_delta(static_cast<int>(r), j))));
    }
  return R;
}

/// The simplicial computad functor induced by a simplicial map.
inline CFunctor realize_map(const SMap& f, const Realization& RX, const Realization& RY) {
  CFunctor F;
  F.src = &RX.comp;
  F.tgt = &RY.comp;
  for (int v = 0; v < RX.X->size(0); ++v)
    F.on_obj.push_back(RY.object_of_vertex(f.on_cell(CellId{0, v}).cell));
  F.on_atom.resize(RX.keys.size());
  for (size_t r = 0; r < RX.keys.size(); ++r)
    for (auto& [carrier, shape] : RX.keys[r])
      F.on_atom[r].push_back(RY.push(f.on_cell(carrier), flag_of_shape(carrier.dim, shape)));
  return F;
}

/// Comparison with the direct flag presentation of the coherent simplex: the
/// bead on the face with vertex set S corresponds to the flag supported on S.
inline CFunctor realization_vs_flags(const Realization& R, const StandardSSet& st,
                                     const CoherentSimplex& C) {
  CFunctor F;
  F.src = &R.comp;
  F.tgt = &C.comp;
  for (int v = 0; v < R.X->size(0); ++v) F.on_obj.push_back(st.verts_of(CellId{0, v})[0]);
  F.on_atom.resize(R.keys.size());
  for (size_t r = 0; r < R.keys.size(); ++r)
    for (auto& [carrier, shape] : R.keys[r]) {
      auto verts = st.verts_of(carrier);
      SOp vmap;
      vmap.target = st.n;
      for (int v : verts) vmap.img.push_back(v);
      Flag f = flag_image(flag_of_shape(carrier.dim, shape), vmap);
      F.on_atom[r].push_back(C.word_of(f));
    }
  return F;
}

}  // namespace hoco

#endif
