#ifndef HOCO_EXP_HPP
#define HOCO_EXP_HPP

#include "hoco/extend.hpp"
#include "hoco/scat.hpp"

namespace hoco {

/// Function space of two simplicial sets, tabulated through a fixed
/// dimension: a d-simplex is a map out of the cylinder on a d-simplex, with
/// operators acting by precomposition.
struct Exponential {
  SSetPtr set;  // truncated at the tabulation bound
  SSetPtr base, target;
  int bound = 0;
  std::vector<MultiProduct> cyls;    // base x Delta^d
  std::vector<StandardSSet> stds;
  std::vector<std::vector<SMap>> cells_;  // nondegenerate maps per dim
  std::map<std::pair<int, std::vector<std::vector<EZ>>>, EZ> index;

  /// Precompose a map out of base x Delta^d with id x alpha.
  SMap whisker(const SMap& m, int d, const SOp& alpha) const {
    int e = alpha.source_dim();
    SMap out;
    out.src = cyls[static_cast<size_t>(e)].set;
    out.tgt = m.tgt;
    out.assign.resize(static_cast<size_t>(out.src->top_dim()) + 1);
    const MultiProduct& Pe = cyls[static_cast<size_t>(e)];
    const MultiProduct& Pd = cyls[static_cast<size_t>(d)];
    for (int q = 0; q <= out.src->top_dim(); ++q)
      for (size_t i = 0; i < Pe.keys[static_cast<size_t>(q)].size(); ++i) {
        const TupleKey& key = Pe.keys[static_cast<size_t>(q)][i];
        auto verts = stds[static_cast<size_t>(e)].verts_of(key[1].cell);
        SOp tau;
        tau.target = e;
        for (int v = 0; v <= q; ++v) tau.img.push_back(verts[static_cast<size_t>(key[1].epi(v))]);
        EZ tgt_cell = Pd.simplex({key[0], stds[static_cast<size_t>(d)].simplex(hoco::compose(alpha, tau))});
        out.assign[static_cast<size_t>(q)].push_back(m.apply(tgt_cell));
      }
    return out;
  }
  EZ classify(const SMap& m, int d) const {
    auto it = index.find({d, m.assign});
    if (it == index.end()) throw invalid_input("exponential: unknown map");
    return it->second;
  }
  const SMap& map_of_cell(CellId c) const {
    return cells_[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
  }
};

inline Exponential bounded_exponential(SSetPtr X, SSetPtr Y, int bound, int map_limit = 1000000) {
  Exponential E;
  E.base = X;
  E.target = Y;
  E.bound = bound;
  auto out = std::make_shared<SSet>();
  out->name = "exp(" + X->name + "," + Y->name + ")";
  out->truncation = bound;
  out->cells.resize(static_cast<size_t>(bound) + 1);
  int reach = std::max(X->top_dim(), 0);
  for (int d = 0; d <= bound; ++d) {
    E.stds.push_back(standard(d));
    E.cyls.push_back(product(X, E.stds.back().set, reach + d));
  }
  E.cells_.resize(static_cast<size_t>(bound) + 1);
  for (int d = 0; d <= bound; ++d) {
    // degenerate simplices first: whiskers of lower nondegenerate cells
    for (int k = 0; k < d; ++k)
      for (size_t i = 0; i < E.cells_[static_cast<size_t>(k)].size(); ++i)
        for (auto& epi : all_epis(d, k)) {
          if (epi.is_identity()) continue;
          SMap m = E.whisker(E.cells_[static_cast<size_t>(k)][i], k, epi);
          E.index[{d, m.assign}] = EZ{epi, CellId{k, static_cast<int>(i)}};
        }
    auto maps = enumerate_maps(E.cyls[static_cast<size_t>(d)].set, Y, map_limit);
    for (auto& m : maps) {
      if (E.index.count({d, m.assign})) continue;
      int idx = static_cast<int>(E.cells_[static_cast<size_t>(d)].size());
      E.index[{d, m.assign}] = nondeg(CellId{d, idx});
      E.cells_[static_cast<size_t>(d)].push_back(m);
      out->cells[static_cast<size_t>(d)].push_back(Cell{});
    }
  }
  for (int d = 1; d <= bound; ++d)
    for (size_t i = 0; i < E.cells_[static_cast<size_t>(d)].size(); ++i) {
      Cell& c = out->cells[static_cast<size_t>(d)][i];
      for (int j = 0; j <= d; ++j) {
        SMap f = E.whisker(E.cells_[static_cast<size_t>(d)][i], d, op_delta(d, j));
        c.faces.push_back(E.classify(f, d - 1));
      }
    }
  E.set = out;
  return E;
}

}  // namespace hoco

#endif
