#ifndef HOCO_EXTEND_HPP
#define HOCO_EXTEND_HPP

#include <functional>
#include <optional>

#include "hoco/sset.hpp"

namespace hoco {

/// Search for simplicial maps `domain -> target` extending a partial
/// assignment, optionally constrained to live over a fixed map downstairs:
/// proj o F == bottom. Cells are processed in canonical order (dimension,
/// then index) and candidate images are tried in canonical simplex order, so
/// the first solution found is deterministic.
struct ExtensionProblem {
  SSetPtr domain;
  SSetPtr target;
  std::vector<std::vector<std::optional<EZ>>> fixed;  // per domain cell
  const SMap* proj = nullptr;                         // target -> base
  std::vector<std::vector<EZ>> bottom;                // per domain cell, in base

  void init_tables() {
    fixed.assign(static_cast<size_t>(domain->top_dim()) + 1, {});
    for (int d = 0; d <= domain->top_dim(); ++d)
      fixed[static_cast<size_t>(d)].assign(static_cast<size_t>(domain->size(d)), std::nullopt);
  }
  void fix(CellId c, EZ image) {
    fixed[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)] = image;
  }
};

namespace detail {

struct ExtSearch {
  const ExtensionProblem& p;
  std::vector<std::vector<EZ>> assign;
  std::vector<std::vector<std::vector<EZ>>> cands;  // candidate pools per dim
  std::function<bool(const SMap&)> emit;            // return false to stop
  bool stopped = false;

  explicit ExtSearch(const ExtensionProblem& prob) : p(prob) {
    assign.resize(static_cast<size_t>(p.domain->top_dim()) + 1);
    for (int d = 0; d <= p.domain->top_dim(); ++d)
      assign[static_cast<size_t>(d)].resize(static_cast<size_t>(p.domain->size(d)));
    cands.resize(static_cast<size_t>(p.domain->top_dim()) + 1);
    for (int d = 0; d <= p.domain->top_dim(); ++d)
      if (p.domain->size(d) > 0) cands[static_cast<size_t>(d)].push_back(p.target->simplices(d));
  }

  EZ image_of(const EZ& s) const {
    return p.target->act(assign[static_cast<size_t>(s.cell.dim)][static_cast<size_t>(s.cell.idx)],
                         s.epi);
  }

  bool admissible(CellId c, const EZ& cand) const {
    if (c.dim > 0) {
      for (int j = 0; j <= c.dim; ++j) {
        EZ want = image_of(p.domain->face(c, j));
        EZ got = p.target->act(cand, op_delta(c.dim, j));
        if (want != got) return false;
      }
    }
    if (p.proj) {
      EZ down = p.proj->apply(cand);
      if (down != p.bottom[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)]) return false;
    }
    return true;
  }

  void run(int d, int i) {
    if (stopped) return;
    while (d <= p.domain->top_dim() && i >= p.domain->size(d)) {
      ++d;
      i = 0;
    }
    if (d > p.domain->top_dim()) {
      SMap f;
      f.src = p.domain;
      f.tgt = p.target;
      f.assign = assign;
      if (!emit(f)) stopped = true;
      return;
    }
    CellId c{d, i};
    const auto& fx = p.fixed[static_cast<size_t>(d)][static_cast<size_t>(i)];
    if (fx) {
      if (!admissible(c, *fx)) return;
      assign[static_cast<size_t>(d)][static_cast<size_t>(i)] = *fx;
      run(d, i + 1);
      return;
    }
    for (auto& cand : cands[static_cast<size_t>(d)][0]) {
      if (!admissible(c, cand)) continue;
      assign[static_cast<size_t>(d)][static_cast<size_t>(i)] = cand;
      run(d, i + 1);
      if (stopped) return;
    }
  }
};

}  // namespace detail

inline std::optional<SMap> first_extension(const ExtensionProblem& p) {
  detail::ExtSearch s(p);
  std::optional<SMap> out;
  s.emit = [&](const SMap& f) {
    out = f;
    return false;
  };
  s.run(0, 0);
  return out;
}

inline std::vector<SMap> all_extensions(const ExtensionProblem& p, int limit = -1) {
  detail::ExtSearch s(p);
  std::vector<SMap> out;
  s.emit = [&](const SMap& f) {
    out.push_back(f);
    return limit < 0 || static_cast<int>(out.size()) < limit;
  };
  s.run(0, 0);
  return out;
}

inline std::vector<SMap> enumerate_maps(SSetPtr A, SSetPtr B, int limit = -1) {
  ExtensionProblem p;
  p.domain = A;
  p.target = B;
  p.init_tables();
  return all_extensions(p, limit);
}

}  // namespace hoco

#endif
