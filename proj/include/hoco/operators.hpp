#ifndef HOCO_OPERATORS_HPP
#define HOCO_OPERATORS_HPP

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

namespace hoco {

struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct overflow_limit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A weakly monotone map [m] -> [n], the basic simplicial operator.
/// `img` has size m+1 and entries in [0, target].
struct SOp {
  int target = 0;
  std::vector<int> img;

  int source_dim() const { return static_cast<int>(img.size()) - 1; }
  int target_dim() const { return target; }
  int operator()(int i) const { return img[static_cast<size_t>(i)]; }

  bool operator==(const SOp& o) const { return target == o.target && img == o.img; }
  bool operator!=(const SOp& o) const { return !(*this == o); }
  bool operator<(const SOp& o) const {
    if (target != o.target) return target < o.target;
    return img < o.img;
  }

  bool is_monotone() const {
    for (size_t i = 0; i + 1 < img.size(); ++i)
      if (img[i] > img[i + 1]) return false;
    return img.empty() || (img.front() >= 0 && img.back() <= target);
  }
  bool is_identity() const {
    if (source_dim() != target) return false;
    for (int i = 0; i <= target; ++i)
      if (img[static_cast<size_t>(i)] != i) return false;
    return true;
  }
  bool is_epi() const {
    if (img.empty()) return target < 0;
    int expect = -1;
    for (int v : img) {
      if (v == expect) continue;
      if (v == expect + 1) { ++expect; continue; }
      return false;
    }
    return expect == target;
  }
  bool is_mono() const {
    for (size_t i = 0; i + 1 < img.size(); ++i)
      if (img[i] >= img[i + 1]) return false;
    return true;
  }

  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < img.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(img[i]);
    }
    s += "]->" + std::to_string(target);
    return s;
  }
};

inline SOp op_identity(int n) {
  SOp a;
  a.target = n;
  a.img.resize(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) a.img[static_cast<size_t>(i)] = i;
  return a;
}

/// delta(n, i): the face [n-1] -> [n] skipping i.
inline SOp op_delta(int n, int i) {
  assert(n >= 1 && 0 <= i && i <= n);
  SOp a;
  a.target = n;
  for (int j = 0; j <= n; ++j)
    if (j != i) a.img.push_back(j);
  return a;
}

/// sigma(n, i): the degeneracy [n+1] -> [n] repeating i.
inline SOp op_sigma(int n, int i) {
  assert(0 <= i && i <= n);
  SOp a;
  a.target = n;
  for (int j = 0; j <= n + 1; ++j) a.img.push_back(j <= i ? j : j - 1);
  return a;
}

/// Constant operator [m] -> [n] at value v.
inline SOp op_const(int m, int n, int v) {
  SOp a;
  a.target = n;
  a.img.assign(static_cast<size_t>(m) + 1, v);
  return a;
}

/// a after b: [k] -> [m] -> [n].
inline SOp compose(const SOp& a, const SOp& b) {
  if (b.target != a.source_dim())
    throw invalid_input("operator composition: dimension mismatch " + a.str() + " o " + b.str());
  SOp c;
  c.target = a.target;
  c.img.reserve(b.img.size());
  for (int v : b.img) c.img.push_back(a.img[static_cast<size_t>(v)]);
  return c;
}

/// Unique epi-mono factorisation a = mono o epi.
struct EpiMono {
  SOp epi;
  SOp mono;
};

inline EpiMono epi_mono_factor(const SOp& a) {
  std::vector<int> values;
  for (int v : a.img)
    if (values.empty() || values.back() != v) values.push_back(v);
  EpiMono r;
  r.mono.target = a.target;
  r.mono.img = values;
  r.epi.target = static_cast<int>(values.size()) - 1;
  for (int v : a.img) {
    auto it = std::lower_bound(values.begin(), values.end(), v);
    r.epi.img.push_back(static_cast<int>(it - values.begin()));
  }
  return r;
}

/// Ordinal dual: a°(i) = n - a(m - i).
inline SOp op_dual(const SOp& a) {
  SOp d;
  d.target = a.target;
  int m = a.source_dim();
  d.img.resize(a.img.size());
  for (int i = 0; i <= m; ++i)
    d.img[static_cast<size_t>(i)] = a.target - a.img[static_cast<size_t>(m - i)];
  return d;
}

/// a * [0]: the join with a point, [m+1] -> [n+1] extending a by top |-> top.
inline SOp op_join_point(const SOp& a) {
  SOp j;
  j.target = a.target + 1;
  j.img = a.img;
  j.img.push_back(a.target + 1);
  return j;
}

/// All weakly monotone maps [m] -> [n], lexicographic order.
inline std::vector<SOp> all_monotone(int m, int n) {
  std::vector<SOp> out;
  SOp cur;
  cur.target = n;
  cur.img.assign(static_cast<size_t>(m) + 1, 0);
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos > m) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      cur.img[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// All epis [m] ->> [k], lexicographic order.
inline std::vector<SOp> all_epis(int m, int k) {
  std::vector<SOp> out;
  for (auto& a : all_monotone(m, k))
    if (a.is_epi()) out.push_back(a);
  return out;
}

/// All monos [m] >-> [n], lexicographic order.
inline std::vector<SOp> all_monos(int m, int n) {
  std::vector<SOp> out;
  for (auto& a : all_monotone(m, n))
    if (a.is_mono()) out.push_back(a);
  return out;
}

}  // namespace hoco

#endif
