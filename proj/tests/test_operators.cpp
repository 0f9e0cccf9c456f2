#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoco/operators.hpp"

using namespace hoco;

static long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

TEST_CASE("monotone map enumeration counts") {
  // #monotone [m] -> [n] = C(n+m+1, m+1)
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      CHECK(static_cast<long long>(all_monotone(m, n).size()) == binom(n + m + 1, m + 1));
  // #monos [m] -> [n] = C(n+1, m+1), #epis [m] ->> [k] = C(m, k)
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      CHECK(static_cast<long long>(all_monos(m, n).size()) == binom(n + 1, m + 1));
      CHECK(static_cast<long long>(all_epis(m, n).size()) == binom(m, n));
    }
}

TEST_CASE("composition agrees with pointwise evaluation") {
  for (int k = 0; k <= 3; ++k)
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n)
        for (auto& b : all_monotone(k, m))
          for (auto& a : all_monotone(m, n)) {
            SOp c = compose(a, b);
            CHECK(c.is_monotone());
            for (int i = 0; i <= k; ++i) CHECK(c(i) == a(b(i)));
          }
}

TEST_CASE("epi-mono factorisation is exact and unique") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (auto& a : all_monotone(m, n)) {
        auto f = epi_mono_factor(a);
        CHECK(f.epi.is_epi());
        CHECK(f.mono.is_mono());
        CHECK(compose(f.mono, f.epi) == a);
        // uniqueness: brute force over all epi/mono pairs
        int hits = 0;
        for (int k = 0; k <= m; ++k)
          for (auto& e : all_epis(m, k))
            for (auto& mo : all_monos(k, n))
              if (compose(mo, e) == a) ++hits;
        CHECK(hits == 1);
      }
}

TEST_CASE("simplicial identities for delta and sigma") {
  for (int n = 1; n <= 4; ++n) {
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        CHECK(compose(op_delta(n, j), op_delta(n - 1, i)) ==
              compose(op_delta(n, i), op_delta(n - 1, j - 1)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j)
        CHECK(compose(op_sigma(n - 1, j), op_sigma(n, i + 1)) ==
              compose(op_sigma(n - 1, i), op_sigma(n, j)));
  }
}

TEST_CASE("ordinal dual is involutive and contravariant-friendly") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (auto& a : all_monotone(m, n)) {
        CHECK(op_dual(op_dual(a)) == a);
        CHECK(op_dual(a).is_monotone());
        CHECK(a.is_epi() == op_dual(a).is_epi());
        CHECK(a.is_mono() == op_dual(a).is_mono());
      }
  // dual of a composite is the composite of duals (same order)
  for (auto& b : all_monotone(2, 3))
    for (auto& a : all_monotone(3, 2))
      CHECK(op_dual(compose(a, b)) == compose(op_dual(a), op_dual(b)));
  CHECK(op_dual(op_delta(3, 1)) == op_delta(3, 2));
  CHECK(op_dual(op_sigma(2, 0)) == op_sigma(2, 2));
}

TEST_CASE("join with a point") {
  for (auto& a : all_monotone(2, 3)) {
    SOp j = op_join_point(a);
    CHECK(j.source_dim() == 3);
    CHECK(j.target == 4);
    CHECK(j(3) == 4);
    for (int i = 0; i <= 2; ++i) CHECK(j(i) == a(i));
  }
}
