#include "oracles.hpp"

#include <algorithm>

namespace vwseries::test_oracles {

namespace {

// Dense truncated product, quadratic on purpose.
std::vector<Int> mul_trunc(const std::vector<Int>& a, const std::vector<Int>& b, std::size_t N) {
  std::vector<Int> r(N, Int(0));
  for (std::size_t i = 0; i < a.size() && i < N; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < N; ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

// Counts partitions of n with all parts <= cap; one call per tree node.
Int count_partitions(long n, long cap) {
  if (n == 0) return 1;
  Int total = 0;
  for (long part = std::min(n, cap); part >= 1; --part)
    total += count_partitions(n - part, part);
  return total;
}

}  // namespace

std::vector<Int> euler_product_brute(long e, std::size_t N) {
  std::vector<Int> acc(N, Int(0));
  if (N == 0) return acc;
  acc[0] = 1;
  for (std::size_t k = 1; k < N; ++k) {
    // One factor per copy: (1 - q^k) when the net exponent -e is positive,
    // the truncated geometric series 1 + q^k + q^{2k} + ... when negative.
    std::vector<Int> factor(N, Int(0));
    if (e >= 0) {
      for (std::size_t j = 0; j * k < N; ++j) factor[j * k] = 1;
    } else {
      factor[0] = 1;
      factor[k] = -1;
    }
    const long copies = e >= 0 ? e : -e;
    for (long c = 0; c < copies; ++c) acc = mul_trunc(acc, factor, N);
  }
  return acc;
}

Int partition_count_brute(long n) {
  if (n < 0) return 0;
  return count_partitions(n, n == 0 ? 1 : n);
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace vwseries::test_oracles
