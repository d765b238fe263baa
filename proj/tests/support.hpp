#pragma once

// Shared generators and brute-force oracles for the unit tests.

#include <random>
#include <string>
#include <vector>

#include "theta_root/series.hpp"

namespace support {

using theta_root::Integer;
using theta_root::QSeries;
using theta_root::TPoly;
using theta_root::TQSeries;

constexpr unsigned kSeed = 20240611;
constexpr int kTrials = 200;

inline Integer random_integer(std::mt19937& rng, int bound = 50) {
  return Integer(std::uniform_int_distribution<int>(-bound, bound)(rng));
}

inline QSeries random_qseries(std::mt19937& rng, int order) {
  std::vector<Integer> c(order + 1);
  for (auto& x : c) x = random_integer(rng);
  return QSeries(order, std::move(c));
}

// Random series with constant term +1 or -1.
inline QSeries random_unit_qseries(std::mt19937& rng, int order) {
  auto s = random_qseries(rng, order);
  s.set(0, std::bernoulli_distribution(0.5)(rng) ? 1 : -1);
  return s;
}

inline TPoly random_tpoly(std::mt19937& rng, int max_degree = 3) {
  const int d = std::uniform_int_distribution<int>(-1, max_degree)(rng);
  std::vector<Integer> c(d + 1);
  for (auto& x : c) x = random_integer(rng, 9);
  return TPoly(std::move(c));
}

inline TQSeries random_tqseries(std::mt19937& rng, int order) {
  std::vector<TPoly> c(order + 1);
  for (auto& p : c) p = random_tpoly(rng);
  return TQSeries(order, std::move(c));
}

inline int random_int(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Partitions of n into parts drawn from `parts` (each usable repeatedly), by
// plain recursion over the largest allowed part.
inline long count_partitions(int n, const std::vector<int>& parts, std::size_t from = 0) {
  if (n == 0) return 1;
  long total = 0;
  for (std::size_t i = from; i < parts.size(); ++i)
    if (parts[i] <= n) total += count_partitions(n - parts[i], parts, i);
  return total;
}

inline long partitions(int n) {
  std::vector<int> parts;
  for (int k = n; k >= 1; --k) parts.push_back(k);
  return count_partitions(n, parts);
}

// Coefficients of prod_{i in exps} (1 - q^i), expanded over subsets.
inline std::vector<long> product_by_subsets(const std::vector<int>& exps, int order) {
  std::vector<long> c(order + 1);
  const std::size_t n = exps.size();
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    int sum = 0;
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sum += exps[i], sign = -sign;
    if (sum <= order) c[sum] += sign;
  }
  return c;
}

// Euler function coefficients from the generalized pentagonal numbers.
inline std::vector<long> pentagonal_coeffs(int order) {
  std::vector<long> c(order + 1);
  for (int k = -order; k <= order; ++k) {
    const long e = static_cast<long>(k) * (3 * k - 1) / 2;
    if (e >= 0 && e <= order) c[e] += (k % 2 == 0) ? 1 : -1;
  }
  return c;
}

inline QSeries from_longs(const std::vector<long>& v) {
  std::vector<Integer> c;
  for (long x : v) c.emplace_back(x);
  return QSeries(static_cast<int>(v.size()) - 1, std::move(c));
}

inline QSeries xi_reference() { return from_longs({1, 1, 2, 4, 9, 21, 52, 133, 351, 948}); }

}  // namespace support
