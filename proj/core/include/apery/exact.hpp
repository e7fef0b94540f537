#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "apery/rational.hpp"
#include "apery/words.hpp"

namespace apery {

// Complete exponential Bell polynomial Y_n(x_1,...,x_n) by the binomial
// recurrence Y_n = sum_j C(n-1,j) x_{n-j} Y_j, Y_0 = 1. Works over any
// commutative ring T with T(int) and multiplication by Rational.
template <typename T>
T bell_complete_t(std::span<const T> x, int n) {
  if (n < 0) throw std::invalid_argument("bell_complete: n must be nonnegative");
  if (static_cast<int>(x.size()) < n)
    throw std::invalid_argument("bell_complete: argument list shorter than n");
  std::vector<T> y;
  y.reserve(n + 1);
  y.push_back(T(1));
  for (int k = 1; k <= n; ++k) {
    T acc(0);
    for (int j = 0; j < k; ++j)
      acc += x[k - 1 - j] * y[j] * Rational(binomial(k - 1, j));
    y.push_back(acc);
  }
  return y[n];
}

Rational bell_complete(std::span<const Rational> x, int n);
inline Rational bell_complete(const std::vector<Rational>& x, int n) {
  return bell_complete(std::span<const Rational>(x), n);
}

// Unsigned Stirling number of the first kind [n k] (cycle numbers).
BigInt stirling_cycle(int n, int k);

// Exact multiple harmonic sum zeta_n(w) with strict index descent and signs
// sigma^i attached; 0 for n < depth, 1 on the empty word.
Rational mhs(int n, const SignedWord& w);
Rational mhs(int n, const std::vector<int>& plain);

// Exact multiple harmonic star sum zeta*_n(s_1,...,s_m), non-strict descent.
Rational mhs_star(int n, const std::vector<int>& w);

// Exact zeta*_n({1}_m) through the complete Bell polynomial on the power
// sums H_n, 1!H_n^(2), ..., (m-1)!H_n^(m). Never uses nested summation.
Rational zeta_star_ones(int n, int m);

// H_i^(s) for i = 0..n_max as exact rationals.
std::vector<Rational> harmonic_prefix(int n_max, int s);

// All tuples (k_1,...,k_parts) with k_i >= min_part and sum <= total_max,
// in lexicographic order.
std::vector<std::vector<int>> compositions(int total_max, int parts, int min_part);

// Same but with sum == total exactly.
std::vector<std::vector<int>> compositions_exact(int total, int parts, int min_part);

}  // namespace apery
