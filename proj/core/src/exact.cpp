#include "apery/exact.hpp"

namespace apery {

Rational bell_complete(std::span<const Rational> x, int n) {
  return bell_complete_t<Rational>(x, n);
}

BigInt stirling_cycle(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling_cycle: negative argument");
  if (k > n) return 0;
  // [n k] = [n-1 k-1] + (n-1)[n-1 k], [0 0] = 1
  std::vector<BigInt> row(n + 1, BigInt(0));
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] = row[j - 1] + BigInt(i - 1) * row[j];
    row[0] = 0;
  }
  return row[k];
}

Rational mhs(int n, const SignedWord& w) {
  if (w.empty()) return Rational(1);
  if (n < static_cast<int>(w.size())) return Rational(0);
  const int m = static_cast<int>(w.size());
  // suffix[j] holds zeta_i(w_j,...,w_m) while i runs 1..n; suffix[m] = 1.
  std::vector<Rational> suffix(m + 1, Rational(0));
  suffix[m] = Rational(1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j < m; ++j) {
      BigInt den;
      mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(i),
                    static_cast<unsigned long>(w[j].s));
      bool neg = w[j].sign < 0 && (i % 2 == 1);
      Rational term = suffix[j + 1] / Rational(den);
      suffix[j] += neg ? -term : term;
    }
  }
  return suffix[0];
}

Rational mhs(int n, const std::vector<int>& plain) {
  SignedWord w;
  for (int s : plain) w.push_back({s, +1});
  return mhs(n, w);
}

Rational mhs_star(int n, const std::vector<int>& w) {
  if (w.empty()) return Rational(1);
  if (n < 1) return Rational(0);
  const int m = static_cast<int>(w.size());
  std::vector<Rational> suffix(m + 1, Rational(0));
  suffix[m] = Rational(1);
  for (int i = 1; i <= n; ++i) {
    // Non-strict descent: level j at index i uses level j+1 already at i,
    // so the update runs deepest-first.
    for (int j = m - 1; j >= 0; --j) {
      BigInt den;
      mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(i),
                    static_cast<unsigned long>(w[j]));
      suffix[j] += suffix[j + 1] / Rational(den);
    }
  }
  return suffix[0];
}

Rational zeta_star_ones(int n, int m) {
  if (n < 1) throw std::invalid_argument("zeta_star_ones: n must be positive");
  if (m < 0) throw std::invalid_argument("zeta_star_ones: m must be nonnegative");
  if (m == 0) return Rational(1);
  // x_k = (k-1)! H_n^(k)
  std::vector<Rational> x;
  BigInt fact(1);
  for (int k = 1; k <= m; ++k) {
    Rational h(0);
    for (int i = 1; i <= n; ++i) {
      BigInt den;
      mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(i),
                    static_cast<unsigned long>(k));
      h += Rational(BigInt(1), den);
    }
    x.push_back(h * Rational(fact));
    fact *= k;
  }
  return bell_complete(x, m) / Rational(factorial(m));
}

std::vector<Rational> harmonic_prefix(int n_max, int s) {
  std::vector<Rational> h;
  h.reserve(n_max + 1);
  h.push_back(Rational(0));
  for (int i = 1; i <= n_max; ++i) {
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(i),
                  static_cast<unsigned long>(s));
    h.push_back(h.back() + Rational(BigInt(1), den));
  }
  return h;
}

namespace {

void compose_rec(int remaining, int parts, int min_part, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = min_part; k <= remaining - min_part * (parts - 1); ++k) {
    cur.push_back(k);
    compose_rec(remaining - k, parts - 1, min_part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> compositions(int total_max, int parts, int min_part) {
  if (parts <= 0) throw std::invalid_argument("compositions: parts must be positive");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (total_max >= min_part * parts) compose_rec(total_max, parts, min_part, cur, out);
  return out;
}

std::vector<std::vector<int>> compositions_exact(int total, int parts, int min_part) {
  std::vector<std::vector<int>> out;
  for (auto& t : compositions(total, parts, min_part)) {
    int s = 0;
    for (int k : t) s += k;
    if (s == total) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace apery
