#include <cmath>

#include "apery/exact.hpp"
#include "apery/formulas.hpp"

namespace apery {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw UnsupportedSeries(msg);
}

void append_repeat(DecoWord& w, DecoSlot s, int count) {
  for (int i = 0; i < count; ++i) w.push_back(s);
}

Expr deco_expr(DecoWord w, const Rational& coeff = Rational(1)) {
  return Expr::atom(Atom::deco(std::move(w)), coeff);
}

Formula wrap(SeriesId id, Expr mixed) {
  Expr expanded = mixed.expanded();
  return {std::move(id), std::move(mixed), std::move(expanded)};
}

// Bell polynomial arguments for the Taylor expansion of Gamma(1+z)e^{gz}:
// x_1 = 0, x_k = sign (k-1)! zeta(k). The Euler-Mascheroni constant cancels
// by construction and never appears.
ZetaPolynomial gamma_bell(int k, int sign_parity) {
  std::vector<Expr> x;
  x.push_back(Expr(0));
  for (int j = 2; j <= k; ++j) {
    int sign = (j % 2 == sign_parity) ? 1 : -1;
    x.push_back(Expr::atom(Atom::zeta(j), Rational(sign) * Rational(factorial(j - 1))));
  }
  return bell_complete_t<Expr>(std::span<const Expr>(x), k);
}

Rational inv_factorials(std::initializer_list<int> ks) {
  BigInt d(1);
  for (int k : ks) d *= factorial(k);
  return Rational(BigInt(1), d);
}

Expr ln2_power(int k) {
  Monomial m;
  for (int i = 0; i < k; ++i) m.push_back(Atom::ln2());
  return Expr::monomial(std::move(m));
}

}  // namespace

ZetaPolynomial seq_C(int k) {
  if (k < 0) throw std::invalid_argument("seq_C: k must be nonnegative");
  return gamma_bell(k, 0);  // x_k = (-1)^k (k-1)! zeta(k)
}

ZetaPolynomial seq_D(int k) {
  if (k < 0) throw std::invalid_argument("seq_D: k must be nonnegative");
  return gamma_bell(k, 1);  // x_k = (-1)^{k-1} (k-1)! zeta(k)
}

ZetaPolynomial coeff_A(int k, int n) {
  if (k < 0 || n < 0) throw std::invalid_argument("coeff_A: negative argument");
  Expr out;
  for (int k1 = 0; k1 <= k; ++k1) {
    int k2 = k - k1;
    Rational zs = n == 0 ? (k1 == 0 ? Rational(1) : Rational(0)) : zeta_star_ones(n, k1);
    if (zs.is_zero()) continue;
    out += seq_C(k2) * (zs * Rational(BigInt(1), factorial(k2)));
  }
  return out;
}

ZetaPolynomial coeff_B(int k, int n) {
  if (k < 0 || n < 0) throw std::invalid_argument("coeff_B: negative argument");
  Expr out;
  for (int k1 = 0; k1 <= k; ++k1) {
    int k2 = k - k1;
    Rational z = mhs(n, std::vector<int>(k1, 1));
    if (k1 % 2 == 1) z = -z;
    if (z.is_zero()) continue;
    out += seq_D(k2) * (z * Rational(BigInt(1), factorial(k2)));
  }
  return out;
}

ZetaPolynomial coeff_G(int k1, int k2, int k3, int k4) {
  Expr g = seq_C(k1) * seq_C(k2) * seq_D(k3) * ln2_power(k4);
  return g * (Rational::pow2(k3 + k4) * inv_factorials({k1, k2, k3, k4}));
}

ZetaPolynomial coeff_H(int k1, int k2, int k3, int k4) {
  Expr h = seq_C(k1) * seq_D(k2) * seq_D(k3) * ln2_power(k4);
  Rational c = Rational::pow2(k1 + k4) * inv_factorials({k1, k2, k3, k4});
  if (k4 % 2 == 1) c = -c;
  return h * c;
}

ZetaPolynomial closed_S(int q) {
  require(q >= 2, "closed_S: q must be >= 2");
  Expr out;
  for (const auto& k : compositions_exact(q - 1, 4, 0)) out += coeff_G(k[0], k[1], k[2], k[3]);
  if (q % 2 == 1) out *= Rational(-1);
  return out;
}

Formula formula_tS(int q, TsVariant variant) {
  require(q >= 2, "formula_tS: q must be >= 2");
  SeriesId id{Family::tS, {}, 0, q};
  if (variant == TsVariant::chen) {
    DecoWord w{{2, Deco::tilde}};
    append_repeat(w, {1, Deco::tilde}, q - 2);
    return wrap(std::move(id), deco_expr(std::move(w), Rational(2)));
  }
  Expr mixed = formula_S_1(q - 2).mixed;
  if (q % 2 == 1) mixed *= Rational(-1);
  for (const auto& k : compositions_exact(q - 2, 5, 0))
    mixed += coeff_G(k[0], k[1], k[2], k[3]) * Expr::atom(Atom::zeta(k[4] + 2));
  return wrap(std::move(id), std::move(mixed));
}

namespace {

// Shared core of the two linear tilde sums: the bracketed quadratic block
// and the two G-coefficient sums, with family-specific scalars.
Expr linear_tilde_core(int q, const Rational& zeta2_coeff, const Rational& s2_coeff,
                       const Rational& g5_scale) {
  Expr bracket = formula_S_quad11(q - 1).mixed;
  bracket += Expr::atom(Atom::zeta(2)) * formula_S(q - 2).mixed * zeta2_coeff;
  bracket += formula_S_linear(1, q - 2).mixed * s2_coeff;
  Rational half(1, 2);
  if (q % 2 == 1) half = -half;
  Expr out = bracket * half;
  Expr g5;
  for (const auto& k : compositions_exact(q - 1, 5, 0))
    g5 += coeff_G(k[0], k[1], k[2], k[3]) * Expr::atom(Atom::zeta(k[4] + 2)) * Rational(k[4] + 1);
  out += g5 * g5_scale;
  Expr g6;
  for (const auto& k : compositions_exact(q - 3, 6, 0))
    g6 += coeff_G(k[0], k[1], k[2], k[3]) * Expr::atom(Atom::zeta(k[4] + 2)) *
          Expr::atom(Atom::zeta(k[5] + 2));
  out -= g6 * Rational(1, 2);
  return out;
}

}  // namespace

Formula formula_tS1(int q) {
  require(q >= 2, "formula_tS1: q must be >= 2");
  Expr mixed = formula_tS(q + 1).mixed;
  mixed += linear_tilde_core(q, Rational(-1), Rational(1), Rational(1, 2));
  return wrap({Family::tS1, {}, 0, q}, std::move(mixed));
}

Formula formula_tT1(int q) {
  require(q >= 2, "formula_tT1: q must be >= 2");
  Expr mixed = formula_tS(q + 1).mixed * (Rational(1) - Rational(q, 2));
  mixed += Expr::atom(Atom::ln2()) * formula_tS(q).mixed;
  mixed += linear_tilde_core(q, Rational(-2), Rational(2), Rational(1));
  return wrap({Family::tT1, {}, 0, q}, std::move(mixed));
}

Formula formula_T1(int q) {
  require(q >= 1, "formula_T1: q must be >= 1");
  Expr mixed = Expr::atom(Atom::ln2()) * formula_S(q - 1).mixed;
  mixed += formula_S(q).mixed * Rational(q, 2);
  mixed += formula_S_1(q - 1).mixed;
  Rational half(1, 2);
  if (q % 2 == 1) half = -half;
  mixed += formula_tS(q + 1).mixed * half;
  for (const auto& k : compositions_exact(q + 1, 4, 0))
    mixed -= coeff_H(k[0], k[1], k[2], k[3]) * Rational(1, 2);
  for (int k5 = 0; 2 * k5 <= q - 1; ++k5)
    for (const auto& k : compositions_exact(q - 1 - 2 * k5, 4, 0))
      mixed += coeff_H(k[0], k[1], k[2], k[3]) * Expr::atom(Atom::zeta(2 * k5 + 2)) * Rational(2);
  for (int k5 = 0; 2 * k5 <= q - 3; ++k5)
    for (int k6 = 0; 2 * k5 + 2 * k6 <= q - 3; ++k6)
      for (const auto& k : compositions_exact(q - 3 - 2 * k5 - 2 * k6, 4, 0))
        mixed -= coeff_H(k[0], k[1], k[2], k[3]) * Expr::atom(Atom::zeta(2 * k5 + 2)) *
                 Expr::atom(Atom::zeta(2 * k6 + 2)) * Rational(2);
  return wrap({Family::T1, {}, 0, q}, std::move(mixed));
}

Formula formula_U1(int q) {
  require(q >= 1, "formula_U1: q must be >= 1");
  Expr mixed = formula_T1(q).mixed - formula_S_1(q - 1).mixed * Rational(1, 2);
  return wrap({Family::U1, {}, 0, q}, std::move(mixed));
}

Formula formula_tU1(int q) {
  require(q >= 2, "formula_tU1: q must be >= 2");
  Expr mixed = formula_tT1(q).mixed - formula_tS1(q).mixed * Rational(1, 2);
  return wrap({Family::tU1, {}, 0, q}, std::move(mixed));
}

NumericValue relation_check_closing(int q, const EvalOptions& opts) {
  require(q >= 2, "relation_check_closing: q must be >= 2");
  DecoWord tt{{2, Deco::tilde}};
  append_repeat(tt, {1, Deco::tilde}, q - 2);
  DecoWord th{{2, Deco::tilde}};
  append_repeat(th, {1, Deco::hat}, q - 2);
  DecoWord bth{{1, Deco::bar}, {1, Deco::tilde}};
  append_repeat(bth, {1, Deco::hat}, q - 2);

  Rational sgn(q % 2 == 0 ? 1 : -1);
  Expr lhs = deco_expr(tt) - deco_expr(th, sgn) + deco_expr(bth, sgn);
  Expr rhs;
  for (const auto& k : compositions_exact(q - 2, 5, 0))
    rhs += coeff_G(k[0], k[1], k[2], k[3]) * Expr::atom(Atom::zeta(k[4] + 2));
  rhs *= Rational(1, 2);

  NumericValue l = eval_expr(lhs.expanded(), opts);
  NumericValue r = eval_expr(rhs, opts);
  return {fabsl(l.value - r.value), l.err + r.err};
}

}  // namespace apery
