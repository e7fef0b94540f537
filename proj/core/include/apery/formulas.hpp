#pragma once

#include "apery/eval.hpp"
#include "apery/expr.hpp"
#include "apery/series_id.hpp"

namespace apery {

// Result of one explicit evaluation: the combination as assembled from the
// statement (decorated words, zeta factors) and its normalized expansion
// into alternating words.
struct Formula {
  SeriesId id;
  Expr mixed;
  Expr expanded;
};

struct UnsupportedSeries : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---- iterated-integral side -------------------------------------------

// S_{p+1} = sum C(2n,n)/(4^n n^{p+1}) = -2 z(-1,{^1}_p)
Formula formula_S(int p);

// S_{m+1,p+1} = sum H_n^{(m+1)} C(2n,n)/(4^n n^{p+1})
//             = 4 z(-1,{^1}_p,^2,{^1}_{m-1}) - 2 zeta(m+1) z(-1,{^1}_p)
Formula formula_S_linear(int m, int p);

// S*_{m,q} = sum zeta*_n({1}_m) C(2n,n)/(4^n n^q); q = 1 is the single
// closed form -2^{m+1} z(-(m+1)), q >= 2 the composition sum.
Formula formula_S_star(int m, int q);

enum class S1Variant { coro_s1p, coro_mixed };

// S_{1,p+1} = sum H_n C(2n,n)/(4^n n^{p+1}); both published derivations.
Formula formula_S_1(int p, S1Variant variant = S1Variant::coro_mixed);

// S_{1(m+1),p} = sum H_n H_n^{(m+1)} C(2n,n)/(4^n n^p)
Formula formula_S_quad(int m, int p);

// S_{1^2,p} = 2 S*_{2,p} - S_{2,p}
Formula formula_S_quad11(int p);

enum class CubicVariant { six_three_two, two_one };

// S_{1^3,p}: either 6 S*_{3,p} - 3 S_{12,p} - 2 S_{3,p} or 2 S*_{12,p} - S_{12,p}.
Formula formula_S_cubic(int p, CubicVariant variant = CubicVariant::two_one);

// S*_{1m,q} = sum H_n zeta*_n({1}_m) C(2n,n)/(4^n n^q)
Formula formula_S_star_1m(int m, int p);  // exponent is p+1

// ---- contour side ------------------------------------------------------

// Taylor coefficients of Gamma(1+z) e^{gz} and its reciprocal: polynomials
// in zeta values through the complete Bell polynomials.
ZetaPolynomial seq_C(int k);
ZetaPolynomial seq_D(int k);

// A_k(n) = sum_{k1+k2=k} zeta*_n({1}_{k1}) C_{k2}/k2!,
// B_k(n) = sum_{k1+k2=k} (-1)^{k1} zeta_n({1}_{k1}) D_{k2}/k2!.
ZetaPolynomial coeff_A(int k, int n);
ZetaPolynomial coeff_B(int k, int n);

// G(k) = 2^{k3+k4} ln^{k4}(2) C_{k1} C_{k2} D_{k3} / (k1!k2!k3!k4!)
ZetaPolynomial coeff_G(int k1, int k2, int k3, int k4);

// H(k) = (-1)^{k4} 2^{k1+k4} ln^{k4}(2) C_{k1} D_{k2} D_{k3} / (k1!k2!k3!k4!)
ZetaPolynomial coeff_H(int k1, int k2, int k3, int k4);

// S_{q-1} as a polynomial in ln(2) and zeta values: (-1)^q sum_{|k|_4=q-1} G(k).
ZetaPolynomial closed_S(int q);

enum class TsVariant { contour, chen };

// tS_q = sum 4^n/(n^q C(2n,n)): residue-derived combination, or the
// odd-denominator form 2 z(~2,{~1}_{q-2}).
Formula formula_tS(int q, TsVariant variant = TsVariant::contour);

// tS1_q = sum 4^n H_n/(n^q C(2n,n)), tT1_q = sum 4^n H_2n/(n^q C(2n,n))
Formula formula_tS1(int q);
Formula formula_tT1(int q);

// T1_q = sum H_2n C(2n,n)/(4^n n^q)
Formula formula_T1(int q);

// U1_q = T1_q - S_{1,q}/2, tU1_q = tT1_q - tS1_q/2 (odd harmonic numbers)
Formula formula_U1(int q);
Formula formula_tU1(int q);

// Residual |LHS - RHS| of the relation tying the odd-denominator form of
// tS_q to the residue-derived one; small for all q when both transcriptions
// are right.
NumericValue relation_check_closing(int q, const EvalOptions& opts = {});

// Literal-parameter dispatch used by the CLI and the verification table.
Formula formula_for(const SeriesId& id);

}  // namespace apery
