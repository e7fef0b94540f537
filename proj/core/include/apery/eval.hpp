#pragma once

#include <stdexcept>
#include <string>

#include "apery/expr.hpp"

namespace apery {

using real_t = long double;

// High-precision real paired with an estimated absolute error. Printed
// digits never exceed what the error supports.
struct NumericValue {
  real_t value = 0;
  real_t err = 0;
  std::string str() const;
};

struct EvalOptions {
  real_t target = 1e-10L;  // absolute accuracy requested per atom
  long n_cap = 200000;     // hard cap on terms per nesting level
  long n_start = 16384;
  int euler_depth = 12;    // averaging depth on alternating tails
  int checkpoints = 8;     // log2-spaced extrapolation nodes
};

struct PrecisionUnreachable : std::runtime_error {
  NumericValue best;
  PrecisionUnreachable(const NumericValue& b, const std::string& what)
      : std::runtime_error(what), best(b) {}
};

// Numeric value of one atom. Alternating words are summed by nested
// cumulative partial sums with the leading slot repeatedly folded into an
// exact zeta-tail weight; alternating tails are accelerated by iterated
// averaging of the outer partial sums, plain tails by Richardson
// extrapolation on the known power ladder. Throws PrecisionUnreachable when
// the target cannot be met within the N cap, and std::invalid_argument for
// decorated atoms (expand first).
NumericValue eval_atom(const Atom& a, const EvalOptions& opts = {});

// Sum of coeff * product(atom values) with first-order error propagation.
// Deterministic for fixed options.
NumericValue eval_expr(const Expr& e, const EvalOptions& opts = {});

// Classical constants used as exact leading values: zeta(s) through the
// alternating eta series, Li_s(1/2) by direct geometric summation.
real_t zeta_value(int s);
real_t li_half_value(int s);
real_t ln2_value();

void clear_eval_cache();

}  // namespace apery
