#pragma once

#include "apery/eval.hpp"
#include "apery/rational.hpp"
#include "apery/series_id.hpp"

namespace apery {

enum class TailMode { none, integral, richardson };

struct OracleOptions {
  long n_max = 100000;
  TailMode tail = TailMode::richardson;
};

struct OracleResult {
  NumericValue value;
  bool tail_warning = false;  // n_max too small for the requested tail model
};

// Direct summation of the series named by id, entirely independent of the
// explicit evaluations: the central-binomial ratio is updated
// multiplicatively, harmonic accumulators run alongside, star factors
// through the Bell recurrence on power sums. The tail is either dropped,
// estimated by the leading integral, or removed by extrapolation on
// log-spaced partial sums against the n^{-e} ln^k n ladder of the family.
OracleResult sum_series(const SeriesId& id, const OracleOptions& opts = {});

// Exact rational partial sum of the first n_max terms (n_max <= 2000).
Rational sum_series_exact_prefix(const SeriesId& id, int n_max);

// Verification tolerance for |oracle - explicit evaluation|: 1e-5, relaxed
// to 1e-4 for the slowest binomial-over-4^n sums with exponent 1.
real_t oracle_default_tolerance(const SeriesId& id);

}  // namespace apery
