#include <doctest.h>

#include <cmath>

#include "apery/closed_forms.hpp"
#include "apery/formulas.hpp"
#include "apery/oracle.hpp"

using namespace apery;

TEST_CASE("exact rational prefixes") {
  SeriesId s1{Family::S, {}, 0, 1};
  CHECK(sum_series_exact_prefix(s1, 1) == Rational(1, 2));
  CHECK(sum_series_exact_prefix(s1, 2) == Rational(11, 16));
  SeriesId ts2{Family::tS, {}, 0, 2};
  CHECK(sum_series_exact_prefix(ts2, 2) == Rational(8, 3));
  // H_n-weighted first terms: H_1 b(1)/1 = 1/2; + H_2 b(2)/2 = (3/2)(3/8)/2
  SeriesId s11{Family::S, {1}, 0, 1};
  CHECK(sum_series_exact_prefix(s11, 2) == Rational(1, 2) + Rational(9, 32));
  CHECK_THROWS_AS(sum_series_exact_prefix(s1, 5000), std::invalid_argument);
  CHECK_THROWS_AS(sum_series_exact_prefix({Family::tS, {}, 0, 1}, 10), std::domain_error);
}

TEST_CASE("floating accumulators track the exact prefix") {
  std::vector<SeriesId> ids = {
      {Family::S, {}, 0, 2},      {Family::S, {1}, 0, 1},    {Family::S, {1, 2}, 0, 1},
      {Family::S, {1, 1, 1}, 0, 1}, {Family::SStar, {}, 3, 1}, {Family::SStar1, {}, 2, 1},
      {Family::T1, {}, 0, 1},     {Family::U1, {}, 0, 2},    {Family::tS, {}, 0, 2},
      {Family::tS1, {}, 0, 2},    {Family::tT1, {}, 0, 3},   {Family::tU1, {}, 0, 2}};
  for (const auto& id : ids) {
    Rational exact = sum_series_exact_prefix(id, 2000);
    OracleResult fl = sum_series(id, {2000, TailMode::none});
    long double ev = exact.to_long_double();
    long double rel = fabsl(fl.value.value - ev) / std::max<long double>(fabsl(ev), 1);
    CHECK(rel < 1e-12L);
  }
}

TEST_CASE("direct sums land on the known closed forms") {
  long double z2 = zeta_value(2), l2 = ln2_value();
  OracleResult s2 = sum_series({Family::S, {}, 0, 2}, {});
  CHECK(fabsl(s2.value.value - (z2 - 2 * l2 * l2)) < 1e-6L);
  OracleResult ts2 = sum_series({Family::tS, {}, 0, 2}, {});
  CHECK(fabsl(ts2.value.value - 3 * z2) < 1e-6L);
  OracleResult u11 = sum_series({Family::U1, {}, 0, 1}, {});
  CHECK(fabsl(u11.value.value - 1.5L * z2) < 1e-5L);
}

TEST_CASE("every closed form in the table is reproduced by direct summation") {
  for (const auto& e : default_table().entries()) {
    NumericValue table_value = eval_expr(e.expr);
    OracleResult o = sum_series(e.id, {});
    long double gate = std::max<long double>(1e-5L, o.value.err);
    // documented relaxation for the slowest exponent-1 sums
    gate = std::max(gate, oracle_default_tolerance(e.id));
    CHECK(fabsl(o.value.value - table_value.value) <= gate);
  }
}

TEST_CASE("tail model sanity: doubling n_max stays within the reported error") {
  std::vector<SeriesId> ids = {{Family::S, {}, 0, 2},
                               {Family::S, {1}, 0, 2},
                               {Family::tS, {}, 0, 2},
                               {Family::tT1, {}, 0, 2},
                               {Family::SStar, {}, 2, 2}};
  for (const auto& id : ids) {
    OracleResult a = sum_series(id, {50000, TailMode::richardson});
    OracleResult b = sum_series(id, {100000, TailMode::richardson});
    CHECK(fabsl(a.value.value - b.value.value) <= a.value.err + b.value.err + 1e-10L);
  }
}

TEST_CASE("integral tail model is self-consistent and tight") {
  // the modeled tail must agree with what longer summation actually adds
  std::vector<SeriesId> ids = {{Family::S, {1}, 0, 1},
                               {Family::SStar, {}, 5, 1},
                               {Family::SStar1, {}, 4, 1},
                               {Family::tU1, {}, 0, 2}};
  for (const auto& id : ids) {
    OracleResult a = sum_series(id, {25000, TailMode::integral});
    OracleResult b = sum_series(id, {100000, TailMode::integral});
    CHECK(fabsl(a.value.value - b.value.value) < 1e-9L);
    Formula f = formula_for(id);
    CHECK(fabsl(b.value.value - eval_expr(f.expanded).value) < 1e-8L);
  }
}

TEST_CASE("divergent requests and tail warnings") {
  CHECK_THROWS_AS(sum_series({Family::tS1, {}, 0, 1}, {}), std::domain_error);
  OracleResult small = sum_series({Family::S, {}, 0, 2}, {64, TailMode::richardson});
  CHECK(small.tail_warning);
}

TEST_CASE("documented tolerances") {
  CHECK(oracle_default_tolerance({Family::S, {1}, 0, 1}) == 1e-4L);
  CHECK(oracle_default_tolerance({Family::SStar, {}, 4, 1}) == 1e-4L);
  CHECK(oracle_default_tolerance({Family::S, {1}, 0, 2}) == 1e-5L);
  CHECK(oracle_default_tolerance({Family::tS, {}, 0, 2}) == 1e-5L);
}
