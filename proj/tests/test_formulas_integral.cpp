#include <doctest.h>

#include <cmath>

#include "apery/closed_forms.hpp"
#include "apery/formulas.hpp"
#include "apery/oracle.hpp"

using namespace apery;

namespace {

long double value_of(const Formula& f) { return eval_expr(f.expanded).value; }

long double closed_value(const char* id_str) {
  auto id = SeriesId::parse(id_str);
  REQUIRE(id.has_value());
  auto cf = known_closed_form(*id);
  REQUIRE(cf.has_value());
  return eval_expr(*cf).value;
}

long double oracle_value(const SeriesId& id) { return sum_series(id, {}).value.value; }

const long double kL2 = ln2_value();

}  // namespace

TEST_CASE("single sums") {
  // p = 0 is exactly 2 L2
  Formula s1 = formula_S(0);
  CHECK(s1.expanded == Expr::atom(Atom::ln2(), Rational(2)));
  CHECK(s1.mixed.str() == "-2*z(-1)");
  // p = 1 expands to -2 z(-1,1) - 2 z(-1,-1)
  Formula s2 = formula_S(1);
  CHECK(s2.expanded == Expr::atom(Atom::alt({{1, -1}, {1, 1}}), Rational(-2)) +
                           Expr::atom(Atom::alt({{1, -1}, {1, -1}}), Rational(-2)));
  CHECK(fabsl(value_of(s2) - (zeta_value(2) - 2 * kL2 * kL2)) < 1e-12L);
  CHECK(fabsl(value_of(formula_S(3)) - closed_value("S:4")) < 1e-12L);
}

TEST_CASE("single sums weight bookkeeping") {
  for (int p = 0; p <= 5; ++p) {
    Formula f = formula_S(p);
    for (const auto& [mono, c] : f.expanded.terms())
      for (const auto& a : mono) CHECK(a.weight() == p + 1);
  }
}

TEST_CASE("linear sums of higher order") {
  CHECK(fabsl(value_of(formula_S_linear(1, 0)) - 1.5L * zeta_value(3)) < 1e-12L);
  CHECK(fabsl(value_of(formula_S_linear(1, 1)) - closed_value("S:2,2")) < 1e-12L);
  // weight m+p+2 on every expanded monomial
  for (int m = 1; m <= 3; ++m)
    for (int p = 0; p <= 2; ++p) {
      Formula f = formula_S_linear(m, p);
      for (const auto& [mono, c] : f.expanded.terms()) {
        int w = 0;
        for (const auto& a : mono) w += a.weight();
        CHECK(w == m + p + 2);
      }
    }
  // no closed form for S_{3,1}: against the oracle
  CHECK(fabsl(value_of(formula_S_linear(2, 0)) - oracle_value({Family::S, {3}, 0, 1})) < 1e-5L);
}

TEST_CASE("star sums") {
  CHECK(formula_S_star(0, 1).expanded == Expr::atom(Atom::ln2(), Rational(2)));
  // m = 2, exponent 1: -8 z(-3) = 6 zeta(3)
  Formula s21 = formula_S_star(2, 1);
  CHECK(s21.expanded == Expr::atom(Atom::zeta(3), Rational(6)));
  CHECK(s21.mixed.str() == "-8*z(-3)");
  // m = 1, exponent 2 agrees with the linear sum S_{1,2}
  CHECK(fabsl(value_of(formula_S_star(1, 2)) - closed_value("S:1,2")) < 1e-12L);
  // weight of every monomial is m + exponent
  for (int m = 0; m <= 3; ++m)
    for (int q = 1; q <= 3; ++q) {
      Formula f = formula_S_star(m, q);
      for (const auto& [mono, c] : f.expanded.terms()) {
        int w = 0;
        for (const auto& a : mono) w += a.weight();
        CHECK(w == m + q);
      }
    }
}

TEST_CASE("star sums specialize to single sums at m = 0") {
  for (int q = 1; q <= 5; ++q)
    CHECK(fabsl(value_of(formula_S_star(0, q)) - value_of(formula_S(q - 1))) < 1e-10L);
}

TEST_CASE("H_n-weighted linear sums, both variants") {
  CHECK(fabsl(value_of(formula_S_1(0)) - 2 * zeta_value(2)) < 1e-13L);
  CHECK(fabsl(value_of(formula_S_1(1)) - closed_value("S:1,2")) < 1e-12L);
  CHECK(fabsl(value_of(formula_S_1(3)) - closed_value("S:1,4")) < 1e-11L);
  for (int p = 0; p <= 4; ++p) {
    long double a = value_of(formula_S_1(p, S1Variant::coro_s1p));
    long double b = value_of(formula_S_1(p, S1Variant::coro_mixed));
    CHECK(fabsl(a - b) < 1e-10L);
  }
}

TEST_CASE("quadratic sums") {
  CHECK(fabsl(value_of(formula_S_quad(1, 1)) - closed_value("S:1,2,1")) < 1e-12L);
  CHECK(fabsl(value_of(formula_S_quad(2, 1)) - oracle_value({Family::S, {1, 3}, 0, 1})) < 1e-4L);
  CHECK(fabsl(value_of(formula_S_quad(1, 2)) - oracle_value({Family::S, {1, 2}, 0, 2})) < 1e-5L);
}

TEST_CASE("squared-harmonic quadratic sums") {
  CHECK(fabsl(value_of(formula_S_quad11(1)) - 10.5L * zeta_value(3)) < 1e-12L);
  CHECK(fabsl(value_of(formula_S_quad11(2)) - closed_value("S:1^2,2")) < 1e-11L);
  // alternate route through the H_n-weighted star family at m = 1
  for (int p = 1; p <= 3; ++p)
    CHECK(fabsl(value_of(formula_S_quad11(p)) - value_of(formula_S_star_1m(1, p - 1))) < 1e-10L);
}

TEST_CASE("H_n-weighted star sums") {
  CHECK(fabsl(value_of(formula_S_star_1m(0, 0)) - 2 * zeta_value(2)) < 1e-12L);
  // m = 0 reduces to the H_n linear sums at every exponent
  for (int p = 0; p <= 3; ++p)
    CHECK(fabsl(value_of(formula_S_star_1m(0, p)) - value_of(formula_S_1(p))) < 1e-10L);
  CHECK(fabsl(value_of(formula_S_star_1m(1, 0)) - 10.5L * zeta_value(3)) < 1e-12L);
  // m = 2 enters the cubic reduction
  long double lhs = value_of(formula_S_cubic(1, CubicVariant::two_one));
  long double rhs = 2 * value_of(formula_S_star_1m(2, 0)) - value_of(formula_S_quad(1, 1));
  CHECK(fabsl(lhs - rhs) < 1e-12L);
}

TEST_CASE("cubic sums") {
  CHECK(fabsl(value_of(formula_S_cubic(1)) - closed_value("S:1^3,1")) < 1e-11L);
  for (int p = 1; p <= 3; ++p) {
    long double a = value_of(formula_S_cubic(p, CubicVariant::six_three_two));
    long double b = value_of(formula_S_cubic(p, CubicVariant::two_one));
    CHECK(fabsl(a - b) < 1e-10L);
  }
  CHECK(fabsl(value_of(formula_S_cubic(2)) - oracle_value({Family::S, {1, 1, 1}, 0, 2})) < 1e-5L);
}

TEST_CASE("rising-factorial combinations of shifted harmonic numbers") {
  // (1/2)_n / n! = C(2n,n)/4^n, so sums over H_{n-1} powers reduce to
  // signed combinations of the families by H_{n-1} = H_n - 1/n.
  long double z2 = zeta_value(2), z3 = zeta_value(3), z4 = zeta_value(4), l2 = ln2_value();
  long double a = value_of(formula_S_1(0)) - value_of(formula_S(1));
  CHECK(fabsl(a - (z2 + 2 * l2 * l2)) < 1e-12L);
  long double b = value_of(formula_S_quad11(1)) - value_of(formula_S_linear(1, 0)) -
                  2 * value_of(formula_S_1(1)) + 2 * value_of(formula_S(2));
  CHECK(fabsl(b - (4 * z3 + 4 * z2 * l2 + 8.0L / 3 * l2 * l2 * l2)) < 1e-12L);
  long double c = value_of(formula_S_cubic(1)) - value_of(formula_S_linear(2, 0)) -
                  3 * value_of(formula_S_quad11(2)) + 3 * value_of(formula_S_1(2));
  long double c_expect =
      -24 * li_half_value(4) + 207.0L / 4 * z4 + 15 * z3 * l2 + 18 * z2 * l2 * l2 - l2 * l2 * l2 * l2;
  CHECK(fabsl(c - c_expect) < 1e-11L);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(formula_S(-1), UnsupportedSeries);
  CHECK_THROWS_AS(formula_S_linear(0, 0), UnsupportedSeries);
  CHECK_THROWS_AS(formula_S_quad(1, 0), UnsupportedSeries);
  CHECK_THROWS_AS(formula_S_star(2, 0), UnsupportedSeries);
}

TEST_CASE("dispatch by literal series id") {
  CHECK(formula_for({Family::S, {}, 0, 2}).expanded == formula_S(1).expanded);
  CHECK(formula_for({Family::S, {1}, 0, 3}).expanded == formula_S_1(2).expanded);
  CHECK(formula_for({Family::S, {2}, 0, 1}).expanded == formula_S_linear(1, 0).expanded);
  CHECK(formula_for({Family::S, {1, 2}, 0, 1}).expanded == formula_S_quad(1, 1).expanded);
  CHECK(formula_for({Family::S, {1, 1}, 0, 2}).expanded == formula_S_quad11(2).expanded);
  CHECK(formula_for({Family::S, {1, 1, 1}, 0, 1}).expanded == formula_S_cubic(1).expanded);
  CHECK(formula_for({Family::SStar, {}, 2, 1}).expanded == formula_S_star(2, 1).expanded);
  CHECK(formula_for({Family::SStar1, {}, 2, 1}).expanded == formula_S_star_1m(2, 0).expanded);
  CHECK_THROWS_AS(formula_for({Family::S, {1}, 0, 0}), UnsupportedSeries);  // divergent
  CHECK_THROWS_AS(formula_for({Family::S, {2, 3}, 0, 1}), UnsupportedSeries);
  CHECK_THROWS_AS(formula_for({Family::tS, {}, 0, 1}), UnsupportedSeries);  // divergent
}

TEST_CASE("series id strings") {
  CHECK(SeriesId{Family::S, {1, 1, 1}, 0, 1}.str() == "S:1^3,1");
  CHECK(SeriesId{Family::S, {}, 0, 4}.str() == "S:4");
  CHECK(SeriesId{Family::S, {1, 2}, 0, 1}.str() == "S:1,2,1");
  CHECK(SeriesId{Family::SStar, {}, 2, 1}.str() == "S*:2,1");
  CHECK(SeriesId{Family::SStar1, {}, 2, 1}.str() == "S1*:2,1");
  CHECK(SeriesId{Family::tS1, {}, 0, 2}.str() == "tS1:2");
  for (const char* s : {"S:4", "S:1^3,1", "S:1,2,1", "S*:2,1", "S1*:2,1", "tS:3", "tU1:2"}) {
    auto id = SeriesId::parse(s);
    REQUIRE(id.has_value());
    CHECK(id->str() == s);
  }
  CHECK(!SeriesId::parse("S").has_value());
  CHECK(!SeriesId::parse("X:1").has_value());
  CHECK(!SeriesId::parse("S:1^0,1").has_value());
}

TEST_CASE("weight-bounded enumeration") {
  auto v2 = enumerate_series(2);
  std::vector<std::string> got, got_w2;
  for (const auto& id : v2) {
    got.push_back(id.str());
    if (id.weight() == 2) got_w2.push_back(id.str());
  }
  // the weight-2 layer is exactly these five
  CHECK(got_w2 == std::vector<std::string>{"S:2", "S:1,1", "T1:1", "U1:1", "tS:2"});
  CHECK(got == std::vector<std::string>{"S:1", "S:2", "S:1,1", "T1:1", "U1:1", "tS:2"});
  // weight 6: all entries supported and within bound, no duplicates
  auto v6 = enumerate_series(6);
  CHECK(v6.size() > 70);
  for (const auto& id : v6) {
    CHECK(id.supported());
    CHECK(id.weight() <= 6);
  }
  for (std::size_t i = 0; i < v6.size(); ++i)
    for (std::size_t j = i + 1; j < v6.size(); ++j) CHECK(!(v6[i] == v6[j]));
}
