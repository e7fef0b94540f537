#include <doctest.h>

#include <cmath>
#include <future>
#include <vector>

#include "apery/eval.hpp"

using namespace apery;

namespace {

// Frozen classical constants.
constexpr long double kLn2 = 0.69314718055994530942L;
constexpr long double kZeta2 = 1.64493406684822643647L;  // pi^2/6
constexpr long double kZeta3 = 1.20205690315959428540L;
constexpr long double kZeta4 = 1.08232323371113819152L;  // pi^4/90
constexpr long double kZeta5 = 1.03692775514336992633L;
constexpr long double kZeta6 = 1.01734306198444913971L;
constexpr long double kLi4Half = 0.51747906167389938633L;
constexpr long double kLi5Half = 0.50840057924226870746L;

// Independent double-sum oracle for depth-2 words: cumulative inner sums
// plus averaging of the outer partial sums (signs make them alternating).
long double double_sum_oracle(int s1, int g1, int s2, int g2, long N) {
  long double inner = 0, outer = 0;
  std::vector<long double> window;
  for (long n = 1; n <= N; ++n) {
    if (n > 1) {
      long m = n - 1;
      long double t = 1;
      for (int e = 0; e < s2; ++e) t *= m;
      inner += (g2 < 0 && (m & 1)) ? -1.0L / t : 1.0L / t;
    }
    long double t = 1;
    for (int e = 0; e < s1; ++e) t *= n;
    long double term = inner / t;
    if (g1 < 0 && (n & 1)) term = -term;
    outer += term;
    if (n > N - 40) window.push_back(outer);
  }
  if (g1 < 0) {
    // iterated averaging
    while (window.size() > 1) {
      for (std::size_t i = 0; i + 1 < window.size(); ++i)
        window[i] = 0.5L * (window[i] + window[i + 1]);
      window.pop_back();
    }
    return window[0];
  }
  return outer;
}

}  // namespace

TEST_CASE("classical constants") {
  CHECK(fabsl(ln2_value() - kLn2) < 1e-18L);
  CHECK(fabsl(zeta_value(2) - kZeta2) < 1e-18L);
  CHECK(fabsl(zeta_value(3) - kZeta3) < 1e-18L);
  CHECK(fabsl(zeta_value(4) - kZeta4) < 1e-18L);
  CHECK(fabsl(zeta_value(5) - kZeta5) < 1e-18L);
  CHECK(fabsl(li_half_value(4) - kLi4Half) < 1e-18L);
  CHECK(fabsl(li_half_value(5) - kLi5Half) < 1e-18L);
}

TEST_CASE("depth-1 atoms") {
  NumericValue v = eval_atom(Atom::alt({{1, -1}}));
  CHECK(fabsl(v.value + kLn2) <= v.err + 1e-18L);
  v = eval_atom(Atom::zeta(2));
  CHECK(fabsl(v.value - kZeta2) <= v.err + 1e-18L);
  v = eval_atom(Atom::ln2());
  CHECK(fabsl(v.value - kLn2) <= v.err + 1e-18L);
}

TEST_CASE("plain-leading words against the classical ladder") {
  // zeta(2, {1}_k) = zeta(k+2)
  std::vector<long double> expect = {kZeta3, kZeta4, kZeta5, kZeta6};
  SignedWord w{{2, 1}};
  for (int k = 0; k < 4; ++k) {
    w.push_back({1, 1});
    NumericValue v = eval_atom(Atom::alt(w));
    CHECK(fabsl(v.value - expect[k]) < 1e-12L);
    CHECK(v.err < 1e-10L);
  }
  // zeta(3,1) = pi^4/360 = zeta(4)/4
  NumericValue v31 = eval_atom(Atom::alt({{3, 1}, {1, 1}}));
  CHECK(fabsl(v31.value - kZeta4 / 4) < 1e-13L);
  // zeta(4,2) = zeta(3)^2 - (4/3) zeta(6)
  NumericValue v42 = eval_atom(Atom::alt({{4, 1}, {2, 1}}));
  CHECK(fabsl(v42.value - (kZeta3 * kZeta3 - 4.0L / 3 * kZeta6)) < 1e-14L);
}

TEST_CASE("alternating words against classical evaluations") {
  // zeta(-2,1) = zeta(3)/8
  NumericValue v = eval_atom(Atom::alt({{2, -1}, {1, 1}}));
  CHECK(fabsl(v.value - kZeta3 / 8) < 1e-13L);
  // zeta(-1,1) = ln^2(2)/2, zeta(-1,-1) = ln^2(2)/2 - zeta(2)/2
  NumericValue a = eval_atom(Atom::alt({{1, -1}, {1, 1}}));
  CHECK(fabsl(a.value - kLn2 * kLn2 / 2) < 1e-13L);
  NumericValue b = eval_atom(Atom::alt({{1, -1}, {1, -1}}));
  CHECK(fabsl(b.value - (kLn2 * kLn2 / 2 - kZeta2 / 2)) < 1e-13L);
  // zeta(-4) = (2^{-3}-1) zeta(4)
  NumericValue c = eval_atom(Atom::alt({{4, -1}}));
  CHECK(fabsl(c.value - (powl(2, -3) - 1) * kZeta4) < 1e-15L);
}

TEST_CASE("depth-2 words against the independent double-sum oracle") {
  struct Case {
    int s1, g1, s2, g2;
  };
  std::vector<Case> cases = {{2, -1, 1, 1}, {2, -1, 1, -1}, {1, -1, 2, 1},
                             {3, -1, 2, -1}, {2, -1, 2, 1}, {1, -1, 3, -1}};
  for (const auto& c : cases) {
    NumericValue v = eval_atom(Atom::alt({{c.s1, c.g1}, {c.s2, c.g2}}));
    long double oracle = double_sum_oracle(c.s1, c.g1, c.s2, c.g2, 100000);
    CHECK(fabsl(v.value - oracle) < 1e-9L);
  }
}

TEST_CASE("reported errors bound the observed errors") {
  std::vector<SignedWord> words = {{{2, 1}, {1, 1}, {1, 1}},
                                   {{2, -1}, {1, 1}},
                                   {{1, -1}, {1, 1}, {1, 1}},
                                   {{3, 1}, {1, 1}}};
  std::vector<long double> truths = {kZeta4, kZeta3 / 8,
                                     // zeta(-1,{1}_k) = (-ln 2)^{k+1}/(k+1)!
                                     -kLn2 * kLn2 * kLn2 / 6, kZeta4 / 4};
  for (std::size_t i = 0; i < words.size(); ++i) {
    NumericValue v = eval_atom(Atom::alt(words[i]));
    CHECK(fabsl(v.value - truths[i]) <= std::max(v.err * 4, (long double)1e-14L));
  }
}

TEST_CASE("expression evaluation and error propagation") {
  // zeta(2) - 2 ln^2 2
  Expr e = Expr::atom(Atom::zeta(2)) - Expr::monomial({Atom::ln2(), Atom::ln2()}, Rational(2));
  NumericValue v = eval_expr(e);
  CHECK(fabsl(v.value - (kZeta2 - 2 * kLn2 * kLn2)) <= v.err + 1e-16L);
  CHECK(fabsl(v.value - 0.68402803901182358714L) < 1e-14L);
  // empty expression is exactly zero
  NumericValue z = eval_expr(Expr());
  CHECK(z.value == 0.0L);
  CHECK(z.err == 0.0L);
  // 2 L2
  NumericValue d = eval_expr(Expr::atom(Atom::ln2(), Rational(2)));
  CHECK(fabsl(d.value - 2 * kLn2) < 1e-17L);
}

TEST_CASE("precision unreachable carries a best effort value") {
  EvalOptions opts;
  opts.target = 1e-25L;  // beyond long double partial summation
  opts.n_cap = 4096;
  opts.n_start = 1024;
  try {
    eval_atom(Atom::alt({{2, 1}, {1, 1}, {1, -1}}), opts);
    CHECK(false);
  } catch (const PrecisionUnreachable& e) {
    CHECK(e.best.err > 0);
    CHECK(fabsl(e.best.value) > 0.1L);  // still a sane value
  }
}

TEST_CASE("decorated atoms are rejected by eval") {
  CHECK_THROWS_AS(eval_atom(Atom::deco({{2, Deco::tilde}})), std::invalid_argument);
}

TEST_CASE("concurrent evaluation is safe and deterministic") {
  Atom a = Atom::alt({{2, 1}, {1, -1}, {1, 1}});
  clear_eval_cache();
  std::vector<std::future<long double>> futs;
  for (int i = 0; i < 8; ++i)
    futs.push_back(std::async(std::launch::async, [&] { return eval_atom(a).value; }));
  long double first = futs[0].get();
  for (int i = 1; i < 8; ++i) CHECK(futs[i].get() == first);
}

TEST_CASE("numeric value strings never overstate precision") {
  NumericValue v{1.23456789123456789L, 1e-6L};
  CHECK(v.str() == "1.234568");
  NumericValue w{1.0L / 3, 1e-3L};
  CHECK(w.str() == "0.333");
  NumericValue exact{0.5L, 0};
  CHECK(exact.str().substr(0, 3) == "0.5");
}
