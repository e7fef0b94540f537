#include "apery/selftest.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "apery/closed_forms.hpp"
#include "apery/exact.hpp"
#include "apery/formulas.hpp"
#include "apery/oracle.hpp"
#include "apery/report.hpp"

namespace apery {

namespace {

struct Suite {
  std::string only;
  real_t precision;
  std::vector<CheckResult> results;

  void run(const std::string& name, const std::function<std::string()>& body) {
    if (!only.empty() && name.rfind(only, 0) != 0) return;
    CheckResult r{name, false, ""};
    try {
      r.detail = body();  // empty detail means pass
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
};

std::string check_close(real_t a, real_t b, real_t tol, const std::string& what) {
  if (fabsl(a - b) <= tol) return "";
  std::ostringstream os;
  os << what << ": |" << static_cast<double>(a) << " - " << static_cast<double>(b)
     << "| = " << static_cast<double>(fabsl(a - b)) << " > " << static_cast<double>(tol);
  return os.str();
}

// Direct odd-denominator multiple t-sum, small independent oracle.
real_t t_value_direct(const std::vector<int>& s, long n_max) {
  const int m = static_cast<int>(s.size());
  std::vector<real_t> suffix(m + 1, 0.0L);
  suffix[m] = 1.0L;
  std::vector<std::pair<real_t, real_t>> nodes;
  for (long j = 1; j <= n_max; ++j) {
    for (int i = 0; i < m; ++i) {
      real_t d = 1;
      for (int e = 0; e < s[i]; ++e) d *= (2 * j - 1);
      suffix[i] += suffix[i + 1] / d;
    }
    if ((n_max >> 3) > 0 && j % (n_max >> 3) == 0) nodes.emplace_back((real_t)j, suffix[0]);
  }
  // extrapolate the N^{1-s_1} polylog tail crudely: last few nodes, ladder fit
  real_t best = suffix[0];
  if (nodes.size() >= 3 && s[0] >= 2) {
    // one Richardson step at exponent s_1 - 1 on the last three doublings
    real_t e0 = s[0] - 1;
    auto [N1, P1] = nodes[nodes.size() - 3];
    auto [N2, P2] = nodes[nodes.size() - 2];
    auto [N3, P3] = nodes[nodes.size() - 1];
    real_t r1 = P2 + (P2 - P1) / (powl(N2 / N1, e0) - 1);
    real_t r2 = P3 + (P3 - P2) / (powl(N3 / N2, e0) - 1);
    best = r2 + (r2 - r1);
  }
  return best;
}

}  // namespace

std::vector<CheckResult> selftest(const std::string& only, real_t precision) {
  Suite s{only, precision, {}};
  const EvalOptions eo{};

  // ---- exact -------------------------------------------------------------
  s.run("exact.bell_star_equivalence", [] {
    for (int n = 1; n <= 8; ++n)
      for (int m = 0; m <= 6; ++m)
        if (zeta_star_ones(n, m) != mhs_star(n, std::vector<int>(m, 1)))
          return "mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m);
    return std::string();
  });

  s.run("exact.stirling_link", [] {
    for (int n = 2; n <= 9; ++n)
      for (int k = 2; k <= n; ++k) {
        Rational lhs = mhs(n - 1, std::vector<int>(k - 1, 1));
        Rational rhs = Rational(stirling_cycle(n, k), factorial(n - 1));
        if (lhs != rhs) return "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
      }
    return std::string();
  });

  s.run("exact.mhs_recursion", [] {
    std::vector<std::vector<int>> words = {{1}, {2}, {3}, {1, 1}, {2, 1}, {1, 2},
                                           {3, 2}, {2, 3}, {1, 1, 1}, {2, 1, 1}, {1, 2, 1},
                                           {3, 1, 1}, {2, 2, 1}, {1, 1, 3}};
    for (const auto& w : words) {
      for (int n = 1; n <= 8; ++n) {
        Rational rhs(0);
        int expo = 0;
        for (std::size_t l = 1; l <= w.size() + 1; ++l) {
          std::vector<int> suffix(w.begin() + (l - 1), w.end());
          BigInt den;
          mpz_ui_pow_ui(den.get_mpz_t(), n, expo);
          Rational term = mhs(n, suffix) / Rational(den);
          rhs += (l % 2 == 1) ? term : -term;
          if (l <= w.size()) expo += w[l - 1];
        }
        if (mhs(n - 1, w) != rhs) return std::string("telescoped suffix sum mismatch");
      }
    }
    return std::string();
  });

  s.run("exact.mhs_index_doubling", [] {
    std::vector<std::vector<int>> words = {{1}, {2}, {3}, {4}, {1, 1}, {2, 1}, {1, 2},
                                           {2, 2}, {3, 1}, {1, 3}};
    for (const auto& w : words) {
      for (int n = 1; n <= 6; ++n) {
        const int m = static_cast<int>(w.size());
        int wt = 0;
        for (int v : w) wt += v;
        Rational rhs(0);
        for (int mask = 0; mask < (1 << m); ++mask) {
          SignedWord sw;
          for (int i = 0; i < m; ++i) sw.push_back({w[i], (mask >> i) & 1 ? -1 : +1});
          rhs += mhs(2 * n, sw);
        }
        rhs *= Rational::pow2(wt - m);
        if (mhs(n, w) != rhs) return std::string("doubling identity mismatch");
      }
    }
    return std::string();
  });

  s.run("exact.mhs_monotone", [] {
    std::vector<std::vector<int>> words = {{2}, {1, 1}, {2, 1}, {3, 2, 1}};
    for (const auto& w : words) {
      Rational prev(0);
      for (int n = 0; n <= 12; ++n) {
        Rational cur = mhs(n, w);
        if (cur < prev) return std::string("partial sums decreased");
        prev = cur;
      }
    }
    return std::string();
  });

  s.run("exact.compositions_count", [] {
    if (compositions(2, 2, 1) != std::vector<std::vector<int>>{{1, 1}}) return std::string("(2,2,1)");
    if (compositions(4, 3, 0).size() != 35) return std::string("(4,3,0) count");
    auto v = compositions(3, 2, 1);
    if (v != std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 1}})
      return std::string("(3,2,1) lex order");
    return std::string();
  });

  // ---- mzv ---------------------------------------------------------------
  s.run("mzv.expand_count_and_roundtrip", [] {
    DecoWord w{{1, Deco::bar}, {2, Deco::hat}, {1, Deco::tilde}};
    Expr e = expand_decorated(w);
    if (e.terms().size() != 4) return std::string("term count != 2^(hats+tildes)");
    DecoWord plain{{2, Deco::plain}, {1, Deco::bar}};
    Expr p = expand_decorated(plain);
    if (p.terms().size() != 1) return std::string("plain/bar word must expand to itself");
    return std::string();
  });

  s.run("mzv.normalize_idempotent", [] {
    Expr e = Expr::atom(Atom::alt({{2, -1}}), Rational(3)) +
             Expr::atom(Atom::alt({{1, -1}}), Rational(-2)) +
             Expr::atom(Atom::zeta(2)) * Expr::atom(Atom::ln2());
    Expr n1 = e.normalized();
    if (!(n1 == n1.normalized())) return std::string("normalize not idempotent");
    return std::string();
  });

  s.run("mzv.depth1_bar_relation", [&] {
    for (int v = 2; v <= 6; ++v) {
      NumericValue bar = eval_atom(Atom::alt({{v, -1}}));
      real_t expect = (powl(2.0L, 1 - v) - 1) * zeta_value(v);
      auto msg = check_close(bar.value, expect, 1e-14L, "z(-s) vs (2^{1-s}-1) z(s)");
      if (!msg.empty()) return msg;
    }
    return std::string();
  });

  s.run("mzv.hoffman_t_values", [&] {
    std::vector<std::vector<int>> words = {{2}, {3}, {4}, {2, 1}, {3, 1}, {2, 2}, {2, 1, 1}, {3, 1, 1}};
    for (const auto& w : words) {
      DecoWord dw;
      for (int v : w) dw.push_back({v, Deco::tilde});
      NumericValue lhs = eval_expr(expand_decorated(dw));
      real_t t = t_value_direct(w, 1 << 20);
      real_t rhs = powl(2.0L, static_cast<int>(w.size())) * t;
      auto msg = check_close(lhs.value, rhs, 2e-5L, "all-tilde word vs 2^m t-value");
      if (!msg.empty()) return msg;
    }
    return std::string();
  });

  // ---- formulas (iterated-integral side) ---------------------------------
  s.run("formulas.s1_variants_agree", [&] {
    for (int p = 0; p <= 4; ++p) {
      NumericValue a = eval_expr(formula_S_1(p, S1Variant::coro_s1p).expanded, eo);
      NumericValue b = eval_expr(formula_S_1(p, S1Variant::coro_mixed).expanded, eo);
      auto msg = check_close(a.value, b.value, precision, "S_{1,p+1} variants, p=" + std::to_string(p));
      if (!msg.empty()) return msg;
    }
    return std::string();
  });

  s.run("formulas.cubic_variants_agree", [&] {
    for (int p = 1; p <= 3; ++p) {
      NumericValue a = eval_expr(formula_S_cubic(p, CubicVariant::six_three_two).expanded, eo);
      NumericValue b = eval_expr(formula_S_cubic(p, CubicVariant::two_one).expanded, eo);
      auto msg = check_close(a.value, b.value, precision, "cubic variants, p=" + std::to_string(p));
      if (!msg.empty()) return msg;
    }
    return std::string();
  });

  s.run("formulas.star_specializes_to_single", [&] {
    for (int q = 1; q <= 5; ++q) {
      NumericValue a = eval_expr(formula_S_star(0, q).expanded, eo);
      NumericValue b = eval_expr(formula_S(q - 1).expanded, eo);
      auto msg = check_close(a.value, b.value, precision, "S*_{0,q} vs S_q, q=" + std::to_string(q));
      if (!msg.empty()) return msg;
    }
    return std::string();
  });

  s.run("formulas.weight_bookkeeping", [] {
    for (int p = 0; p <= 4; ++p) {
      Formula f = formula_S(p);
      for (const auto& [mono, c] : f.expanded.terms())
        for (const auto& a : mono)
          if (a.weight() != p + 1) return std::string("formula_S weight drift");
    }
    for (int m = 1; m <= 3; ++m)
      for (int p = 0; p <= 2; ++p) {
        Formula f = formula_S_linear(m, p);
        for (const auto& [mono, c] : f.expanded.terms()) {
          int w = 0;
          for (const auto& a : mono) w += a.weight();
          if (w != m + p + 2) return std::string("formula_S_linear weight drift");
        }
      }
    return std::string();
  });

  // ---- contour side --------------------------------------------------------
  s.run("contour.cd_convolution_identity", [] {
    for (int k = 0; k <= 8; ++k) {
      Expr conv;
      for (int i = 0; i <= k; ++i) {
        Rational scale(BigInt(1), factorial(i) * factorial(k - i));
        conv += seq_C(i) * seq_D(k - i) * scale;
      }
      Expr expect = k == 0 ? Expr(1) : Expr();
      if (!(conv == expect)) return "nonzero convolution at k=" + std::to_string(k);
    }
    return std::string();
  });

  s.run("contour.closed_single_sums_match", [&] {
    for (int q = 2; q <= 7; ++q) {
      NumericValue a = eval_expr(closed_S(q), eo);
      NumericValue b = eval_expr(formula_S(q - 2).expanded, eo);
      auto msg = check_close(a.value, b.value, precision, "closed_S vs formula_S, q=" + std::to_string(q));
      if (!msg.empty()) return msg;
    }
    return std::string();
  });

  s.run("contour.ts_variants_agree", [&] {
    for (int q = 2; q <= 6; ++q) {
      NumericValue a = eval_expr(formula_tS(q, TsVariant::contour).expanded, eo);
      NumericValue b = eval_expr(formula_tS(q, TsVariant::chen).expanded, eo);
      auto msg = check_close(a.value, b.value, precision, "tS variants, q=" + std::to_string(q));
      if (!msg.empty()) return msg;
    }
    return std::string();
  });

  s.run("contour.closing_relation_residual", [&] {
    for (int q = 2; q <= 6; ++q) {
      NumericValue r = relation_check_closing(q, eo);
      if (r.value > precision)
        return "closing relation residual " + format_residual(r.value) + " at q=" + std::to_string(q);
    }
    return std::string();
  });

  s.run("contour.special_constants", [&] {
    NumericValue ts12 = eval_expr(formula_tS1(2).expanded, eo);
    NumericValue ts3 = eval_expr(formula_tS(3).expanded, eo);
    NumericValue tt12 = eval_expr(formula_tT1(2).expanded, eo);
    auto msg = check_close(ts12.value - ts3.value, 7 * zeta_value(3), precision, "H_{n-1} series");
    if (!msg.empty()) return msg;
    msg = check_close(tt12.value - 0.5L * ts3.value, 10.5L * zeta_value(3), precision,
                      "H_{2n-1} series");
    if (!msg.empty()) return msg;
    NumericValue t11 = eval_expr(formula_T1(1).expanded, eo);
    NumericValue s2 = eval_expr(formula_S(1).expanded, eo);
    NumericValue s11 = eval_expr(formula_S_1(0).expanded, eo);
    real_t knuth = t11.value - 0.5L * s2.value - s11.value;
    msg = check_close(knuth, ln2_value() * ln2_value(), precision, "Knuth combination");
    if (!msg.empty()) return msg;
    NumericValue tu12 = eval_expr(formula_tU1(2).expanded, eo);
    return check_close(tu12.value, 7 * zeta_value(3), precision, "tU1(2)");
  });

  // ---- oracle -------------------------------------------------------------
  s.run("oracle.exact_prefix_match", [] {
    std::vector<SeriesId> ids = {{Family::S, {}, 0, 2},     {Family::S, {1}, 0, 1},
                                 {Family::SStar, {}, 2, 1}, {Family::SStar1, {}, 2, 1},
                                 {Family::T1, {}, 0, 1},    {Family::tS, {}, 0, 2},
                                 {Family::tU1, {}, 0, 2}};
    for (const auto& id : ids) {
      Rational exact = sum_series_exact_prefix(id, 2000);
      OracleResult fl = sum_series(id, {2000, TailMode::none});
      real_t rel = fabsl(fl.value.value - exact.to_long_double()) /
                   std::max<real_t>(1, fabsl(exact.to_long_double()));
      if (rel > 1e-12L) return "float accumulator drift for " + id.str();
    }
    return std::string();
  });

  s.run("oracle.tail_sanity", [] {
    SeriesId id{Family::tS, {}, 0, 2};
    OracleResult a = sum_series(id, {50000, TailMode::richardson});
    OracleResult b = sum_series(id, {100000, TailMode::richardson});
    if (fabsl(a.value.value - b.value.value) > a.value.err + b.value.err + 1e-9L)
      return std::string("doubling n_max moved the result beyond the reported error");
    return std::string();
  });

  s.run("oracle.spot_values", [&] {
    real_t z2 = zeta_value(2), l2 = ln2_value();
    OracleResult s2 = sum_series({Family::S, {}, 0, 2}, {});
    auto msg = check_close(s2.value.value, z2 - 2 * l2 * l2, 1e-6L, "single sum p=2");
    if (!msg.empty()) return msg;
    OracleResult ts2 = sum_series({Family::tS, {}, 0, 2}, {});
    msg = check_close(ts2.value.value, 3 * z2, 1e-6L, "reciprocal sum q=2");
    if (!msg.empty()) return msg;
    OracleResult u11 = sum_series({Family::U1, {}, 0, 1}, {});
    return check_close(u11.value.value, 1.5L * z2, 1e-5L, "odd harmonic sum q=1");
  });

  return s.results;
}

}  // namespace apery
