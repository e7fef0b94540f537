#include "apery/exact.hpp"
#include "apery/formulas.hpp"

namespace apery {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw UnsupportedSeries(msg);
}

template <typename... Rest>
DecoWord word(DecoSlot s, Rest... rest) {
  DecoWord w{s};
  (w.push_back(rest), ...);
  return w;
}

void append_repeat(DecoWord& w, DecoSlot s, int count) {
  for (int i = 0; i < count; ++i) w.push_back(s);
}

DecoSlot bar(int s) { return {s, Deco::bar}; }
DecoSlot hat(int s) { return {s, Deco::hat}; }
DecoSlot tilde(int s) { return {s, Deco::tilde}; }

Expr deco_expr(DecoWord w, const Rational& coeff = Rational(1)) {
  return Expr::atom(Atom::deco(std::move(w)), coeff);
}

Formula wrap(SeriesId id, Expr mixed) {
  Expr expanded = mixed.expanded();
  return {std::move(id), std::move(mixed), std::move(expanded)};
}

}  // namespace

Formula formula_S(int p) {
  require(p >= 0, "formula_S: p must be >= 0");
  DecoWord w{bar(1)};
  append_repeat(w, hat(1), p);
  return wrap({Family::S, {}, 0, p + 1}, deco_expr(std::move(w), Rational(-2)));
}

Formula formula_S_linear(int m, int p) {
  require(m >= 1, "formula_S_linear: m must be >= 1");
  require(p >= 0, "formula_S_linear: p must be >= 0");
  DecoWord w{bar(1)};
  append_repeat(w, hat(1), p);
  DecoWord w2 = w;
  w2.push_back(hat(2));
  append_repeat(w2, hat(1), m - 1);
  Expr mixed = deco_expr(std::move(w2), Rational(4));
  mixed += Expr::atom(Atom::zeta(m + 1)) * deco_expr(std::move(w), Rational(-2));
  return wrap({Family::S, {m + 1}, 0, p + 1}, std::move(mixed));
}

Formula formula_S_star(int m, int q) {
  require(m >= 0, "formula_S_star: m must be >= 0");
  require(q >= 1, "formula_S_star: exponent must be >= 1");
  SeriesId id{Family::SStar, {}, m, q};
  Rational scale = -Rational::pow2(m + 1);
  if (q == 1) return wrap(std::move(id), deco_expr(word(bar(m + 1)), scale));
  const int p = q - 2;
  const int w = m + p + 2;
  Expr mixed;
  // The middle slot carries both parities (a hat): the m = 1 case must
  // reproduce the all-hat form of the H_n linear sums, and the direct
  // summation confirms it.
  for (const auto& k : compositions(w - 1, p + 1, 1)) {
    int total = 0;
    for (int v : k) total += v;
    DecoWord dw{bar(k[p])};
    dw.push_back(hat(w - total));
    for (int i = 0; i < p; ++i) dw.push_back(hat(k[i]));
    mixed += deco_expr(std::move(dw), scale);
  }
  return wrap(std::move(id), std::move(mixed));
}

Formula formula_S_1(int p, S1Variant variant) {
  require(p >= 0, "formula_S_1: p must be >= 0");
  SeriesId id{Family::S, {1}, 0, p + 1};
  Expr mixed;
  if (variant == S1Variant::coro_mixed) {
    DecoWord a{bar(1), tilde(1)};
    append_repeat(a, hat(1), p);
    DecoWord b{tilde(2)};
    append_repeat(b, hat(1), p);
    mixed = deco_expr(std::move(a), Rational(-2)) + deco_expr(std::move(b), Rational(2));
  } else {
    DecoWord a{bar(2)};
    append_repeat(a, hat(1), p);
    mixed = deco_expr(std::move(a), Rational(-4));
    for (int l = 0; l <= p - 1; ++l) {
      DecoWord b{bar(1)};
      append_repeat(b, hat(1), l);
      b.push_back(hat(2));
      append_repeat(b, hat(1), p - 1 - l);
      mixed += deco_expr(std::move(b), Rational(-4));
    }
  }
  return wrap(std::move(id), std::move(mixed));
}

Formula formula_S_quad(int m, int p) {
  require(m >= 1, "formula_S_quad: m must be >= 1");
  require(p >= 1, "formula_S_quad: p must be >= 1");
  DecoWord a{bar(1), tilde(1)};
  append_repeat(a, hat(1), p - 1);
  a.push_back(hat(2));
  append_repeat(a, hat(1), m - 1);
  DecoWord b{tilde(2)};
  append_repeat(b, hat(1), p - 1);
  b.push_back(hat(2));
  append_repeat(b, hat(1), m - 1);
  Expr mixed = deco_expr(std::move(a), Rational(4)) + deco_expr(std::move(b), Rational(-4));
  mixed += Expr::atom(Atom::zeta(m + 1)) * formula_S_1(p - 1).mixed;
  return wrap({Family::S, {1, m + 1}, 0, p}, std::move(mixed));
}

Formula formula_S_quad11(int p) {
  require(p >= 1, "formula_S_quad11: p must be >= 1");
  Expr mixed = formula_S_star(2, p).mixed * Rational(2) - formula_S_linear(1, p - 1).mixed;
  return wrap({Family::S, {1, 1}, 0, p}, std::move(mixed));
}

Formula formula_S_star_1m(int m, int p) {
  require(m >= 0, "formula_S_star_1m: m must be >= 0");
  require(p >= 0, "formula_S_star_1m: p must be >= 0");
  SeriesId id{Family::SStar1, {}, m, p + 1};
  Rational scale = Rational::pow2(m + 1);
  Expr mixed;
  if (p == 0) {
    for (int k = 1; k <= m + 1; ++k)
      mixed += deco_expr(word(bar(k), tilde(m + 2 - k)), -scale);
    mixed += deco_expr(word(tilde(m + 2)), scale * Rational(m + 1));
  } else {
    const int w = m + p + 2;
    for (const auto& k : compositions(w - 1, p + 1, 1)) {
      int total = 0;
      for (int v : k) total += v;
      DecoWord dw{bar(k[p])};
      dw.push_back(tilde(w - total));
      for (int i = 0; i < p; ++i) dw.push_back(hat(k[i]));
      mixed += deco_expr(std::move(dw), -scale);
    }
    for (const auto& k : compositions(w - 2, p, 1)) {
      int total = 0;
      for (int v : k) total += v;
      DecoWord dw{tilde(w - total)};
      for (int i = 0; i < p; ++i) dw.push_back(hat(k[i]));
      mixed += deco_expr(std::move(dw), scale * Rational(w - 1 - total));
    }
  }
  return wrap(std::move(id), std::move(mixed));
}

Formula formula_S_cubic(int p, CubicVariant variant) {
  require(p >= 1, "formula_S_cubic: p must be >= 1");
  Expr mixed;
  if (variant == CubicVariant::six_three_two) {
    mixed = formula_S_star(3, p).mixed * Rational(6);
    mixed -= formula_S_quad(1, p).mixed * Rational(3);
    mixed -= formula_S_linear(2, p - 1).mixed * Rational(2);
  } else {
    mixed = formula_S_star_1m(2, p - 1).mixed * Rational(2) - formula_S_quad(1, p).mixed;
  }
  return wrap({Family::S, {1, 1, 1}, 0, p}, std::move(mixed));
}

Formula formula_for(const SeriesId& id) {
  if (!id.supported())
    throw UnsupportedSeries("no explicit evaluation for series " + id.str() +
                            (id.convergent() ? "" : " (divergent)"));
  const int p = id.p;
  switch (id.family) {
    case Family::S: {
      const auto& o = id.orders;
      if (o.empty()) return formula_S(p - 1);
      if (o.size() == 1) return o[0] == 1 ? formula_S_1(p - 1) : formula_S_linear(o[0] - 1, p - 1);
      if (o.size() == 2) return o[1] == 1 ? formula_S_quad11(p) : formula_S_quad(o[1] - 1, p);
      return formula_S_cubic(p);
    }
    case Family::SStar: return formula_S_star(id.m, p);
    case Family::SStar1: return formula_S_star_1m(id.m, p - 1);
    case Family::T1: return formula_T1(p);
    case Family::U1: return formula_U1(p);
    case Family::tS: return formula_tS(p);
    case Family::tS1: return formula_tS1(p);
    case Family::tT1: return formula_tT1(p);
    case Family::tU1: return formula_tU1(p);
  }
  throw UnsupportedSeries("unknown family");
}

}  // namespace apery
