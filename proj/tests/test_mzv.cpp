#include <doctest.h>

#include <random>

#include "apery/expr.hpp"

using namespace apery;

namespace {

Atom alt1(int s, int sign) { return Atom::alt({{s, sign}}); }

std::mt19937 rng(20260810);

DecoWord random_deco_word(int max_depth) {
  std::uniform_int_distribution<int> depth(1, max_depth), sdist(1, 3), ddist(0, 3);
  DecoWord w;
  int d = depth(rng);
  for (int i = 0; i < d; ++i) {
    Deco deco = static_cast<Deco>(ddist(rng));
    int s = sdist(rng);
    if (i == 0 && deco != Deco::bar) s = std::max(s, 2);
    w.push_back({s, deco});
  }
  return w;
}

}  // namespace

TEST_CASE("decoration expansion of the leading examples") {
  // (bar1, hat1) -> z(-1,1) + z(-1,-1)
  Expr e = expand_decorated({{1, Deco::bar}, {1, Deco::hat}});
  Expr expect = Expr::atom(Atom::alt({{1, -1}, {1, 1}})) + Expr::atom(Atom::alt({{1, -1}, {1, -1}}));
  CHECK(e == expect);

  // (tilde2) -> z(2) - z(-2); normalized that collects to (3/2) z(2)
  Expr t2 = expand_decorated({{2, Deco::tilde}}).normalized();
  CHECK(t2 == Expr::atom(Atom::zeta(2), Rational(3, 2)));

  // (tilde2, hat1) -> z(2,1) + z(2,-1) - z(-2,1) - z(-2,-1)
  Expr e2 = expand_decorated({{2, Deco::tilde}, {1, Deco::hat}});
  Expr expect2 = Expr::atom(Atom::alt({{2, 1}, {1, 1}})) + Expr::atom(Atom::alt({{2, 1}, {1, -1}})) -
                 Expr::atom(Atom::alt({{2, -1}, {1, 1}})) - Expr::atom(Atom::alt({{2, -1}, {1, -1}}));
  CHECK(e2 == expect2);
}

TEST_CASE("expansion term count is 2^(hats+tildes)") {
  for (int trial = 0; trial < 60; ++trial) {
    DecoWord w = random_deco_word(4);
    int marks = 0;
    for (const auto& s : w)
      if (s.deco == Deco::hat || s.deco == Deco::tilde) ++marks;
    Expr e;
    try {
      e = expand_decorated(w);
    } catch (const DivergentWord&) {
      continue;  // a (1,+1) branch in the lead; not a counting case
    }
    // all branch words are distinct, so the absolute coefficient mass counts
    // the branches even after collection
    Rational total(0);
    for (const auto& [m, c] : e.terms()) total += c.abs();
    CHECK(total == Rational(BigInt(BigInt(1) << marks)));
  }
}

TEST_CASE("plain and bar words expand to themselves") {
  DecoWord w{{2, Deco::plain}, {1, Deco::bar}, {3, Deco::plain}};
  Expr e = expand_decorated(w);
  REQUIRE(e.terms().size() == 1);
  const auto& [mono, coeff] = *e.terms().begin();
  CHECK(coeff == Rational(1));
  REQUIRE(mono.size() == 1);
  CHECK(mono[0].word() == SignedWord{{2, 1}, {1, -1}, {3, 1}});
}

TEST_CASE("divergent expansions are rejected by name") {
  CHECK_THROWS_AS(expand_decorated({{1, Deco::plain}, {2, Deco::plain}}), DivergentWord);
  CHECK_THROWS_AS(expand_decorated({{1, Deco::hat}}), DivergentWord);
  try {
    expand_decorated({{1, Deco::hat}, {2, Deco::bar}});
    CHECK(false);
  } catch (const DivergentWord& e) {
    CHECK(std::string(e.what()).find("z(^1,-2)") != std::string::npos);
  }
}

TEST_CASE("normalization rewrites depth-1 atoms") {
  Expr e = Expr::atom(alt1(1, -1), Rational(-2));
  CHECK(e.normalized() == Expr::atom(Atom::ln2(), Rational(2)));
  CHECK(Expr::atom(alt1(2, -1)).normalized() == Expr::atom(Atom::zeta(2), Rational(-1, 2)));
  Expr f = Expr::atom(Atom::alt({{2, -1}, {1, 1}}), Rational(5, 3));
  CHECK((f - f).is_zero());
  CHECK((f - f) == Expr());
}

TEST_CASE("normalization is idempotent") {
  for (int trial = 0; trial < 40; ++trial) {
    Expr e;
    std::uniform_int_distribution<int> terms(1, 4), coef(-6, 6);
    int t = terms(rng);
    for (int i = 0; i < t; ++i) {
      try {
        e += expand_decorated(random_deco_word(3)) * Rational(coef(rng), 1 + i);
      } catch (const DivergentWord&) {
      }
    }
    Expr n1 = e.normalized();
    CHECK(n1 == n1.normalized());
  }
}

TEST_CASE("ring arithmetic distributes") {
  Expr a = Expr::atom(Atom::zeta(2)) + Expr::atom(Atom::ln2(), Rational(2));
  Expr b = Expr::atom(Atom::zeta(3), Rational(1, 2)) - Expr::constant(Rational(1));
  Expr c = Expr::atom(Atom::li_half(4)) + Expr::constant(Rational(3, 7));
  CHECK((a + b) * c == a * c + b * c);
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
  CHECK((a - a).is_zero());
}

TEST_CASE("atom ordering is deterministic and kind-major") {
  Atom l = Atom::ln2(), z2 = Atom::zeta(2), z3 = Atom::zeta(3), li = Atom::li_half(4);
  Atom w1 = Atom::alt({{2, 1}, {1, 1}}), w2 = Atom::alt({{2, 1}, {1, -1}});
  CHECK(l < z2);
  CHECK(z2 < z3);
  CHECK(z3 < li);
  CHECK(li < w1);
  CHECK((w1 < w2 || w2 < w1));
  Expr e = Expr::atom(w1) * Expr::atom(z2) * Expr::atom(l);
  const auto& mono = e.terms().begin()->first;
  CHECK(mono[0] == l);
  CHECK(mono[1] == z2);
  CHECK(mono[2] == w1);
}

TEST_CASE("atom string syntax round-trips bit-exactly") {
  std::vector<Atom> atoms = {
      Atom::ln2(), Atom::zeta(2), Atom::zeta(5), Atom::li_half(4), Atom::li_half(5),
      Atom::alt({{2, -1}, {1, 1}}), Atom::alt({{1, -1}, {1, -1}, {3, 1}}),
      Atom::deco({{2, Deco::tilde}}), Atom::deco({{1, Deco::hat}}),
      Atom::deco({{1, Deco::bar}, {1, Deco::tilde}, {1, Deco::hat}})};
  CHECK(atoms[0].str() == "L2");
  CHECK(atoms[3].str() == "Li4h");
  CHECK(atoms[5].str() == "z(-2,1)");
  CHECK(Atom::deco({{2, Deco::tilde}}).str() == "z(~2)");
  CHECK(Atom::deco({{1, Deco::hat}}).str() == "z(^1)");
  for (const auto& a : atoms) {
    auto back = Atom::parse(a.str());
    REQUIRE(back.has_value());
    CHECK(*back == a);
    CHECK(back->str() == a.str());
  }
  auto z = Atom::parse("z(3)");
  REQUIRE(z.has_value());
  CHECK(z->kind() == Atom::Kind::zeta);
  CHECK(!Atom::parse("z(1)").has_value());    // divergent
  CHECK(!Atom::parse("z(1,2)").has_value());  // divergent leading slot
  CHECK(!Atom::parse("z()").has_value());
  CHECK(!Atom::parse("Lih").has_value());
}

TEST_CASE("expression strings parse back to the same expression") {
  std::vector<Expr> exprs;
  exprs.push_back(Expr::atom(Atom::zeta(3), Rational(2)) -
                  Expr::atom(Atom::zeta(2), Rational(2)) * Expr::atom(Atom::ln2()) +
                  Expr::monomial({Atom::ln2(), Atom::ln2(), Atom::ln2()}, Rational(4, 3)));
  exprs.push_back(Expr());
  exprs.push_back(Expr::constant(Rational(-7, 9)));
  exprs.push_back(Expr::atom(Atom::alt({{2, -1}, {1, 1}}), Rational(-1, 8)));
  for (const auto& e : exprs) {
    auto back = Expr::parse(e.str());
    REQUIRE(back.has_value());
    CHECK(*back == e);
    CHECK(back->str() == e.str());
  }
  CHECK(Expr::parse("2*z(3) - 2*z(2)*L2 + 4/3*L2^3").has_value());
  CHECK(!Expr::parse("2*q(3)").has_value());
}

TEST_CASE("weight accounting on atoms and expressions") {
  CHECK(Atom::ln2().weight() == 1);
  CHECK(Atom::zeta(4).weight() == 4);
  CHECK(Atom::alt({{2, -1}, {1, 1}, {1, 1}}).weight() == 4);
  Expr e = Expr::atom(Atom::zeta(3)) * Expr::atom(Atom::zeta(2)) + Expr::atom(Atom::li_half(4));
  CHECK(e.max_weight() == 5);
}

TEST_CASE("zeta polynomial predicate") {
  Expr zp = Expr::atom(Atom::zeta(2)) * Expr::atom(Atom::ln2(), Rational(3));
  CHECK(zp.is_zeta_polynomial());
  CHECK(!(zp + Expr::atom(Atom::li_half(4))).is_zeta_polynomial());
  CHECK(!(zp + Expr::atom(Atom::alt({{2, -1}}))).is_zeta_polynomial());
}

TEST_CASE("latex rendering") {
  Expr e = Expr::atom(Atom::alt({{2, -1}, {1, 1}}), Rational(-1, 8)) +
           Expr::monomial({Atom::ln2(), Atom::ln2()}, Rational(2));
  std::string tex = e.latex();
  CHECK(tex.find("\\zeta(\\bar{2},1)") != std::string::npos);
  CHECK(tex.find("\\ln(2)^{2}") != std::string::npos);
  CHECK(Atom::deco({{2, Deco::tilde}, {1, Deco::hat}}).latex() == "\\zeta(\\tilde{2},\\hat{1})");
}
