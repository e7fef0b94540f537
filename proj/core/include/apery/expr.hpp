#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "apery/rational.hpp"
#include "apery/words.hpp"

namespace apery {

// One atomic constant of the expression ring. `alt` is an alternating MZV
// given by its signed word; `deco` is a mixed (decorated) MZV that still
// carries hat/tilde marks and must be expanded before evaluation.
//
// String syntax (stable; used in table files and CLI output):
//   z(3)      zeta(3)            L2      ln(2)
//   z(-2,1)   zeta(bar2, 1)      Li4h    Li_4(1/2)
//   z(~2,^1)  zeta(tilde2, hat1)
class Atom {
 public:
  enum class Kind { ln2, zeta, li_half, alt, deco };

  static Atom ln2() { return Atom(Kind::ln2, 0); }
  static Atom zeta(int s);
  static Atom li_half(int s);
  static Atom alt(SignedWord w);
  static Atom deco(DecoWord w);

  Kind kind() const { return kind_; }
  int order() const { return s_; }
  const SignedWord& word() const { return word_; }
  const DecoWord& dword() const { return dword_; }
  int weight() const;

  std::string str() const;
  std::string latex() const;
  static std::optional<Atom> parse(std::string_view s);

  // Canonical order: kind, then weight, then content. Keeps printed
  // expressions deterministic.
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (auto c = a.weight() <=> b.weight(); c != 0) return c;
    if (auto c = a.s_ <=> b.s_; c != 0) return c;
    if (auto c = a.word_ <=> b.word_; c != 0) return c;
    return a.dword_ <=> b.dword_;
  }
  friend bool operator==(const Atom& a, const Atom& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  Atom(Kind k, int s) : kind_(k), s_(s) {}
  Kind kind_;
  int s_ = 0;
  SignedWord word_;
  DecoWord dword_;
};

// Monomial: multiset of atoms, kept sorted. Products of constants such as
// zeta(3)*zeta(2) or zeta(2)*ln^2(2) are first-class.
using Monomial = std::vector<Atom>;

struct DivergentWord : std::runtime_error {
  explicit DivergentWord(const std::string& which)
      : std::runtime_error("divergent word in expansion: " + which) {}
};

// Formal Rational-linear combination of monomials of atoms. Addition and
// multiplication keep the terms collected and sorted; zero coefficients are
// dropped eagerly, so structural equality is semantic equality up to the
// depth-1 rewrites applied by normalized().
class Expr {
 public:
  Expr() = default;
  explicit Expr(int c) { *this += constant(Rational(c)); }
  explicit Expr(const Rational& c) { *this += constant(c); }

  static Expr constant(const Rational& c);
  static Expr atom(const Atom& a, const Rational& coeff = Rational(1));
  static Expr monomial(Monomial m, const Rational& coeff = Rational(1));

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  Expr& operator*=(const Rational& c);
  Expr& operator*=(const Expr& o);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(Expr a, const Rational& c) { return a *= c; }
  friend Expr operator*(const Rational& c, Expr a) { return a *= c; }
  friend Expr operator*(Expr a, const Expr& b) { return a *= b; }
  Expr operator-() const;
  friend bool operator==(const Expr&, const Expr&) = default;

  bool has_deco() const;
  // True when every atom is Ln2 or Zeta (the ring Q[ln2, zeta(2), ...]).
  bool is_zeta_polynomial() const;

  // Expands every decorated-word atom into alternating words and normalizes.
  // Throws DivergentWord if an expansion branch starts with (1,+1).
  Expr expanded() const;

  // Collects like monomials, drops zeros and rewrites depth-1 atoms:
  // z(-1) -> -L2, z(-s) -> (2^{1-s}-1) z(s), z(s) -> zeta atom. Idempotent.
  Expr normalized() const;

  int max_weight() const;

  std::string str() const;
  std::string latex() const;
  static std::optional<Expr> parse(std::string_view s);

 private:
  void add_term(Monomial m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

// Rational linear combination of alternating words obtained by expanding the
// decorations: hat s -> (s,+)+(s,-), tilde s -> (s,+)-(s,-), bar s -> (s,-).
// Coefficients are all +-1 and the term count is 2^{#hats+#tildes}.
Expr expand_decorated(const DecoWord& w);

// ZetaPolynomial is a restricted view over Expr, not a separate ring.
using ZetaPolynomial = Expr;

}  // namespace apery
