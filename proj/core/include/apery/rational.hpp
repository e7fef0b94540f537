#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace apery {

using BigInt = mpz_class;

// Exact arbitrary-precision fraction. Always stored reduced with a positive
// denominator; every arithmetic operation is exact.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(static_cast<signed long>(n)) {}
  Rational(int n) : q_(n) {}
  Rational(const BigInt& n) : q_(n) {}
  Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Parses "p", "-p", or "p/q".
  static Rational parse(std::string_view s) {
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    q.canonicalize();
    return Rational(q);
  }

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r(*this); r.q_ = -r.q_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  Rational abs() const { Rational r(*this); r.q_ = ::abs(r.q_); return r; }

  // 2^e for e of either sign.
  static Rational pow2(long e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : Rational(BigInt(1), p);
  }

  static Rational pow(const Rational& b, unsigned long e) {
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), b.q_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), b.q_.get_den_mpz_t(), e);
    return Rational(n, d);
  }

  double to_double() const { return q_.get_d(); }

  // Two-step conversion recovers ~106 bits, enough that long double
  // comparisons against exact values are limited by the float side only.
  long double to_long_double() const {
    double hi = q_.get_d();
    mpq_class rest = q_ - mpq_class(hi);
    return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
  }

  // "p" when the denominator is 1, otherwise "p/q".
  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

 private:
  mpq_class q_;
};

inline BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace apery
