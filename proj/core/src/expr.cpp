#include "apery/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace apery {

Atom Atom::zeta(int s) {
  if (s < 2) throw std::invalid_argument("Atom::zeta: order must be >= 2");
  return Atom(Kind::zeta, s);
}

Atom Atom::li_half(int s) {
  if (s < 2) throw std::invalid_argument("Atom::li_half: order must be >= 2");
  return Atom(Kind::li_half, s);
}

Atom Atom::alt(SignedWord w) {
  if (w.empty()) throw std::invalid_argument("Atom::alt: empty word");
  for (const auto& e : w)
    if (e.s < 1 || (e.sign != 1 && e.sign != -1))
      throw std::invalid_argument("Atom::alt: malformed slot");
  if (!convergent(w)) {
    std::string ws = "z(";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) ws += ',';
      if (w[i].sign < 0) ws += '-';
      ws += std::to_string(w[i].s);
    }
    throw DivergentWord(ws + ")");
  }
  Atom a(Kind::alt, 0);
  a.word_ = std::move(w);
  return a;
}

Atom Atom::deco(DecoWord w) {
  if (w.empty()) throw std::invalid_argument("Atom::deco: empty word");
  for (const auto& e : w)
    if (e.s < 1) throw std::invalid_argument("Atom::deco: malformed slot");
  Atom a(Kind::deco, 0);
  a.dword_ = std::move(w);
  return a;
}

int Atom::weight() const {
  switch (kind_) {
    case Kind::ln2: return 1;
    case Kind::zeta:
    case Kind::li_half: return s_;
    case Kind::alt: return apery::weight(word_);
    case Kind::deco: return apery::weight(dword_);
  }
  return 0;
}

std::string Atom::str() const {
  switch (kind_) {
    case Kind::ln2: return "L2";
    case Kind::zeta: return "z(" + std::to_string(s_) + ")";
    case Kind::li_half: return "Li" + std::to_string(s_) + "h";
    case Kind::alt: {
      std::string out = "z(";
      for (std::size_t i = 0; i < word_.size(); ++i) {
        if (i) out += ',';
        if (word_[i].sign < 0) out += '-';
        out += std::to_string(word_[i].s);
      }
      return out + ")";
    }
    case Kind::deco: {
      std::string out = "z(";
      for (std::size_t i = 0; i < dword_.size(); ++i) {
        if (i) out += ',';
        switch (dword_[i].deco) {
          case Deco::plain: break;
          case Deco::bar: out += '-'; break;
          case Deco::hat: out += '^'; break;
          case Deco::tilde: out += '~'; break;
        }
        out += std::to_string(dword_[i].s);
      }
      return out + ")";
    }
  }
  return {};
}

std::string Atom::latex() const {
  switch (kind_) {
    case Kind::ln2: return "\\ln(2)";
    case Kind::zeta: return "\\zeta(" + std::to_string(s_) + ")";
    case Kind::li_half:
      return "\\mathrm{Li}_{" + std::to_string(s_) + "}\\left(\\tfrac12\\right)";
    case Kind::alt: {
      std::string out = "\\zeta(";
      for (std::size_t i = 0; i < word_.size(); ++i) {
        if (i) out += ',';
        if (word_[i].sign < 0)
          out += "\\bar{" + std::to_string(word_[i].s) + "}";
        else
          out += std::to_string(word_[i].s);
      }
      return out + ")";
    }
    case Kind::deco: {
      std::string out = "\\zeta(";
      for (std::size_t i = 0; i < dword_.size(); ++i) {
        if (i) out += ',';
        const std::string v = std::to_string(dword_[i].s);
        switch (dword_[i].deco) {
          case Deco::plain: out += v; break;
          case Deco::bar: out += "\\bar{" + v + "}"; break;
          case Deco::hat: out += "\\hat{" + v + "}"; break;
          case Deco::tilde: out += "\\tilde{" + v + "}"; break;
        }
      }
      return out + ")";
    }
  }
  return {};
}

std::optional<Atom> Atom::parse(std::string_view s) {
  auto fail = std::optional<Atom>{};
  if (s == "L2") return ln2();
  if (s.starts_with("Li") && s.ends_with("h")) {
    int k = 0;
    for (char c : s.substr(2, s.size() - 3)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return fail;
      k = k * 10 + (c - '0');
    }
    if (k < 2) return fail;
    return li_half(k);
  }
  if (!s.starts_with("z(") || !s.ends_with(")")) return fail;
  std::string_view body = s.substr(2, s.size() - 3);
  if (body.empty()) return fail;
  DecoWord dw;
  bool has_mark = false;
  std::size_t i = 0;
  while (i < body.size()) {
    Deco d = Deco::plain;
    if (body[i] == '-') { d = Deco::bar; ++i; }
    else if (body[i] == '^') { d = Deco::hat; has_mark = true; ++i; }
    else if (body[i] == '~') { d = Deco::tilde; has_mark = true; ++i; }
    int v = 0;
    std::size_t start = i;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])))
      v = v * 10 + (body[i++] - '0');
    if (i == start || v < 1) return fail;
    dw.push_back({v, d});
    if (i < body.size()) {
      if (body[i] != ',') return fail;
      ++i;
      if (i == body.size()) return fail;
    }
  }
  if (has_mark) return deco(std::move(dw));
  // Depth-1 plain z(s) is the Riemann zeta atom.
  if (dw.size() == 1 && dw[0].deco == Deco::plain) {
    if (dw[0].s < 2) return fail;
    return zeta(dw[0].s);
  }
  SignedWord w;
  for (const auto& e : dw) w.push_back({e.s, e.deco == Deco::bar ? -1 : +1});
  if (!convergent(w)) return fail;
  return alt(std::move(w));
}

Expr Expr::constant(const Rational& c) {
  Expr e;
  e.add_term({}, c);
  return e;
}

Expr Expr::atom(const Atom& a, const Rational& coeff) {
  Expr e;
  e.add_term({a}, coeff);
  return e;
}

Expr Expr::monomial(Monomial m, const Rational& coeff) {
  std::sort(m.begin(), m.end());
  Expr e;
  e.add_term(std::move(m), coeff);
  return e;
}

void Expr::add_term(Monomial m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Expr& Expr::operator+=(const Expr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Expr& Expr::operator-=(const Expr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Expr& Expr::operator*=(const Rational& c) {
  if (c.is_zero()) { terms_.clear(); return *this; }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Expr& Expr::operator*=(const Expr& o) {
  std::map<Monomial, Rational> result;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      Rational c = ca * cb;
      auto [it, inserted] = result.try_emplace(std::move(m), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) result.erase(it);
      }
    }
  }
  terms_ = std::move(result);
  return *this;
}

Expr Expr::operator-() const {
  Expr e(*this);
  for (auto& [m, c] : e.terms_) c = -c;
  return e;
}

bool Expr::has_deco() const {
  for (const auto& [m, c] : terms_)
    for (const auto& a : m)
      if (a.kind() == Atom::Kind::deco) return true;
  return false;
}

bool Expr::is_zeta_polynomial() const {
  for (const auto& [m, c] : terms_)
    for (const auto& a : m)
      if (a.kind() != Atom::Kind::ln2 && a.kind() != Atom::Kind::zeta) return false;
  return true;
}

Expr expand_decorated(const DecoWord& w) {
  if (w.empty()) return Expr::constant(Rational(1));
  // Cartesian sign expansion, one branch pair per hat/tilde slot.
  std::vector<std::pair<SignedWord, int>> partial;
  partial.emplace_back(SignedWord{}, 1);
  for (const auto& slot : w) {
    std::vector<std::pair<SignedWord, int>> next;
    next.reserve(partial.size() * 2);
    auto push = [&](const std::pair<SignedWord, int>& base, int sign, int coeff) {
      auto ext = base;
      ext.first.push_back({slot.s, sign});
      ext.second *= coeff;
      next.push_back(std::move(ext));
    };
    for (const auto& base : partial) {
      switch (slot.deco) {
        case Deco::plain: push(base, +1, +1); break;
        case Deco::bar: push(base, -1, +1); break;
        case Deco::hat: push(base, +1, +1); push(base, -1, +1); break;
        case Deco::tilde: push(base, +1, +1); push(base, -1, -1); break;
      }
    }
    partial = std::move(next);
  }
  Expr out;
  for (auto& [word, coeff] : partial) {
    if (!convergent(word)) throw DivergentWord(Atom::deco(w).str());
    out += Expr::atom(Atom::alt(std::move(word)), Rational(coeff));
  }
  return out;
}

Expr Expr::expanded() const {
  Expr out;
  for (const auto& [m, c] : terms_) {
    Expr term = constant(c);
    for (const auto& a : m) {
      if (a.kind() == Atom::Kind::deco)
        term *= expand_decorated(a.dword());
      else
        term *= atom(a);
    }
    out += term;
  }
  return out.normalized();
}

Expr Expr::normalized() const {
  Expr out;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial nm;
    nm.reserve(m.size());
    for (const auto& a : m) {
      if (a.kind() == Atom::Kind::alt && a.word().size() == 1) {
        const auto [s, sign] = a.word()[0];
        if (sign > 0) {
          nm.push_back(Atom::zeta(s));  // s >= 2 by convergence
        } else if (s == 1) {
          coeff *= Rational(-1);  // z(-1) = -ln(2)
          nm.push_back(Atom::ln2());
        } else {
          // z(-s) = (2^{1-s} - 1) z(s)
          coeff *= Rational::pow2(1 - s) - Rational(1);
          nm.push_back(Atom::zeta(s));
        }
      } else {
        nm.push_back(a);
      }
    }
    std::sort(nm.begin(), nm.end());
    out.add_term(std::move(nm), coeff);
  }
  return out;
}

int Expr::max_weight() const {
  int w = 0;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (const auto& a : m) t += a.weight();
    w = std::max(w, t);
  }
  return w;
}

namespace {

// Collapses equal adjacent atoms into powers for display.
template <typename Fmt>
std::string monomial_str(const Monomial& m, Fmt&& fmt, const char* times, const char* power_open,
                         const char* power_close) {
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!out.empty()) out += times;
    out += fmt(m[i]);
    if (j - i > 1) out += std::string(power_open) + std::to_string(j - i) + power_close;
    i = j;
  }
  return out;
}

}  // namespace

std::string Expr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    Rational a = c.abs();
    if (out.empty())
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    std::string mono = monomial_str(m, [](const Atom& x) { return x.str(); }, "*", "^", "");
    if (mono.empty())
      out += a.str();
    else if (a == Rational(1))
      out += mono;
    else
      out += a.str() + "*" + mono;
  }
  return out;
}

std::string Expr::latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    Rational a = c.abs();
    if (out.empty())
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    std::string mono = monomial_str(m, [](const Atom& x) { return x.latex(); }, "\\,", "^{", "}");
    std::string coeff;
    if (a.is_integer())
      coeff = a.numerator().get_str();
    else
      coeff = "\\tfrac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
    if (mono.empty())
      out += coeff;
    else if (a == Rational(1))
      out += mono;
    else
      out += coeff + "\\," + mono;
  }
  return out;
}

std::optional<Expr> Expr::parse(std::string_view s) {
  // Grammar: term (('+'|'-') term)*, term: factor ('*' factor)*,
  // factor: rational | atom['^'k]. Whitespace ignored.
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) return std::nullopt;
  if (t == "0") return Expr();

  Expr out;
  std::size_t i = 0;
  while (i < t.size()) {
    int sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = t[i] == '-' ? -1 : 1;
      ++i;
    }
    Rational coeff(sign);
    Monomial mono;
    bool any = false;
    while (i < t.size()) {
      if (std::isdigit(static_cast<unsigned char>(t[i]))) {
        std::size_t start = i;
        while (i < t.size() && (std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '/')) ++i;
        coeff *= Rational::parse(t.substr(start, i - start));
      } else {
        std::size_t start = i, end;
        if (t.compare(i, 2, "Li") == 0) {
          end = t.find('h', i);
          if (end == std::string::npos) return std::nullopt;
          ++end;
        } else if (t.compare(i, 2, "L2") == 0) {
          end = i + 2;
        } else if (t.compare(i, 2, "z(") == 0) {
          end = t.find(')', i);
          if (end == std::string::npos) return std::nullopt;
          ++end;
        } else {
          return std::nullopt;
        }
        auto a = Atom::parse(t.substr(start, end - start));
        if (!a) return std::nullopt;
        i = end;
        int pow = 1;
        if (i < t.size() && t[i] == '^') {
          ++i;
          pow = 0;
          while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
            pow = pow * 10 + (t[i++] - '0');
          if (pow < 1) return std::nullopt;
        }
        for (int k = 0; k < pow; ++k) mono.push_back(*a);
      }
      any = true;
      if (i < t.size() && t[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any) return std::nullopt;
    out += Expr::monomial(std::move(mono), coeff);
  }
  return out;
}

}  // namespace apery
