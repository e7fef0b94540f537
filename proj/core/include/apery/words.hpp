#pragma once

#include <compare>
#include <initializer_list>
#include <vector>

namespace apery {

// One argument slot of an alternating multiple zeta value / harmonic sum:
// exponent s >= 1 with sign +1 (plain) or -1 (bar).
struct SignedSlot {
  int s = 1;
  int sign = +1;
  friend auto operator<=>(const SignedSlot&, const SignedSlot&) = default;
};

// Decoration of one slot of a mixed multiple zeta value. In the defining
// series the numerator of slot j carries 1 (plain), (-1)^{n_j} (bar),
// 1+(-1)^{n_j} (hat) or 1-(-1)^{n_j} (tilde).
enum class Deco { plain, bar, hat, tilde };

struct DecoSlot {
  int s = 1;
  Deco deco = Deco::plain;
  friend auto operator<=>(const DecoSlot&, const DecoSlot&) = default;
};

using SignedWord = std::vector<SignedSlot>;
using DecoWord = std::vector<DecoSlot>;

inline int weight(const SignedWord& w) {
  int t = 0;
  for (const auto& e : w) t += e.s;
  return t;
}

inline int weight(const DecoWord& w) {
  int t = 0;
  for (const auto& e : w) t += e.s;
  return t;
}

inline SignedWord plain_word(std::initializer_list<int> ss) {
  SignedWord w;
  for (int s : ss) w.push_back({s, +1});
  return w;
}

// A word is a convergent alternating MZV argument iff it does not start
// with the slot (1, +1).
inline bool convergent(const SignedWord& w) {
  return w.empty() || !(w.front().s == 1 && w.front().sign == +1);
}

}  // namespace apery
