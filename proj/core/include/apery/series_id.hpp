#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace apery {

// Families of Euler-Apery-type series.
//   S     sum H_n^(i1)...H_n^(ik) C(2n,n) / (4^n n^p), orders may be empty
//   SStar sum zeta*_n({1}_m) C(2n,n) / (4^n n^p)
//   SStar1  sum H_n zeta*_n({1}_m) C(2n,n) / (4^n n^p)
//   T1    sum H_2n C(2n,n) / (4^n n^q)      U1   same with O_n
//   tS    sum 4^n / (n^q C(2n,n))           tS1/tT1/tU1 with H_n/H_2n/O_n
enum class Family { S, SStar, SStar1, T1, U1, tS, tS1, tT1, tU1 };

struct SeriesId {
  Family family = Family::S;
  std::vector<int> orders;  // S family harmonic orders, ascending
  int m = 0;                // star length for SStar/SStar1
  int p = 0;                // literal denominator exponent

  int weight() const;
  bool convergent() const;
  // True when an explicit evaluation is implemented for these parameters.
  bool supported() const;

  // Id string, e.g. "S:3", "S:1^3,1", "S*:2,1", "S1*:2,1", "tS1:2".
  std::string str() const;
  std::string latex() const;
  static std::optional<SeriesId> parse(std::string_view s);

  friend auto operator<=>(const SeriesId&, const SeriesId&) = default;
};

// Every supported series of weight <= max_weight, deterministic order
// (by weight, then family, then parameters). Duplicate parameterizations
// of the same sum (star factors of length <= 1) are skipped.
std::vector<SeriesId> enumerate_series(int max_weight);

}  // namespace apery
