#include "apery/series_id.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace apery {

namespace {

const char* family_tag(Family f) {
  switch (f) {
    case Family::S: return "S";
    case Family::SStar: return "S*";
    case Family::SStar1: return "S1*";
    case Family::T1: return "T1";
    case Family::U1: return "U1";
    case Family::tS: return "tS";
    case Family::tS1: return "tS1";
    case Family::tT1: return "tT1";
    case Family::tU1: return "tU1";
  }
  return "?";
}

// Run-length display: 1,1,1 -> "1^3".
std::string orders_str(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(v[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

int SeriesId::weight() const {
  switch (family) {
    case Family::S: {
      int w = p;
      for (int o : orders) w += o;
      return w;
    }
    case Family::SStar: return p + m;
    case Family::SStar1: return p + 1 + m;
    case Family::T1:
    case Family::U1: return p + 1;
    case Family::tS: return p;
    case Family::tS1:
    case Family::tT1:
    case Family::tU1: return p + 1;
  }
  return 0;
}

bool SeriesId::convergent() const {
  switch (family) {
    case Family::S:
    case Family::SStar:
    case Family::SStar1:
    case Family::T1:
    case Family::U1: return p >= 1;
    case Family::tS:
    case Family::tS1:
    case Family::tT1:
    case Family::tU1: return p >= 2;
  }
  return false;
}

bool SeriesId::supported() const {
  if (!convergent()) return false;
  switch (family) {
    case Family::S: {
      if (m != 0) return false;
      if (orders.empty()) return true;
      if (!std::is_sorted(orders.begin(), orders.end())) return false;
      if (orders.front() < 1) return false;
      if (orders.size() == 1) return true;                              // linear
      if (orders.size() == 2 && orders[0] == 1) return true;            // quadratic
      if (orders.size() == 3 && orders == std::vector<int>{1, 1, 1}) return true;
      return false;
    }
    case Family::SStar:
    case Family::SStar1: return orders.empty() && m >= 0;
    default: return orders.empty() && m == 0;
  }
}

std::string SeriesId::str() const {
  std::string out = family_tag(family);
  out += ':';
  switch (family) {
    case Family::S:
      if (!orders.empty()) out += orders_str(orders) + ',';
      break;
    case Family::SStar:
    case Family::SStar1:
      out += std::to_string(m) + ',';
      break;
    default: break;
  }
  out += std::to_string(p);
  return out;
}

std::string SeriesId::latex() const {
  auto sub = [&](const std::string& head) {
    return head + "_{" + (orders.empty() ? "" : orders_str(orders) + ",") + std::to_string(p) + "}";
  };
  switch (family) {
    case Family::S: return sub("S");
    case Family::SStar: return "S^{\\star}_{" + std::to_string(m) + "," + std::to_string(p) + "}";
    case Family::SStar1:
      return "S^{\\star}_{1\\cdot" + std::to_string(m) + "," + std::to_string(p) + "}";
    case Family::T1: return "T_{1," + std::to_string(p) + "}";
    case Family::U1: return "U_{1," + std::to_string(p) + "}";
    case Family::tS: return "\\tilde{S}_{" + std::to_string(p) + "}";
    case Family::tS1: return "\\tilde{S}_{1," + std::to_string(p) + "}";
    case Family::tT1: return "\\tilde{T}_{1," + std::to_string(p) + "}";
    case Family::tU1: return "\\tilde{U}_{1," + std::to_string(p) + "}";
  }
  return {};
}

std::optional<SeriesId> SeriesId::parse(std::string_view s) {
  auto colon = s.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  std::string_view tag = s.substr(0, colon);
  std::string_view rest = s.substr(colon + 1);

  Family fam;
  if (tag == "S") fam = Family::S;
  else if (tag == "S*") fam = Family::SStar;
  else if (tag == "S1*") fam = Family::SStar1;
  else if (tag == "T1") fam = Family::T1;
  else if (tag == "U1") fam = Family::U1;
  else if (tag == "tS") fam = Family::tS;
  else if (tag == "tS1") fam = Family::tS1;
  else if (tag == "tT1") fam = Family::tT1;
  else if (tag == "tU1") fam = Family::tU1;
  else return std::nullopt;

  // rest: comma-separated components, each "n" or "n^k"; last is p.
  std::vector<std::pair<int, int>> comps;  // value, repeat
  std::size_t i = 0;
  while (i < rest.size()) {
    int v = 0, rep = 1;
    std::size_t start = i;
    while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i])))
      v = v * 10 + (rest[i++] - '0');
    if (i == start) return std::nullopt;
    if (i < rest.size() && rest[i] == '^') {
      ++i;
      rep = 0;
      std::size_t rs = i;
      while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i])))
        rep = rep * 10 + (rest[i++] - '0');
      if (i == rs || rep < 1) return std::nullopt;
    }
    comps.emplace_back(v, rep);
    if (i < rest.size()) {
      if (rest[i] != ',') return std::nullopt;
      ++i;
      if (i == rest.size()) return std::nullopt;
    }
  }
  if (comps.empty() || comps.back().second != 1) return std::nullopt;

  SeriesId id;
  id.family = fam;
  id.p = comps.back().first;
  comps.pop_back();
  if (fam == Family::S) {
    for (auto [v, rep] : comps)
      for (int r = 0; r < rep; ++r) id.orders.push_back(v);
  } else if (fam == Family::SStar || fam == Family::SStar1) {
    if (comps.size() != 1 || comps[0].second != 1) return std::nullopt;
    id.m = comps[0].first;
  } else {
    if (!comps.empty()) return std::nullopt;
  }
  return id;
}

std::vector<SeriesId> enumerate_series(int max_weight) {
  std::vector<SeriesId> out;
  auto add = [&](SeriesId id) {
    if (id.supported() && id.weight() <= max_weight) out.push_back(std::move(id));
  };
  for (int w = 1; w <= max_weight; ++w) {
    add({Family::S, {}, 0, w});
    for (int o = 1; o < w; ++o) add({Family::S, {o}, 0, w - o});
    for (int o = 1; o + 2 <= w; ++o) add({Family::S, {1, o}, 0, w - 1 - o});
    if (w >= 4) add({Family::S, {1, 1, 1}, 0, w - 3});
    for (int m = 2; m < w; ++m) add({Family::SStar, {}, m, w - m});
    for (int m = 2; m + 2 <= w; ++m) add({Family::SStar1, {}, m, w - 1 - m});
    add({Family::T1, {}, 0, w - 1});
    add({Family::U1, {}, 0, w - 1});
    add({Family::tS, {}, 0, w});
    add({Family::tS1, {}, 0, w - 1});
    add({Family::tT1, {}, 0, w - 1});
    add({Family::tU1, {}, 0, w - 1});
  }
  return out;
}

}  // namespace apery
