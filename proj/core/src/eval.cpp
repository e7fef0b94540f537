#include "apery/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace apery {

namespace {

constexpr real_t kEps = 1.1e-19L;

struct Kahan {
  real_t s = 0, c = 0;
  void add(real_t x) {
    real_t y = x - c;
    real_t t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

real_t int_pow(long m, int e) {
  real_t b = static_cast<real_t>(m), r = 1;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Iterated pairwise averaging of the last partial sums of an alternating
// series (Euler transform). v holds consecutive partial sums.
std::pair<real_t, real_t> euler_limit(std::vector<real_t> v, int depth) {
  int levels = std::min<int>(depth, static_cast<int>(v.size()) - 1);
  real_t last = v.back(), prev = last;
  for (int r = 0; r < levels; ++r) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = 0.5L * (v[i] + v[i + 1]);
    v.pop_back();
    prev = last;
    last = v.back();
  }
  return {last, fabsl(last - prev) + 16 * kEps * fabsl(last)};
}

// Romberg-style elimination of the ladder N^-(e0), N^-(e0+1), ... on
// partial sums taken at nodes doubling in N. v[j] belongs to the node with
// N_j = M0 * 2^j.
std::pair<real_t, real_t> richardson_limit(std::vector<real_t> v, int e0) {
  const int n = static_cast<int>(v.size());
  real_t last = v.back(), prev = last;
  for (int k = 1; k < n; ++k) {
    real_t f = powl(2.0L, e0 + k - 1);
    for (int j = n - 1; j >= k; --j) v[j] = v[j] + (v[j] - v[j - 1]) / (f - 1);
    prev = last;
    last = v.back();
  }
  return {last, fabsl(last - prev) + 16 * kEps * fabsl(last)};
}

real_t leading_constant(int s, bool bar) {
  if (!bar) return zeta_value(s);
  if (s == 1) return -ln2_value();
  return (powl(2.0L, 1 - s) - 1.0L) * zeta_value(s);
}

// One evaluation pass at fixed N. The word is consumed from the leading
// slot inward; after slot i the weight array holds the exact tail
// W_{i+1}(j) = C_i - P_i(j) of the prefix series, so the only truncation
// happens in the terminal limit estimates.
NumericValue eval_word_at(const SignedWord& w, long N, const EvalOptions& opts) {
  const int k = static_cast<int>(w.size());
  std::vector<real_t> W(N + 1, 1.0L), P(N + 1, 0.0L);
  bool osc = false;  // weight carries a (-1)^m factor
  int decay = 0;     // weight magnitude ~ m^-decay
  real_t errW = 0;   // uniform bound on |delta W|
  const int window = opts.euler_depth + 2;

  for (int i = 0; i < k; ++i) {
    const int s = w[i].s;
    const bool bar = w[i].sign < 0;
    const bool eff_alt = osc != bar;

    Kahan sum, abs_sum;
    for (long m = 1; m <= N; ++m) {
      real_t t = W[m] / int_pow(m, s);
      if (bar && (m & 1)) t = -t;
      sum.add(t);
      abs_sum.add(fabsl(t));
      P[m] = sum.s;
    }

    real_t C, errC;
    if (i == 0) {
      C = leading_constant(s, bar);
      errC = 8 * kEps * fabsl(C);
    } else {
      std::pair<real_t, real_t> est;
      if (eff_alt) {
        std::vector<real_t> tail(P.end() - window, P.end());
        est = euler_limit(std::move(tail), opts.euler_depth);
      } else {
        std::vector<real_t> nodes;
        long M0 = N >> (opts.checkpoints - 1);
        for (int j = 0; j < opts.checkpoints; ++j) nodes.push_back(P[M0 << j]);
        est = richardson_limit(std::move(nodes), decay + s - 1);
      }
      C = est.first;
      errC = est.second + errW * abs_sum.s;
    }

    if (i == k - 1) return {C, errC + 8 * kEps * abs_sum.s};

    for (long j = 0; j <= N; ++j) W[j] = C - P[j];
    errW = errC + errW * abs_sum.s + 8 * kEps * abs_sum.s;
    osc = eff_alt;
    decay += eff_alt ? s : s - 1;
  }
  return {};  // unreachable
}

NumericValue eval_word(const SignedWord& w, const EvalOptions& opts) {
  if (w.size() == 1) {
    real_t v = leading_constant(w[0].s, w[0].sign < 0);
    return {v, 8 * kEps * fabsl(v)};
  }
  auto round_nodes = [&](long n) { return std::max<long>(1, n >> (opts.checkpoints + 2)) << (opts.checkpoints + 2); };
  long N = round_nodes(std::min(opts.n_start, opts.n_cap));
  NumericValue best;
  best.err = 1e30L;
  while (true) {
    NumericValue r = eval_word_at(w, N, opts);
    if (r.err < best.err) best = r;
    if (best.err <= opts.target) return best;
    long next = round_nodes(std::min(2 * N, opts.n_cap));
    if (next <= N) break;
    N = next;
  }
  char msg[96];
  std::snprintf(msg, sizeof(msg), "eval_atom: target %.1Le unreachable within the N cap (best err %.1Le)",
                opts.target, best.err);
  throw PrecisionUnreachable(best, msg);
}

struct CacheKey {
  SignedWord word;
  int bucket;
  auto operator<=>(const CacheKey&) const = default;
};

std::map<CacheKey, NumericValue> g_cache;
std::shared_mutex g_cache_mu;

int precision_bucket(real_t target) {
  int b = static_cast<int>(ceill(-log10l(target)));
  return std::clamp(b, 1, 30);
}

}  // namespace

real_t ln2_value() { return logl(2.0L); }

real_t zeta_value(int s) {
  if (s < 2) throw std::invalid_argument("zeta_value: order must be >= 2");
  static std::map<int, real_t> cache;
  static std::mutex mu;
  {
    std::lock_guard lk(mu);
    if (auto it = cache.find(s); it != cache.end()) return it->second;
  }
  // eta(s) = sum (-1)^(n-1)/n^s, accelerated by averaging; zeta = eta/(1-2^(1-s)).
  Kahan sum;
  std::vector<real_t> partials;
  for (long n = 1; n <= 72; ++n) {
    real_t t = 1.0L / int_pow(n, s);
    sum.add((n & 1) ? t : -t);
    if (n > 36) partials.push_back(sum.s);
  }
  real_t eta = euler_limit(std::move(partials), 34).first;
  real_t z = eta / (1.0L - powl(2.0L, 1 - s));
  std::lock_guard lk(mu);
  cache[s] = z;
  return z;
}

real_t li_half_value(int s) {
  if (s < 2) throw std::invalid_argument("li_half_value: order must be >= 2");
  Kahan sum;
  real_t p = 1;
  for (long n = 1; n <= 80; ++n) {
    p *= 0.5L;
    sum.add(p / int_pow(n, s));
  }
  return sum.s;
}

NumericValue eval_atom(const Atom& a, const EvalOptions& opts) {
  switch (a.kind()) {
    case Atom::Kind::ln2: {
      real_t v = ln2_value();
      return {v, 2 * kEps * v};
    }
    case Atom::Kind::zeta: {
      real_t v = zeta_value(a.order());
      return {v, 4 * kEps * v};
    }
    case Atom::Kind::li_half: {
      real_t v = li_half_value(a.order());
      return {v, 4 * kEps * v + 1e-24L};
    }
    case Atom::Kind::alt: {
      CacheKey key{a.word(), precision_bucket(opts.target)};
      {
        std::shared_lock lk(g_cache_mu);
        if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
      }
      NumericValue v = eval_word(a.word(), opts);
      std::unique_lock lk(g_cache_mu);
      g_cache.emplace(std::move(key), v);
      return v;
    }
    case Atom::Kind::deco:
      throw std::invalid_argument("eval_atom: decorated atom must be expanded first: " + a.str());
  }
  throw std::logic_error("eval_atom: bad kind");
}

NumericValue eval_expr(const Expr& e, const EvalOptions& opts) {
  Kahan total, err;
  for (const auto& [mono, coeff] : e.terms()) {
    std::vector<NumericValue> vals;
    vals.reserve(mono.size());
    for (const auto& a : mono) vals.push_back(eval_atom(a, opts));
    real_t prod = 1;
    for (const auto& v : vals) prod *= v.value;
    // first-order error: sum over atoms of err_i * prod of |values| of others
    real_t eterm = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      real_t rest = 1;
      for (std::size_t j = 0; j < vals.size(); ++j)
        if (j != i) rest *= fabsl(vals[j].value);
      eterm += vals[i].err * rest;
    }
    real_t c = coeff.to_long_double();
    total.add(c * prod);
    err.add(fabsl(c) * eterm + 4 * kEps * fabsl(c * prod));
  }
  return {total.s, err.s};
}

void clear_eval_cache() {
  std::unique_lock lk(g_cache_mu);
  g_cache.clear();
}

std::string NumericValue::str() const {
  int digits = 18;
  if (err > 0) {
    real_t d = -log10l(err);
    digits = std::clamp(static_cast<int>(floorl(d)), 0, 18);
  }
  char buf[64];
  if (fabsl(value) < 1e6L)
    std::snprintf(buf, sizeof(buf), "%.*Lf", digits, value);
  else
    std::snprintf(buf, sizeof(buf), "%.*Le", digits, value);
  return buf;
}

}  // namespace apery
