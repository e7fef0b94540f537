#include "apery/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "apery/exact.hpp"

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

// Which running accumulators a family needs.
struct Needs {
  std::vector<int> h_orders;  // H_n^(s) accumulators
  bool h2n = false;           // H_{2n}
  bool on = false;            // O_n
  int star_m = 0;             // zeta*_n({1}_m)
  bool inverse = false;       // 4^n / C(2n,n) instead of C(2n,n)/4^n
};

Needs needs_of(const SeriesId& id) {
  Needs n;
  switch (id.family) {
    case Family::S: n.h_orders = id.orders; break;
    case Family::SStar: n.star_m = id.m; break;
    case Family::SStar1: n.star_m = id.m; n.h_orders = {1}; break;
    case Family::T1: n.h2n = true; break;
    case Family::U1: n.on = true; break;
    case Family::tS: n.inverse = true; break;
    case Family::tS1: n.inverse = true; n.h_orders = {1}; break;
    case Family::tT1: n.inverse = true; n.h2n = true; break;
    case Family::tU1: n.inverse = true; n.on = true; break;
  }
  return n;
}

// Count of logarithmically growing factors in the summand; fixes the ln^k
// powers of the extrapolation basis.
int log_order(const SeriesId& id) {
  switch (id.family) {
    case Family::S: return static_cast<int>(std::count(id.orders.begin(), id.orders.end(), 1));
    case Family::SStar: return id.m;
    case Family::SStar1: return id.m + 1;
    case Family::T1:
    case Family::U1:
    case Family::tS1:
    case Family::tT1:
    case Family::tU1: return 1;
    case Family::tS: return 0;
  }
  return 0;
}

// Tail of the partial sums decays like N^{-e} ln^k N: e = p - 1/2 for the
// binomial-over-4^n families, e = p - 3/2 for the reciprocal ones.
real_t tail_exponent(const SeriesId& id) {
  bool inv = needs_of(id).inverse;
  return static_cast<real_t>(id.p) - (inv ? 1.5L : 0.5L);
}

// Incremental state of one term. The central ratio keeps the exact update
// b(n)/b(n-1) = (2n-1)/(2n).
struct TermState {
  real_t binom_ratio = 1;  // C(2n,n)/4^n or its reciprocal
  std::vector<real_t> h;   // per requested order
  real_t h2n = 0, on = 0;
  std::vector<real_t> star_pow;   // (k-1)! H_n^(k), k = 1..m
  std::vector<real_t> bell;       // Y_0..Y_m of the star power sums
  std::vector<std::vector<real_t>> binom_small;  // Pascal triangle for Bell

  explicit TermState(const Needs& n) : h(n.h_orders.size(), 0) {
    if (n.star_m > 0) {
      star_pow.assign(n.star_m, 0);
      bell.assign(n.star_m + 1, 0);
      binom_small.assign(n.star_m, {});
      for (int i = 0; i < n.star_m; ++i) {
        binom_small[i].assign(i + 1, 1);
        for (int j = 1; j < i; ++j)
          binom_small[i][j] = binom_small[i - 1][j - 1] + binom_small[i - 1][j];
      }
    }
  }

  real_t advance(long n, const Needs& need, int p) {
    real_t dn = static_cast<real_t>(n);
    if (need.inverse)
      binom_ratio *= (2 * dn) / (2 * dn - 1);
    else
      binom_ratio *= (2 * dn - 1) / (2 * dn);
    for (std::size_t i = 0; i < need.h_orders.size(); ++i) {
      real_t q = 1;
      for (int e = 0; e < need.h_orders[i]; ++e) q *= dn;
      h[i] += 1 / q;
    }
    if (need.h2n) h2n += 1 / (2 * dn - 1) + 1 / (2 * dn);
    if (need.on) on += 1 / (2 * dn - 1);
    real_t star = 1;
    if (need.star_m > 0) {
      real_t fact = 1, q = 1;
      for (int k = 1; k <= need.star_m; ++k) {
        q *= dn;
        star_pow[k - 1] += fact / q;
        fact *= k;
      }
      bell[0] = 1;
      real_t mfact = 1;
      for (int k = 1; k <= need.star_m; ++k) {
        real_t acc = 0;
        for (int j = 0; j < k; ++j)
          acc += binom_small[k - 1][j] * star_pow[k - 1 - j] * bell[j];
        bell[k] = acc;
        mfact *= k;
      }
      star = bell[need.star_m] / mfact;
    }
    real_t t = binom_ratio * star;
    for (real_t hv : h) t *= hv;
    if (need.h2n) t *= h2n;
    if (need.on) t *= on;
    real_t np = 1;
    for (int e = 0; e < p; ++e) np *= dn;
    return t / np;
  }
};

// ---- asymptotic tail model ----------------------------------------------
//
// Truncated expansions over the basis n^{-j/2} ln^k n, enough to express
// the central-binomial ratio (Stirling series), the harmonic accumulators
// (Euler-Maclaurin) and their products. Used by TailMode::integral and as
// the error reference for the extrapolated modes.

constexpr real_t kGamma = 0.57721566490153286060651209008240243104L;

struct AsymSeries {
  static constexpr int kMaxHalf = 14;  // exponents n^{-j/2}, j = 0..14
  static constexpr int kMaxLog = 7;
  real_t c[kMaxHalf + 1][kMaxLog + 1] = {};

  static AsymSeries one() {
    AsymSeries s;
    s.c[0][0] = 1;
    return s;
  }
  static AsymSeries term(int two_a, int k, real_t v) {
    AsymSeries s;
    if (two_a <= kMaxHalf && k <= kMaxLog) s.c[two_a][k] = v;
    return s;
  }

  AsymSeries& operator+=(const AsymSeries& o) {
    for (int j = 0; j <= kMaxHalf; ++j)
      for (int k = 0; k <= kMaxLog; ++k) c[j][k] += o.c[j][k];
    return *this;
  }
  AsymSeries& scale(real_t v) {
    for (int j = 0; j <= kMaxHalf; ++j)
      for (int k = 0; k <= kMaxLog; ++k) c[j][k] *= v;
    return *this;
  }
  AsymSeries operator*(const AsymSeries& o) const {
    AsymSeries r;
    for (int j1 = 0; j1 <= kMaxHalf; ++j1)
      for (int k1 = 0; k1 <= kMaxLog; ++k1) {
        if (c[j1][k1] == 0) continue;
        for (int j2 = 0; j1 + j2 <= kMaxHalf; ++j2)
          for (int k2 = 0; k1 + k2 <= kMaxLog; ++k2)
            r.c[j1 + j2][k1 + k2] += c[j1][k1] * o.c[j2][k2];
      }
    return r;
  }
  AsymSeries shift(int two_a) const {  // multiply by n^{-two_a/2}
    AsymSeries r;
    for (int j = 0; j + two_a <= kMaxHalf; ++j)
      for (int k = 0; k <= kMaxLog; ++k) r.c[j + two_a][k] = c[j][k];
    return r;
  }
  AsymSeries derivative() const {
    AsymSeries r;
    for (int j = 0; j <= kMaxHalf; ++j)
      for (int k = 0; k <= kMaxLog; ++k) {
        if (c[j][k] == 0) continue;
        if (j + 2 <= kMaxHalf) {
          r.c[j + 2][k] += -0.5L * j * c[j][k];
          if (k >= 1) r.c[j + 2][k - 1] += k * c[j][k];
        }
      }
    return r;
  }
  real_t eval(real_t x) const {
    real_t lx = logl(x), out = 0;
    for (int j = kMaxHalf; j >= 0; --j) {
      real_t row = 0, lp = 1;
      for (int k = 0; k <= kMaxLog; ++k) {
        row += c[j][k] * lp;
        lp *= lx;
      }
      out += row * powl(x, -0.5L * j);
    }
    return out;
  }
  // int_N^inf of every term; requires decay faster than 1/x.
  real_t integral(real_t N) const {
    real_t lx = logl(N), out = 0;
    for (int j = 3; j <= kMaxHalf; ++j) {
      real_t a = 0.5L * j;
      for (int k = 0; k <= kMaxLog; ++k) {
        if (c[j][k] == 0) continue;
        real_t term = 0, falling = 1;
        for (int i = 0; i <= k; ++i) {
          term += falling * powl(lx, k - i) / powl(a - 1, i + 1);
          falling *= (k - i);
        }
        out += c[j][k] * term * powl(N, 1 - a);
      }
    }
    return out;
  }
};

// exp(u) for a series with no constant term, truncated.
AsymSeries exp_series(const AsymSeries& u) {
  AsymSeries r = AsymSeries::one(), p = AsymSeries::one();
  real_t fact = 1;
  for (int j = 1; j <= AsymSeries::kMaxHalf; ++j) {
    p = p * u;
    fact *= j;
    AsymSeries t = p;
    t.scale(1 / fact);
    r += t;
  }
  return r;
}

// C(2n,n)/4^n = exp(-1/(8n) + 1/(192 n^3) - 1/(640 n^5)) / sqrt(pi n),
// from the Stirling series of ln Gamma; the reciprocal flips both signs.
// The n^{-+1/2} prefactor is left to the caller's exponent shift.
AsymSeries binom_ratio_series(bool inverse) {
  AsymSeries u;
  real_t sgn = inverse ? 1.0L : -1.0L;
  u += AsymSeries::term(2, 0, sgn / 8);
  u += AsymSeries::term(6, 0, -sgn / 192);
  u += AsymSeries::term(10, 0, sgn / 640);
  AsymSeries r = exp_series(u);
  r.scale(powl(acosl(-1.0L), inverse ? 0.5L : -0.5L));
  return r;
}

// H_n = ln n + g + 1/(2n) - 1/(12 n^2) + 1/(120 n^4) - 1/(252 n^6)
AsymSeries harmonic1_series() {
  AsymSeries h = AsymSeries::term(0, 1, 1);
  h += AsymSeries::term(0, 0, kGamma);
  h += AsymSeries::term(2, 0, 0.5L);
  h += AsymSeries::term(4, 0, -1.0L / 12);
  h += AsymSeries::term(8, 0, 1.0L / 120);
  h += AsymSeries::term(12, 0, -1.0L / 252);
  return h;
}

// H_n^(s) = zeta(s) - 1/((s-1) n^{s-1}) + 1/(2 n^s) - s/(12 n^{s+1}) + ...
AsymSeries harmonic_series(int s) {
  if (s == 1) return harmonic1_series();
  AsymSeries h = AsymSeries::term(0, 0, zeta_value(s));
  h += AsymSeries::term(2 * (s - 1), 0, -1.0L / (s - 1));
  h += AsymSeries::term(2 * s, 0, 0.5L);
  h += AsymSeries::term(2 * (s + 1), 0, -s / 12.0L);
  h += AsymSeries::term(2 * (s + 3), 0, s * (s + 1) * (s + 2) / 720.0L);
  return h;
}

// H_{2n}: the harmonic expansion at index 2n.
AsymSeries harmonic_2n_series() {
  AsymSeries h = AsymSeries::term(0, 1, 1);
  h += AsymSeries::term(0, 0, kGamma + logl(2.0L));
  h += AsymSeries::term(2, 0, 1.0L / 4);
  h += AsymSeries::term(4, 0, -1.0L / 48);
  h += AsymSeries::term(8, 0, 1.0L / 1920);
  return h;
}

// Asymptotic model of one summand, built from the same ingredients the
// accumulators use but through their classical expansions.
AsymSeries summand_model(const SeriesId& id, const Needs& need) {
  AsymSeries f = binom_ratio_series(need.inverse);
  for (int s : need.h_orders) f = f * harmonic_series(s);
  if (need.h2n) f = f * harmonic_2n_series();
  if (need.on) {
    AsymSeries on = harmonic_2n_series();
    AsymSeries half = harmonic1_series();
    half.scale(-0.5L);
    on += half;
    f = f * on;
  }
  if (need.star_m > 0) {
    std::vector<AsymSeries> x;
    real_t fact = 1;
    for (int k = 1; k <= need.star_m; ++k) {
      AsymSeries xk = harmonic_series(k);
      xk.scale(fact);
      x.push_back(xk);
      fact *= k;
    }
    // complete Bell recurrence over the series ring
    std::vector<AsymSeries> y{AsymSeries::one()};
    std::vector<std::vector<real_t>> binom(need.star_m);
    for (int i = 0; i < need.star_m; ++i) {
      binom[i].assign(i + 1, 1);
      for (int j = 1; j < i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
    }
    for (int k = 1; k <= need.star_m; ++k) {
      AsymSeries acc;
      for (int j = 0; j < k; ++j) {
        AsymSeries t = x[k - 1 - j] * y[j];
        t.scale(binom[k - 1][j]);
        acc += t;
      }
      y.push_back(acc);
    }
    AsymSeries star = y[need.star_m];
    star.scale(1 / (fact /* = m! */));
    f = f * star;
  }
  return f.shift(2 * id.p + (need.inverse ? -1 : 1));
}

// Euler-Maclaurin tail sum_{n>N} f(n) for the modeled summand.
real_t model_tail(const AsymSeries& f, real_t N) {
  AsymSeries d1 = f.derivative();
  AsymSeries d3 = d1.derivative().derivative();
  AsymSeries d5 = d3.derivative().derivative();
  return f.integral(N) - 0.5L * f.eval(N) - d1.eval(N) / 12 + d3.eval(N) / 720 -
         d5.eval(N) / 30240;
}

// Solves for the limit against basis {1} + {ln^k N / N^(e+d)} on the given
// nodes; rows ordered by increasing N. Gaussian elimination with partial
// pivoting and column scaling.
real_t ladder_solve(const std::vector<std::pair<real_t, real_t>>& nodes,  // (N, P(N))
                    real_t e, int log_max) {
  const int n = static_cast<int>(nodes.size());
  std::vector<std::pair<int, int>> basis;  // (d, k)
  for (int d = 0; d < n && static_cast<int>(basis.size()) < n - 1; ++d)
    for (int k = log_max; k >= 0 && static_cast<int>(basis.size()) < n - 1; --k)
      basis.emplace_back(d, k);

  std::vector<std::vector<real_t>> a(n, std::vector<real_t>(n + 1, 0));
  for (int r = 0; r < n; ++r) {
    real_t N = nodes[r].first, lnN = logl(N);
    a[r][0] = 1;
    for (int b = 0; b < n - 1; ++b) {
      auto [d, k] = basis[b];
      a[r][b + 1] = powl(lnN, k) * powl(N, -(e + d));
    }
    a[r][n] = nodes[r].second;
  }
  // column scaling
  std::vector<real_t> scale(n, 1);
  for (int c = 0; c < n; ++c) {
    real_t mx = 0;
    for (int r = 0; r < n; ++r) mx = std::max(mx, fabsl(a[r][c]));
    if (mx > 0) {
      scale[c] = mx;
      for (int r = 0; r < n; ++r) a[r][c] /= mx;
    }
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (fabsl(a[r][c]) > fabsl(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    if (a[c][c] == 0) continue;
    for (int r = c + 1; r < n; ++r) {
      real_t f = a[r][c] / a[c][c];
      for (int cc = c; cc <= n; ++cc) a[r][cc] -= f * a[c][cc];
    }
  }
  std::vector<real_t> x(n, 0);
  for (int r = n - 1; r >= 0; --r) {
    real_t acc = a[r][n];
    for (int c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
    x[r] = a[r][r] != 0 ? acc / a[r][r] : 0;
  }
  return x[0] / scale[0];
}

}  // namespace

OracleResult sum_series(const SeriesId& id, const OracleOptions& opts) {
  if (!id.convergent()) throw std::domain_error("sum_series: divergent series " + id.str());
  if (opts.n_max < 1) throw std::invalid_argument("sum_series: n_max must be positive");
  const Needs need = needs_of(id);
  const int node_count = APERY_ORACLE_NODES;

  OracleResult out;
  out.tail_warning = opts.n_max < (1L << (node_count + 2));

  TermState st(need);
  Kahan sum;
  std::vector<std::pair<real_t, real_t>> nodes;
  std::vector<long> node_at;
  for (int j = node_count - 1; j >= 1; --j) {
    long v = opts.n_max >> j;
    if (v >= 1 && (node_at.empty() || v > node_at.back())) node_at.push_back(v);
  }
  node_at.push_back(opts.n_max);

  real_t last_term = 0;
  std::size_t next_node = 0;
  for (long n = 1; n <= opts.n_max; ++n) {
    last_term = st.advance(n, need, id.p);
    sum.add(last_term);
    if (next_node < node_at.size() && n == node_at[next_node]) {
      nodes.emplace_back(static_cast<real_t>(n), sum.s);
      ++next_node;
    }
  }

  const real_t e = tail_exponent(id);
  const int L = log_order(id);
  const real_t N = static_cast<real_t>(opts.n_max);
  const AsymSeries model = summand_model(id, need);
  // how well the model matches the actually accumulated last term
  const real_t model_rel =
      fabsl(model.eval(N) - last_term) / std::max<real_t>(fabsl(last_term), 1e-30L);
  const real_t tail_model = model_tail(model, N);

  switch (opts.tail) {
    case TailMode::none:
      out.value = {sum.s, fabsl(tail_model) * (1 + 4 * model_rel) + 64 * kEps * fabsl(sum.s)};
      break;
    case TailMode::integral: {
      real_t err = fabsl(tail_model) * (4 * model_rel + 1e-12L) + 256 * kEps * fabsl(sum.s);
      out.value = {sum.s + tail_model, err};
      break;
    }
    case TailMode::richardson: {
      if (nodes.size() < 3) {
        out.value = {sum.s, fabsl(tail_model) * 2};
        out.tail_warning = true;
        break;
      }
      real_t full = ladder_solve(nodes, e, L);
      // dispersion over trailing node subsets gauges the ladder error
      std::vector<std::pair<real_t, real_t>> drop1(nodes.begin() + 1, nodes.end());
      std::vector<std::pair<real_t, real_t>> drop2(nodes.begin() + 2, nodes.end());
      real_t r1 = ladder_solve(drop1, e, L);
      real_t r2 = drop2.size() >= 3 ? ladder_solve(drop2, e, L) : r1;
      real_t spread = std::max(fabsl(full - r1), std::max(fabsl(full - r2), fabsl(r1 - r2)));
      real_t err = 2 * spread + 256 * kEps * fabsl(full);
      out.value = {full, err};
      break;
    }
  }
  return out;
}

Rational sum_series_exact_prefix(const SeriesId& id, int n_max) {
  if (!id.convergent()) throw std::domain_error("sum_series_exact_prefix: divergent series");
  if (n_max < 1 || n_max > 2000)
    throw std::invalid_argument("sum_series_exact_prefix: n_max out of budget (1..2000)");
  const Needs need = needs_of(id);

  Rational binom_ratio(1);
  std::vector<Rational> h(need.h_orders.size(), Rational(0));
  Rational h2n(0), on(0);
  std::vector<Rational> star_pow(need.star_m, Rational(0));
  Rational sum(0);
  BigInt mfact = factorial(need.star_m);

  for (int n = 1; n <= n_max; ++n) {
    if (need.inverse)
      binom_ratio *= Rational(2 * n, 2 * n - 1);
    else
      binom_ratio *= Rational(2 * n - 1, 2 * n);
    for (std::size_t i = 0; i < need.h_orders.size(); ++i) {
      BigInt den;
      mpz_ui_pow_ui(den.get_mpz_t(), n, need.h_orders[i]);
      h[i] += Rational(BigInt(1), den);
    }
    if (need.h2n) h2n += Rational(1, 2 * n - 1) + Rational(1, 2 * n);
    if (need.on) on += Rational(1, 2 * n - 1);
    Rational term = binom_ratio;
    if (need.star_m > 0) {
      BigInt fact(1), q(1);
      for (int k = 1; k <= need.star_m; ++k) {
        q *= n;
        star_pow[k - 1] += Rational(fact, q);
        fact *= k;
      }
      term *= bell_complete(star_pow, need.star_m) / Rational(mfact);
    }
    for (const auto& hv : h) term *= hv;
    if (need.h2n) term *= h2n;
    if (need.on) term *= on;
    BigInt np;
    mpz_ui_pow_ui(np.get_mpz_t(), n, id.p);
    sum += term / Rational(np);
  }
  return sum;
}

real_t oracle_default_tolerance(const SeriesId& id) {
  if (!needs_of(id).inverse && id.p == 1) return 1e-4L;
  return 1e-5L;
}

}  // namespace apery
