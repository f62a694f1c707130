#include "hyperratio/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

namespace hyperratio {

namespace {

using LD = long double;
using W = WideEnclosure;

constexpr int kLibmUlps = 64;
constexpr LD kHalf = 0.5L;

W lit(LD v) { return W(v); }

W gamma_enclosure(LD v) { return W::around(std::tgamma(v), kLibmUlps); }
W exp2_enclosure(LD v) { return W::around(std::exp2(v), kLibmUlps); }

Enclosure narrow(const W& w) { return w.convert<double>(); }

Enclosure unbounded() {
  const double inf = std::numeric_limits<double>::infinity();
  return Enclosure(-inf, inf);
}

bool good(const W& w, double target) { return w.is_finite() && narrow(w).rel_width() <= target; }

std::optional<W> merge(const std::optional<W>& a, const std::optional<W>& b) {
  if (!a) return b;
  if (!b) return a;
  return intersect(*a, *b);
}

OracleResult finish(const std::optional<W>& w, int depth, std::string method, const OracleConfig& cfg) {
  OracleResult r;
  r.depth = depth;
  r.method = std::move(method);
  if (!w || !w->is_finite()) {
    r.enclosure = unbounded();
    r.converged = false;
    return r;
  }
  r.enclosure = narrow(*w);
  r.converged = r.enclosure.rel_width() <= cfg.target_rel_width;
  return r;
}

// Runs `attempt(depth)` with depth = cfg.depth, 2 cfg.depth, ... up to
// cfg.max_depth and returns the narrowest enclosure obtained.
template <class F>
std::optional<W> adaptive(const OracleConfig& cfg, int& used, F attempt) {
  std::optional<W> best;
  int d = cfg.depth;
  while (true) {
    try {
      W w = attempt(d);
      if (!best || (w.is_finite() && w.width() < best->width())) {
        best = w;
        used = d;
      }
      if (good(w, cfg.target_rel_width)) break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DivisionContainsZero && e.code() != ErrorCode::NegativeSqrt) throw;
    }
    if (d >= cfg.max_depth) break;
    d = std::min(2 * d, cfg.max_depth);
  }
  return best;
}

// (alpha + sqrt(beta^2 + gamma2 x^2)) / x
W bform(const W& alpha, const W& beta, const W& gamma2, const W& x) {
  return (alpha + sqrt(square(beta) + gamma2 * square(x))) / x;
}

// ---- parabolic cylinder ----------------------------------------------------

W pcf_seed_lower(LD n, const W& x) { return (x + sqrt(square(x) + lit(4 * n - 2))) * kHalf; }
W pcf_seed_upper(LD n, const W& x) { return (x + sqrt(square(x) + lit(4 * n + 2))) * kHalf; }

W pcf_seed_lower_alt(LD n, const W& x) {
  const W r = sqrt(square(x) + lit(4 * n + 6));
  return (lit(n + 2.5L) * x + lit(n + kHalf) * r) / lit(2 * (n + 1.5L));
}

W pcf_seed_upper_alt(LD n, const W& x) {
  const W r = sqrt(square(x) + lit(4 * n - 6));
  return lit(kHalf) * (lit(n - kHalf) / lit(n - 1.5L)) * (x + r);
}

W pcf_recurrence(LD n, LD x, int depth, bool alternate) {
  const W X(x);
  const LD tail = n + depth;
  W phi = alternate ? W::hull(pcf_seed_lower_alt(tail, X).lo(), pcf_seed_upper_alt(tail, X).hi())
                    : W::hull(pcf_seed_lower(tail, X).lo(), pcf_seed_upper(tail, X).hi());
  for (int j = depth - 1; j >= 0; --j) phi = X + lit(n + j + kHalf) / phi;
  return phi;
}

// U(a,x) up to the common positive factor sqrt(pi) exp(-x^2/4):
// U(a,0) M(a/2+1/4, 1/2, x^2/2) + U'(a,0) x M(a/2+3/4, 3/2, x^2/2).
W pcf_u_scaled(LD a, const W& x) {
  const W zr = square(x) * kHalf;
  const W z(std::max<LD>(0, zr.lo()), zr.hi());
  const W m1 = detail::kummer_m(a / 2 + 0.25L, kHalf, z);
  const W m2 = detail::kummer_m(a / 2 + 0.75L, 1.5L, z);
  const W u0 = lit(1) / (exp2_enclosure(a / 2 + 0.25L) * gamma_enclosure(0.75L + a / 2));
  const W u1 = lit(1) / (exp2_enclosure(a / 2 - 0.25L) * gamma_enclosure(0.25L + a / 2));
  return u0 * m1 - u1 * x * m2;
}

constexpr LD kPcfSeriesLimit = 140;

W pcf_series(LD n, LD x) { return pcf_u_scaled(n - 1, W(x)) / pcf_u_scaled(n, W(x)); }

// ---- modified Bessel -------------------------------------------------------

W bessel_i_recurrence(LD nu, LD x, int depth, bool alternate) {
  const W X(x);
  const LD t = nu + depth;
  W lo, hi;
  if (!alternate) {
    lo = bform(lit(t - 1), lit(t + 1), lit(1), X);
    hi = bform(lit(t - kHalf), lit(t + kHalf), lit(1), X);
  } else {
    lo = bform(lit(t - kHalf), sqrt(lit(t) * lit(t) - lit(0.25L)), lit(1), X);
    hi = bform(lit(t - 2), lit(t + 2), lit(t + 2) / lit(t + 1), X);
  }
  W phi = W::hull(lo.lo(), hi.hi());
  for (int j = depth - 1; j >= 0; --j) phi = lit(2 * (nu + j)) / X + lit(1) / phi;
  return phi;
}

long k_step_scale(LD x) { return std::max(1L, static_cast<long>(std::ceil(4 / std::sqrt(x)))); }

// K_{mu+1}/K_mu for mu >= -1/2. Uses the exact half-integer values when mu = +-1/2.
W k_ratio_direct(LD mu, LD x, long steps) {
  if (mu == kHalf) return lit(1) + lit(1) / W(x);
  if (mu == -kHalf) return lit(1);
  return detail::k_ratio_cf(mu, x, steps);
}

// Base value mu0 in [1/2, 3/2) from the continued fraction, then the upward
// recurrence K_{mu+2}/K_{mu+1} = 2(mu+1)/x + K_mu/K_{mu+1}.
W k_ratio_upward(LD nu, LD x, long steps) {
  if (nu < kHalf) return k_ratio_direct(nu, x, steps);
  const LD shifts = std::floor(nu - kHalf);
  LD mu = nu - shifts;
  W phi = k_ratio_direct(mu, x, steps);
  const W X(x);
  for (long i = 0; i < static_cast<long>(shifts); ++i) {
    phi = lit(2 * (mu + 1)) / X + lit(1) / phi;
    mu += 1;
  }
  return phi;
}

// ---- Kummer ----------------------------------------------------------------

W kummer_lambda(LD a, LD b, const W& x) {
  const W s = sqrt(square(x - lit(b)) + lit(4 * a) * x);
  if (x.lo() >= b) return (x - lit(b) + s) / (lit(2) * x);
  return lit(2 * a) / (lit(b) - x + s);
}

// 2a / (g + s), g = b - x - 1, s = sqrt((x - b - 1)^2 + 4(a+1)x); s^2 - g^2 = 4(b + ax).
W kummer_lambda_tilde(LD a, LD b, const W& x) {
  const W g = lit(b) - x - lit(1);
  const W s = sqrt(square(x - lit(b) - lit(1)) + lit(4 * (a + 1)) * x);
  if (g.lo() >= 0) return lit(2 * a) / (g + s);
  return lit(a) * (s - g) / (lit(2) * (lit(b) + lit(a) * x));
}

W kummer_recurrence(LD a, LD b, LD x, int depth, bool alternate) {
  const W X(x);
  const LD aN = a + depth, bN = b + depth;
  const W up = kummer_lambda(aN, bN, X);
  const W other = alternate ? kummer_lambda(aN - 1, bN - 1, X) : kummer_lambda_tilde(aN, bN, X);
  W h = W::hull(std::min(up.lo(), other.lo()), std::max(up.hi(), other.hi()));
  for (int k = depth - 1; k >= 0; --k) h = lit(a + k) / (lit(b + k) - X + X * h);
  return h;
}

W kummer_series_ratio(LD a, LD b, LD x) {
  const W X(x);
  return lit(a) / lit(b) * detail::kummer_m(a + 1, b + 1, X) / detail::kummer_m(a, b, X);
}

// ---- Gauss -----------------------------------------------------------------

W gauss_lower_big_h(LD a, LD b, LD c, const W& x) {
  const LD d = a + b + 1;
  const W f = lit(4) * x * (lit(1) - x);
  const W g = lit(c) - lit(d) * x;
  const W s = sqrt(square(g) + lit(a) * lit(b) * f);
  if (g.lo() >= 0) return g + s;
  return lit(a) * lit(b) * f / (s - g);
}

W gauss_upper_big_h(LD a, LD b, LD c, const W& x) {
  const LD d = a + b + 1;
  const W f = lit(4) * x * (lit(1) - x);
  const W v = lit(c - 1) - lit(d - 2) * x;
  const W u = lit(d + 2) * x - lit(c + 1);
  const W ab1 = lit(a + 1) * lit(b + 1);
  const W s = sqrt(square(u) + ab1 * f);
  if (v.lo() >= 0) return v + s;
  const W diff = lit(4) * ((lit(2) * x - lit(1)) * (lit(d) * x - lit(c)) + ab1 * x * (lit(1) - x));
  return diff / (s - v);
}

W gauss_recurrence(LD a, LD b, LD c, LD x, int depth, bool alternate) {
  const W X(x);
  const LD aN = a + depth, bN = b + depth, cN = c + depth;
  if (!(cN > aN * bN / (aN + bN + 1)))
    fail(ErrorCode::TailSeedInvalid, "tail parameters violate c > ab/(a+b+1); increase depth");
  const W two_ab = lit(2 * aN) * lit(bN);
  const W upper = two_ab / gauss_lower_big_h(aN, bN, cN, X);
  const W lower = alternate ? lit(aN) * lit(bN) / lit(cN) : two_ab / gauss_upper_big_h(aN, bN, cN, X);
  W h = W::hull(lower.lo(), upper.hi());
  const W xx = X * (lit(1) - X);
  for (int k = depth - 1; k >= 0; --k) {
    const LD ak = a + k, bk = b + k, ck = c + k;
    h = lit(ak) * lit(bk) / (lit(ck) - lit(ak + bk + 1) * X + xx * h);
  }
  return h;
}

W gauss_series_ratio(LD a, LD b, LD c, LD x) {
  return lit(a) * lit(b) / lit(c) * detail::gauss_f(a + 1, b + 1, c + 1, x) / detail::gauss_f(a, b, c, x);
}

constexpr LD kGaussRecurrenceLimit = 0.4L;

}  // namespace

void OracleConfig::validate() const {
  require(depth >= 1, ErrorCode::Config, "oracle depth must be >= 1");
  require(max_depth >= depth, ErrorCode::Config, "max_depth must be >= depth");
  require(target_rel_width > 0, ErrorCode::Config, "target_rel_width must be positive");
}

namespace detail {

WideEnclosure kummer_m(long double a, long double b, const WideEnclosure& z) {
  require(a >= 0 && b > 0 && z.lo() >= 0, ErrorCode::Domain, "series needs a >= 0, b > 0, x >= 0");
  W sum(1), term(1);
  const LD tiny = std::numeric_limits<LD>::epsilon() / 64;
  for (long k = 0; k < 2000000; ++k) {
    const LD ratio_cap = std::max<LD>(1, (a + k) / (b + k));
    const LD rho = step_up(static_cast<LD>(z.hi()) * ratio_cap / (k + 1), 4);
    if (rho < 0.5L) {
      const W tail = term * (lit(rho) / (lit(1) - lit(rho)));
      if (tail.hi() <= tiny * sum.lo() || term.hi() == 0) return W(sum.lo(), step_up(sum.hi() + tail.hi()));
    }
    term = term * lit(a + k) / lit(b + k) * z / lit(k + 1);
    sum = sum + term;
    if (!sum.is_finite()) fail(ErrorCode::NoConvergence, "Kummer series overflow");
  }
  fail(ErrorCode::NoConvergence, "Kummer series did not meet its tail bound");
}

WideEnclosure gauss_f(long double a, long double b, long double c, long double x) {
  require(a >= 0 && b >= 0 && c > 0 && x >= 0 && x < 1, ErrorCode::Domain,
          "Gauss series needs a, b >= 0, c > 0, 0 <= x < 1");
  W sum(1), term(1);
  const W X(x);
  const LD tiny = std::numeric_limits<LD>::epsilon() / 64;
  for (long k = 0; k < 2000000; ++k) {
    const LD rho = step_up(x * std::max<LD>(1, (a + k) / (k + 1)) * std::max<LD>(1, (b + k) / (c + k)), 4);
    if (rho < 1) {
      const W tail = term * (lit(rho) / (lit(1) - lit(rho)));
      if (tail.hi() <= tiny * sum.lo() || term.hi() == 0) return W(sum.lo(), step_up(sum.hi() + tail.hi()));
    }
    term = term * lit(a + k) * lit(b + k) / (lit(c + k) * lit(k + 1)) * X;
    sum = sum + term;
  }
  fail(ErrorCode::NoConvergence, "Gauss series did not meet its tail bound");
}

// K_{mu+1}(x)/K_mu(x) = (mu + 1/2 + x + (mu^2 - 1/4) r_0)/x with
// r_k = U(mu+3/2+k, 2mu+1, 2x)/U(mu+1/2+k, 2mu+1, 2x) in (0, 1/(mu+1/2+k)).
WideEnclosure k_ratio_cf(long double mu, long double x, long steps) {
  require(mu > -kHalf && x > 0, ErrorCode::Domain, "continued fraction needs mu > -1/2, x > 0");
  const W X(x);
  W r(0, step_up(1 / (mu + kHalf + steps)));
  for (long k = steps; k >= 1; --k) {
    const LD kk = k + kHalf;
    const W c = square(lit(kk)) - square(lit(mu));
    r = lit(1) / (lit(2 * k) + lit(2) * X - c * r);
  }
  return (lit(mu + kHalf) + X + (lit(mu) * lit(mu) - lit(0.25L)) * r) / X;
}

}  // namespace detail

OracleResult pcf_ratio_enclosure(double n, double x, const OracleConfig& cfg) {
  cfg.validate();
  if (!(n > 0.5) || !std::isfinite(n) || !std::isfinite(x)) fail(ErrorCode::Domain, "pcf ratio needs n > 1/2");
  int used = 0;
  std::optional<W> rec, ser;
  if (x > 0) rec = adaptive(cfg, used, [&](int d) { return pcf_recurrence(n, x, d, cfg.alternate_seed); });
  std::string method = rec ? "recurrence" : "";
  if ((!rec || !good(*rec, cfg.target_rel_width)) && std::fabs(x) <= kPcfSeriesLimit) {
    try {
      ser = pcf_series(n, x);
      method = rec ? "recurrence+series" : "series";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DivisionContainsZero) throw;
    }
  }
  return finish(merge(rec, ser), ser && !rec ? 0 : used, method, cfg);
}

OracleResult pcf_ratio_enclosure_extended(double n, double x, const OracleConfig& cfg) {
  if (n > 0.5) return pcf_ratio_enclosure(n, x, cfg);
  if (!(n > -0.5) || !std::isfinite(n)) fail(ErrorCode::Domain, "extended pcf ratio needs n > -1/2");
  OracleResult r = pcf_ratio_enclosure(n + 1, x, cfg);
  // Phi_n = x + (n + 1/2)/Phi_{n+1}; both terms exact in binary64
  r.enclosure = Enclosure(x) + Enclosure(n + 0.5) / r.enclosure;
  r.converged = r.converged && r.enclosure.is_finite() && r.enclosure.rel_width() <= cfg.target_rel_width;
  r.method += "+step";
  return r;
}

OracleResult bessel_i_ratio_enclosure(double nu, double x, const OracleConfig& cfg) {
  cfg.validate();
  check_domain(RatioKind::BesselI, {nu}, x);
  int used = 0;
  auto w = adaptive(cfg, used, [&](int d) { return bessel_i_recurrence(nu, x, d, cfg.alternate_seed); });
  return finish(w, used, "recurrence", cfg);
}

namespace {

std::optional<W> k_ratio_wide(LD nu, LD x, const OracleConfig& cfg, int& used) {
  const long scale = k_step_scale(x);
  return adaptive(cfg, used, [&](int d) {
    const long steps = static_cast<long>(d) * scale;
    return cfg.alternate_seed ? k_ratio_direct(nu, x, steps) : k_ratio_upward(nu, x, steps);
  });
}

}  // namespace

OracleResult bessel_k_ratio_enclosure(double nu, double x, const OracleConfig& cfg) {
  cfg.validate();
  check_domain(RatioKind::BesselK, {nu}, x);
  int used = 0;
  auto w = k_ratio_wide(nu, x, cfg, used);
  return finish(w, used, cfg.alternate_seed ? "continued-fraction" : "continued-fraction+upward", cfg);
}

OracleResult bessel_k_down_ratio_enclosure(double nu, double x, const OracleConfig& cfg) {
  cfg.validate();
  check_domain(RatioKind::BesselKDown, {nu}, x);
  // K_{nu-1}/K_nu = 1/(K_nu/K_{nu-1}); for nu < 1 use K_{nu-1} = K_{1-nu}, i.e.
  // K_{nu-1}/K_nu = K_{mu+1}/K_mu with mu = -nu.
  int used = 0;
  std::optional<W> w;
  const LD v = nu;
  if (v >= 1 || v == kHalf) {
    auto inv = k_ratio_wide(v - 1, x, cfg, used);
    if (v == kHalf) inv = lit(1);
    if (inv) w = lit(1) / *inv;
  } else if (v < kHalf) {
    w = k_ratio_wide(-v, x, cfg, used);
  } else {
    auto inv = k_ratio_wide(v - 1, x, cfg, used);
    if (inv) w = lit(1) / *inv;
  }
  return finish(w, used, "continued-fraction", cfg);
}

OracleResult bessel_ik_product_enclosure(double nu, double x, const OracleConfig& cfg) {
  const OracleResult ri = bessel_i_ratio_enclosure(nu, x, cfg);
  const OracleResult rk = bessel_k_down_ratio_enclosure(nu, x, cfg);
  OracleResult r;
  r.method = "ratio-identity";
  r.depth = std::max(ri.depth, rk.depth);
  if (!ri.enclosure.is_finite() || !rk.enclosure.is_finite()) {
    r.enclosure = unbounded();
    return r;
  }
  const Enclosure sum = ri.enclosure + rk.enclosure;
  r.enclosure = 1.0 / (Enclosure(x) * sum);
  r.converged = r.enclosure.rel_width() <= cfg.target_rel_width;
  return r;
}

OracleResult kummer_ratio_enclosure(double a, double b, double x, const OracleConfig& cfg) {
  cfg.validate();
  check_domain(RatioKind::KummerAB1B1, {a, b}, x);
  if (a == b) return {Enclosure(1.0), true, 0, "exact"};
  int used = 0;
  std::optional<W> rec = adaptive(cfg, used, [&](int d) { return kummer_recurrence(a, b, x, d, cfg.alternate_seed); });
  std::string method = "recurrence";
  std::optional<W> ser;
  if (!rec || !good(*rec, cfg.target_rel_width)) {
    ser = kummer_series_ratio(a, b, x);
    method = "recurrence+series";
  }
  return finish(merge(rec, ser), used, method, cfg);
}

OracleResult kummer_a1b_enclosure(double a, double b, double x, const OracleConfig& cfg) {
  OracleResult r = kummer_ratio_enclosure(a, b, x, cfg);
  if (!r.enclosure.is_finite()) return r;
  r.enclosure = Enclosure(a) + Enclosure(x) * r.enclosure;
  r.converged = r.converged && r.enclosure.rel_width() <= cfg.target_rel_width;
  return r;
}

OracleResult kummer_a1b2_enclosure(double a, double b, double x, const OracleConfig& cfg) {
  cfg.validate();
  check_domain(RatioKind::KummerA1B2, {a, b}, x);
  const LD A = a, B = b;
  const W X(x);
  const W w = lit(A) / (lit(B) * lit(B + 1)) * detail::kummer_m(A + 1, B + 2, X) / detail::kummer_m(A, B, X);
  return finish(w, 0, "series", cfg);
}

OracleResult gauss_ratio_enclosure(double a, double b, double c, double x, const OracleConfig& cfg) {
  cfg.validate();
  check_domain(RatioKind::GaussH, {a, b, c}, x);
  int used = 0;
  std::optional<W> rec, ser;
  std::string method;
  if (x <= kGaussRecurrenceLimit) {
    rec = adaptive(cfg, used, [&](int d) { return gauss_recurrence(a, b, c, x, d, cfg.alternate_seed); });
    method = "recurrence";
  }
  if (!rec || !good(*rec, cfg.target_rel_width)) {
    ser = gauss_series_ratio(a, b, c, x);
    method = rec ? "recurrence+series" : "series";
  }
  return finish(merge(rec, ser), used, method, cfg);
}

OracleResult gauss_big_h_enclosure(double a, double b, double c, double x, const OracleConfig& cfg) {
  OracleResult r = gauss_ratio_enclosure(a, b, c, x, cfg);
  if (!r.enclosure.is_finite()) return r;
  r.enclosure = (Enclosure(2.0) * Enclosure(a) * Enclosure(b)) / r.enclosure;
  r.converged = r.enclosure.rel_width() <= cfg.target_rel_width;
  return r;
}

OracleResult ratio_enclosure(const RatioSpec& s, const OracleConfig& cfg) {
  const Params& p = s.params;
  switch (s.kind) {
    case RatioKind::PcfPhi: return pcf_ratio_enclosure(p[0], s.x, cfg);
    case RatioKind::BesselI: return bessel_i_ratio_enclosure(p[0], s.x, cfg);
    case RatioKind::BesselK: return bessel_k_ratio_enclosure(p[0], s.x, cfg);
    case RatioKind::BesselKDown: return bessel_k_down_ratio_enclosure(p[0], s.x, cfg);
    case RatioKind::BesselIK: return bessel_ik_product_enclosure(p[0], s.x, cfg);
    case RatioKind::KummerAB1B1: return kummer_ratio_enclosure(p[0], p[1], s.x, cfg);
    case RatioKind::KummerA1B: return kummer_a1b_enclosure(p[0], p[1], s.x, cfg);
    case RatioKind::KummerA1B2: return kummer_a1b2_enclosure(p[0], p[1], s.x, cfg);
    case RatioKind::GaussH: return gauss_ratio_enclosure(p[0], p[1], p[2], s.x, cfg);
    case RatioKind::GaussBigH: return gauss_big_h_enclosure(p[0], p[1], p[2], s.x, cfg);
  }
  fail(ErrorCode::Domain, "unknown ratio kind");
}

SeriesValue kummer_series(double a, double b, double x, double tol) {
  require(tol > 0, ErrorCode::Config, "tol must be positive");
  const W w = detail::kummer_m(a, b, W(static_cast<LD>(x)));
  const Enclosure e = narrow(w);
  const double v = e.mid();
  const double err = std::max(e.hi() - v, v - e.lo());
  if (err > tol * std::max(1.0, std::fabs(v))) fail(ErrorCode::NoConvergence, "Kummer series error above tolerance");
  return {v, err};
}

SeriesValue gauss_series(double a, double b, double c, double x, double tol) {
  require(tol > 0, ErrorCode::Config, "tol must be positive");
  const W w = detail::gauss_f(a, b, c, x);
  const Enclosure e = narrow(w);
  const double v = e.mid();
  const double err = std::max(e.hi() - v, v - e.lo());
  if (err > tol * std::max(1.0, std::fabs(v))) fail(ErrorCode::NoConvergence, "Gauss series error above tolerance");
  return {v, err};
}

}  // namespace hyperratio
