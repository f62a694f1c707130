#include "hyperratio/pcf_bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "detail.hpp"

namespace hyperratio::pcf {

using detail::plus_hypot;

namespace {

void need(bool ok, const char* what) { require(ok, ErrorCode::Domain, what); }

}  // namespace

double b21(double n, double x) {
  need(n > 0.5, "b21 needs n > 1/2");
  return 0.5 * plus_hypot(x, 4 * n - 2);
}

double b12(double n, double x) {
  need(n > -0.5, "b12 needs n > -1/2");
  return 0.5 * plus_hypot(x, 4 * n + 2);
}

double b30(double n, double x) {
  need(n > 1.5, "b30 needs n > 3/2");
  return 0.5 * (n - 0.5) / (n - 1.5) * plus_hypot(x, 4 * n - 6);
}

double b03(double n, double x) {
  need(n > -0.5, "b03 needs n > -1/2");
  const double A = n + 2.5, B = n + 0.5;
  const double s = std::sqrt(x * x + 4 * n + 6);
  if (x >= 0) return (A * x + B * s) / (2 * (n + 1.5));
  // A x + B s = 2 (2n+3)(B^2 - x^2)/(B s - A x)
  return 2 * (B * B - x * x) / (B * s - A * x);
}

double b40(double n, double x) {
  need(n > 2.5, "b40 needs n > 5/2");
  const double p = n - 1.5, q = n - 3.5;
  const double s = std::sqrt(x * x + 4 * n - 10);
  if (x <= 0) {
    const double den = p * s - q * x;
    require(den > 0, ErrorCode::DenominatorNonpositive, "b40 denominator");
    return 2 * (n - 0.5) * (n - 2.5) / den;
  }
  // p s - q x = 2 (2n-5)(x^2 + p^2)/(p s + q x)
  const double conj = p * s + q * x;
  require(conj > 0, ErrorCode::DenominatorNonpositive, "b40 denominator");
  return (n - 0.5) * conj / (2 * (x * x + p * p));
}

double cubic_root(double n, double x) {
  need(n > 0.5, "cubic root needs n > 1/2");
  const double f = std::sqrt((x * x + 4 * n) / 3);
  return f * std::cos(detail::clamped_acos(x / (f * f * f)) / 3);
}

double trig33(double n, double x) {
  double t = x / 2 + cubic_root(n, x);
  if (x < 0) {
    // t = x/2 + z is the largest root of t^3 - 3x/2 t^2 + (x^2/2 - n) t + (n - 1/2) x/2;
    // Newton polishing restores the digits lost to cancellation.
    for (int i = 0; i < 2; ++i) {
      const double p = ((t - 1.5 * x) * t + (x * x / 2 - n)) * t + (n - 0.5) * x / 2;
      const double dp = (3 * t - 3 * x) * t + (x * x / 2 - n);
      if (dp == 0) break;
      t -= p / dp;
    }
  }
  return t;
}

double alg33(double n, double x) {
  need(n > 0.5, "alg33 needs n > 1/2");
  const double g = (n + 0.5) * plus_hypot(x, 4 * n - 2) / plus_hypot(x, 4 * n + 2);
  const double r = std::sqrt(x * x / 4 + g);
  return x >= 0 ? x / 2 + r : g / (r - x / 2);
}

double lift_backward(const BoundFn& bound, double n, double x) {
  const double v = bound(n + 1, x);
  require(v > 0, ErrorCode::SignViolation, "backward lift needs a positive bound at n+1");
  return x + (n + 0.5) / v;
}

double lift_forward(const BoundFn& bound, double n, double x) {
  const double d = bound(n - 1, x) - x;
  require(d > 0, ErrorCode::SignViolation, "forward lift needs bound(n-1,x) > x");
  return (n - 0.5) / d;
}

double b24(double n, double x) {
  need(n > -0.5, "b24 needs n > -1/2");
  return lift_backward(trig33, n, x);
}

double b42(double n, double x) {
  need(n > 1.5, "b42 needs n > 3/2");
  return lift_forward(trig33, n, x);
}

std::vector<BoundDescriptor> catalog() {
  auto make = [](std::string id, Side side, Accuracy acc, double n_min, double (*fn)(double, double),
                 std::string provenance) {
    BoundDescriptor d;
    d.id = "pcf." + id;
    d.group = BoundGroup::Pcf;
    d.ratio = RatioKind::PcfPhi;
    d.side = side;
    d.accuracy = acc;
    d.valid = [n_min](const Params& p) { return p.size() == 1 && p[0] > n_min; };
    d.eval = [fn](const Params& p, double x) { return fn(p[0], x); };
    d.provenance = std::move(provenance);
    return d;
  };
  return {
      make("b21", Side::Lower, {2, 1}, 0.5, b21, "positive nullcline of the Riccati equation for Phi_n"),
      make("b12", Side::Upper, {1, 2}, -0.5, b12, "backward lift of b21"),
      make("b30", Side::Upper, {3, 0}, 1.5, b30, "forward lift of b21"),
      make("b03", Side::Lower, {0, 3}, -0.5, b03, "three-term match at +inf, certified by residual sign"),
      make("b40", Side::Lower, {4, 0}, 2.5, b40, "forward lift of b30"),
      make("trig33", Side::Lower, {3, 3}, 0.5, trig33, "largest root of the double-ratio cubic nullcline"),
      make("alg33", Side::Lower, {3, 3}, 0.5, alg33, "algebraic minorant of trig33"),
      make("b24", Side::Upper, {2, 4}, -0.5, b24, "backward lift of trig33"),
      make("b42", Side::Upper, {4, 2}, 1.5, b42, "forward lift of trig33"),
  };
}

namespace {

// +1 when every resolvable comparison agrees, -1 when one contradicts, 0 when
// nothing can be resolved.
struct Tally {
  int yes = 0, no = 0, undecided = 0;
  void add(int s) { (s > 0 ? yes : s < 0 ? no : undecided)++; }
  int verdict() const { return no > 0 ? -1 : yes > 0 ? 1 : 0; }
};

int compare(const Enclosure& a, const Enclosure& b) {
  if (a.lo() > b.hi()) return 1;
  if (a.hi() < b.lo()) return -1;
  return 0;
}

}  // namespace

DoubleRatioTower double_ratio_tower(double n, int k_max, const std::vector<double>& xs, const OracleConfig& cfg) {
  need(n > 0.5, "tower needs n > 1/2");
  require(k_max >= 1, ErrorCode::Config, "k_max must be >= 1");
  DoubleRatioTower t{n, k_max, xs, {}, {}, true};
  // level[j][i] = R^[k]_{n+j}(xs[i])
  std::vector<std::vector<Enclosure>> level(k_max, std::vector<Enclosure>(xs.size()));
  for (int j = 0; j < k_max; ++j)
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const OracleResult r = pcf_ratio_enclosure(n + j, xs[i], cfg);
      t.all_converged = t.all_converged && r.converged;
      level[j][i] = r.enclosure;
    }
  const double inf = std::numeric_limits<double>::infinity();
  auto safe_div = [inf](const Enclosure& a, const Enclosure& b) {
    if (!a.is_finite() || !b.is_finite() || b.contains_zero()) return Enclosure(-inf, inf);
    return a / b;
  };
  for (int k = 1; k <= k_max; ++k) {
    t.values.push_back(level[0]);
    if (k == k_max) break;
    std::vector<std::vector<Enclosure>> next(k_max - k, std::vector<Enclosure>(xs.size()));
    for (int j = 0; j + 1 < static_cast<int>(level.size()); ++j)
      for (std::size_t i = 0; i < xs.size(); ++i) next[j][i] = safe_div(level[j][i], level[j + 1][i]);
    level = std::move(next);
  }
  for (int k = 1; k <= k_max; ++k) {
    const auto& v = t.values[k - 1];
    Tally inc, below, above;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) inc.add(compare(v[i + 1], v[i]));
    if (k >= 2)
      for (std::size_t i = 0; i < v.size(); ++i) {
        below.add(compare(Enclosure(1.0), v[i]));
        above.add(compare(v[i], t.values[k - 2][i]));
      }
    t.flags.push_back({k, inc.verdict(), k >= 2 ? below.verdict() : 0, k >= 2 ? above.verdict() : 0, inc.undecided});
  }
  return t;
}

}  // namespace hyperratio::pcf
