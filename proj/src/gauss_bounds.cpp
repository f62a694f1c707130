#include "hyperratio/gauss_bounds.hpp"

#include <cmath>
#include <limits>

#include "detail.hpp"
#include "hyperratio/confluent_bounds.hpp"

namespace hyperratio::gauss {

using detail::plus_hypot;

GaussParams::GaussParams(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
  require(a > 0 && b > 0 && c > 0, ErrorCode::Domain, "Gauss bounds need a, b, c > 0");
}

namespace {

void check_x(double x) { require(x > 0 && x < 1, ErrorCode::Domain, "Gauss bounds need 0 < x < 1"); }

}  // namespace

double lower_H(double a, double b, double c, double x) {
  const GaussParams p(a, b, c);
  check_x(x);
  return plus_hypot(c - p.d() * x, 4 * a * b * x * (1 - x));
}

double lambda(double a, double b, double c, double x) { return 2 * a * b / lower_H(a, b, c, x); }

double upper_H(double a, double b, double c, double x) {
  const GaussParams p(a, b, c);
  check_x(x);
  const double f = 4 * x * (1 - x);
  const double v = c - 1 - (p.d() - 2) * x;
  const double w = (p.d() + 2) * x - (c + 1);
  const double s = std::sqrt(w * w + (a + 1) * (b + 1) * f);
  if (v >= 0) return v + s;
  // s^2 - v^2 = 4[(2x-1)(dx-c) + (a+1)(b+1)x(1-x)]
  return (4 * (2 * x - 1) * (p.d() * x - c) + (a + 1) * (b + 1) * f) / (s - v);
}

double h_from_H(double a, double b, double H) { return 2 * a * b / H; }

LimitReport confluent_limit_check(double a, double b_ren, double x, const std::vector<double>& B_list) {
  require(a > 0 && b_ren > 0 && x > 0, ErrorCode::Domain, "limit check needs a, b, x > 0");
  LimitReport rep{a, b_ren, x, {}, std::numeric_limits<double>::quiet_NaN()};
  const double lam = confluent::lambda(a, b_ren, x);
  const auto ku = confluent::m_form_bounds(a, b_ren, x);
  for (double B : B_list) {
    require(B > x, ErrorCode::Domain, "B must exceed x");
    const double t = x / B;
    LimitRow r{B, std::fabs(lambda(a, B, b_ren, t) / B - lam), std::fabs(lower_H(a, B, b_ren, t) - ku.first),
               std::fabs(upper_H(a, B, b_ren, t) - ku.second), 0};
    r.gap = std::max({r.gap_lambda, r.gap_lower_H, r.gap_upper_H});
    rep.rows.push_back(r);
  }
  double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rep.rows) {
    if (!(r.gap > 0)) continue;
    const double lx = std::log(r.B), ly = std::log(r.gap);
    n += 1, sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly;
  }
  if (n >= 2) rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return rep;
}

std::vector<BoundDescriptor> catalog() {
  using Fn = double (*)(double, double, double, double);
  auto make = [](std::string id, RatioKind ratio, Side side, bool upper_condition, Fn fn, std::string provenance) {
    BoundDescriptor d;
    d.id = "gauss." + id;
    d.group = BoundGroup::Gauss;
    d.ratio = ratio;
    d.side = side;
    d.valid = [upper_condition](const Params& p) {
      if (p.size() != 3 || !(p[0] > 0 && p[1] > 0 && p[2] > 0)) return false;
      const GaussParams g(p[0], p[1], p[2]);
      return upper_condition ? g.upper_valid() : g.lower_valid();
    };
    d.eval = [fn](const Params& p, double x) { return fn(p[0], p[1], p[2], x); };
    d.provenance = std::move(provenance);
    return d;
  };
  return {
      make("lambda", RatioKind::GaussH, Side::Upper, false, lambda, "characteristic root of the Riccati equation for h"),
      make("lower_H", RatioKind::GaussBigH, Side::Lower, false, lower_H, "2ab/lambda"),
      make("upper_H", RatioKind::GaussBigH, Side::Upper, true, upper_H, "backward lift of lower_H"),
  };
}

}  // namespace hyperratio::gauss
