#include "hyperratio/bessel_bounds.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "detail.hpp"

namespace hyperratio::bessel {

namespace {

constexpr double kPi = std::numbers::pi;

void need(bool ok, const char* what) { require(ok, ErrorCode::Domain, what); }

// nu^2 - d^2 without cancellation; callers guarantee nu >= |d| up to rounding.
double diff_squares(double nu, double d) {
  const double v = (nu - std::fabs(d)) * (nu + std::fabs(d));
  return v < 0 && v > -1e-15 ? 0.0 : v;
}

bool lambda_in(double lambda, double lo, double hi) { return lambda >= lo && lambda <= hi; }

struct Trig {
  double g, theta;
};

Trig trig_parts(double nu, double x) {
  const double g = std::sqrt(3 * (nu * nu + x * x) + 1);
  const double h = 9 * nu * nu - 4.5 * x * x - 1;
  return {g, detail::clamped_acos(h / (g * g * g)) / 3};
}

}  // namespace

double bform(double alpha, double beta, double gamma2, double x) {
  need(x > 0, "x must be positive");
  const double s = std::sqrt(beta * beta + gamma2 * x * x);
  if (alpha >= 0) return (alpha + s) / x;
  // alpha + s = (beta^2 - alpha^2 + gamma2 x^2)/(s - alpha)
  const double ab = (std::fabs(beta) - std::fabs(alpha)) * (std::fabs(beta) + std::fabs(alpha));
  return (ab + gamma2 * x * x) / ((s - alpha) * x);
}

double lower_I(double lambda, double nu, double x) {
  need(lambda_in(lambda, 0, 0.5) && nu >= 0.5 - lambda, "lower_I needs lambda in [0,1/2], nu >= 1/2 - lambda");
  const double beta = std::sqrt(2 * lambda) + std::sqrt(diff_squares(nu, lambda - 0.5));
  return bform(nu - 0.5 - lambda, beta, 1, x);
}

double upper_K(double lambda, double nu, double x) {
  need(lambda_in(lambda, 0, 0.5) && nu >= 0.5 - lambda, "upper_K needs lambda in [0,1/2], nu >= 1/2 - lambda");
  const double beta = -std::sqrt(2 * lambda) + std::sqrt(diff_squares(nu, lambda - 0.5));
  return bform(nu + 0.5 + lambda, beta, 1, x);
}

double upper_I(double lambda, double nu, double x) {
  need(lambda_in(lambda, 0.5, 2) && nu >= 0, "upper_I needs lambda in [1/2,2], nu >= 0");
  const double den = nu - lambda + 2 * std::sqrt(2 * lambda) - 1;
  require(den > 0, ErrorCode::NonpositiveC, "upper_I coefficient denominator");
  return bform(nu - lambda, nu + lambda, (nu + lambda) / den, x);
}

double lower_K(double lambda, double nu, double x) {
  need(lambda_in(lambda, 0.5, 2) && nu >= lambda, "lower_K needs lambda in [1/2,2], nu >= lambda");
  double c = 1;
  if (lambda != 0.5) {
    const double den = nu + lambda - 2 * std::sqrt(2 * lambda) + 1;
    require(den > 0, ErrorCode::NonpositiveC, "lower_K coefficient denominator");
    c = (nu - lambda) / den;
  }
  return bform(nu + lambda, nu - lambda, c, x);
}

const std::vector<BestFormRow>& best_form_rows() {
  static const std::vector<BestFormRow> rows = {
      {"I.(2,1)", RatioKind::BesselI, Side::Lower, {2, 1}, 0, false, 0.5},
      {"I.(0,3)", RatioKind::BesselI, Side::Lower, {0, 3}, 0.5, false, 0},
      {"I.(1,2)", RatioKind::BesselI, Side::Upper, {1, 2}, 0, false, 0.5},
      {"I.(3,0)", RatioKind::BesselI, Side::Upper, {3, 0}, 0, false, 2},
      {"K.(2,1)", RatioKind::BesselK, Side::Upper, {2, 1}, 0, false, 0.5},
      {"K.(0,3)", RatioKind::BesselK, Side::Upper, {0, 3}, 0.5, true, 0},
      {"K.(1,2)", RatioKind::BesselK, Side::Lower, {1, 2}, 0.5, true, 0.5},
      {"K.(3,0)", RatioKind::BesselK, Side::Lower, {3, 0}, 2, false, 2},
  };
  return rows;
}

namespace {

const BestFormRow& find_row(const std::string& id) {
  for (const auto& r : best_form_rows())
    if (r.id == id) return r;
  fail(ErrorCode::UnknownId, "no best-form row " + id);
}

}  // namespace

bool best_form_valid(const BestFormRow& row, double nu) { return row.strict ? nu > row.nu_min : nu >= row.nu_min; }

double best_form_bound(const std::string& row_id, double nu, double x) {
  const BestFormRow& row = find_row(row_id);
  need(best_form_valid(row, nu), "nu outside the row's range");
  if (row_id == "I.(2,1)") return bform(nu - 1, nu + 1, 1, x);
  if (row_id == "I.(0,3)") return bform(nu - 0.5, std::sqrt(diff_squares(nu, 0.5)), 1, x);
  if (row_id == "I.(1,2)") return bform(nu - 0.5, nu + 0.5, 1, x);
  if (row_id == "I.(3,0)") return bform(nu - 2, nu + 2, (nu + 2) / (nu + 1), x);
  if (row_id == "K.(2,1)") return bform(nu + 1, nu - 1, 1, x);
  if (row_id == "K.(0,3)") return bform(nu + 0.5, std::sqrt(diff_squares(nu, 0.5)), 1, x);
  if (row_id == "K.(1,2)") return bform(nu + 0.5, nu - 0.5, 1, x);
  return bform(nu + 2, nu - 2, (nu - 2) / (nu - 1), x);
}

double best_form_family_value(const std::string& row_id, double nu, double x) {
  const BestFormRow& row = find_row(row_id);
  const bool is_i = row.ratio == RatioKind::BesselI;
  if (is_i) return row.side == Side::Lower ? lower_I(row.lambda, nu, x) : upper_I(row.lambda, nu, x);
  return row.side == Side::Upper ? upper_K(row.lambda, nu, x) : lower_K(row.lambda, nu, x);
}

std::pair<double, double> gapk_bounds(double nu, double x) {
  need(nu >= 0.5 && x > 0, "gapk bounds need nu >= 1/2, x > 0");
  const double lo_rad = nu * nu + x * (x - 1);
  require(lo_rad >= 0, ErrorCode::RadicandNegative, "gapk radicand");
  return {nu + std::sqrt(lo_rad), nu + std::sqrt(nu * nu + x * (x + 1))};
}

double i_bound_23(double nu, double x) {
  need(nu > 0 && x > 0, "i_bound_23 needs nu > 0, x > 0");
  const double m = nu + 1;
  return 2 * nu / x + x / (m + std::sqrt(m * m + x * (x - 1)));
}

double iterated_riccati_bound(int alpha, double nu, double x) {
  need(alpha == 0 || alpha == 2, "alpha must be 0 or 2");
  need(alpha == 0 ? nu >= 0.5 : nu >= 0, "iterated Riccati bound outside its nu range");
  need(x > 0, "x must be positive");
  const double lambda = nu + (alpha - 1) / 2.0;
  const double delta = (nu - 0.5) + lambda / (2 * std::sqrt(lambda * lambda + x * x));
  return bform(delta, delta, 1, x);
}

double nullcline_lower_I(double nu, double x) {
  need(nu >= 0.5 && x > 0, "nullcline bound needs nu >= 1/2, x > 0");
  return bform(nu - 0.5, nu - 0.5, 1, x);
}

double cubic_root(double nu, double x) {
  need(nu >= 0 && x > 0, "cubic root needs nu >= 0, x > 0");
  const Trig t = trig_parts(nu, x);
  double psi = 2 * t.g / 3 * std::cos(t.theta) - 1.0 / 3;
  const double q = nu * nu + x * x;
  for (int i = 0; i < 2; ++i) {
    const double p = ((psi + 1) * psi - q) * psi - nu * nu;
    const double dp = (3 * psi + 2) * psi - q;
    if (dp <= 0) break;
    psi -= p / dp;
  }
  return psi;
}

double trig_upper_I(double nu, double x) { return (cubic_root(nu, x) + nu) / x; }

double trig_upper_Kratio(double nu, double x) {
  need(nu >= 0 && x > 0, "trig_upper_Kratio needs nu >= 0, x > 0");
  const Trig t = trig_parts(nu, x);
  double w = 2 * t.g / 3 * std::cos(t.theta - kPi / 3) - (nu - 1.0 / 3);
  // w is a root of w^3 + (3nu-1)w^2 + (2nu^2-2nu-x^2)w - nu x^2 (psi = -nu - w in
  // the cubic above); the trigonometric value loses digits to cancellation when
  // w << nu, so polish it on the shifted cubic.
  const double c2 = 3 * nu - 1, c1 = 2 * nu * nu - 2 * nu - x * x, c0 = -nu * x * x;
  for (int i = 0; i < 3; ++i) {
    const double p = ((w + c2) * w + c1) * w + c0;
    const double dp = (3 * w + 2 * c2) * w + c1;
    if (dp <= 0) break;
    w -= p / dp;
  }
  return w / x;
}

ProductBounds product_bounds(double nu, double x) {
  need(nu >= 0 && x > 0, "product bounds need nu >= 0, x > 0");
  const Trig t = trig_parts(nu, x);
  return {std::sqrt(3.0) / (2 * t.g * std::sin(t.theta + kPi / 3)), 1 / (2 * std::sqrt(x * x + nu * nu + 1.0 / 3))};
}

std::vector<double> lambda_grid(double lo, double hi, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(i == count - 1 ? hi : lo + (hi - lo) * i / (count - 1));
  return out;
}

std::vector<BoundDescriptor> catalog() {
  std::vector<BoundDescriptor> out;
  auto add = [&](std::string id, RatioKind ratio, Side side, std::optional<Accuracy> acc,
                 std::function<bool(double)> valid, std::function<double(double, double)> fn,
                 std::string provenance) {
    BoundDescriptor d;
    d.id = "bessel." + id;
    d.group = BoundGroup::Bessel;
    d.ratio = ratio;
    d.side = side;
    d.accuracy = acc;
    d.valid = [valid](const Params& p) { return p.size() == 1 && valid(p[0]); };
    d.eval = [fn](const Params& p, double x) { return fn(p[0], x); };
    d.provenance = std::move(provenance);
    out.push_back(std::move(d));
    return &out.back();
  };
  auto label = [](const char* fam, double l) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s(%.2f)", fam, l);
    return std::string(buf);
  };

  for (double l : lambda_grid(0, 0.5)) {
    add(label("lower_I", l), RatioKind::BesselI, Side::Lower, std::nullopt,
        [l](double nu) { return nu >= 0.5 - l; }, [l](double nu, double x) { return lower_I(l, nu, x); },
        "one-parameter lower family for I ratios");
    BoundDescriptor* uk = add(label("upper_K", l), RatioKind::BesselK, Side::Upper, std::nullopt,
                              [l](double nu) { return nu >= 0.5 - l; },
                              [l](double nu, double x) { return upper_K(l, nu, x); },
                              "one-parameter upper family for K ratios");
    if (l == 0) uk->equality = [](const Params& p) { return p[0] == 0.5; };
  }
  for (double l : lambda_grid(0.5, 2)) {
    add(label("upper_I", l), RatioKind::BesselI, Side::Upper, std::nullopt, [](double nu) { return nu >= 0; },
        [l](double nu, double x) { return upper_I(l, nu, x); }, "one-parameter upper family for I ratios");
    BoundDescriptor* lk = add(label("lower_K", l), RatioKind::BesselK, Side::Lower, std::nullopt,
                              [l](double nu) { return nu >= l; },
                              [l](double nu, double x) { return lower_K(l, nu, x); },
                              "one-parameter lower family for K ratios");
    if (l == 0.5) lk->equality = [](const Params& p) { return p[0] == 0.5; };
  }
  for (const auto& row : best_form_rows()) {
    const std::string id = row.id;
    BoundDescriptor* d = add(id, row.ratio, row.side, row.accuracy,
                             [row](double nu) { return best_form_valid(row, nu); },
                             [id](double nu, double x) { return best_form_bound(id, nu, x); },
                             "best (alpha,beta,gamma) form at the stated endpoint orders");
    d->id = "bessel." + std::string(1, id[0]) + ".best." + id.substr(2);
  }
  add("gapk.lower.I", RatioKind::BesselI, Side::Lower, Accuracy{1, 3}, [](double nu) { return nu >= 0.5; },
      [](double nu, double x) { return gapk_bounds(nu, x).first / x; }, "gap bound on x I_{nu-1}/I_nu");
  add("gapk.upper.I", RatioKind::BesselI, Side::Upper, std::nullopt, [](double nu) { return nu >= 0.5; },
      [](double nu, double x) { return gapk_bounds(nu, x).second / x; }, "gap bound on x I_{nu-1}/I_nu");
  add("gapk.lower.K", RatioKind::BesselK, Side::Lower, std::nullopt, [](double nu) { return nu >= 0.5; },
      [](double nu, double x) { return gapk_bounds(nu, x).first / x; }, "gap bound on x K_{nu+1}/K_nu");
  BoundDescriptor* gk = add("gapk.upper.K", RatioKind::BesselK, Side::Upper, Accuracy{1, 3},
                            [](double nu) { return nu >= 0.5; },
                            [](double nu, double x) { return gapk_bounds(nu, x).second / x; },
                            "gap bound on x K_{nu+1}/K_nu");
  gk->equality = [](const Params& p) { return p[0] == 0.5; };
  add("i_bound_23", RatioKind::BesselI, Side::Upper, Accuracy{2, 3}, [](double nu) { return nu > 0; }, i_bound_23,
      "backward lift of the lower gap bound");
  add("B0", RatioKind::BesselI, Side::Lower, Accuracy{1, 3}, [](double nu) { return nu >= 0.5; },
      [](double nu, double x) { return iterated_riccati_bound(0, nu, x); }, "second Riccati iterate, alpha = 0");
  add("B2", RatioKind::BesselI, Side::Upper, Accuracy{1, 2}, [](double nu) { return nu >= 0; },
      [](double nu, double x) { return iterated_riccati_bound(2, nu, x); }, "second Riccati iterate, alpha = 2");
  add("nullcline.I", RatioKind::BesselI, Side::Lower, Accuracy{0, 2}, [](double nu) { return nu >= 0.5; },
      nullcline_lower_I, "positive nullcline of the Riccati equation for I ratios");
  add("trig_upper_I", RatioKind::BesselI, Side::Upper, Accuracy{3, 2}, [](double nu) { return nu >= 0; },
      trig_upper_I, "largest root of the double-ratio cubic");
  add("trig_upper_Kratio", RatioKind::BesselKDown, Side::Upper, Accuracy{2, 2}, [](double nu) { return nu >= 0; },
      trig_upper_Kratio, "second root of the double-ratio cubic");
  add("product.trig", RatioKind::BesselIK, Side::Lower, std::nullopt, [](double nu) { return nu >= 0; },
      [](double nu, double x) { return product_bounds(nu, x).trig_lower; }, "sum of the two trigonometric bounds");
  add("product.alg", RatioKind::BesselIK, Side::Lower, std::nullopt, [](double nu) { return nu >= 0; },
      [](double nu, double x) { return product_bounds(nu, x).alg_lower; }, "algebraic minorant of product.trig");
  return out;
}

}  // namespace hyperratio::bessel
