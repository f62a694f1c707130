#include "hyperratio/confluent_bounds.hpp"

#include <cmath>

#include "detail.hpp"
#include "hyperratio/bessel_bounds.hpp"

namespace hyperratio::confluent {

using detail::plus_hypot;

namespace {

void check(double a, double b, double x) {
  require(a > 0 && b > 0 && x > 0, ErrorCode::Domain, "confluent bounds need a, b, x > 0");
}

// b - x - 1 + sqrt((x - b - 1)^2 + 4(a+1)x), rationalized when b - x - 1 < 0.
double tilde_denominator(double a, double b, double x) {
  const double g = b - x - 1;
  const double s = std::sqrt((x - b - 1) * (x - b - 1) + 4 * (a + 1) * x);
  return g >= 0 ? g + s : 4 * (b + a * x) / (s - g);
}

}  // namespace

double lambda(double a, double b, double x) {
  check(a, b, x);
  if (a == b) return 1;
  return 2 * a / plus_hypot(b - x, 4 * a * x);
}

double lambda_tilde(double a, double b, double x) {
  check(a, b, x);
  if (a == b) return 1;
  return 2 * a / tilde_denominator(a, b, x);
}

double b03(double a, double b, double x) {
  require(a > 1 && b > 1, ErrorCode::Domain, "b03 needs a, b > 1");
  return lambda(a - 1, b - 1, x);
}

std::pair<double, double> a1b_bounds(double a, double b, double x) {
  const double l = lambda(a, b, x), lt = lambda_tilde(a, b, x);
  return {a + x * std::min(l, lt), a + x * std::max(l, lt)};
}

double eta(double a, double b, double x) {
  check(a, b, x);
  // (1 - 2b/(x + b + S))/x over a common denominator
  const double s = std::sqrt((x - b) * (x - b) + 4 * a * x);
  return plus_hypot(x - b, 4 * a * x) / (x * (x + b + s));
}

double eta_tilde(double a, double b, double x) {
  check(a, b, x);
  // a p/(x(a p + b(1-p))) with p = 2x/(x + b + 1 + S~) reduces to 2a/(2ax + b(b + 1 - x + S~))
  return 2 * a / (2 * a * x + b * plus_hypot(b + 1 - x, 4 * (a + 1) * x));
}

std::pair<double, double> m_form_bounds(double a, double b, double x) {
  check(a, b, x);
  return {plus_hypot(b - x, 4 * a * x), tilde_denominator(a, b, x)};
}

double eta_bessel_specialization_gap(double nu, double z) {
  require(nu > 0.5 && z > 0, ErrorCode::Domain, "specialization needs nu > 1/2 and z > 0");
  const double from_eta = 1 / (2 * z * eta(nu - 0.5, 2 * nu - 1, 2 * z));
  const double direct = bessel::nullcline_lower_I(nu, z);
  return std::fabs(from_eta - direct) / std::fabs(direct);
}

ConsistencyReport bessel_consistency_check(double nu, double z, const OracleConfig& cfg) {
  require(nu > 0.5 && z > 0, ErrorCode::Domain, "consistency check needs nu > 1/2, z > 0");
  const OracleResult k = kummer_a1b2_enclosure(nu - 0.5, 2 * nu - 1, 2 * z, cfg);
  const OracleResult i = bessel_i_ratio_enclosure(nu, z, cfg);
  if (!k.converged || !i.converged) fail(ErrorCode::NotConverged, "oracle did not reach the target width");
  ConsistencyReport r{nu, z, 2 * z * k.enclosure, 1.0 / i.enclosure, 0, 0, false};
  r.difference = std::fabs(r.kummer_side.mid() - r.bessel_side.mid());
  r.tolerance = r.kummer_side.width() + r.bessel_side.width() + 4e-16 * std::fabs(r.bessel_side.mid());
  r.consistent = r.difference <= r.tolerance;
  return r;
}

std::vector<BoundDescriptor> catalog() {
  using Fn = double (*)(double, double, double);
  auto make = [](std::string id, RatioKind ratio, Side side, std::optional<Accuracy> acc, std::function<bool(double, double)> valid,
                 std::function<double(double, double, double)> fn, std::string provenance) {
    BoundDescriptor d;
    d.id = "confluent." + id;
    d.group = BoundGroup::Confluent;
    d.ratio = ratio;
    d.side = side;
    d.accuracy = acc;
    d.valid = [valid](const Params& p) { return p.size() == 2 && valid(p[0], p[1]); };
    d.eval = [fn](const Params& p, double x) { return fn(p[0], p[1], x); };
    d.provenance = std::move(provenance);
    return d;
  };
  const auto ab = RatioKind::KummerAB1B1;
  const auto same = [](const Params& p) { return p[0] == p[1]; };
  std::vector<BoundDescriptor> out = {
      make("lambda.b_gt_a", ab, Side::Upper, Accuracy{1, 2}, [](double a, double b) { return b >= a; }, Fn(lambda),
           "characteristic root of the Riccati equation for h"),
      make("lambda.b_lt_a", ab, Side::Lower, Accuracy{1, 2}, [](double a, double b) { return b < a; }, Fn(lambda),
           "characteristic root of the Riccati equation for h"),
      make("lambda_tilde.b_gt_a", ab, Side::Lower, Accuracy{2, 1}, [](double a, double b) { return b >= a; },
           Fn(lambda_tilde), "backward lift of lambda through the three-term recurrence"),
      make("lambda_tilde.b_lt_a", ab, Side::Upper, Accuracy{2, 1}, [](double a, double b) { return b < a; },
           Fn(lambda_tilde), "backward lift of lambda through the three-term recurrence"),
      make("b03.a_lt_b", ab, Side::Lower, Accuracy{0, 3}, [](double a, double b) { return a > 1 && a <= b; }, Fn(b03),
           "characteristic root at shifted parameters"),
      make("b03.a_gt_b", ab, Side::Upper, Accuracy{0, 3}, [](double a, double b) { return b > 1 && a > b; }, Fn(b03),
           "characteristic root at shifted parameters"),
      make("a1b.lower", RatioKind::KummerA1B, Side::Lower, std::nullopt, [](double, double) { return true; },
           [](double a, double b, double x) { return a1b_bounds(a, b, x).first; },
           "affine transport a + x h of the lambda pair"),
      make("a1b.upper", RatioKind::KummerA1B, Side::Upper, std::nullopt, [](double, double) { return true; },
           [](double a, double b, double x) { return a1b_bounds(a, b, x).second; },
           "affine transport a + x h of the lambda pair"),
      make("eta", RatioKind::KummerA1B2, Side::Upper, Accuracy{0, 2}, [](double, double) { return true; }, Fn(eta),
           "composition of the lambda pair through the (a+1,b+2) identity"),
      make("eta_tilde", RatioKind::KummerA1B2, Side::Lower, Accuracy{1, 1}, [](double, double) { return true; },
           Fn(eta_tilde), "composition of the lambda pair through the (a+1,b+2) identity"),
  };
  for (auto& d : out)
    if (d.ratio != RatioKind::KummerA1B2) d.equality = same;
  return out;
}

}  // namespace hyperratio::confluent
