#include "hyperratio/riccati.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "detail.hpp"
#include "hyperratio/bessel_bounds.hpp"
#include "hyperratio/confluent_bounds.hpp"
#include "hyperratio/gauss_bounds.hpp"
#include "hyperratio/oracle.hpp"
#include "hyperratio/pcf_bounds.hpp"

namespace hyperratio::riccati {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

int sign(double v) { return (v > 0) - (v < 0); }

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
  return out;
}

std::vector<double> logspace(double lo, double hi, int n) { return Axis{lo, hi, n, Sampling::Log}.points(); }

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

double characteristic_root(const RiccatiProblem& p, double x) {
  const double a = p.a(x), b = p.b(x), c = p.c(x);
  if (!(a * c < 0)) fail(ErrorCode::SignConditionFailed, p.name + ": a(x) c(x) < 0 fails");
  // positive root of c l^2 + b l + a
  return c > 0 ? detail::plus_hypot(-b, -4 * a * c) / (2 * c) : detail::plus_hypot(b, -4 * a * c) / (-2 * c);
}

NullclineReport check_nullcline_conditions(const RiccatiProblem& p, const std::vector<double>& grid) {
  NullclineReport rep;
  rep.name = p.name;
  rep.verdict = Verdict::Pass;
  std::vector<double> xs;
  for (double x : grid)
    if (x > p.lo && x < p.hi) xs.push_back(x);
  std::sort(xs.begin(), xs.end());
  require(xs.size() >= 2, ErrorCode::Config, "nullcline check needs at least two interior grid points");
  rep.num_points = xs.size();

  std::vector<double> lam;
  for (double x : xs) {
    const int cs = sign(p.c(x));
    if (rep.c_sign == 0) rep.c_sign = cs;
    if (cs == 0 || cs != rep.c_sign) fail(ErrorCode::SignConditionFailed, p.name + ": c(x) changes sign");
    lam.push_back(characteristic_root(p, x));
  }
  int up = 0, down = 0, flat = 0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double d = lam[i] - lam[i - 1];
    const double noise = 8 * kEps * std::max(std::fabs(lam[i]), std::fabs(lam[i - 1]));
    (d > noise ? up : d < -noise ? down : flat)++;
  }
  rep.lambda_slope = down == 0 && up > 0 ? 1 : up == 0 && down > 0 ? -1 : 0;
  rep.theorem_case = rep.c_sign < 0 ? 1 : 2;
  if (rep.lambda_slope == 0) {
    rep.verdict = Verdict::Inconclusive;
    rep.message = "lambda is not monotone on the grid";
    return rep;
  }
  if (!p.endpoint_h_positive || !p.endpoint_slopes_agree) {
    rep.verdict = Verdict::Fail;
    rep.message = "endpoint hypotheses do not hold";
    return rep;
  }
  // case 1: h < lambda iff lambda increasing; case 2: h < lambda iff lambda decreasing
  const bool h_below = (rep.theorem_case == 1) == (rep.lambda_slope > 0);
  rep.implied_side = h_below ? Side::Upper : Side::Lower;
  if (flat > 0) rep.message = std::to_string(flat) + " lambda steps below rounding level";

  if (p.oracle) {
    rep.min_oracle_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < xs.size(); i += 4) {
      const Enclosure e = p.oracle(xs[i]);
      const double scale = std::fabs(e.mid());
      const double m = (h_below ? lam[i] - e.hi() : e.lo() - lam[i]) / scale;
      rep.min_oracle_margin = std::min(rep.min_oracle_margin, m);
      if (m < -(e.rel_width() + 1e-11)) ++rep.oracle_disagreements;
    }
    if (rep.oracle_disagreements > 0) {
      rep.verdict = Verdict::Fail;
      rep.message = "oracle contradicts the implied side";
    }
  }
  return rep;
}

namespace {

struct Delta {
  double value;
  double noise;
};

Delta residual_at(const ResidualProblem& p, double x, double lo, double hi) {
  double h = 1e-3 * std::max(1.0, std::fabs(x));
  if (std::isfinite(lo)) h = std::min(h, 0.25 * (x - lo));
  if (std::isfinite(hi)) h = std::min(h, 0.25 * (hi - x));
  auto central = [&](double step) { return (p.lambda(x + step) - p.lambda(x - step)) / (2 * step); };
  const double d1 = central(h), d2 = central(h / 2);
  const double deriv = (4 * d2 - d1) / 3;
  const double l = p.lambda(x);
  const double value = deriv - p.P(x, l);
  const double noise = std::fabs(deriv - d2) + 100 * kEps * (std::fabs(l) / h + p.term_scale(x, l) + std::fabs(deriv));
  return {value, noise};
}

}  // namespace

ResidualReport check_residual_sign(const ResidualProblem& p, const std::vector<double>& grid) {
  ResidualReport rep{p.name, Verdict::Pass, 0, std::numeric_limits<double>::infinity(), 0, 0, 0, 0, std::nullopt};
  require(p.endpoint_delta_sign == 1 || p.endpoint_delta_sign == -1, ErrorCode::Config,
          "endpoint sign of lambda - phi must be +1 or -1");
  rep.required_sign = p.endpoint == Endpoint::Left ? p.endpoint_delta_sign : -p.endpoint_delta_sign;
  std::vector<double> xs = grid;
  std::sort(xs.begin(), xs.end());
  require(xs.size() >= 2, ErrorCode::Config, "residual check needs at least two grid points");
  const double lo = xs.front() - (xs[1] - xs[0]), hi = xs.back() + (xs.back() - xs[xs.size() - 2]);
  const double dom_lo = p.lo, dom_hi = p.hi;

  double worst_ratio = std::numeric_limits<double>::infinity();
  std::size_t worst_i = 0;
  auto visit = [&](double x, std::size_t i) {
    const Delta d = residual_at(p, x, std::max(lo, dom_lo), std::min(hi, dom_hi));
    const double s = rep.required_sign * d.value;
    ++rep.num_points;
    if (s < -d.noise)
      ++rep.num_wrong_sign;
    else if (s <= d.noise)
      ++rep.num_within_noise;
    const double ratio = s / d.noise;
    if (ratio < worst_ratio) {
      worst_ratio = ratio;
      worst_i = i;
    }
    if (s < rep.min_margin) {
      rep.min_margin = s;
      rep.worst_x = x;
    }
  };
  for (std::size_t i = 0; i < xs.size(); ++i) visit(xs[i], i);
  // refine x4 on both sides of the point with the smallest noise-relative margin
  const double left = xs[worst_i > 0 ? worst_i - 1 : 0], right = xs[std::min(worst_i + 1, xs.size() - 1)];
  for (int k = 1; k < 8; ++k) {
    const double x = left + (right - left) * k / 8;
    if (x != xs[worst_i]) visit(x, worst_i);
  }
  if (rep.num_wrong_sign > 0)
    rep.verdict = Verdict::Fail;
  else if (rep.num_within_noise > 0)
    rep.verdict = Verdict::Inconclusive;
  else
    rep.certified_side = p.endpoint_delta_sign > 0 ? Side::Upper : Side::Lower;
  return rep;
}

double cubic_nullcline_root(double param, double x, CubicFamily family) {
  if (family == CubicFamily::Pcf) {
    require(param > 0.5, ErrorCode::Domain, "PCF cubic needs n > 1/2");
    const double f = std::sqrt((x * x + 4 * param) / 3);
    const double arg = x / (f * f * f);
    if (std::fabs(arg) > 1 + 1e-14) fail(ErrorCode::Discriminant, "cubic has a single real root");
    return pcf::cubic_root(param, x);
  }
  require(param >= 0 && x > 0, ErrorCode::Domain, "Bessel cubic needs nu >= 0, x > 0");
  const double g = std::sqrt(3 * (param * param + x * x) + 1);
  const double h = 9 * param * param - 4.5 * x * x - 1;
  if (std::fabs(h / (g * g * g)) > 1 + 1e-14) fail(ErrorCode::Discriminant, "cubic has a single real root");
  return bessel::cubic_root(param, x);
}

namespace {

// Riccati right-hand sides, as P(x, y) with the scale of their terms.
struct Family {
  std::function<double(double, double)> P, scale;
};

Family pcf_family(double n) {
  return {[n](double x, double y) { return y * y - x * y - (n - 0.5); },
          [n](double x, double y) { return y * y + std::fabs(x * y) + std::fabs(n - 0.5); }};
}

Family bessel_family(double nu) {
  return {[nu](double x, double y) { return 1 + (2 * nu - 1) / x * y - y * y; },
          [nu](double x, double y) { return 1 + std::fabs((2 * nu - 1) / x * y) + y * y; }};
}

Family kummer_family(double a, double b) {
  return {[a, b](double x, double y) { return a / x + (1 - b / x) * y - y * y; },
          [a, b](double x, double y) { return a / x + std::fabs((1 - b / x) * y) + y * y; }};
}

Family gauss_family(double a, double b, double c) {
  const double d = a + b + 1;
  return {[=](double x, double y) { return -(x * (1 - x) * y * y + (c - d * x) * y - a * b) / (x * (1 - x)); },
          [=](double x, double y) { return (x * (1 - x) * y * y + std::fabs((c - d * x) * y) + a * b) / (x * (1 - x)); }};
}

ResidualProblem residual(std::string name, const Family& f, ScalarFn lambda, Endpoint end, int delta_sign, double lo,
                         double hi, std::string note) {
  ResidualProblem p;
  p.name = std::move(name);
  p.P = f.P;
  p.term_scale = f.scale;
  p.lambda = std::move(lambda);
  p.endpoint = end;
  p.endpoint_delta_sign = delta_sign;
  p.lo = lo;
  p.hi = hi;
  p.endpoint_note = std::move(note);
  return p;
}

std::string label(const std::string& base, std::initializer_list<double> ps) {
  std::string s = base + "(";
  bool first = true;
  for (double v : ps) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    s += (first ? "" : ",") + std::string(buf);
    first = false;
  }
  return s + ")";
}

RiccatiProblem problem(std::string name, ScalarFn a, ScalarFn b, ScalarFn c, double lo, double hi) {
  RiccatiProblem p;
  p.name = std::move(name);
  p.a = std::move(a);
  p.b = std::move(b);
  p.c = std::move(c);
  p.lo = lo;
  p.hi = hi;
  return p;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Instance> build_registry() {
  std::vector<Instance> reg;
  const auto pcf_grid = linspace(-50, 50, 2000);
  const auto pos_grid = logspace(1e-3, 100, 2000);
  const auto unit_grid = [] {
    auto g = logspace(1e-4, 0.05, 500);
    auto lin = linspace(0.05, 0.9999, 1500);
    g.insert(g.end(), lin.begin() + 1, lin.end());
    return g;
  }();

  {
    Instance in{"pcf_b21", "nullcline of the PCF Riccati equation, c > 0, right endpoint", false, {}, {}, pcf_grid,
                Verdict::Pass, Side::Lower, "pcf.b21"};
    for (double n : {0.6, 1.0, 2.0, 5.0}) {
      RiccatiProblem p = problem(label("pcf_b21", {n}), [n](double) { return -(n - 0.5); }, [](double x) { return -x; },
                       [](double) { return 1.0; }, -kInf, kInf);
      p.endpoint_note = "Phi_n ~ x as x -> +inf: positive and increasing";
      p.oracle = [n](double x) { return pcf_ratio_enclosure(n, x).enclosure; };
      in.nullcline.push_back(p);
    }
    reg.push_back(std::move(in));
  }
  {
    Instance in{"pcf_b03", "residual sign of the (0,3) PCF bound", false, {}, {}, pcf_grid, Verdict::Pass, Side::Lower,
                "pcf.b03"};
    for (double n : {-0.4, 0.0, 1.0, 5.0})
      in.residual.push_back(residual(label("pcf_b03", {n}), pcf_family(n), [n](double x) { return pcf::b03(n, x); },
                                     Endpoint::Right, -1, -kInf, kInf,
                                     "lambda - Phi ~ -(n+1/2)(n+3/2)/x^5 as x -> +inf"));
    reg.push_back(std::move(in));
  }
  {
    Instance in{"bessel_nullcline", "nullcline of the Riccati equation for I_{nu-1}/I_nu, c < 0, left endpoint", false,
                {}, {}, pos_grid, Verdict::Pass, Side::Lower, "bessel.nullcline.I"};
    for (double nu : {0.75, 1.0, 2.0, 5.0}) {
      RiccatiProblem p = problem(label("bessel_nullcline", {nu}), [](double) { return 1.0; },
                       [nu](double x) { return (2 * nu - 1) / x; }, [](double) { return -1.0; }, 0, kInf);
      p.endpoint_note = "Phi ~ 2nu/x as x -> 0+: positive and decreasing, as is lambda";
      p.oracle = [nu](double x) { return bessel_i_ratio_enclosure(nu, x).enclosure; };
      in.nullcline.push_back(p);
    }
    reg.push_back(std::move(in));
  }
  auto kummer_nullcline = [&](std::string id, std::vector<std::pair<double, double>> ps, Side side, std::string cat) {
    Instance in{std::move(id), "characteristic root of the Kummer Riccati equation, c < 0, left endpoint", false, {}, {},
                pos_grid, Verdict::Pass, side, std::move(cat)};
    for (auto [a, b] : ps) {
      RiccatiProblem p = problem(label(in.id, {a, b}), [a](double x) { return a / x; }, [b](double x) { return 1 - b / x; },
                       [](double) { return -1.0; }, 0, kInf);
      p.endpoint_note = "h(0+) = a/b > 0; h' and lambda' at 0+ both have the sign of b - a";
      p.oracle = [a, b](double x) { return kummer_ratio_enclosure(a, b, x).enclosure; };
      in.nullcline.push_back(p);
    }
    reg.push_back(std::move(in));
  };
  kummer_nullcline("confluent_lambda", {{1, 2}, {0.3, 5}, {2, 5}}, Side::Upper, "confluent.lambda.b_gt_a");
  kummer_nullcline("confluent_lambda_b_lt_a", {{2, 1}, {5, 0.3}, {5, 2}}, Side::Lower, "confluent.lambda.b_lt_a");
  {
    Instance in{"confluent_b03", "residual sign of lambda(a-1,b-1,x) for a < b", false, {}, {}, pos_grid,
                Verdict::Pass, Side::Lower, "confluent.b03.a_lt_b"};
    for (auto [a, b] : {std::pair{2.0, 3.0}, {1.5, 5.0}, {2.0, 2.5}})
      in.residual.push_back(residual(label("confluent_b03", {a, b}), kummer_family(a, b),
                                     [a, b](double x) { return confluent::b03(a, b, x); }, Endpoint::Left, -1, 0,
                                     kInf, "h - lambda(a-1,b-1,x) -> (b-a)/((b-1)b) > 0 as x -> 0+"));
    reg.push_back(std::move(in));
  }
  {
    Instance in{"gauss_lambda", "characteristic root of the Gauss Riccati equation, c < 0, left endpoint", false, {}, {},
                unit_grid, Verdict::Pass, Side::Upper, "gauss.lambda"};
    for (auto [a, b, c] : {std::tuple{1.0, 1.0, 2.0}, {0.5, 5.0, 1.0}, {2.0, 2.0, 2.0}, {5.0, 5.0, 5.0}}) {
      const double d = a + b + 1;
      RiccatiProblem p = problem(label("gauss_lambda", {a, b, c}), [a, b](double x) { return a * b / (x * (1 - x)); },
                       [c, d](double x) { return -(c - d * x) / (x * (1 - x)); }, [](double) { return -1.0; }, 0, 1);
      p.endpoint_note = "h(0+) = ab/c > 0 and h'(0+) > 0; lambda increasing when c > ab/(a+b+1)";
      p.oracle = [a, b, c](double x) { return gauss_ratio_enclosure(a, b, c, x).enclosure; };
      in.nullcline.push_back(p);
    }
    reg.push_back(std::move(in));
  }

  // Non-bounds: each must FAIL.
  auto mutation = [&](std::string id, std::string what, ResidualProblem p, std::vector<double> grid) {
    Instance in{std::move(id), std::move(what), true, {}, {std::move(p)}, std::move(grid), Verdict::Fail,
                std::nullopt, ""};
    reg.push_back(std::move(in));
  };
  {
    const double n = 1;
    const Family f = pcf_family(n);
    mutation("mut.pcf.b03_gamma", "b03 with the x^2 coefficient under the root inflated by 10%",
             residual("mut.pcf.b03_gamma", f,
                      [n](double x) {
                        return ((n + 2.5) * x + (n + 0.5) * std::sqrt(1.1 * x * x + 4 * n + 6)) / (2 * (n + 1.5));
                      },
                      Endpoint::Right, -1, -kInf, kInf, "claimed lower"),
             pcf_grid);
    mutation("mut.pcf.b21_shift", "b21 + 0.05 claimed as lower bound",
             residual("mut.pcf.b21_shift", f, [n](double x) { return pcf::b21(n, x) + 0.05; }, Endpoint::Right, -1,
                      -kInf, kInf, "claimed lower"),
             pcf_grid);
    mutation("mut.pcf.b21_side", "b21 claimed as upper bound",
             residual("mut.pcf.b21_side", f, [n](double x) { return pcf::b21(n, x); }, Endpoint::Right, 1, -kInf,
                      kInf, "claimed upper"),
             pcf_grid);
  }
  {
    const double nu = 2;
    const Family f = bessel_family(nu);
    mutation("mut.bessel.gamma", "nullcline with the x^2 coefficient under the root inflated by 10%",
             residual("mut.bessel.gamma", f,
                      [nu](double x) { return bessel::bform(nu - 0.5, nu - 0.5, 1.1, x); }, Endpoint::Left, -1, 0,
                      kInf, "claimed lower"),
             pos_grid);
    mutation("mut.bessel.shift", "nullcline + 0.05 claimed as lower bound",
             residual("mut.bessel.shift", f, [nu](double x) { return bessel::nullcline_lower_I(nu, x) + 0.05; },
                      Endpoint::Left, -1, 0, kInf, "claimed lower"),
             pos_grid);
    mutation("mut.bessel.side", "nullcline claimed as upper bound",
             residual("mut.bessel.side", f, [nu](double x) { return bessel::nullcline_lower_I(nu, x); },
                      Endpoint::Left, 1, 0, kInf, "claimed upper"),
             pos_grid);
  }
  {
    const double a = 2, b = 3;
    const Family f = kummer_family(a, b);
    mutation("mut.confluent.b03_gamma", "lambda(a-1,b-1,x) with the 4ax term deflated by 10%",
             residual("mut.confluent.b03_gamma", f,
                      [a, b](double x) {
                        const double a1 = a - 1, b1 = b - 1;
                        return 2 * a1 / detail::plus_hypot(b1 - x, 3.6 * a1 * x);
                      },
                      Endpoint::Left, -1, 0, kInf, "claimed lower"),
             pos_grid);
    mutation("mut.confluent.b03_shift", "lambda(a-1,b-1,x) + 0.05 claimed as lower bound",
             residual("mut.confluent.b03_shift", f, [a, b](double x) { return confluent::b03(a, b, x) + 0.05; },
                      Endpoint::Left, -1, 0, kInf, "claimed lower"),
             pos_grid);
    mutation("mut.confluent.b03_side", "lambda(a-1,b-1,x) claimed as upper bound",
             residual("mut.confluent.b03_side", f, [a, b](double x) { return confluent::b03(a, b, x); },
                      Endpoint::Left, 1, 0, kInf, "claimed upper"),
             pos_grid);
  }
  {
    const double a = 1, b = 1, c = 2;
    const Family f = gauss_family(a, b, c);
    mutation("mut.gauss.scale", "0.9 lambda claimed as upper bound",
             residual("mut.gauss.scale", f, [=](double x) { return 0.9 * gauss::lambda(a, b, c, x); }, Endpoint::Left,
                      1, 0, 1, "claimed upper"),
             unit_grid);
    mutation("mut.gauss.shift", "lambda - 0.05 claimed as upper bound",
             residual("mut.gauss.shift", f, [=](double x) { return gauss::lambda(a, b, c, x) - 0.05; },
                      Endpoint::Left, 1, 0, 1, "claimed upper"),
             unit_grid);
    mutation("mut.gauss.side", "lambda claimed as lower bound",
             residual("mut.gauss.side", f, [=](double x) { return gauss::lambda(a, b, c, x); }, Endpoint::Left, -1, 0,
                      1, "claimed lower"),
             unit_grid);
  }
  return reg;
}

}  // namespace

const std::vector<Instance>& registry() {
  static const std::vector<Instance> reg = build_registry();
  return reg;
}

const Instance& find_instance(const std::string& id) {
  for (const auto& in : registry())
    if (in.id == id) return in;
  fail(ErrorCode::UnknownId, "no Riccati instance " + id);
}

InstanceReport run_instance(const Instance& inst) {
  InstanceReport rep{inst.id, Verdict::Pass, inst.expected, false, {}, {}};
  auto merge = [&](Verdict v) {
    if (v == Verdict::Fail || rep.verdict == Verdict::Fail)
      rep.verdict = Verdict::Fail;
    else if (v == Verdict::Inconclusive)
      rep.verdict = Verdict::Inconclusive;
  };
  for (const auto& p : inst.nullcline) {
    NullclineReport r = check_nullcline_conditions(p, inst.grid);
    if (r.verdict == Verdict::Pass && inst.expected_side && r.implied_side != inst.expected_side) {
      r.verdict = Verdict::Fail;
      r.message = "implied side differs from the catalogued side";
    }
    merge(r.verdict);
    rep.nullcline.push_back(std::move(r));
  }
  for (const auto& p : inst.residual) {
    ResidualReport r = check_residual_sign(p, inst.grid);
    if (r.verdict == Verdict::Pass && inst.expected_side && r.certified_side != inst.expected_side) r.verdict = Verdict::Fail;
    merge(r.verdict);
    rep.residual.push_back(std::move(r));
  }
  rep.as_expected = rep.verdict == inst.expected;
  return rep;
}

}  // namespace hyperratio::riccati
