#include <cmath>
#include <limits>

#include "doctest.h"
#include "hyperratio/riccati.hpp"

using hyperratio::Error;
using hyperratio::Side;
using namespace hyperratio::riccati;

TEST_CASE("characteristic root") {
  RiccatiProblem p;
  p.a = [](double) { return 2.0; };
  p.b = [](double x) { return x; };
  p.c = [](double) { return -1.0; };
  for (double x : {-3.0, 0.0, 4.0}) {
    const double l = characteristic_root(p, x);
    CHECK(l > 0);
    CHECK(std::fabs(2 + x * l - l * l) < 1e-12 * (1 + l * l));
  }
  p.a = [](double) { return 1.0; };
  p.c = [](double) { return 1.0; };
  CHECK_THROWS_AS(characteristic_root(p, 1.0), Error);
}

TEST_CASE("nullcline check derives the side of b21") {
  const Instance& inst = find_instance("pcf_b21");
  const InstanceReport rep = run_instance(inst);
  CHECK(rep.as_expected);
  CHECK(rep.verdict == Verdict::Pass);
  for (const auto& n : rep.nullcline) {
    CHECK(n.implied_side == inst.expected_side);
    CHECK(n.oracle_disagreements == 0);
  }
}

TEST_CASE("residual sign criterion on phi' = -phi") {
  // phi = e^-x on (0, inf). A lower bound below phi at +inf needs Delta > 0.
  ResidualProblem p;
  p.name = "toy";
  p.P = [](double, double phi) { return -phi; };
  p.term_scale = [](double, double phi) { return std::fabs(phi); };
  p.lambda = [](double x) { return std::exp(-x) - std::exp(-2 * x); };
  p.endpoint = Endpoint::Right;
  p.endpoint_delta_sign = -1;
  p.lo = 0;
  p.hi = std::numeric_limits<double>::infinity();
  std::vector<double> grid;
  for (double x = 0.1; x < 8; x *= 1.3) grid.push_back(x);
  const ResidualReport ok = check_residual_sign(p, grid);
  CHECK(ok.required_sign == 1);
  CHECK(ok.verdict == Verdict::Pass);
  CHECK(ok.certified_side == Side::Lower);
  // 1/(1+x) lies above e^-x but has Delta = x/(1+x)^2 > 0, the wrong sign for an upper bound
  p.lambda = [](double x) { return 1 / (1 + x); };
  p.endpoint_delta_sign = 1;
  const ResidualReport bad = check_residual_sign(p, grid);
  CHECK(bad.required_sign == -1);
  CHECK(bad.verdict == Verdict::Fail);
  CHECK(bad.num_wrong_sign > 0);
}

TEST_CASE("cubic nullcline roots") {
  CHECK(cubic_nullcline_root(1, 0, CubicFamily::Pcf) == doctest::Approx(1.0).epsilon(1e-15));
  for (double x : {0.3, 3.0}) {
    const double p = cubic_nullcline_root(2, x, CubicFamily::Bessel);
    CHECK(std::fabs(p * p * p + p * p - (4 + x * x) * p - 4) < 1e-11 * (1 + p * p * p));
  }
}

TEST_CASE("every registered instance yields its expected verdict") {
  for (const auto& inst : registry()) {
    CAPTURE(inst.id);
    const InstanceReport rep = run_instance(inst);
    CHECK(rep.as_expected);
    if (inst.is_mutation) CHECK(rep.expected == Verdict::Fail);
  }
  CHECK_THROWS_AS(find_instance("no.such.instance"), Error);
}
