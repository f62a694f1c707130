#include <cmath>
#include <map>

#include "doctest.h"
#include "hyperratio/bessel_bounds.hpp"
#include "hyperratio/confluent_bounds.hpp"
#include "hyperratio/gauss_bounds.hpp"
#include "hyperratio/pcf_bounds.hpp"
#include "hyperratio/verify.hpp"
#include "reference.hpp"

using namespace hyperratio;

namespace {

bool close(double a, double b, double rel) { return std::fabs(a - b) <= rel * std::fabs(b); }

struct Sweep {
  std::vector<Params> params;
  std::vector<double> xs;
};

Sweep sweep_for(RatioKind kind) {
  switch (family_of(kind)) {
    case Family::PcfU: return {{{1}, {1.5}, {2}, {3}, {5}}, {-8, -3, -1, 0, 0.5, 2, 6}};
    case Family::BesselI:
      if (kind == RatioKind::BesselI) return {{{0}, {0.5}, {1}, {2.5}, {4}}, {0.05, 0.5, 1, 3, 10, 25}};
      return {{{0.5}, {1.5}, {2.5}, {3.5}}, {0.05, 0.5, 1, 3, 10, 25}};
    case Family::BesselK: return {{{0.5}, {1.5}, {2.5}, {3.5}}, {0.05, 0.5, 1, 3, 10, 25}};
    case Family::Kummer:
      return {{{0.5, 1.5}, {1.5, 0.5}, {2, 3}, {3, 2}, {1.2, 1.2}, {4, 1.5}}, {0.05, 0.5, 2, 8, 20}};
    case Family::Gauss: return {{{0.5, 1.5, 2}, {2, 3, 4}, {1, 1, 2}, {3, 2, 1}, {0.5, 0.5, 0.2}}, {0.01, 0.2, 0.5, 0.8}};
  }
  return {};
}

}  // namespace

TEST_CASE("reference helpers reproduce closed forms") {
  CHECK(close(ref::pcf_ratio(1, 0), std::sqrt(2.0) * std::tgamma(1.25) / std::tgamma(0.75), 1e-11));
  CHECK(close(ref::ratio(RatioKind::BesselI, {0.5}, 2).value(), 1 / std::tanh(2.0), 1e-14));
  CHECK(close(ref::ratio(RatioKind::BesselK, {1.5}, 2).value(), 13.0 / 6.0, 1e-15));
  CHECK(close(ref::kummer_m(1, 1, 1), std::exp(1.0), 1e-15));
  CHECK(close(ref::gauss_f(1, 1, 2, 0.5), 2 * std::log(2.0), 1e-14));
}

TEST_CASE("every catalogued bound lies on its side of an independent reference") {
  std::size_t checked = 0;
  for (const auto& d : full_catalog()) {
    const Sweep s = sweep_for(d.ratio);
    for (const auto& p : s.params) {
      if (!d.is_valid(p)) continue;
      for (double x : s.xs) {
        if (!in_domain(d.ratio, p, x)) continue;
        const auto r = ref::ratio(d.ratio, p, x);
        if (!r) continue;
        const double b = d.evaluate(p, x);
        const double slack = 1e-9 * std::fabs(*r) + 1e-300;
        CAPTURE(d.id);
        CAPTURE(p[0]);
        CAPTURE(x);
        CAPTURE(b);
        CAPTURE(*r);
        if (d.side == Side::Lower) CHECK(b <= *r + slack);
        else CHECK(b >= *r - slack);
        ++checked;
      }
    }
  }
  CHECK(checked > 2000);
}

TEST_CASE("pcf closed forms") {
  CHECK(close(pcf::b21(1, 0), std::sqrt(0.5), 1e-15));
  CHECK(close(pcf::b12(1, 0), std::sqrt(1.5), 1e-15));
  // b21 solves l^2 - x l - (n - 1/2) = 0
  for (double x : {-5.0, 0.3, 7.0}) {
    const double l = pcf::b21(2, x);
    CHECK(std::fabs(l * l - x * l - 1.5) < 1e-12 * (1 + l * l));
  }
  // far left the ratio behaves like (n - 1/2)/|x|
  CHECK(close(pcf::b21(3, -1e4), 2.5e-4, 1e-6));
  const double root = pcf::cubic_root(1, 0);
  CHECK(close(root, 1.0, 1e-15));
  for (double x : {-3.0, 0.0, 2.0}) {
    const double z = pcf::cubic_root(2, x);
    CHECK(std::fabs(z * z * z - (x * x / 4 + 2) * z - x / 4) < 1e-12 * (1 + z * z * z));
  }
}

TEST_CASE("pcf lifts compose through the recurrence") {
  const pcf::BoundFn f = [](double n, double x) { return pcf::b21(n, x); };
  for (double x : {-2.0, 0.0, 3.0}) {
    CHECK(close(pcf::lift_backward(f, 2, x), x + 2.5 / pcf::b21(3, x), 1e-15));
    CHECK(close(pcf::lift_forward(f, 3, x), 2.5 / (pcf::b21(2, x) - x), 1e-15));
    CHECK(close(pcf::lift_backward(f, 2, x), pcf::b12(2, x), 1e-13));
  }
}

TEST_CASE("bessel closed forms and family endpoints") {
  CHECK(close(bessel::bform(1, 2, 1, 1), 1 + std::sqrt(5.0), 1e-15));
  for (const auto& row : bessel::best_form_rows()) {
    const double nu = row.nu_min + 1.3;
    for (double x : {0.2, 2.0, 20.0}) {
      CAPTURE(row.id);
      CHECK(close(bessel::best_form_bound(row.id, nu, x), bessel::best_form_family_value(row.id, nu, x), 1e-13));
    }
  }
  // cubic for the double ratio: psi^3 + psi^2 - (nu^2 + x^2) psi - nu^2 = 0
  for (double x : {0.1, 1.0, 30.0}) {
    const double p = bessel::cubic_root(1.5, x);
    CHECK(std::fabs(p * p * p + p * p - (2.25 + x * x) * p - 2.25) < 1e-11 * (1 + p * p * p));
  }
  const auto [lo, hi] = bessel::gapk_bounds(1.5, 2);
  CHECK(lo < hi);
  CHECK_THROWS_AS(bessel::lower_I(0.7, 2, 1), Error);
}

TEST_CASE("confluent closed forms") {
  for (double x : {0.1, 3.0, 40.0}) {
    CHECK(confluent::lambda(2.5, 2.5, x) == doctest::Approx(1.0).epsilon(1e-15));
    const double l = confluent::lambda(1.5, 4, x);
    CHECK(std::fabs(x * l * l + (4 - x) * l - 1.5) < 1e-12 * (1 + x * l * l));
    CHECK(close(confluent::b03(2, 3, x), confluent::lambda(1, 2, x), 1e-15));
  }
  // at a = 1, b = 2: h = (e^x (x - 1) + 1)/(x (e^x - 1))
  for (double x : {0.5, 4.0}) {
    const double h = (std::exp(x) * (x - 1) + 1) / (x * std::expm1(x));
    CHECK(confluent::lambda_tilde(1, 2, x) <= h);
    CHECK(h <= confluent::lambda(1, 2, x));
  }
  const auto [lo, hi] = confluent::a1b_bounds(1.5, 2.5, 3);
  const double want = ref::ratio(RatioKind::KummerA1B, {1.5, 2.5}, 3).value();
  CHECK(lo <= want);
  CHECK(want <= hi);
  CHECK(confluent::eta_tilde(1.5, 2.5, 3) < confluent::eta(1.5, 2.5, 3));
}

TEST_CASE("eta at Bessel parameters reduces to the nullcline lower bound") {
  double worst = 0;
  for (double nu = 0.55; nu <= 10; nu += 0.35)
    for (double z = 0.01; z <= 20; z *= 1.7) worst = std::max(worst, confluent::eta_bessel_specialization_gap(nu, z));
  CHECK(worst < 1e-13);
}

TEST_CASE("kummer and bessel ratios agree at the specialization") {
  for (double nu : {0.75, 2.0, 6.5})
    for (double z : {0.05, 1.0, 15.0}) {
      const auto rep = confluent::bessel_consistency_check(nu, z);
      CAPTURE(nu);
      CAPTURE(z);
      CHECK(rep.consistent);
    }
}

TEST_CASE("gauss bounds") {
  // lambda solves the characteristic quadratic, so it is positive and finite
  for (double x : {0.01, 0.5, 0.99}) {
    const double l = gauss::lambda(2, 3, 4, x);
    CHECK(l > 0);
    CHECK(close(gauss::h_from_H(2, 3, gauss::lower_H(2, 3, 4, x)), l, 1e-14));
  }
  CHECK_THROWS_AS(gauss::GaussParams(1, 1, 0), Error);
  const auto rep = gauss::confluent_limit_check(1.5, 2.5, 3);
  CHECK(rep.rows.size() == 4);
  CHECK(rep.slope == doctest::Approx(-1).epsilon(0.3));
}
