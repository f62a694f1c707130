#include <cmath>

#include "doctest.h"
#include "hyperratio/accuracy.hpp"
#include "hyperratio/verify.hpp"

using namespace hyperratio;

TEST_CASE("implied exponents follow the expansion of each ratio") {
  CHECK(implied_exponent(RatioKind::PcfPhi, FitSide::AtPlusInf, 3) == -5.0);
  CHECK(implied_exponent(RatioKind::PcfPhi, FitSide::AtMinusInf, 2) == -3.0);
  CHECK(implied_exponent(RatioKind::BesselI, FitSide::AtZero, 2) == 3.0);
  CHECK(implied_exponent(RatioKind::BesselKDown, FitSide::AtZero, 1) == 3.0);
  CHECK(implied_exponent(RatioKind::KummerA1B2, FitSide::AtPlusInf, 1) == -2.0);
  CHECK(!implied_exponent(RatioKind::GaussH, FitSide::AtZero, 1));
  CHECK(!implied_exponent(RatioKind::BesselIK, FitSide::AtPlusInf, 1));
}

TEST_CASE("consistency window between consecutive term orders") {
  CHECK(consistent_with_count(RatioKind::PcfPhi, FitSide::AtPlusInf, 1, -1.1));
  CHECK(!consistent_with_count(RatioKind::PcfPhi, FitSide::AtPlusInf, 1, -3.0));
  // an even power inside an odd expansion: between terms 1 and 2
  CHECK(consistent_with_count(RatioKind::PcfPhi, FitSide::AtPlusInf, 2, -2.05));
  CHECK(!consistent_with_count(RatioKind::PcfPhi, FitSide::AtPlusInf, 2, -1.0));
  CHECK(!consistent_with_count(RatioKind::BesselI, FitSide::AtZero, 2, 2.5));
  CHECK(consistent_with_count(RatioKind::KummerAB1B1, FitSide::AtZero, 0, 0.02));
}

TEST_CASE("order fit on a bound with a known gap") {
  const OrderFit f = estimate_order("pcf.b21", {1.7}, FitSide::AtPlusInf, {30, 100});
  CHECK(f.exponent == doctest::Approx(-1).epsilon(0.05));
  CHECK(f.npts == 12);
  CHECK(f.decades == doctest::Approx(std::log10(100.0 / 30)));
  CHECK(f.coefficient < 0);  // b21 is a lower bound
  CHECK_THROWS_AS(estimate_order("pcf.b21", {1.7}, FitSide::AtPlusInf, {30, 100, 4}), Error);
  CHECK_THROWS_AS(estimate_order("pcf.b21", {0.2}, FitSide::AtPlusInf, {30, 100}), Error);
}

TEST_CASE("leading coefficient of the three-term PCF bound") {
  // Phi_n(x) = x + (n+1/2)/x - (n+1/2)(n+3/2)/x^3 + ..., b03 keeps x and the two
  // following terms in its own closed form, leaving a gap of order x^-5.
  for (double n : {1.0, 5.0}) {
    const auto c = fit_leading_coefficient(find_bound("pcf.b03"), {n}, FitSide::AtPlusInf, -5, 2, {30, 100});
    CAPTURE(n);
    CHECK(c.c0 == doctest::Approx(-(n + 0.5) * (n + 1.5)).epsilon(2e-3));
  }
}

TEST_CASE("gauss small-x slope") {
  // h = (ab/c)(1 + x ((a+1)(b+1)/(c+1) - ab/c) + O(x^2))
  for (auto [a, b, c] : {std::tuple{1.0, 1.0, 2.0}, {0.5, 5.0, 1.0}, {2.0, 2.0, 2.0}}) {
    const double want = (c * (a + b + 1) - a * b) / (c * (c + 1));
    CHECK(gauss_small_x_slope(a, b, c, 1e-4) == doctest::Approx(want).epsilon(1e-3));
  }
}

TEST_CASE("accuracy table for the PCF group") {
  const auto rep = certify_accuracy_table(select_bounds(BoundGroup::Pcf, {}));
  CHECK(rep.entries.size() == 18);
  CHECK(rep.num_error == 0);
  CHECK(rep.num_mismatch == 0);
  for (const auto& e : rep.entries) {
    REQUIRE(e.fit);
    CHECK(e.fit->decades > 0.5);
  }
}
