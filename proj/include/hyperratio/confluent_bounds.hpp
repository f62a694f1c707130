#pragma once

// Bounds for the ratios of m(a,b,x) = Gamma(a)/Gamma(b) M(a,b,x) in the three
// contiguous directions (a+1,b+1), (a+1,b) and (a+1,b+2). All bounds are in the
// m normalization; h(a,b,x) = m(a+1,b+1,x)/m(a,b,x).

#include <utility>
#include <vector>

#include "hyperratio/enclosure.hpp"
#include "hyperratio/oracle.hpp"
#include "hyperratio/types.hpp"

namespace hyperratio::confluent {

// Positive root of x l^2 + (b - x) l - a = 0. Upper bound of h for b > a,
// lower for b < a, exactly a/b = 1 at a = b.
double lambda(double a, double b, double x);
// 2a / (b - x - 1 + sqrt((x - b - 1)^2 + 4(a+1)x)). Opposite side of lambda.
double lambda_tilde(double a, double b, double x);
// lambda(a-1, b-1, x); a, b > 1. Lower bound of h for a < b.
double b03(double a, double b, double x);

// Bounds on m(a+1,b,x)/m(a,b,x) = a + x h(a,b,x), ordered (lower, upper).
std::pair<double, double> a1b_bounds(double a, double b, double x);

// eta_tilde < m(a+1,b+2,x)/m(a,b,x) < eta for all a, b, x > 0.
double eta(double a, double b, double x);
double eta_tilde(double a, double b, double x);

// The same pair in the M normalization: bounds on 2b M(a,b,x)/M(a+1,b+1,x),
// returned as (from lambda, from lambda_tilde).
std::pair<double, double> m_form_bounds(double a, double b, double x);

// Compares 2z m(a+1,b+2,2z)/m(a,b,2z) at a = nu - 1/2, b = 2nu - 1 against
// I_nu(z)/I_{nu-1}(z). Needs nu > 1/2.
struct ConsistencyReport {
  double nu;
  double z;
  Enclosure kummer_side;
  Enclosure bessel_side;
  double difference;  // |mid - mid|
  double tolerance;   // sum of the two widths plus rounding slack
  bool consistent;
};
ConsistencyReport bessel_consistency_check(double nu, double z, const OracleConfig& cfg = {});

// At a = nu - 1/2, b = 2nu - 1, x = 2z the eta bound turns into a bound on
// I_nu/I_{nu-1}; its reciprocal should coincide with the nullcline lower bound
// (nu - 1/2 + sqrt((nu - 1/2)^2 + z^2))/z. Returns the relative difference.
double eta_bessel_specialization_gap(double nu, double z);

std::vector<BoundDescriptor> catalog();

}  // namespace hyperratio::confluent
