#pragma once

// Rigorous enclosures of the contiguous ratios. Interval recurrences are run in
// long double and the result is widened outward to binary64.

#include <string>

#include "hyperratio/enclosure.hpp"
#include "hyperratio/types.hpp"

namespace hyperratio {

struct OracleConfig {
  int depth = 60;
  double target_rel_width = 1e-12;
  int max_depth = 400;
  // Seed the tail with a second, independent pair of bounds (or use the
  // alternative evaluation route for K). Used to check seed independence.
  bool alternate_seed = false;

  void validate() const;
};

struct OracleResult {
  Enclosure enclosure;
  bool converged = false;
  int depth = 0;  // recurrence steps actually used; 0 when only a series was needed
  std::string method;
};

// U(n-1,x)/U(n,x), n > 1/2, any real x.
OracleResult pcf_ratio_enclosure(double n, double x, const OracleConfig& cfg = {});
// Same ratio for n > -1/2: below 1/2 one exact backward step from n+1.
OracleResult pcf_ratio_enclosure_extended(double n, double x, const OracleConfig& cfg = {});
// I_{nu-1}(x)/I_nu(x), nu >= 0, x > 0.
OracleResult bessel_i_ratio_enclosure(double nu, double x, const OracleConfig& cfg = {});
// K_{nu+1}(x)/K_nu(x), nu >= 0, x > 0.
OracleResult bessel_k_ratio_enclosure(double nu, double x, const OracleConfig& cfg = {});
// K_{nu-1}(x)/K_nu(x), nu >= 0, x > 0.
OracleResult bessel_k_down_ratio_enclosure(double nu, double x, const OracleConfig& cfg = {});
// I_nu(x) K_nu(x), nu >= 0, x > 0.
OracleResult bessel_ik_product_enclosure(double nu, double x, const OracleConfig& cfg = {});
// m(a+1,b+1,x)/m(a,b,x) with m(a,b,x) = Gamma(a)/Gamma(b) M(a,b,x); a, b, x > 0.
OracleResult kummer_ratio_enclosure(double a, double b, double x, const OracleConfig& cfg = {});
// m(a+1,b,x)/m(a,b,x).
OracleResult kummer_a1b_enclosure(double a, double b, double x, const OracleConfig& cfg = {});
// m(a+1,b+2,x)/m(a,b,x).
OracleResult kummer_a1b2_enclosure(double a, double b, double x, const OracleConfig& cfg = {});
// (ab/c) 2F1(a+1,b+1;c+1;x)/2F1(a,b;c;x); a, b, c > 0, 0 < x < 1.
OracleResult gauss_ratio_enclosure(double a, double b, double c, double x, const OracleConfig& cfg = {});
// 2c 2F1(a,b;c;x)/2F1(a+1,b+1;c+1;x) = 2ab/h.
OracleResult gauss_big_h_enclosure(double a, double b, double c, double x, const OracleConfig& cfg = {});

OracleResult ratio_enclosure(const RatioSpec& spec, const OracleConfig& cfg = {});

struct SeriesValue {
  double value;
  double err;
};

// M(a,b,x) for a >= 0, b > 0, x >= 0, with a rigorous bound on the error.
SeriesValue kummer_series(double a, double b, double x, double tol = 1e-15);
// 2F1(a,b;c;x) for a, b >= 0, c > 0, 0 <= x < 1.
SeriesValue gauss_series(double a, double b, double c, double x, double tol = 1e-15);

namespace detail {

WideEnclosure kummer_m(long double a, long double b, const WideEnclosure& z);
WideEnclosure gauss_f(long double a, long double b, long double c, long double x);
// K_{mu+1}/K_mu for mu > -1/2 by the continued fraction of the Tricomi ratio.
WideEnclosure k_ratio_cf(long double mu, long double x, long steps);

}  // namespace detail

}  // namespace hyperratio
