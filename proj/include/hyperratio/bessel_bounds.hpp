#pragma once

// Bounds for the modified Bessel ratios I_{nu-1}/I_nu and K_{nu+1}/K_nu (and
// the derived K_{nu-1}/K_nu and I_nu K_nu). Accuracy tags count terms
// reproduced at (0, +inf).

#include <string>
#include <utility>
#include <vector>

#include "hyperratio/oracle.hpp"
#include "hyperratio/types.hpp"

namespace hyperratio::bessel {

// (alpha + sqrt(beta^2 + gamma2 x^2)) / x
double bform(double alpha, double beta, double gamma2, double x);

double lower_I(double lambda, double nu, double x);  // lambda in [0,1/2], nu >= 1/2 - lambda
double upper_K(double lambda, double nu, double x);  // lambda in [0,1/2], nu >= 1/2 - lambda
double upper_I(double lambda, double nu, double x);  // lambda in [1/2,2], nu >= 0
double lower_K(double lambda, double nu, double x);  // lambda in [1/2,2], nu >= lambda

struct BestFormRow {
  std::string id;  // e.g. "I.(2,1)"
  RatioKind ratio;
  Side side;
  Accuracy accuracy;
  double nu_min;
  bool strict;  // nu > nu_min instead of nu >= nu_min
  double lambda;
};

const std::vector<BestFormRow>& best_form_rows();
bool best_form_valid(const BestFormRow& row, double nu);
// Evaluates a row from its own (alpha, beta, gamma) columns.
double best_form_bound(const std::string& row_id, double nu, double x);
// The parametric family member that the row specializes.
double best_form_family_value(const std::string& row_id, double nu, double x);

// Bounds on x I_{nu-1}/I_nu and x K_{nu+1}/K_nu, nu >= 1/2.
std::pair<double, double> gapk_bounds(double nu, double x);

double i_bound_23(double nu, double x);
double iterated_riccati_bound(int alpha, double nu, double x);  // alpha in {0, 2}
double nullcline_lower_I(double nu, double x);                  // nu >= 1/2

// Largest root of psi^3 + psi^2 - (nu^2 + x^2) psi - nu^2 = 0.
double cubic_root(double nu, double x);
double trig_upper_I(double nu, double x);
double trig_upper_Kratio(double nu, double x);  // bounds K_{nu-1}/K_nu

struct ProductBounds {
  double trig_lower;
  double alg_lower;
};
ProductBounds product_bounds(double nu, double x);

std::vector<BoundDescriptor> catalog();

// 11 evenly spaced values over a family's lambda range, endpoints included.
std::vector<double> lambda_grid(double lo, double hi, int count = 11);

}  // namespace hyperratio::bessel
