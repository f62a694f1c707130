#pragma once

// Bounds for the Gauss ratio h(x) = (ab/c) 2F1(a+1,b+1;c+1;x)/2F1(a,b;c;x) on
// 0 < x < 1 and for H(x) = 2ab/h(x) = 2c 2F1(a,b;c;x)/2F1(a+1,b+1;c+1;x).

#include <vector>

#include "hyperratio/types.hpp"

namespace hyperratio::gauss {

struct GaussParams {
  double a, b, c;

  GaussParams(double a, double b, double c);
  double d() const { return a + b + 1; }
  bool lower_valid() const { return c > a * b / (a + b + 1); }         // lambda and lower_H
  bool upper_valid() const { return c > (a * b - 2) / (a + b + 3); }   // upper_H
};

// Positive characteristic root; upper bound of h when c > ab/(a+b+1).
double lambda(double a, double b, double c, double x);
double lower_H(double a, double b, double c, double x);
double upper_H(double a, double b, double c, double x);

// h-form of the H bounds via h = 2ab/H.
double h_from_H(double a, double b, double H);

// Gauss bounds at (a, B, c, x/B) against the confluent bounds at (a, c, x) for
// a sequence of B; the gap should decay like 1/B.
struct LimitRow {
  double B;
  double gap_lambda;   // |lambda_gauss/B - lambda_confluent|
  double gap_lower_H;  // |lower_H - (b - x + S)|
  double gap_upper_H;  // |upper_H - (b - x - 1 + S~)|
  double gap;          // largest of the three
};
struct LimitReport {
  double a, b_ren, x;
  std::vector<LimitRow> rows;
  double slope;  // least-squares slope of log gap against log B; NaN if every gap vanishes
};
LimitReport confluent_limit_check(double a, double b_ren, double x,
                                  const std::vector<double>& B_list = {1e2, 1e3, 1e4, 1e5});

std::vector<BoundDescriptor> catalog();

}  // namespace hyperratio::gauss
