#pragma once

// Bounds for Phi_n(x) = U(n-1,x)/U(n,x), the ratio of parabolic cylinder
// functions. Accuracy tags count expansion terms reproduced at (-inf, +inf).

#include <functional>
#include <vector>

#include "hyperratio/oracle.hpp"
#include "hyperratio/types.hpp"

namespace hyperratio::pcf {

double b21(double n, double x);
double b12(double n, double x);
double b30(double n, double x);
double b03(double n, double x);
double b40(double n, double x);
double trig33(double n, double x);
double alg33(double n, double x);
double b24(double n, double x);
double b42(double n, double x);

// Largest root of z^3 - (x^2/4 + n) z - x/4 = 0 in trigonometric form.
double cubic_root(double n, double x);

using BoundFn = std::function<double(double, double)>;

// x + (n+1/2)/bound(n+1,x): turns a bound at n+1 into the opposite-side bound at n.
double lift_backward(const BoundFn& bound, double n, double x);
// (n-1/2)/(bound(n-1,x) - x): turns a bound at n-1 into the opposite-side bound at n.
double lift_forward(const BoundFn& bound, double n, double x);

std::vector<BoundDescriptor> catalog();

// R^[1]_n = Phi_n, R^[k+1]_n = R^[k]_n / R^[k]_{n+1}.
struct TowerFlags {
  int k;
  // +1 observed, -1 contradicted, 0 undecided within the enclosure noise
  int increasing;
  int below_one;       // only meaningful for k >= 2
  int above_previous;  // R^[k] > R^[k-1]; only for k >= 2
  int undecided_steps; // consecutive x pairs whose order the enclosures cannot resolve
};

struct DoubleRatioTower {
  double n;
  int k_max;
  std::vector<double> xs;
  std::vector<std::vector<Enclosure>> values;  // values[k-1][i] = R^[k]_n(xs[i])
  std::vector<TowerFlags> flags;
  bool all_converged = true;
};

DoubleRatioTower double_ratio_tower(double n, int k_max, const std::vector<double>& xs,
                                    const OracleConfig& cfg = {});

}  // namespace hyperratio::pcf
