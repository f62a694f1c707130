#pragma once

// Numerical certification of the two qualitative results used to derive the
// bounds: the nullcline comparison for Riccati equations h' = a + b h + c h^2
// with a c < 0, and the residual-sign criterion for phi' = P(x, phi).
// Both checks sample a grid; they certify numerical evidence, not proofs.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperratio/types.hpp"

namespace hyperratio::riccati {

using ScalarFn = std::function<double(double)>;

struct RiccatiProblem {
  std::string name;
  ScalarFn a, b, c;
  double lo, hi;  // open interval; either end may be infinite
  // Endpoint hypotheses h(e) > 0 and h'(e) lambda'(e) > 0, at the left end
  // when c < 0 and at the right end when c > 0. Taken from series expansions.
  bool endpoint_h_positive = true;
  bool endpoint_slopes_agree = true;
  std::string endpoint_note;
  // Optional oracle for h, used to confirm the derived side.
  std::function<Enclosure(double)> oracle;
};

enum class Verdict { Pass, Fail, Inconclusive };
std::string_view to_string(Verdict v);

// Positive root of a + b l + c l^2 = 0. Throws SIGN_CONDITION_FAILED unless a c < 0.
double characteristic_root(const RiccatiProblem& p, double x);

struct NullclineReport {
  std::string name;
  Verdict verdict;
  int c_sign = 0;          // sign of c on the grid
  int lambda_slope = 0;    // sign of lambda' on the grid (0: changes sign)
  int theorem_case = 0;    // 1: c < 0, left endpoint; 2: c > 0, right endpoint
  std::optional<Side> implied_side;  // side of h relative to lambda, i.e. lambda is a Lower/Upper bound
  std::size_t num_points = 0;
  std::size_t oracle_disagreements = 0;
  double min_oracle_margin = 0;
  std::string message;
};

NullclineReport check_nullcline_conditions(const RiccatiProblem& p, const std::vector<double>& grid);

enum class Endpoint { Left, Right };

struct ResidualProblem {
  std::string name;
  std::function<double(double, double)> P;          // phi' = P(x, phi)
  std::function<double(double, double)> term_scale; // sum of |terms| of P, for the rounding floor
  ScalarFn lambda;                                  // candidate bound
  Endpoint endpoint;
  int endpoint_delta_sign;  // sign of lambda - phi at the endpoint
  double lo, hi;            // domain of phi; finite ends limit the difference step
  std::string endpoint_note;
};

struct ResidualReport {
  std::string name;
  Verdict verdict;
  int required_sign;     // sign Delta must keep
  double min_margin;     // min over grid of required_sign * Delta / noise scale
  double worst_x;
  std::size_t num_points;
  std::size_t num_wrong_sign;
  std::size_t num_within_noise;
  std::optional<Side> certified_side;  // lambda lower/upper bound when the verdict is PASS
};

// Samples Delta = lambda' - P(x, lambda) on the grid, then refines x4 around the
// smallest margin.
ResidualReport check_residual_sign(const ResidualProblem& p, const std::vector<double>& grid);

enum class CubicFamily { Pcf, Bessel };
// Largest root of the cubic nullcline of the double ratio, in trigonometric form.
// Throws DISCRIMINANT if the cubic does not have three real roots.
double cubic_nullcline_root(double param, double x, CubicFamily family);

struct Instance {
  std::string id;
  std::string description;
  bool is_mutation;
  // One nullcline or residual problem per parameter set.
  std::vector<RiccatiProblem> nullcline;
  std::vector<ResidualProblem> residual;
  std::vector<double> grid;
  Verdict expected;
  std::optional<Side> expected_side;  // side of the catalogued bound
  std::string catalog_id;
};

struct InstanceReport {
  std::string id;
  Verdict verdict;
  Verdict expected;
  bool as_expected;
  std::vector<NullclineReport> nullcline;
  std::vector<ResidualReport> residual;
};

const std::vector<Instance>& registry();
const Instance& find_instance(const std::string& id);
InstanceReport run_instance(const Instance& inst);

}  // namespace hyperratio::riccati
