#pragma once

// Numerical certification of accuracy tags. The gap g(x) = bound(x) - ratio(x)
// is sampled on a window near an endpoint and log|g| is regressed on log|x|.
// A bound that reproduces k expansion terms has a gap of a known order:
//
//   PCF, x -> -inf and +inf          |x|^(1-2k)
//   I_{nu-1}/I_nu, K_{nu+1}/K_nu     x^(2k-1) at 0,  x^(-k) at +inf
//   K_{nu-1}/K_nu                    x^(2k+1) at 0,  x^(-k) at +inf
//   Kummer h                         x^k at 0,       x^(-k) at +inf
//   m(a+1,b+2)/m(a,b)                x^k at 0,       x^(-1-k) at +inf
//
// The left tag counts terms at -inf (PCF) or 0 (everything else).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperratio/oracle.hpp"
#include "hyperratio/types.hpp"

namespace hyperratio {

enum class FitSide { AtZero, AtPlusInf, AtMinusInf };

inline constexpr double kExponentTolerance = 0.3;
std::string_view to_string(FitSide side);

struct Window {
  double lo;
  double hi;
  int count = 12;
};

struct OrderFit {
  FitSide side;
  double exponent;
  double stderr_exponent;
  // g(x) ~ coefficient * |x|^exponent
  double coefficient;
  double residual;  // rms of the log residuals
  Window window;
  int npts;
  double decades;
};

// Oracle settings used by the accuracy fits: deeper recursion than the
// verifier so that far windows still converge.
OracleConfig accuracy_oracle_config();

// Throws ShrinkWindow when the gap is not well above the enclosure noise or
// changes sign, Overprecision when the gap drowns in the noise, NotConverged
// when the oracle does.
OrderFit estimate_order(const BoundDescriptor& d, const Params& params, FitSide side, const Window& window,
                        const OracleConfig& cfg = accuracy_oracle_config());
OrderFit estimate_order(const std::string& bound_id, const Params& params, FitSide side, const Window& window,
                        const OracleConfig& cfg = accuracy_oracle_config());

// Exponent implied by `count` matched terms, or nullopt when the ratio has no
// convention (I K product, m(a+1,b)/m(a,b), Gauss).
std::optional<double> implied_exponent(RatioKind kind, FitSide side, int count);
// True when the fitted exponent is within kExponentTolerance of an integer
// whose order lies above the order of term count-1 and not above that of term
// count. Bounds with spurious terms (e.g. even powers in an odd expansion)
// land strictly between two term orders.
bool consistent_with_count(RatioKind kind, FitSide side, int count, double fitted);

// Windows tried in order; the first one that yields a clean fit is used.
std::vector<Window> default_windows(RatioKind kind, FitSide side);
// Generic parameters for the fit (avoiding accidental extra matching terms),
// in order of preference.
std::vector<Params> accuracy_params(const BoundDescriptor& d);

enum class AccuracyStatus { Match, Mismatch, Error };
std::string_view to_string(AccuracyStatus s);

struct AccuracyEntry {
  std::string id;
  FitSide side;
  Params params;
  int declared;
  double expected_exponent;
  std::optional<OrderFit> fit;
  AccuracyStatus status;
  std::string note;  // error text or the windows that were rejected
};

struct AccuracyReport {
  std::vector<AccuracyEntry> entries;
  std::size_t num_match = 0;
  std::size_t num_mismatch = 0;
  std::size_t num_error = 0;
  bool ok() const { return num_mismatch == 0 && num_error == 0; }
};

AccuracyEntry certify_side(const BoundDescriptor& d, FitSide side, const OracleConfig& cfg = accuracy_oracle_config());
AccuracyReport certify_accuracy_table(const std::vector<const BoundDescriptor*>& bounds,
                                      const OracleConfig& cfg = accuracy_oracle_config());
// Every catalogued bound with a declared tag.
AccuracyReport certify_accuracy_table();

// Least-squares fit of g(x) |x|^(-exponent) = c0 + c1 t with t = |x|^(-q) on
// the infinite sides and x^q at zero.
struct CoefficientFit {
  double c0;
  double c1;
  double residual;  // rms residual of the linear fit
  int npts;
};
CoefficientFit fit_leading_coefficient(const BoundDescriptor& d, const Params& params, FitSide side, double exponent,
                                       double q, const Window& window,
                                       const OracleConfig& cfg = accuracy_oracle_config());

// (c h(x)/(ab) - 1)/x from the oracle; tends to (c(a+b+1) - ab)/(c(c+1)).
double gauss_small_x_slope(double a, double b, double c, double x, const OracleConfig& cfg = {});

}  // namespace hyperratio
