#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperratio/enclosure.hpp"

namespace hyperratio {

enum class Family { PcfU, BesselI, BesselK, Kummer, Gauss };

// The contiguous ratio being bounded. The family of a ratio kind is fixed.
enum class RatioKind {
  PcfPhi,       // U(n-1,x)/U(n,x)
  BesselI,      // I_{nu-1}(x)/I_nu(x)
  BesselK,      // K_{nu+1}(x)/K_nu(x)
  BesselKDown,  // K_{nu-1}(x)/K_nu(x)
  BesselIK,     // I_nu(x) K_nu(x)
  KummerAB1B1,  // m(a+1,b+1,x)/m(a,b,x)
  KummerA1B,    // m(a+1,b,x)/m(a,b,x)
  KummerA1B2,   // m(a+1,b+2,x)/m(a,b,x)
  GaussH,       // y(a+1,b+1,c+1,x)/y(a,b,c,x)
  GaussBigH,    // 2c 2F1(a,b;c;x)/2F1(a+1,b+1;c+1;x)
};

// Grouping used by the bound catalog and the command line.
enum class BoundGroup { Pcf, Bessel, Confluent, Gauss };

enum class Side { Lower, Upper };

using Params = std::vector<double>;

Family family_of(RatioKind kind);
std::size_t param_count(Family family);
std::string_view to_string(Family family);
std::string_view to_string(RatioKind kind);
std::string_view to_string(BoundGroup group);
std::string_view to_string(Side side);
std::optional<BoundGroup> parse_group(std::string_view name);

// Checks the parameter and argument domain of a family. Throws Error(Domain).
void check_domain(RatioKind kind, const Params& params, double x);
bool in_domain(RatioKind kind, const Params& params, double x);

struct RatioSpec {
  RatioKind kind;
  Params params;
  double x;

  RatioSpec(RatioKind kind, Params params, double x);
  Family family() const { return family_of(kind); }
};

// Number of expansion terms a bound reproduces at the left end of the
// argument range (x -> -inf for parabolic cylinder ratios, x -> 0 otherwise)
// and at x -> +inf.
struct Accuracy {
  int left;
  int right;
  friend bool operator==(const Accuracy&, const Accuracy&) = default;
};

std::string format_accuracy(const std::optional<Accuracy>& acc);

struct BoundDescriptor {
  std::string id;
  BoundGroup group;
  RatioKind ratio;
  Side side;
  std::optional<Accuracy> accuracy;
  std::function<bool(const Params&)> valid;
  std::function<double(const Params&, double)> eval;
  std::string provenance;
  // Parameters at which the bound coincides with the ratio identically.
  std::function<bool(const Params&)> equality = nullptr;

  bool is_valid(const Params& p) const { return valid(p); }
  double evaluate(const Params& p, double x) const;
  bool attains(const Params& p) const { return equality && equality(p); }
};

enum class Sampling { Linear, Log, Mixed };

struct Axis {
  double lo;
  double hi;
  int count;
  Sampling sampling = Sampling::Linear;

  std::vector<double> points() const;
};

struct Grid {
  std::vector<Params> params;
  std::vector<double> xs;

  std::size_t size() const { return params.size() * xs.size(); }
  std::string summary() const;
};

enum class Verdict { Pass, Violation, Inconclusive, NotConverged, Skipped };
std::string_view to_string(Verdict v);

struct PointRecord {
  Params params;
  double x;
  Enclosure oracle;
  double bound;
  double margin;
  Verdict verdict;
};

struct VerificationReport {
  std::string id;
  std::string grid_summary;
  std::size_t num_points = 0;
  std::size_t num_violations = 0;
  std::size_t num_inconclusive = 0;
  std::size_t num_not_converged = 0;
  // Points whose margin lies inside the rounding allowance; counted as passes.
  std::size_t num_tight = 0;
  double min_margin = 0;
  Params worst_params;
  double worst_x = 0;
  std::vector<PointRecord> records;

  bool ok() const { return num_violations == 0 && num_inconclusive == 0 && num_not_converged == 0; }
};

}  // namespace hyperratio
