#pragma once

// Catalog of every bound, default grids, and the grid verifier that compares
// each bound against the oracle.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hyperratio/oracle.hpp"
#include "hyperratio/types.hpp"

namespace hyperratio {

const std::vector<BoundDescriptor>& full_catalog();
// Throws Error(UnknownId).
const BoundDescriptor& find_bound(const std::string& id);
std::vector<const BoundDescriptor*> select_bounds(std::optional<BoundGroup> group, const std::vector<std::string>& ids);

Grid default_grid(Family family);

// Relative margin allowance for formula rounding.
inline constexpr double kRoundingAllowance = 1e-11;

// Memoizes oracle calls; descriptors sharing a ratio reuse enclosures.
class OracleCache {
 public:
  explicit OracleCache(OracleConfig cfg = {}) : cfg_(cfg) { cfg_.validate(); }

  // nullopt when the oracle threw (recorded as not converged).
  const std::optional<OracleResult>& get(RatioKind kind, const Params& params, double x);
  const OracleConfig& config() const { return cfg_; }

 private:
  OracleConfig cfg_;
  std::map<std::tuple<int, Params, double>, std::optional<OracleResult>> memo_;
};

// Signed relative margin: positive when the bound lies strictly on its side of the enclosure.
double signed_margin(Side side, const Enclosure& e, double bound);
Verdict classify(const BoundDescriptor& d, const Params& p, const OracleResult& r, double bound, double margin,
                 bool* tight = nullptr);

VerificationReport verify_bound(const BoundDescriptor& d, const Grid& grid, OracleCache& cache, bool keep_records = false);
VerificationReport verify_bound(const BoundDescriptor& d, const Grid& grid, const OracleConfig& cfg = {},
                                bool keep_records = false);

// One row per (bound, parameter set, x) for tabulation.
struct TableRow {
  std::string id;
  Family family;
  Params params;
  double x;
  Enclosure oracle;
  bool converged;
  double bound;
  double margin;
  double sharpness;  // |bound - mid| / |mid|
  Verdict verdict;
};
std::vector<TableRow> tabulate(const std::vector<const BoundDescriptor*>& bounds, const std::optional<Grid>& grid,
                               OracleCache& cache);

}  // namespace hyperratio
