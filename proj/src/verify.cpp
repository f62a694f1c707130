#include "hyperratio/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperratio/bessel_bounds.hpp"
#include "hyperratio/confluent_bounds.hpp"
#include "hyperratio/gauss_bounds.hpp"
#include "hyperratio/pcf_bounds.hpp"

namespace hyperratio {

const std::vector<BoundDescriptor>& full_catalog() {
  static const std::vector<BoundDescriptor> all = [] {
    std::vector<BoundDescriptor> out;
    for (auto&& part : {pcf::catalog(), bessel::catalog(), confluent::catalog(), gauss::catalog()})
      out.insert(out.end(), part.begin(), part.end());
    return out;
  }();
  return all;
}

const BoundDescriptor& find_bound(const std::string& id) {
  for (const auto& d : full_catalog())
    if (d.id == id) return d;
  fail(ErrorCode::UnknownId, "no bound with id " + id);
}

std::vector<const BoundDescriptor*> select_bounds(std::optional<BoundGroup> group, const std::vector<std::string>& ids) {
  std::vector<const BoundDescriptor*> out;
  if (!ids.empty()) {
    for (const auto& id : ids) {
      const BoundDescriptor& d = find_bound(id);
      if (!group || d.group == *group) out.push_back(&d);
    }
    return out;
  }
  for (const auto& d : full_catalog())
    if (!group || d.group == *group) out.push_back(&d);
  return out;
}

Grid default_grid(Family family) {
  Grid g;
  switch (family) {
    case Family::PcfU:
      for (double n : {0.51, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0, 25.0}) g.params.push_back({n});
      g.xs = Axis{-40, 40, 161}.points();
      break;
    case Family::BesselI:
    case Family::BesselK:
      for (double nu : {0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 2.5, 3.0, 5.0, 10.0, 25.0}) g.params.push_back({nu});
      g.xs = Axis{0.01, 50, 300, Sampling::Log}.points();
      break;
    case Family::Kummer:
      for (double a : {0.3, 1.0, 1.5, 2.0, 5.0})
        for (double b : {0.3, 1.0, 1.5, 2.0, 5.0}) g.params.push_back({a, b});
      g.xs = Axis{1e-3, 30, 120, Sampling::Log}.points();
      break;
    case Family::Gauss: {
      for (double a : {0.5, 1.0, 2.0, 5.0})
        for (double b : {0.5, 1.0, 2.0, 5.0})
          for (double c : {0.5, 1.0, 2.0, 5.0}) g.params.push_back({a, b, c});
      g.xs = Axis{1e-4, 0.1, 40, Sampling::Log}.points();
      const auto lin = Axis{0.1, 0.99, 90}.points();
      g.xs.insert(g.xs.end(), lin.begin() + 1, lin.end());
      break;
    }
  }
  return g;
}

const std::optional<OracleResult>& OracleCache::get(RatioKind kind, const Params& params, double x) {
  auto key = std::make_tuple(static_cast<int>(kind), params, x);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  std::optional<OracleResult> r;
  try {
    r = ratio_enclosure(RatioSpec(kind, params, x), cfg_);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Domain) throw;
  }
  return memo_.emplace(std::move(key), std::move(r)).first->second;
}

double signed_margin(Side side, const Enclosure& e, double bound) {
  const double scale = std::max(std::fabs(e.mid()), std::numeric_limits<double>::min());
  return side == Side::Lower ? (e.lo() - bound) / scale : (bound - e.hi()) / scale;
}

Verdict classify(const BoundDescriptor& d, const Params& p, const OracleResult& r, double bound, double margin,
                 bool* tight) {
  if (tight) *tight = false;
  if (!std::isfinite(bound)) return Verdict::Violation;
  const double rw = r.enclosure.rel_width();
  const double tol = (std::isfinite(rw) ? rw : 0) + kRoundingAllowance;
  if (d.attains(p)) {
    const double diff = std::fabs(bound - r.enclosure.mid()) / std::fabs(r.enclosure.mid());
    if (diff <= tol) return r.converged ? Verdict::Pass : Verdict::Inconclusive;
    return Verdict::Violation;
  }
  if (margin > 0) return Verdict::Pass;
  if (margin < -tol && std::isfinite(rw)) return Verdict::Violation;
  if (!r.converged) return Verdict::Inconclusive;
  if (tight) *tight = true;
  return Verdict::Pass;
}

namespace {

std::vector<Params> sorted_params(const Grid& g) {
  auto ps = g.params;
  std::sort(ps.begin(), ps.end());
  return ps;
}

std::vector<double> sorted_xs(const Grid& g) {
  auto xs = g.xs;
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace

VerificationReport verify_bound(const BoundDescriptor& d, const Grid& grid, OracleCache& cache, bool keep_records) {
  VerificationReport rep;
  rep.id = d.id;
  rep.grid_summary = grid.summary();
  rep.min_margin = std::numeric_limits<double>::infinity();
  for (const Params& p : sorted_params(grid)) {
    if (!d.is_valid(p)) continue;
    for (double x : sorted_xs(grid)) {
      if (!in_domain(d.ratio, p, x)) continue;
      ++rep.num_points;
      const auto& r = cache.get(d.ratio, p, x);
      PointRecord rec{p, x, Enclosure(), std::numeric_limits<double>::quiet_NaN(),
                      std::numeric_limits<double>::quiet_NaN(), Verdict::NotConverged};
      if (!r) {
        ++rep.num_not_converged;
        if (keep_records) rep.records.push_back(rec);
        continue;
      }
      rec.oracle = r->enclosure;
      try {
        rec.bound = d.eval(p, x);
      } catch (const Error&) {
        rec.bound = std::numeric_limits<double>::quiet_NaN();
      }
      rec.margin = std::isfinite(rec.bound) ? signed_margin(d.side, r->enclosure, rec.bound)
                                            : -std::numeric_limits<double>::infinity();
      bool tight = false;
      rec.verdict = classify(d, p, *r, rec.bound, rec.margin, &tight);
      if (d.attains(p)) rec.margin = -std::fabs(rec.bound - r->enclosure.mid()) / std::fabs(r->enclosure.mid());
      switch (rec.verdict) {
        case Verdict::Violation: ++rep.num_violations; break;
        case Verdict::Inconclusive: ++rep.num_inconclusive; break;
        default: break;
      }
      if (tight) ++rep.num_tight;
      if (rec.margin < rep.min_margin) {
        rep.min_margin = rec.margin;
        rep.worst_params = p;
        rep.worst_x = x;
      }
      if (keep_records) rep.records.push_back(rec);
    }
  }
  if (rep.num_points == 0) rep.min_margin = std::numeric_limits<double>::quiet_NaN();
  return rep;
}

VerificationReport verify_bound(const BoundDescriptor& d, const Grid& grid, const OracleConfig& cfg, bool keep_records) {
  OracleCache cache(cfg);
  return verify_bound(d, grid, cache, keep_records);
}

std::vector<TableRow> tabulate(const std::vector<const BoundDescriptor*>& bounds, const std::optional<Grid>& grid,
                               OracleCache& cache) {
  std::vector<TableRow> rows;
  for (const BoundDescriptor* d : bounds) {
    const Family fam = family_of(d->ratio);
    const Grid g = grid ? *grid : default_grid(fam);
    const VerificationReport rep = verify_bound(*d, g, cache, true);
    for (const auto& rec : rep.records) {
      const auto& r = cache.get(d->ratio, rec.params, rec.x);
      const double mid = rec.oracle.mid();
      rows.push_back({d->id, fam, rec.params, rec.x, rec.oracle, r && r->converged, rec.bound, rec.margin,
                      std::fabs(rec.bound - mid) / std::fabs(mid), rec.verdict});
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    return std::tie(a.family, a.id, a.params, a.x) < std::tie(b.family, b.id, b.params, b.x);
  });
  return rows;
}

}  // namespace hyperratio
