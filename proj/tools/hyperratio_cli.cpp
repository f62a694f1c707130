// Batch front end: verify, tabulate, accuracy, riccati, conjecture, list.
//
// Exit codes: 0 success; 2 violation, inconclusive point, accuracy mismatch or
// unexpected Riccati verdict; 3 oracle not converged; 4 configuration error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperratio/accuracy.hpp"
#include "hyperratio/error.hpp"
#include "hyperratio/pcf_bounds.hpp"
#include "hyperratio/report_io.hpp"
#include "hyperratio/riccati.hpp"
#include "hyperratio/verify.hpp"

using namespace hyperratio;

namespace {

constexpr int kExitViolation = 2;
constexpr int kExitNotConverged = 3;
constexpr int kExitConfig = 4;

struct RunConfig {
  std::string family;
  std::vector<std::string> bounds;
  std::string grid_file;
  std::string format = "csv";
  std::string out;
  int depth = 60;
  double target_width = 1e-12;
  std::vector<std::string> instances;
  std::vector<double> ns;
  int kmax = 5;
};

OracleConfig oracle_config(const RunConfig& rc) {
  OracleConfig cfg;
  cfg.depth = rc.depth;
  cfg.target_rel_width = rc.target_width;
  cfg.max_depth = std::max(cfg.max_depth, rc.depth);
  cfg.validate();
  return cfg;
}

std::optional<BoundGroup> group_filter(const RunConfig& rc) {
  if (rc.family.empty()) return std::nullopt;
  auto g = parse_group(rc.family);
  if (!g) fail(ErrorCode::Config, "unknown family '" + rc.family + "'");
  return g;
}

// Resolves ids and the grid override before any oracle call.
std::vector<const BoundDescriptor*> selection(const RunConfig& rc) {
  auto sel = select_bounds(group_filter(rc), rc.bounds);
  if (sel.empty()) fail(ErrorCode::Config, "no bound matches the filters");
  return sel;
}

std::optional<Grid> grid_override(const RunConfig& rc, const std::vector<const BoundDescriptor*>& sel) {
  if (rc.grid_file.empty()) return std::nullopt;
  Grid g = io::read_grid_file(rc.grid_file);
  for (const auto* d : sel) {
    const std::size_t want = param_count(family_of(d->ratio));
    for (const auto& p : g.params)
      if (p.size() != want) fail(ErrorCode::Config, "grid parameter sets do not match the family of " + d->id);
  }
  return g;
}

void emit(const io::Table& t, const RunConfig& rc) {
  const io::Format f = io::parse_format(rc.format);
  if (rc.out.empty() || rc.out == "-") {
    io::write(t, f, std::cout);
    return;
  }
  std::ofstream os(rc.out);
  if (!os) fail(ErrorCode::Config, "cannot write " + rc.out);
  io::write(t, f, os);
}

int cmd_verify(const RunConfig& rc) {
  const auto sel = selection(rc);
  io::parse_format(rc.format);
  const auto grid = grid_override(rc, sel);
  OracleCache cache(oracle_config(rc));
  std::vector<VerificationReport> reps;
  for (const auto* d : sel) reps.push_back(verify_bound(*d, grid ? *grid : default_grid(family_of(d->ratio)), cache));
  emit(io::verification_table(reps), rc);
  bool bad = false, nc = false;
  for (const auto& r : reps) {
    bad = bad || r.num_violations || r.num_inconclusive;
    nc = nc || r.num_not_converged;
  }
  std::cerr << reps.size() << " bound(s) verified\n";
  return bad ? kExitViolation : nc ? kExitNotConverged : 0;
}

int cmd_tabulate(const RunConfig& rc) {
  const auto sel = selection(rc);
  io::parse_format(rc.format);
  const auto grid = grid_override(rc, sel);
  OracleCache cache(oracle_config(rc));
  const auto rows = tabulate(sel, grid, cache);
  if (rows.empty()) fail(ErrorCode::Config, "grid is empty after validity filtering");
  emit(io::point_table(rows), rc);
  bool bad = false, nc = false;
  for (const auto& r : rows) {
    bad = bad || r.verdict == Verdict::Violation || r.verdict == Verdict::Inconclusive;
    nc = nc || r.verdict == Verdict::NotConverged;
  }
  return bad ? kExitViolation : nc ? kExitNotConverged : 0;
}

int cmd_accuracy(const RunConfig& rc) {
  const auto sel = selection(rc);
  io::parse_format(rc.format);
  OracleConfig cfg = accuracy_oracle_config();
  cfg.depth = rc.depth;
  cfg.target_rel_width = rc.target_width;
  cfg.max_depth = std::max(cfg.max_depth, rc.depth);
  cfg.validate();
  const AccuracyReport rep = certify_accuracy_table(sel, cfg);
  emit(io::accuracy_table(rep), rc);
  std::cerr << rep.num_match << " match, " << rep.num_mismatch << " mismatch, " << rep.num_error << " error\n";
  return rep.num_mismatch ? kExitViolation : rep.num_error ? kExitNotConverged : 0;
}

int cmd_riccati(const RunConfig& rc) {
  io::parse_format(rc.format);
  std::vector<const riccati::Instance*> insts;
  if (rc.instances.empty())
    for (const auto& i : riccati::registry()) insts.push_back(&i);
  else
    for (const auto& id : rc.instances) insts.push_back(&riccati::find_instance(id));
  std::vector<riccati::InstanceReport> reps;
  for (const auto* i : insts) reps.push_back(riccati::run_instance(*i));
  emit(io::riccati_table(reps), rc);
  bool bad = false;
  for (const auto& r : reps) {
    std::cerr << r.id << ": " << to_string(r.verdict) << " (expected " << to_string(r.expected) << ")\n";
    bad = bad || !r.as_expected;
  }
  return bad ? kExitViolation : 0;
}

int cmd_conjecture(const RunConfig& rc) {
  io::parse_format(rc.format);
  require(rc.kmax >= 1, ErrorCode::Config, "--kmax must be >= 1");
  std::vector<double> xs = Axis{-10, 10, 81}.points();
  if (!rc.grid_file.empty()) xs = io::read_grid_file(rc.grid_file).xs;
  const std::vector<double> ns = rc.ns.empty() ? std::vector<double>{0.6, 1, 2} : rc.ns;
  for (double n : ns) require(n > 0.5, ErrorCode::Config, "--n must exceed 1/2");
  std::vector<pcf::DoubleRatioTower> towers;
  for (double n : ns) towers.push_back(pcf::double_ratio_tower(n, rc.kmax, xs, oracle_config(rc)));
  emit(io::conjecture_table(towers), rc);
  // exploration only: flags are observations, never a proof
  for (const auto& t : towers)
    for (const auto& f : t.flags)
      std::cerr << "n=" << t.n << " k=" << f.k << " increasing=" << f.increasing << " below_one=" << f.below_one
                << " above_previous=" << f.above_previous << " undecided=" << f.undecided_steps << '\n';
  return 0;
}

int cmd_list(const RunConfig& rc) {
  io::Table t{{"id", "group", "ratio", "side", "accuracy", "provenance"}, {}};
  for (const auto* d : select_bounds(group_filter(rc), {}))
    t.rows.push_back({d->id, std::string(to_string(d->group)), std::string(to_string(d->ratio)),
                      std::string(to_string(d->side)), format_accuracy(d->accuracy), d->provenance});
  for (const auto& i : riccati::registry())
    t.rows.push_back({"riccati:" + i.id, std::string("riccati"), std::string(), std::string(),
                      std::string(to_string(i.expected)), i.description});
  emit(t, rc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds for ratios of contiguous hypergeometric functions"};
  app.require_subcommand(1);
  RunConfig rc;

  auto add_common = [&rc](CLI::App* sub, bool filters, bool grid) {
    if (filters) {
      sub->add_option("--family", rc.family, "pcf, bessel, confluent or gauss");
      sub->add_option("--bound", rc.bounds, "bound id (repeatable)");
    }
    if (grid) sub->add_option("--grid-file", rc.grid_file, "JSON grid override");
    sub->add_option("--format", rc.format, "csv or json");
    sub->add_option("--out", rc.out, "output path (default stdout)");
    sub->add_option("--depth", rc.depth, "initial recurrence depth");
    sub->add_option("--target-width", rc.target_width, "target relative width of oracle enclosures");
  };

  auto* verify = app.add_subcommand("verify", "check every selected bound against the oracle");
  add_common(verify, true, true);
  auto* tab = app.add_subcommand("tabulate", "per-point table of bounds against the oracle");
  add_common(tab, true, true);
  auto* acc = app.add_subcommand("accuracy", "certify declared accuracy tags by order fits");
  add_common(acc, true, false);
  auto* ric = app.add_subcommand("riccati", "run registered nullcline and residual instances");
  add_common(ric, false, false);
  ric->add_option("--instance", rc.instances, "instance id (repeatable; default all)");
  auto* conj = app.add_subcommand("conjecture", "explore the iterated double ratios of the PCF ratio");
  add_common(conj, false, true);
  conj->add_option("--n", rc.ns, "order(s) n > 1/2 (default 0.6 1 2)");
  conj->add_option("--kmax", rc.kmax, "highest iterate");
  auto* list = app.add_subcommand("list", "list catalogued bounds and Riccati instances");
  list->add_option("--family", rc.family, "pcf, bessel, confluent or gauss");
  list->add_option("--format", rc.format, "csv or json");
  list->add_option("--out", rc.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (verify->parsed()) return cmd_verify(rc);
    if (tab->parsed()) return cmd_tabulate(rc);
    if (acc->parsed()) return cmd_accuracy(rc);
    if (ric->parsed()) return cmd_riccati(rc);
    if (conj->parsed()) return cmd_conjecture(rc);
    if (list->parsed()) return cmd_list(rc);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::Config:
      case ErrorCode::UnknownId:
      case ErrorCode::Domain: return kExitConfig;
      case ErrorCode::NotConverged:
      case ErrorCode::NoConvergence: return kExitNotConverged;
      default: return kExitViolation;
    }
  }
  return kExitConfig;
}
