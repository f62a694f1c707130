// Acceptance run: one line per criterion, "[Cn] PASS|FAIL|XFAIL  summary".
// Details go to stderr. Exit status is nonzero iff some criterion FAILs.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyperratio/accuracy.hpp"
#include "hyperratio/bessel_bounds.hpp"
#include "hyperratio/confluent_bounds.hpp"
#include "hyperratio/gauss_bounds.hpp"
#include "hyperratio/pcf_bounds.hpp"
#include "hyperratio/report_io.hpp"
#include "hyperratio/riccati.hpp"
#include "hyperratio/verify.hpp"

using namespace hyperratio;
using Clock = std::chrono::steady_clock;

namespace {

enum class Status { Pass, Fail, XFail };

struct Outcome {
  Status status;
  std::string summary;
};

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Two independently widened enclosures of the same number: the deeper one must
// sit inside the shallower up to the outward rounding of each (a few ulps).
bool nested(const Enclosure& shallow, const Enclosure& deep) {
  const double slack = 8 * std::numeric_limits<double>::epsilon() * std::max(std::fabs(shallow.lo()), std::fabs(shallow.hi()));
  return deep.lo() >= shallow.lo() - slack && deep.hi() <= shallow.hi() + slack && deep.overlaps(shallow);
}

Outcome c1_oracle_consistency() {
  const auto t0 = Clock::now();
  OracleConfig shallow, deep;
  shallow.depth = 60;
  deep.depth = 120;
  const std::pair<RatioKind, Family> kinds[] = {{RatioKind::PcfPhi, Family::PcfU},
                                                {RatioKind::BesselI, Family::BesselI},
                                                {RatioKind::BesselK, Family::BesselK},
                                                {RatioKind::KummerAB1B1, Family::Kummer},
                                                {RatioKind::GaussH, Family::Gauss}};
  std::size_t points = 0, wide = 0, not_nested = 0, errors = 0;
  double worst = 0;
  for (const auto& [kind, fam] : kinds) {
    const Grid g = default_grid(fam);
    for (const auto& p : g.params)
      for (double x : g.xs) {
        if (!in_domain(kind, p, x)) continue;
        ++points;
        try {
          const OracleResult a = ratio_enclosure(RatioSpec(kind, p, x), shallow);
          const OracleResult b = ratio_enclosure(RatioSpec(kind, p, x), deep);
          const double w = std::max(a.enclosure.rel_width(), b.enclosure.rel_width());
          worst = std::max(worst, w);
          if (!(w <= 1e-12)) {
            ++wide;
            std::cerr << "  C1 wide: " << to_string(kind) << " p0=" << p[0] << " x=" << x << " rel_width=" << w << '\n';
          }
          if (!nested(a.enclosure, b.enclosure)) {
            ++not_nested;
            std::cerr << "  C1 not nested: " << to_string(kind) << " p0=" << p[0] << " x=" << x << '\n';
          }
        } catch (const Error& e) {
          ++errors;
          std::cerr << "  C1 error: " << e.what() << '\n';
        }
      }
  }
  const double secs = seconds_since(t0);
  const bool ok = wide == 0 && not_nested == 0 && errors == 0 && secs <= 60;
  std::ostringstream s;
  s << "oracle self-consistency: " << points << " points, worst rel_width " << fmt("%.2e", worst) << ", " << wide
    << " wide, " << not_nested << " not nested, " << errors << " errors, " << fmt("%.1f", secs) << " s";
  return {ok ? Status::Pass : Status::Fail, s.str()};
}

Outcome c2_closed_forms() {
  double worst = 0;
  auto track = [&](double got, double want, const char* what, double x) {
    const double r = rel(got, want);
    if (r > 1e-13) std::cerr << "  C2 " << what << " at x=" << x << ": rel err " << r << '\n';
    worst = std::max(worst, r);
  };
  for (double x : Axis{0.01, 50, 40, Sampling::Log}.points()) {
    track(bessel_i_ratio_enclosure(0.5, x).enclosure.mid(), 1 / std::tanh(x), "coth", x);
    track(bessel_k_ratio_enclosure(0.5, x).enclosure.mid(), 1 + 1 / x, "K3/2 / K1/2", x);
  }
  for (double x : Axis{1e-3, 30, 40, Sampling::Log}.points()) {
    track(kummer_series(1, 1, x).value, std::exp(x), "M(1,1,x)", x);
    track(kummer_series(1, 2, x).value, std::expm1(x) / x, "M(1,2,x)", x);
    // m(2,3,x)/m(1,2,x) from M(1,2,x) and M(2,3,x) = 2(e^x (x-1) + 1)/x^2; below
    // x = 1 the numerator is summed as sum_{k>=2} (k-1) x^k/k! to avoid cancellation
    double num = std::exp(x) * (x - 1) + 1;
    if (x < 1) {
      num = 0;
      double t = x;
      for (int k = 2; k < 40; ++k) num += (k - 1) * (t *= x / k);
    }
    track(kummer_ratio_enclosure(1, 2, x).enclosure.mid(), num / (x * std::expm1(x)), "m(2,3)/m(1,2)", x);
  }
  for (double x : Axis{1e-4, 0.99, 40, Sampling::Log}.points()) {
    const double F = -std::log1p(-x) / x;
    track(gauss_series(1, 1, 2, x).value, F, "2F1(1,1;2;x)", x);
    // h = F'/F; the closed form loses digits to cancellation below x ~ 1e-2
    if (x >= 1e-2) track(gauss_ratio_enclosure(1, 1, 2, x).enclosure.mid(), 1 / ((1 - x) * -std::log1p(-x)) - 1 / x,
                         "2F1 ratio", x);
  }
  return {worst <= 1e-13 ? Status::Pass : Status::Fail,
          "closed-form anchors (coth, 1+1/x, e^x, (e^x-1)/x, -log(1-x)/x): worst rel err " + fmt("%.2e", worst)};
}

std::vector<VerificationReport> full_verify() {
  std::vector<VerificationReport> out;
  std::map<Family, std::unique_ptr<OracleCache>> caches;
  for (const auto& d : full_catalog()) {
    const Family f = family_of(d.ratio);
    auto& c = caches[f];
    if (!c) c = std::make_unique<OracleCache>();
    out.push_back(verify_bound(d, default_grid(f), *c, true));
  }
  return out;
}

Outcome c3_inequalities(const std::vector<VerificationReport>& reps) {
  std::size_t points = 0, viol = 0, inc = 0, nc = 0, tight = 0;
  for (const auto& r : reps) {
    points += r.num_points;
    viol += r.num_violations;
    inc += r.num_inconclusive;
    nc += r.num_not_converged;
    tight += r.num_tight;
    if (!r.ok())
      std::cerr << "  C3 " << r.id << ": " << r.num_violations << " violations, " << r.num_inconclusive
                << " inconclusive, " << r.num_not_converged << " not converged; worst at p0="
                << (r.worst_params.empty() ? 0.0 : r.worst_params[0]) << " x=" << r.worst_x << '\n';
  }
  std::ostringstream s;
  s << "inequality suites: " << reps.size() << " bounds, " << points << " points, " << viol << " violations, " << inc
    << " inconclusive, " << nc << " not converged, " << tight << " within rounding allowance";
  return {viol == 0 && inc == 0 && nc == 0 && reps.size() == full_catalog().size() ? Status::Pass : Status::Fail,
          s.str()};
}

Outcome c4_equalities() {
  double worst = 0;
  std::size_t checked = 0;
  auto track = [&](double got, double want, const std::string& what) {
    const double r = rel(got, want);
    if (r > 1e-13) std::cerr << "  C4 " << what << ": rel err " << r << '\n';
    worst = std::max(worst, r);
    ++checked;
  };
  std::set<std::string> kummer_ids;
  for (double a : {1.2, 2.0, 3.7})
    for (double x : {1e-3, 0.5, 5.0, 30.0}) {
      track(kummer_ratio_enclosure(a, a, x).enclosure.mid(), 1.0, "kummer ratio at a = b");
      for (const auto& d : full_catalog())
        if (d.ratio == RatioKind::KummerAB1B1 && d.is_valid({a, a})) {
          track(d.evaluate({a, a}, x), 1.0, d.id + " at a = b");
          kummer_ids.insert(d.id);
        }
      // m(a+1,a,x)/m(a,a,x) = a + x, and both transported bounds collapse onto it
      const auto [lo, hi] = confluent::a1b_bounds(a, a, x);
      track(lo, a + x, "a1b lower at a = b");
      track(hi, a + x, "a1b upper at a = b");
      track(kummer_a1b_enclosure(a, a, x).enclosure.mid(), a + x, "a1b ratio at a = b");
    }
  const auto& gk = find_bound("bessel.gapk.upper.K");
  for (double x : {0.01, 1.0, 7.0, 50.0}) {
    track(bessel::gapk_bounds(0.5, x).second, x + 1, "gapk upper at nu = 1/2");
    track(gk.evaluate({0.5}, x), bessel_k_ratio_enclosure(0.5, x).enclosure.mid(), "gapk upper K vs oracle at nu = 1/2");
  }
  track(pcf::trig33(1, 0), 1.0, "trig33(1, 0)");
  std::ostringstream s;
  // lambda, lambda_tilde and b03 (the descriptors valid at a = b) plus the a1b pair
  s << "equality anchors: " << checked << " checks (" << kummer_ids.size() << " h bounds and the a1b pair at a = b, "
    << "gapk at nu = 1/2, trig33(1,0)), worst " << fmt("%.2e", worst);
  return {worst <= 1e-13 && kummer_ids.size() == 3 ? Status::Pass : Status::Fail, s.str()};
}

Outcome c5_coefficients() {
  bool ok = true;
  std::ostringstream s;
  auto check = [&](const std::string& what, double got, double want, double tol) {
    const double r = rel(got, want);
    std::cerr << "  C5 " << what << ": fitted " << got << ", expected " << want << ", rel " << r << '\n';
    if (!(r <= tol)) ok = false;
  };
  try {
    // gap = bound - ratio, so a lower bound carries a negative coefficient
    const auto& b03 = find_bound("pcf.b03");
    for (double n : {0.0, 1.0, 5.0}) {
      const auto f = fit_leading_coefficient(b03, {n}, FitSide::AtPlusInf, -5, 2, {30, 100});
      check("pcf b03 x^-5 coefficient, n=" + fmt("%g", n), f.c0, -(n + 0.5) * (n + 1.5), 0.02);
    }
    const auto& cb = find_bound("confluent.b03.a_lt_b");
    for (auto [a, b] : {std::pair{2.0, 3.0}, {1.5, 3.2}}) {
      const auto inf = fit_leading_coefficient(cb, {a, b}, FitSide::AtPlusInf, -3, 1, {50, 200});
      check("confluent (0,3) x^-3 coefficient at (" + fmt("%g", a) + "," + fmt("%g", b) + ")", inf.c0,
            -(a - 1) * (b - a), 0.02);
      // b03(a,b,0) - h(a,b,0) = (a-1)/(b-1) - a/b
      const auto zero = fit_leading_coefficient(cb, {a, b}, FitSide::AtZero, 0, 1, {1e-4, 1e-2});
      check("confluent (0,3) gap at 0", zero.c0, -(b - a) / ((b - 1) * b), 0.01);
    }
    for (auto [a, b, c] : {std::tuple{1.0, 1.0, 2.0}, {0.5, 5.0, 1.0}, {2.0, 3.0, 4.0}, {5.0, 0.5, 0.5}})
      check("gauss slope", gauss_small_x_slope(a, b, c, 1e-4), (c * (a + b + 1) - a * b) / (c * (c + 1)), 0.01);
  } catch (const Error& e) {
    std::cerr << "  C5 error: " << e.what() << '\n';
    ok = false;
  }
  return {ok ? Status::Pass : Status::Fail,
          "asymptotic coefficients: PCF x^-5 (n = 0, 1, 5), confluent (0,3) at +inf and 0, Gauss slope"};
}

// Tags whose fitted order contradicts the declared count. Kept in the catalog
// as declared; see the README for the derivation of the actual orders.
const std::set<std::pair<std::string, FitSide>> kKnownMismatches = {
    {"bessel.trig_upper_I", FitSide::AtZero},
    {"bessel.trig_upper_Kratio", FitSide::AtZero},
};

Outcome c6_accuracy() {
  const AccuracyReport rep = certify_accuracy_table();
  std::size_t xfail = 0, unexpected = 0, xpass = 0;
  for (const auto& e : rep.entries) {
    const bool known = kKnownMismatches.count({e.id, e.side}) > 0;
    const std::string fit = e.fit ? fmt("%.3f", e.fit->exponent) : "none";
    if (e.status == AccuracyStatus::Match && known) {
      ++xpass;
      std::cerr << "  C6 XPASS " << e.id << " " << to_string(e.side) << '\n';
    } else if (e.status != AccuracyStatus::Match) {
      known ? ++xfail : ++unexpected;
      std::cerr << "  C6 " << (known ? "XFAIL " : "") << to_string(e.status) << " " << e.id << " "
                << to_string(e.side) << " declared " << e.declared << " expected exponent " << e.expected_exponent
                << " fitted " << fit << (e.note.empty() ? "" : " (" + e.note + ")") << '\n';
    }
  }
  std::ostringstream s;
  s << "accuracy tags: " << rep.entries.size() << " endpoint tags, " << rep.num_match << " match, " << xfail
    << " known mismatches, " << unexpected << " unexpected, " << xpass << " unexpected passes";
  if (unexpected || xpass) return {Status::Fail, s.str()};
  return {xfail ? Status::XFail : Status::Pass, s.str()};
}

Outcome c7_riccati() {
  std::size_t pass = 0, mutations_failed = 0, mutations = 0, wrong = 0;
  for (const auto& inst : riccati::registry()) {
    const auto r = riccati::run_instance(inst);
    if (inst.is_mutation) {
      ++mutations;
      if (r.verdict == riccati::Verdict::Fail) ++mutations_failed;
    } else if (r.verdict == riccati::Verdict::Pass) {
      ++pass;
    }
    if (!r.as_expected) {
      ++wrong;
      std::cerr << "  C7 " << inst.id << ": " << to_string(r.verdict) << ", expected " << to_string(r.expected) << '\n';
    }
  }
  const std::size_t instances = riccati::registry().size() - mutations;
  std::ostringstream s;
  s << "Riccati registry: " << pass << "/" << instances << " instances PASS, " << mutations_failed << "/" << mutations
    << " mutations FAIL";
  return {wrong == 0 && mutations == 12 && pass == instances ? Status::Pass : Status::Fail, s.str()};
}

Outcome c8_cross_family() {
  double worst = 0;
  for (double nu = 0.5 + 1e-3; nu <= 10; nu += 0.0999)
    for (double z : Axis{1e-3, 20, 60, Sampling::Log}.points())
      worst = std::max(worst, confluent::eta_bessel_specialization_gap(nu, z));
  bool slopes_ok = true;
  std::string slopes;
  for (auto [a, b, x] : {std::tuple{1.0, 2.0, 1.0}, {1.5, 2.5, 3.0}, {0.5, 4.0, 0.2}}) {
    const auto rep = gauss::confluent_limit_check(a, b, x);
    slopes += (slopes.empty() ? "" : ", ") + fmt("%.3f", rep.slope);
    if (!(std::fabs(rep.slope + 1) <= 0.3)) slopes_ok = false;
  }
  return {worst <= 1e-13 && slopes_ok ? Status::Pass : Status::Fail,
          "cross-family: eta specialization worst rel diff " + fmt("%.2e", worst) + ", Gauss limit slopes " + slopes};
}

Outcome c9_conjecture() {
  const auto xs = Axis{-10, 10, 81}.points();
  bool produced = true;
  std::size_t undecided = 0;
  for (double n : {0.6, 1.0, 2.0}) {
    const auto t = pcf::double_ratio_tower(n, 5, xs);
    produced = produced && t.flags.size() == 5 && t.values.size() == 5;
    for (const auto& f : t.flags) {
      undecided += f.undecided_steps;
      std::cerr << "  C9 n=" << n << " k=" << f.k << " increasing=" << f.increasing << " below_one=" << f.below_one
                << " above_previous=" << f.above_previous << " undecided_pairs=" << f.undecided_steps << '\n';
    }
    for (const auto& row : t.values)
      for (const auto& e : row) produced = produced && !std::isnan(e.lo()) && !std::isnan(e.hi());
  }
  return {produced ? Status::Pass : Status::Fail,
          "conjecture exploration: flags for k <= 5, n in {0.6, 1, 2}; " + std::to_string(undecided) +
              " x pairs left undecided by the enclosures (flags printed to stderr; exploratory only)"};
}

std::string serialize(const std::vector<VerificationReport>& reps) {
  std::ostringstream os;
  io::write(io::verification_table(reps), io::Format::Csv, os);
  io::write(io::verification_table(reps), io::Format::Json, os);
  for (const auto& r : reps)
    for (const auto& p : r.records) {
      os << r.id;
      for (double v : p.params) os << ',' << io::format_double(v);
      os << ',' << io::format_double(p.x) << ',' << io::format_double(p.oracle.lo()) << ','
         << io::format_double(p.oracle.hi()) << ',' << io::format_double(p.bound) << ','
         << io::format_double(p.margin) << ',' << to_string(p.verdict) << '\n';
    }
  return os.str();
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;
  std::vector<VerificationReport> first;
  double verify_secs = 0;

  criteria.emplace_back("C1", c1_oracle_consistency);
  criteria.emplace_back("C2", c2_closed_forms);
  criteria.emplace_back("C3", [&] {
    const auto tv = Clock::now();
    first = full_verify();
    verify_secs = seconds_since(tv);
    return c3_inequalities(first);
  });
  criteria.emplace_back("C4", c4_equalities);
  criteria.emplace_back("C5", c5_coefficients);
  criteria.emplace_back("C6", c6_accuracy);
  criteria.emplace_back("C7", c7_riccati);
  criteria.emplace_back("C8", c8_cross_family);
  criteria.emplace_back("C9", c9_conjecture);
  criteria.emplace_back("C10", [&] {
    const std::string a = serialize(first);
    const std::string b = serialize(full_verify());
    const double total = seconds_since(t0);
    const bool same = a == b && !a.empty();
    return Outcome{same && total <= 600 ? Status::Pass : Status::Fail,
                   std::string("determinism: two full verify runs ") + (same ? "byte-identical" : "DIFFER") + " (" +
                       std::to_string(a.size()) + " bytes, one run " + fmt("%.1f", verify_secs) + " s); suite " +
                       fmt("%.1f", total) + " s"};
  });

  bool failed = false;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {Status::Fail, std::string("uncaught: ") + e.what()};
    }
    const char* tag = o.status == Status::Pass ? "PASS" : o.status == Status::XFail ? "XFAIL" : "FAIL";
    failed = failed || o.status == Status::Fail;
    std::cout << "[" << name << "] " << tag << "  " << o.summary << std::endl;
  }
  return failed ? 1 : 0;
}
