#include "hyperratio/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hyperratio {

Family family_of(RatioKind kind) {
  switch (kind) {
    case RatioKind::PcfPhi: return Family::PcfU;
    case RatioKind::BesselI:
    case RatioKind::BesselIK: return Family::BesselI;
    case RatioKind::BesselK:
    case RatioKind::BesselKDown: return Family::BesselK;
    case RatioKind::KummerAB1B1:
    case RatioKind::KummerA1B:
    case RatioKind::KummerA1B2: return Family::Kummer;
    case RatioKind::GaussH:
    case RatioKind::GaussBigH: return Family::Gauss;
  }
  fail(ErrorCode::Domain, "unknown ratio kind");
}

std::size_t param_count(Family family) {
  switch (family) {
    case Family::PcfU:
    case Family::BesselI:
    case Family::BesselK: return 1;
    case Family::Kummer: return 2;
    case Family::Gauss: return 3;
  }
  return 0;
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::PcfU: return "PCF_U";
    case Family::BesselI: return "BESSEL_I";
    case Family::BesselK: return "BESSEL_K";
    case Family::Kummer: return "KUMMER";
    case Family::Gauss: return "GAUSS";
  }
  return "?";
}

std::string_view to_string(RatioKind kind) {
  switch (kind) {
    case RatioKind::PcfPhi: return "PCF_PHI";
    case RatioKind::BesselI: return "BESSEL_I";
    case RatioKind::BesselK: return "BESSEL_K";
    case RatioKind::BesselKDown: return "BESSEL_K_DOWN";
    case RatioKind::BesselIK: return "BESSEL_IK";
    case RatioKind::KummerAB1B1: return "KUMMER_AB1B1";
    case RatioKind::KummerA1B: return "KUMMER_A1B";
    case RatioKind::KummerA1B2: return "KUMMER_A1B2";
    case RatioKind::GaussH: return "GAUSS_H";
    case RatioKind::GaussBigH: return "GAUSS_BIG_H";
  }
  return "?";
}

std::string_view to_string(BoundGroup group) {
  switch (group) {
    case BoundGroup::Pcf: return "pcf";
    case BoundGroup::Bessel: return "bessel";
    case BoundGroup::Confluent: return "confluent";
    case BoundGroup::Gauss: return "gauss";
  }
  return "?";
}

std::string_view to_string(Side side) { return side == Side::Lower ? "lower" : "upper"; }

std::optional<BoundGroup> parse_group(std::string_view name) {
  for (auto g : {BoundGroup::Pcf, BoundGroup::Bessel, BoundGroup::Confluent, BoundGroup::Gauss})
    if (to_string(g) == name) return g;
  return std::nullopt;
}

bool in_domain(RatioKind kind, const Params& p, double x) {
  const Family f = family_of(kind);
  if (p.size() != param_count(f)) return false;
  for (double v : p)
    if (!std::isfinite(v)) return false;
  if (!std::isfinite(x)) return false;
  switch (f) {
    case Family::PcfU: return true;
    case Family::BesselI:
    case Family::BesselK: return p[0] >= 0 && x > 0;
    case Family::Kummer: return p[0] > 0 && p[1] > 0 && x > 0;
    case Family::Gauss: return p[0] > 0 && p[1] > 0 && p[2] > 0 && x > 0 && x < 1;
  }
  return false;
}

void check_domain(RatioKind kind, const Params& params, double x) {
  if (!in_domain(kind, params, x))
    fail(ErrorCode::Domain, std::string("parameters outside the domain of ") + std::string(to_string(kind)));
}

RatioSpec::RatioSpec(RatioKind k, Params p, double xv) : kind(k), params(std::move(p)), x(xv) {
  check_domain(kind, params, x);
}

std::string format_accuracy(const std::optional<Accuracy>& acc) {
  if (!acc) return "unknown";
  return "(" + std::to_string(acc->left) + "," + std::to_string(acc->right) + ")";
}

double BoundDescriptor::evaluate(const Params& p, double x) const {
  if (!valid(p)) fail(ErrorCode::Domain, id + ": parameters outside validity range");
  return eval(p, x);
}

std::vector<double> Axis::points() const {
  require(count >= 1, ErrorCode::Config, "axis needs at least one point");
  require(lo <= hi, ErrorCode::Config, "axis requires lo <= hi");
  std::vector<double> out;
  if (count == 1 || lo == hi) return {lo};
  out.reserve(count);
  const double n = count - 1;
  switch (sampling) {
    case Sampling::Linear:
      for (int i = 0; i < count; ++i) out.push_back(lo + (hi - lo) * (i / n));
      break;
    case Sampling::Log: {
      require(lo > 0, ErrorCode::Config, "log axis requires lo > 0");
      const double l0 = std::log(lo), l1 = std::log(hi);
      for (int i = 0; i < count; ++i) out.push_back(std::exp(l0 + (l1 - l0) * (i / n)));
      break;
    }
    case Sampling::Mixed: {
      // asinh spacing: dense near zero, roughly logarithmic far from it
      const double t0 = std::asinh(lo), t1 = std::asinh(hi);
      for (int i = 0; i < count; ++i) out.push_back(std::sinh(t0 + (t1 - t0) * (i / n)));
      break;
    }
  }
  out.front() = lo;
  out.back() = hi;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string Grid::summary() const {
  std::ostringstream os;
  os << params.size() << " parameter sets x " << xs.size() << " arguments";
  if (!xs.empty()) os << " in [" << xs.front() << ", " << xs.back() << "]";
  return os.str();
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Violation: return "VIOLATION";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    case Verdict::NotConverged: return "NOT_CONVERGED";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

}  // namespace hyperratio
