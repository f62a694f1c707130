#include "hyperratio/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace hyperratio::io {

using nlohmann::json;

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  fail(ErrorCode::Config, "unknown format '" + name + "' (expected csv or json)");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_cell(const Cell& c) {
  struct V {
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return csv_escape(v); }
    std::string operator()(const Params& p) const {
      std::string s;
      for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ";" : "") + format_double(p[i]);
      return s;
    }
  };
  return std::visit(V{}, c);
}

// Non-finite doubles become strings so that the JSON stays valid and lossless.
json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

json json_cell(const Cell& c) {
  struct V {
    json operator()(double v) const { return json_number(v); }
    json operator()(long long v) const { return v; }
    json operator()(bool v) const { return v; }
    json operator()(const std::string& v) const { return v; }
    json operator()(const Params& p) const {
      json a = json::array();
      for (double v : p) a.push_back(json_number(v));
      return a;
    }
  };
  return std::visit(V{}, c);
}

std::string side_name(const std::optional<Side>& s) { return s ? std::string(to_string(*s)) : ""; }

}  // namespace

void write(const Table& t, Format f, std::ostream& os) {
  if (f == Format::Csv) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << '\n';
    }
    return;
  }
  json arr = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = json_cell(row[i]);
    arr.push_back(std::move(obj));
  }
  // ordered output: nlohmann::json sorts keys, which is deterministic
  os << arr.dump(1) << '\n';
}

Table verification_table(const std::vector<VerificationReport>& reports) {
  Table t{{"id", "group", "ratio", "side", "accuracy", "grid", "num_points", "num_violations", "num_inconclusive",
           "num_not_converged", "num_tight", "min_margin", "worst_params", "worst_x", "status"},
          {}};
  for (const auto& r : reports) {
    const BoundDescriptor& d = find_bound(r.id);
    std::string status = r.ok() ? "PASS" : r.num_violations ? "VIOLATION" : r.num_inconclusive ? "INCONCLUSIVE"
                                                                                                 : "NOT_CONVERGED";
    t.rows.push_back({r.id, std::string(to_string(d.group)), std::string(to_string(d.ratio)),
                      std::string(to_string(d.side)), format_accuracy(d.accuracy), r.grid_summary,
                      static_cast<long long>(r.num_points), static_cast<long long>(r.num_violations),
                      static_cast<long long>(r.num_inconclusive), static_cast<long long>(r.num_not_converged),
                      static_cast<long long>(r.num_tight), r.min_margin, r.worst_params, r.worst_x, status});
  }
  return t;
}

Table point_table(const std::vector<TableRow>& rows) {
  Table t{{"family", "id", "params", "x", "oracle_lo", "oracle_hi", "converged", "bound", "margin", "sharpness",
           "verdict"},
          {}};
  for (const auto& r : rows)
    t.rows.push_back({std::string(to_string(r.family)), r.id, r.params, r.x, r.oracle.lo(), r.oracle.hi(),
                      r.converged, r.bound, r.margin, r.sharpness, std::string(to_string(r.verdict))});
  return t;
}

Table accuracy_table(const AccuracyReport& rep) {
  const double nan = std::nan("");
  Table t{{"id", "side", "params", "declared_terms", "expected_exponent", "fitted_exponent", "stderr", "coefficient",
           "fit_residual", "window_lo", "window_hi", "npts", "decades", "status", "note"},
          {}};
  for (const auto& e : rep.entries) {
    const auto& f = e.fit;
    t.rows.push_back({e.id, std::string(to_string(e.side)), e.params, static_cast<long long>(e.declared),
                      e.expected_exponent, f ? f->exponent : nan, f ? f->stderr_exponent : nan,
                      f ? f->coefficient : nan, f ? f->residual : nan, f ? f->window.lo : nan,
                      f ? f->window.hi : nan, static_cast<long long>(f ? f->npts : 0), f ? f->decades : nan,
                      std::string(to_string(e.status)), e.note});
  }
  return t;
}

Table riccati_table(const std::vector<riccati::InstanceReport>& reports) {
  const double nan = std::nan("");
  Table t{{"instance", "expected", "verdict", "as_expected", "check", "problem", "problem_verdict", "c_sign",
           "lambda_slope", "theorem_case", "side", "required_sign", "min_margin", "worst_x", "num_points",
           "num_wrong_sign", "num_within_noise", "message"},
          {}};
  for (const auto& r : reports) {
    const std::string verdict(to_string(r.verdict)), expected(to_string(r.expected));
    for (const auto& n : r.nullcline)
      t.rows.push_back({r.id, expected, verdict, r.as_expected, std::string("nullcline"), n.name,
                        std::string(to_string(n.verdict)), static_cast<long long>(n.c_sign),
                        static_cast<long long>(n.lambda_slope), static_cast<long long>(n.theorem_case),
                        side_name(n.implied_side), 0LL, n.min_oracle_margin, nan,
                        static_cast<long long>(n.num_points), static_cast<long long>(n.oracle_disagreements), 0LL,
                        n.message});
    for (const auto& s : r.residual)
      t.rows.push_back({r.id, expected, verdict, r.as_expected, std::string("residual"), s.name,
                        std::string(to_string(s.verdict)), 0LL, 0LL, 0LL, side_name(s.certified_side),
                        static_cast<long long>(s.required_sign), s.min_margin, s.worst_x,
                        static_cast<long long>(s.num_points), static_cast<long long>(s.num_wrong_sign),
                        static_cast<long long>(s.num_within_noise), std::string()});
  }
  return t;
}

Table conjecture_table(const std::vector<pcf::DoubleRatioTower>& towers) {
  Table t{{"n", "k", "x", "lo", "hi", "increasing", "below_one", "above_previous", "undecided_steps",
           "all_converged"},
          {}};
  for (const auto& tw : towers)
    for (const auto& f : tw.flags)
      for (std::size_t i = 0; i < tw.xs.size(); ++i) {
        const Enclosure& e = tw.values[f.k - 1][i];
        t.rows.push_back({tw.n, static_cast<long long>(f.k), tw.xs[i], e.lo(), e.hi(),
                          static_cast<long long>(f.increasing), static_cast<long long>(f.below_one),
                          static_cast<long long>(f.above_previous), static_cast<long long>(f.undecided_steps),
                          tw.all_converged});
      }
  return t;
}

Grid parse_grid_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::Config, std::string("grid file is not valid JSON: ") + e.what());
  }
  Grid g;
  try {
    require(j.is_object() && j.contains("params") && j.contains("x"), ErrorCode::Config,
            "grid file needs 'params' and 'x'");
    for (const auto& p : j.at("params")) g.params.push_back(p.get<Params>());
    const json& x = j.at("x");
    if (x.is_array()) {
      g.xs = x.get<std::vector<double>>();
    } else {
      Axis a{x.at("lo").get<double>(), x.at("hi").get<double>(), x.at("count").get<int>()};
      const std::string s = x.value("sampling", "linear");
      if (s == "linear") a.sampling = Sampling::Linear;
      else if (s == "log") a.sampling = Sampling::Log;
      else if (s == "mixed") a.sampling = Sampling::Mixed;
      else fail(ErrorCode::Config, "unknown sampling '" + s + "'");
      g.xs = a.points();
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::Config, std::string("malformed grid file: ") + e.what());
  }
  require(!g.params.empty() && !g.xs.empty(), ErrorCode::Config, "grid is empty");
  for (double v : g.xs) require(std::isfinite(v), ErrorCode::Config, "grid contains a non-finite x");
  return g;
}

Grid read_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Config, "cannot open grid file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_grid_json(ss.str());
}

}  // namespace hyperratio::io
