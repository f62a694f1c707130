#pragma once

// Tabular export of every report type. CSV has a fixed header and 17
// significant digits; JSON carries the same records as an array of objects.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "hyperratio/accuracy.hpp"
#include "hyperratio/pcf_bounds.hpp"
#include "hyperratio/riccati.hpp"
#include "hyperratio/types.hpp"
#include "hyperratio/verify.hpp"

namespace hyperratio::io {

enum class Format { Csv, Json };
Format parse_format(const std::string& name);  // throws Config

using Cell = std::variant<double, long long, bool, std::string, Params>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_double(double v);  // %.17g; nan and inf spelled out
void write(const Table& t, Format f, std::ostream& os);

Table verification_table(const std::vector<VerificationReport>& reports);
Table point_table(const std::vector<TableRow>& rows);
Table accuracy_table(const AccuracyReport& rep);
Table riccati_table(const std::vector<riccati::InstanceReport>& reports);
Table conjecture_table(const std::vector<pcf::DoubleRatioTower>& towers);

// {"params": [[...], ...], "x": [...] | {"lo", "hi", "count", "sampling"}}.
// Throws Config on malformed input or an empty grid.
Grid parse_grid_json(const std::string& text);
Grid read_grid_file(const std::string& path);

}  // namespace hyperratio::io
