#pragma once

// Tabular output for the CLI: CSV with a header row and JSON arrays of
// objects. Doubles are printed as %.16e so identical runs give identical bytes.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "lommel/inequalities.hpp"

namespace lommel {

using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { csv, json };

std::string format_double_exact(double v);

void write_csv(std::ostream& out, const Table& t);
void write_json(std::ostream& out, const Table& t);
void write_table(std::ostream& out, const Table& t, Format format);

/// One row per report, columns in a fixed order.
Table check_table(const std::vector<CheckReport>& reports);

}  // namespace lommel
