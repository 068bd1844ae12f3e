#include "lommel/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace lommel {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct CsvCell {
  std::string operator()(std::monostate) const { return ""; }
  std::string operator()(double v) const { return format_double_exact(v); }
  std::string operator()(long long v) const { return std::to_string(v); }
  std::string operator()(const std::string& s) const { return csv_escape(s); }
};

Cell optional_cell(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

}  // namespace

std::string format_double_exact(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.16e", v);
  return buffer;
}

void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << csv_escape(t.columns[i]);
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& t) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
              obj[t.columns[i]] = nullptr;
            } else if constexpr (std::is_same_v<T, double>) {
              if (std::isfinite(v)) {
                obj[t.columns[i]] = v;
              } else {
                obj[t.columns[i]] = format_double_exact(v);
              }
            } else {
              obj[t.columns[i]] = v;
            }
          },
          row[i]);
    }
    rows.push_back(std::move(obj));
  }
  out << rows.dump(2) << '\n';
}

void write_table(std::ostream& out, const Table& t, Format format) {
  if (format == Format::csv) {
    write_csv(out, t);
  } else {
    write_json(out, t);
  }
}

Table check_table(const std::vector<CheckReport>& reports) {
  Table t;
  t.columns = {"check",      "mu",          "nu",          "mu1",         "nu1",
               "shift",      "order",       "x",           "x_min",       "x_max",
               "points",     "spacing",     "tolerance",   "worst_margin", "violations",
               "status",     "limit_lo",    "limit_hi",    "expected_lo", "expected_hi",
               "candidate_hi", "detail"};
  for (const auto& r : reports) {
    std::vector<Cell> row;
    row.emplace_back(r.check_name);
    row.push_back(optional_cell(r.params.mu));
    row.push_back(optional_cell(r.params.nu));
    row.push_back(optional_cell(r.params.mu1));
    row.push_back(optional_cell(r.params.nu1));
    row.push_back(optional_cell(r.params.shift));
    if (r.params.order) {
      row.emplace_back(static_cast<long long>(*r.params.order));
    } else {
      row.emplace_back(std::monostate{});
    }
    row.push_back(optional_cell(r.params.x));
    row.emplace_back(r.grid.x_min());
    row.emplace_back(r.grid.x_max());
    row.emplace_back(static_cast<long long>(r.grid.points()));
    row.emplace_back(std::string(r.grid.spacing() == Spacing::uniform ? "uniform" : "chebyshev"));
    row.emplace_back(r.tolerance);
    row.push_back(optional_cell(r.worst_margin));
    row.emplace_back(static_cast<long long>(r.violations));
    row.emplace_back(std::string(to_string(r.status)));
    row.push_back(optional_cell(r.limit_lo));
    row.push_back(optional_cell(r.limit_hi));
    row.push_back(optional_cell(r.expected_lo));
    row.push_back(optional_cell(r.expected_hi));
    row.push_back(optional_cell(r.candidate_hi));
    row.emplace_back(r.detail);
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace lommel
