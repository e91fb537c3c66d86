#pragma once

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace hahnosc::app {

using Cell = std::variant<std::monostate, long long, double, std::string>;

/// A rectangular result with named columns plus free-form metadata.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

namespace detail {

inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

struct CellText {
  std::string operator()(std::monostate) const { return ""; }
  std::string operator()(long long v) const { return std::to_string(v); }
  std::string operator()(double v) const { return format_double(v); }
  std::string operator()(const std::string& s) const { return csv_field(s); }
};

struct CellJson {
  nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
  nlohmann::ordered_json operator()(long long v) const { return v; }
  nlohmann::ordered_json operator()(double v) const {
    if (std::isfinite(v)) return v;
    return format_double(v);
  }
  nlohmann::ordered_json operator()(const std::string& s) const { return s; }
};

}  // namespace detail

inline void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << detail::csv_field(t.columns[c]);
  os << "\r\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << std::visit(detail::CellText{}, row[c]);
    os << "\r\n";
  }
}

inline void write_json(const Table& t, std::ostream& os) {
  nlohmann::ordered_json doc;
  doc["meta"] = t.meta;
  doc["data"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) rec[t.columns[c]] = std::visit(detail::CellJson{}, row[c]);
    doc["data"].push_back(std::move(rec));
  }
  os << doc.dump(2) << "\n";
}

}  // namespace hahnosc::app
