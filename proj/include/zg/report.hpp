// zg/report.hpp
//
// Verification reports: one row per conjugacy class with both sides of the
// relation carried as exact integers (never reduced), the modulus when the
// verdict is a congruence, and a per-row plus overall pass flag. Reports
// serialize to JSON (canonical, machine) and aligned TSV (human).

#pragma once

#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zg/integers.hpp"

namespace zg {

struct report_row {
  int32_t class_rep = 0;
  int_t lhs;
  int_t rhs;
  std::optional<long long> modulus;  // nullopt = exact equality verdict
  bool pass = false;
};

struct verification_report {
  std::string group_id;
  std::string relation;    // thm1 | thm2 | cor1 | eq9
  nlohmann::json params;   // relation parameters, small integers or strings
  std::vector<report_row> rows;
  bool pass = true;

  void add_row(report_row row) {
    pass = pass && row.pass;
    rows.push_back(std::move(row));
  }
};

// Large values are emitted as decimal strings: JSON numbers are only safe to
// 2^53 across consumers, and 12th powers already exceed that.
inline nlohmann::json int_to_json(const int_t& v) {
  static const int_t lo = -(int_t(1) << 53);
  static const int_t hi = int_t(1) << 53;
  if (v >= lo && v <= hi) return nlohmann::json(static_cast<long long>(v));
  return nlohmann::json(v.str());
}

inline nlohmann::json to_json(const verification_report& r) {
  nlohmann::json j;
  j["group"] = r.group_id;
  j["relation"] = r.relation;
  j["params"] = r.params;
  nlohmann::json rows = nlohmann::json::array();
  for (const report_row& row : r.rows) {
    nlohmann::json jr;
    jr["class_rep"] = row.class_rep;
    jr["lhs"] = int_to_json(row.lhs);
    jr["rhs"] = int_to_json(row.rhs);
    if (row.modulus)
      jr["modulus"] = *row.modulus;
    else
      jr["modulus"] = nullptr;
    jr["pass"] = row.pass;
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  j["pass"] = r.pass;
  return j;
}

namespace detail {

inline std::string tsv_params(const nlohmann::json& params) {
  std::string out;
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (!out.empty()) out += ' ';
    out += it.key();
    out += '=';
    out += it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
  }
  return out;
}

inline std::string aligned_table(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.resize(c + 1, 0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << "  ";
      os << std::left << std::setw(c + 1 == row.size() ? 0 : static_cast<int>(width[c]))
         << row[c];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace detail

inline std::string to_tsv(const verification_report& r) {
  std::ostringstream head;
  head << "# group=" << r.group_id << " relation=" << r.relation;
  std::string params = detail::tsv_params(r.params);
  if (!params.empty()) head << ' ' << params;
  head << '\n';

  std::vector<std::vector<std::string>> cells;
  cells.push_back({"class_rep", "lhs", "rhs", "modulus", "pass"});
  for (const report_row& row : r.rows)
    cells.push_back({std::to_string(row.class_rep), row.lhs.str(), row.rhs.str(),
                     row.modulus ? std::to_string(*row.modulus) : "-",
                     row.pass ? "PASS" : "FAIL"});
  cells.push_back({"overall", "", "", "", r.pass ? "PASS" : "FAIL"});
  return head.str() + detail::aligned_table(cells);
}

// Trace-pattern probe result: the sequence Tr^(0), ..., Tr^(n) for a unit of
// order p^n, with the element kept verbatim so a counterexample is never
// reported without the data to reproduce it.
struct trace_probe_report {
  std::string group_id;
  long long p = 0;
  long long unit_order = 0;
  int n = 0;
  std::vector<int_t> traces;  // length n + 1
  std::map<int32_t, int_t> element_coeffs;
  bool pass = false;
};

inline nlohmann::json to_json(const trace_probe_report& r) {
  nlohmann::json j;
  j["group"] = r.group_id;
  j["relation"] = "traces";
  j["params"] = {{"p", r.p}, {"order", r.unit_order}, {"n", r.n}};
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i <= r.n; ++i) {
    nlohmann::json jr;
    jr["i"] = i;
    jr["trace"] = int_to_json(r.traces.at(i));
    jr["expected"] = (i == r.n) ? 1 : 0;
    jr["pass"] = r.traces.at(i) == (i == r.n ? 1 : 0);
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [g, c] : r.element_coeffs) coeffs[std::to_string(g)] = int_to_json(c);
  j["element"] = std::move(coeffs);
  j["pass"] = r.pass;
  return j;
}

inline std::string to_tsv(const trace_probe_report& r) {
  std::ostringstream head;
  head << "# group=" << r.group_id << " relation=traces p=" << r.p
       << " order=" << r.unit_order << " n=" << r.n << '\n';
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"i", "trace", "expected", "pass"});
  for (int i = 0; i <= r.n; ++i) {
    int expected = (i == r.n) ? 1 : 0;
    cells.push_back({std::to_string(i), r.traces.at(i).str(), std::to_string(expected),
                     r.traces.at(i) == expected ? "PASS" : "FAIL"});
  }
  cells.push_back({"overall", "", "", r.pass ? "PASS" : "FAIL"});
  return head.str() + detail::aligned_table(cells);
}

}  // namespace zg
