#pragma once

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqm/config.hpp"
#include "eqm/equilibrium.hpp"
#include "eqm/errors.hpp"

namespace eqm {

using Json = nlohmann::ordered_json;

/// Self-contained record of one CLI run. Everything except `wall_time` is a
/// deterministic function of the command line.
struct RunReport {
  std::string command;
  QuadratureConfig config;
  Json records = Json::array();
  bool pass = true;
  double wall_time = 0.0;

  void add(Json record) {
    if (record.contains("pass") && record["pass"].is_boolean() && !record["pass"].get<bool>()) {
      pass = false;
    }
    records.push_back(std::move(record));
  }

  Json body() const {
    nlohmann::json cfg = config;
    Json c;
    for (auto it = cfg.begin(); it != cfg.end(); ++it) c[it.key()] = it.value();
    return Json{{"command", command}, {"config", c}, {"records", records}, {"pass", pass}};
  }

  Json to_json() const {
    Json j = body();
    j["timing"] = Json{{"wall_time", wall_time}};
    return j;
  }
};

inline std::string csv_cell(const Json& v) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") != std::string::npos) {
      std::string q = "\"";
      for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
      }
      return q + "\"";
    }
    return s;
  }
  if (v.is_number_float()) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << v.get<double>();
    return os.str();
  }
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + csv_cell(v[i]);
    return s;
  }
  if (v.is_null()) return "";
  return v.dump();
}

/// Flat CSV projection of the records; columns in order of first appearance.
inline std::string records_to_csv(const Json& records) {
  std::vector<std::string> columns;
  for (const auto& r : records) {
    for (auto it = r.begin(); it != r.end(); ++it) {
      if (std::find(columns.begin(), columns.end(), it.key()) == columns.end()) {
        columns.push_back(it.key());
      }
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << "\n";
  for (const auto& r : records) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) os << ",";
      if (r.contains(columns[i])) os << csv_cell(r[columns[i]]);
    }
    os << "\n";
  }
  return os.str();
}

/// Writes JSON unless the path ends in ".csv".
inline void write_report(const RunReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, "cannot write " + path);
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
    out << records_to_csv(report.records);
  } else {
    out << report.to_json().dump(2) << "\n";
  }
}

inline Json solution_json(const EquilibriumSolution& sol) {
  const auto e = sol.set().endpoints();
  return Json{{"endpoints", std::vector<double>(e.begin(), e.end())},
              {"T_monomial", sol.T().monomial()},
              {"capacity", sol.capacity()},
              {"robin", sol.robin()},
              {"centroid", sol.centroid()},
              {"critical_points", sol.critical_points()},
              {"diagnostics",
               Json{{"mass", sol.total_mass()},
                    {"frostman_deviation", sol.frostman_deviation()},
                    {"leading_coefficient", sol.leading_coefficient()},
                    {"condition_number", sol.condition_number()},
                    {"centroid_quadrature", sol.centroid_quadrature()}}}};
}

}  // namespace eqm
