#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "eqm/errors.hpp"

namespace eqm {

/// Orders, truncation radius and tolerances shared by every numeric integral.
struct QuadratureConfig {
  int band_order = 128;      // minimum nodes per band or gap
  double tail_radius = 0.0;  // 0 selects 4 * enclosing radius
  int tail_terms = 24;       // coefficients b_2 .. b_{tail_terms+1}
  double abs_tol = 1e-9;

  int w_grid = 512;
  int circle_nodes = 1024;
  int param_nodes = 2048;
  double smoothing_width = 1e-3;
  int extremal_grid = 4096;

  void validate() const {
    if (band_order < 8) fail(ErrorCode::InvalidConfig, "band_order must be >= 8");
    if (!(abs_tol > 0.0)) fail(ErrorCode::InvalidConfig, "abs_tol must be > 0");
    if (tail_terms < 0) fail(ErrorCode::InvalidConfig, "tail_terms must be >= 0");
    if (tail_radius < 0.0) fail(ErrorCode::InvalidConfig, "tail_radius must be >= 0");
    if (w_grid < 3) fail(ErrorCode::InvalidConfig, "w_grid must be >= 3");
    if (circle_nodes < 16) fail(ErrorCode::InvalidConfig, "circle_nodes must be >= 16");
    if (param_nodes < 64) fail(ErrorCode::InvalidConfig, "param_nodes must be >= 64");
    if (!(smoothing_width > 0.0)) fail(ErrorCode::InvalidConfig, "smoothing_width must be > 0");
    if (extremal_grid < 16) fail(ErrorCode::InvalidConfig, "extremal_grid must be >= 16");
  }

  /// Truncation height for vertical-line integrals around a set of radius R.
  double tail_height(double enclosing_radius) const {
    const double y = tail_radius > 0.0 ? tail_radius : 4.0 * enclosing_radius;
    if (!(y > enclosing_radius)) {
      fail(ErrorCode::InvalidConfig, "tail_radius must exceed the enclosing radius");
    }
    return y;
  }
};

inline void to_json(nlohmann::json& j, const QuadratureConfig& c) {
  j = nlohmann::json{{"band_order", c.band_order},       {"tail_radius", c.tail_radius},
                     {"tail_terms", c.tail_terms},       {"abs_tol", c.abs_tol},
                     {"w_grid", c.w_grid},               {"circle_nodes", c.circle_nodes},
                     {"param_nodes", c.param_nodes},     {"smoothing_width", c.smoothing_width},
                     {"extremal_grid", c.extremal_grid}};
}

inline void from_json(const nlohmann::json& j, QuadratureConfig& c) {
  c.band_order = j.value("band_order", c.band_order);
  c.tail_radius = j.value("tail_radius", c.tail_radius);
  c.tail_terms = j.value("tail_terms", c.tail_terms);
  c.abs_tol = j.value("abs_tol", c.abs_tol);
  c.w_grid = j.value("w_grid", c.w_grid);
  c.circle_nodes = j.value("circle_nodes", c.circle_nodes);
  c.param_nodes = j.value("param_nodes", c.param_nodes);
  c.smoothing_width = j.value("smoothing_width", c.smoothing_width);
  c.extremal_grid = j.value("extremal_grid", c.extremal_grid);
}

/// Reads a JSON object whose keys mirror the struct fields; absent keys keep
/// their defaults.
inline QuadratureConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open config file " + path);
  QuadratureConfig cfg;
  try {
    nlohmann::json j;
    in >> j;
    cfg = j.get<QuadratureConfig>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

}  // namespace eqm
