#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "set.hpp"
#include "space.hpp"

namespace chabauty {

/// On-disk form of a finite point set:
///   {"dim": 2, "points": [[0.0, 1.0], ...], "label": "optional"}
/// An empty points list is a legitimate document and stands for the empty
/// set; dim is always required so the ambient space stays known.
struct PointSetDocument {
  int dim = 0;
  std::vector<Point> points;
  std::string label;  // empty string = absent
};

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline PointSetDocument parse_point_set(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DocumentError("document must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw DocumentError("document needs an integer \"dim\"");
  PointSetDocument out;
  out.dim = doc["dim"].get<int>();
  if (out.dim < 1) throw DocumentError("\"dim\" must be >= 1");
  if (!doc.contains("points") || !doc["points"].is_array())
    throw DocumentError("document needs a \"points\" array");
  for (const auto& row : doc["points"]) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(out.dim))
      throw DocumentError("every point needs exactly dim coordinates");
    Point p;
    p.reserve(static_cast<std::size_t>(out.dim));
    for (const auto& coord : row) {
      if (!coord.is_number())
        throw DocumentError("coordinates must be numbers");
      const double c = coord.get<double>();
      if (!std::isfinite(c))
        throw DocumentError("coordinates must be finite");
      p.push_back(c);
    }
    out.points.push_back(std::move(p));
  }
  if (doc.contains("label")) {
    if (!doc["label"].is_string())
      throw DocumentError("\"label\" must be a string");
    out.label = doc["label"].get<std::string>();
  }
  return out;
}

inline std::string write_point_set(const PointSetDocument& doc) {
  nlohmann::json out;
  out["dim"] = doc.dim;
  out["points"] = nlohmann::json::array();
  for (const Point& p : doc.points) out["points"].push_back(p);
  if (!doc.label.empty()) out["label"] = doc.label;
  return out.dump();
}

inline PointSet to_set(const PointSetDocument& doc) {
  for (const Point& p : doc.points)
    if (p.size() != static_cast<std::size_t>(doc.dim))
      throw DocumentError("point dimension mismatch");
  return PointSet(doc.points);
}

inline PointSetDocument from_set(const PointSet& set, int dim,
                                 std::string label = {}) {
  PointSetDocument doc;
  doc.dim = dim;
  doc.points = set.points();
  doc.label = std::move(label);
  return doc;
}

}  // namespace chabauty
