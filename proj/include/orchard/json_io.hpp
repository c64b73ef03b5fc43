#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "orchard/drawing.hpp"

namespace orchard {

// Raised when a document does not have the expected shape; the message names
// the offending field by path, e.g. "points[3].x".
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& j, const char* name,
                                           const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(path + "." + name + ": missing");
  return *it;
}

inline std::int64_t require_int(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number_integer()) {
    throw ParseError(path + ": expected an integer (floats are not accepted)");
  }
  return j.get<std::int64_t>();
}

inline Color require_color(const nlohmann::json& j, const std::string& path) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "black") return Color::black;
    if (s == "white") return Color::white;
  }
  throw ParseError(path + ": expected \"black\" or \"white\"");
}

}  // namespace detail

// Reads a drawing document: an object with "points" (array of {x, y, color})
// and "edges" (the literal "complete_bipartite", or an explicit array of
// [u, v] index pairs). Shape problems raise ParseError; the resulting
// drawing is then validated as usual, so degenerate placements or bad edge
// lists raise the same errors direct construction would.
inline ColoredDrawing drawing_from_json(const nlohmann::json& doc) {
  const auto& points_json = detail::require_field(doc, "points", "document");
  if (!points_json.is_array()) throw ParseError("points: expected an array");
  std::vector<Point> points;
  std::vector<Color> colors;
  points.reserve(points_json.size());
  colors.reserve(points_json.size());
  for (std::size_t i = 0; i < points_json.size(); ++i) {
    const std::string path = "points[" + std::to_string(i) + "]";
    const auto& p = points_json[i];
    if (!p.is_object()) throw ParseError(path + ": expected an object");
    points.push_back({detail::require_int(detail::require_field(p, "x", path), path + ".x"),
                      detail::require_int(detail::require_field(p, "y", path), path + ".y")});
    colors.push_back(detail::require_color(detail::require_field(p, "color", path),
                                           path + ".color"));
  }
  const auto& edges_json = detail::require_field(doc, "edges", "document");
  if (edges_json.is_string()) {
    if (edges_json.get_ref<const std::string&>() != "complete_bipartite") {
      throw ParseError("edges: unknown edge keyword \"" +
                       edges_json.get<std::string>() + "\"");
    }
    return ColoredDrawing::complete_bipartite(std::move(points), std::move(colors));
  }
  if (!edges_json.is_array()) {
    throw ParseError("edges: expected \"complete_bipartite\" or an array of pairs");
  }
  std::vector<GraphSpec::Edge> edges;
  edges.reserve(edges_json.size());
  for (std::size_t i = 0; i < edges_json.size(); ++i) {
    const std::string path = "edges[" + std::to_string(i) + "]";
    const auto& e = edges_json[i];
    if (!e.is_array() || e.size() != 2) {
      throw ParseError(path + ": expected a pair [u, v]");
    }
    const std::int64_t u = detail::require_int(e[0], path + "[0]");
    const std::int64_t v = detail::require_int(e[1], path + "[1]");
    if (u < 0 || v < 0) throw ParseError(path + ": vertex indices must be nonnegative");
    edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
  }
  return ColoredDrawing(Configuration(std::move(points)), std::move(colors),
                        GraphSpec::from_edges(points_json.size(), std::move(edges)));
}

// Serializes to the document shape drawing_from_json reads; fields emit in a
// fixed order so equal drawings produce byte-identical dumps. Complete
// bipartite graphs round-trip through the keyword, everything else through
// the explicit edge list.
inline nlohmann::ordered_json drawing_to_json(const ColoredDrawing& d) {
  nlohmann::ordered_json doc;
  auto& points = doc["points"];
  points = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    points.push_back({{"x", d.config()[i].x},
                      {"y", d.config()[i].y},
                      {"color", to_string(d.color(i))}});
  }
  if (d.graph().kind() == GraphKind::complete_bipartite) {
    doc["edges"] = "complete_bipartite";
  } else {
    auto& edges = doc["edges"];
    edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : d.graph().edges()) {
      edges.push_back({u, v});
    }
  }
  return doc;
}

}  // namespace orchard
