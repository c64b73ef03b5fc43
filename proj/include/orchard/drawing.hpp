#pragma once

#include <array>
#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "orchard/geometry.hpp"

namespace orchard {

enum class Color : std::uint8_t { black, white };

inline Color opposite(Color c) {
  return c == Color::black ? Color::white : Color::black;
}

inline const char* to_string(Color c) {
  return c == Color::black ? "black" : "white";
}

struct InvalidDrawingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// How the edge set was specified. Preserved so serialization round-trips a
// document without rewriting its edge field.
enum class GraphKind : std::uint8_t { explicit_edges, complete, complete_bipartite };

// Simple undirected graph on vertex indices 0..m-1. Edges are normalized to
// u < v and kept sorted; no loops, no duplicates.
class GraphSpec {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  static GraphSpec from_edges(std::size_t vertex_count, std::vector<Edge> edges) {
    for (Edge& e : edges) {
      if (e.first == e.second) {
        throw std::invalid_argument("GraphSpec: self-loop at vertex " +
                                    std::to_string(e.first));
      }
      if (e.first >= vertex_count || e.second >= vertex_count) {
        throw std::invalid_argument("GraphSpec: edge endpoint out of range");
      }
      if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
      throw std::invalid_argument("GraphSpec: duplicate edge");
    }
    return GraphSpec(vertex_count, std::move(edges), GraphKind::explicit_edges);
  }

  static GraphSpec complete(std::size_t vertex_count) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < vertex_count; ++u)
      for (std::size_t v = u + 1; v < vertex_count; ++v) edges.emplace_back(u, v);
    return GraphSpec(vertex_count, std::move(edges), GraphKind::complete);
  }

  // Every pair of differently colored vertices.
  static GraphSpec complete_bipartite(const std::vector<Color>& colors) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < colors.size(); ++u)
      for (std::size_t v = u + 1; v < colors.size(); ++v)
        if (colors[u] != colors[v]) edges.emplace_back(u, v);
    return GraphSpec(colors.size(), std::move(edges), GraphKind::complete_bipartite);
  }

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  GraphKind kind() const { return kind_; }

  bool has_edge(std::size_t u, std::size_t v) const {
    if (u == v || u >= vertex_count_ || v >= vertex_count_) return false;
    return adjacency_[u * vertex_count_ + v];
  }

  friend bool operator==(const GraphSpec& a, const GraphSpec& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  GraphSpec(std::size_t vertex_count, std::vector<Edge> edges, GraphKind kind)
      : vertex_count_(vertex_count), kind_(kind), edges_(std::move(edges)),
        adjacency_(vertex_count * vertex_count, false) {
    for (const Edge& e : edges_) {
      adjacency_[e.first * vertex_count_ + e.second] = true;
      adjacency_[e.second * vertex_count_ + e.first] = true;
    }
  }

  std::size_t vertex_count_ = 0;
  GraphKind kind_ = GraphKind::explicit_edges;
  std::vector<Edge> edges_;
  std::vector<bool> adjacency_;
};

// A generic point configuration with a two-coloring and a graph on the same
// index set. Genericity is validated once at construction; instances are
// immutable afterwards.
class ColoredDrawing {
 public:
  ColoredDrawing(Configuration config, std::vector<Color> colors, GraphSpec graph)
      : config_(std::move(config)), colors_(std::move(colors)), graph_(std::move(graph)) {
    if (colors_.size() != config_.size()) {
      throw InvalidDrawingError("ColoredDrawing: one color per point required");
    }
    if (graph_.vertex_count() != config_.size()) {
      throw InvalidDrawingError("ColoredDrawing: graph vertex count differs from point count");
    }
    const auto violations = validate_generic(config_);
    if (!violations.empty()) {
      std::ostringstream msg;
      msg << "ColoredDrawing: configuration not generic;";
      std::size_t shown = 0;
      for (const auto& v : violations) {
        if (shown++ == 8) {
          msg << " ...";
          break;
        }
        if (v.kind == GenericityViolation::Kind::coincident_pair) {
          msg << " coincident pair (" << v.a << "," << v.b << ")";
        } else {
          msg << " collinear triple (" << v.a << "," << v.b << "," << v.c << ")";
        }
      }
      throw InvalidDrawingError(msg.str());
    }
  }

  static ColoredDrawing complete_bipartite(std::vector<Point> points,
                                           std::vector<Color> colors) {
    GraphSpec graph = GraphSpec::complete_bipartite(colors);
    return ColoredDrawing(Configuration(std::move(points)), std::move(colors),
                          std::move(graph));
  }

  const Configuration& config() const { return config_; }
  const std::vector<Color>& colors() const { return colors_; }
  const GraphSpec& graph() const { return graph_; }
  std::size_t size() const { return config_.size(); }
  Color color(std::size_t i) const { return colors_[i]; }

  std::size_t count(Color c) const {
    return static_cast<std::size_t>(std::count(colors_.begin(), colors_.end(), c));
  }

  // K_{n,n}: equal color counts and the edge set is exactly the bw pairs.
  bool is_balanced_complete_bipartite() const {
    if (count(Color::black) != count(Color::white)) return false;
    for (std::size_t u = 0; u < size(); ++u)
      for (std::size_t v = u + 1; v < size(); ++v)
        if (graph_.has_edge(u, v) != (colors_[u] != colors_[v])) return false;
    return true;
  }

 private:
  Configuration config_;
  std::vector<Color> colors_;
  GraphSpec graph_;
};

// Crossing number of the drawing: for each edge, the number of lines spanned
// by point pairs disjoint from the edge that separate its endpoints, summed
// over all edges. Lines are spanned by every pair of configuration points,
// adjacent or not, of any colors.
inline std::int64_t crossing_number(const ColoredDrawing& d) {
  std::int64_t total = 0;
  for (const auto& [u, v] : d.graph().edges()) {
    total += separator_count(d.config(), u, v);
  }
  return total;
}

// Share of the crossing number attributable to one 4-subset of vertices:
// over the three splits of the quadruple into two disjoint pairs, count the
// orderings where the first pair is a graph edge whose endpoints are
// separated by the line through the second pair. A split can contribute 2
// when both of its pairs are edges and each separates the other.
inline std::int64_t quadruple_contribution(const ColoredDrawing& d,
                                           std::array<std::size_t, 4> q) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (q[i] >= d.size()) {
      throw std::out_of_range("quadruple_contribution: vertex index out of range");
    }
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (q[i] == q[j]) {
        throw std::invalid_argument("quadruple_contribution: indices must be distinct");
      }
    }
  }
  static constexpr std::size_t kSplits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  const Configuration& cfg = d.config();
  std::int64_t total = 0;
  for (const auto& s : kSplits) {
    const std::size_t a = q[s[0]], b = q[s[1]], c = q[s[2]], e = q[s[3]];
    if (d.graph().has_edge(a, b) && separates(cfg[c], cfg[e], cfg[a], cfg[b])) ++total;
    if (d.graph().has_edge(c, e) && separates(cfg[a], cfg[b], cfg[c], cfg[e])) ++total;
  }
  return total;
}

// Independent route to the crossing number: sum quadruple contributions over
// all 4-subsets. Every (edge, separating line) incidence lives in exactly one
// 4-subset, so this must equal crossing_number on any drawing.
inline std::int64_t crossing_number_by_quadruples(const ColoredDrawing& d) {
  const std::size_t m = d.size();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l)
          total += quadruple_contribution(d, {i, j, k, l});
  return total;
}

struct ConvexQuadrupleClass {
  int type = 0;                  // 1..4, by cyclic color pattern
  std::int64_t contribution = 0; // crossing-number share of the quadruple
};

// Classifies four points in strictly convex position, given in cyclic order,
// by their color pattern, assuming the complete bipartite graph on the two
// color classes:
//   type 1: all four one color           -> contributes 0
//   type 2: colors alternate             -> contributes 0
//   type 3: three of one color, one other-> contributes 1
//   type 4: two consecutive each color   -> contributes 2
// Rejects input that is not strictly convex in the given cyclic order.
inline ConvexQuadrupleClass classify_convex_quadruple(const std::array<Point, 4>& pts,
                                                      const std::array<Color, 4>& colors) {
  int sign = 0;
  for (int i = 0; i < 4; ++i) {
    const int o = orientation(pts[i], pts[(i + 1) % 4], pts[(i + 2) % 4]);
    if (o == 0 || (sign != 0 && o != sign)) {
      throw DegenerateInputError(
          "classify_convex_quadruple: points not strictly convex in the given cyclic order");
    }
    sign = o;
  }
  const int blacks = static_cast<int>(
      std::count(colors.begin(), colors.end(), Color::black));
  if (blacks == 0 || blacks == 4) return {1, 0};
  if (blacks == 1 || blacks == 3) return {3, 1};
  // Exactly two of each color: alternating iff opposite corners match.
  if (colors[0] == colors[2]) return {2, 0};
  return {4, 2};
}

}  // namespace orchard
