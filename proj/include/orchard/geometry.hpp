#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace orchard {

// Exact integer planar predicates. Every test reduces to the sign of a 2x2
// determinant of coordinate differences, evaluated in signed 64-bit
// arithmetic. The coordinate cap makes overflow impossible:
//   |coord| <= 2^30 - 1  =>  |dx|, |dy| <= 2^31 - 2
//                        =>  |dx1*dy2 - dy1*dx2| <= 2*(2^31 - 2)^2 < 2^63 - 1.
// Inputs beyond the cap are rejected, never approximated.
inline constexpr std::int64_t kMaxCoordinate = (std::int64_t{1} << 30) - 1;

struct OverflowError : std::domain_error {
  using std::domain_error::domain_error;
};

struct DegenerateInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline bool coordinate_in_range(std::int64_t c) {
  return c >= -kMaxCoordinate && c <= kMaxCoordinate;
}

inline void require_in_range(const Point& p, const char* who) {
  if (!coordinate_in_range(p.x) || !coordinate_in_range(p.y)) {
    throw OverflowError(std::string(who) + ": coordinate magnitude exceeds " +
                        std::to_string(kMaxCoordinate));
  }
}

// Sign of the cross product (q - p) x (r - p): +1 counterclockwise turn,
// -1 clockwise, 0 collinear.
inline int orientation(const Point& p, const Point& q, const Point& r) {
  require_in_range(p, "orientation");
  require_in_range(q, "orientation");
  require_in_range(r, "orientation");
  const std::int64_t det =
      (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return det > 0 ? 1 : det < 0 ? -1 : 0;
}

// An indexed list of points. Coordinate bounds are enforced here; genericity
// (no coincident pair, no collinear triple) is reported by validate_generic
// and enforced where a generic configuration is actually required.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<Point> points) : points_(std::move(points)) {
    for (const Point& p : points_) require_in_range(p, "Configuration");
  }

  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Point> points_;
};

struct GenericityViolation {
  enum class Kind { coincident_pair, collinear_triple };
  Kind kind{};
  // Offending point indices; c is unused for coincident pairs.
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;

  friend bool operator==(const GenericityViolation&, const GenericityViolation&) = default;
};

// Lists every coincident index pair and every collinear index triple among
// pairwise-distinct points. An empty result means the configuration is
// generic. Triples that contain a coincident pair are not re-reported.
inline std::vector<GenericityViolation> validate_generic(const Configuration& config) {
  std::vector<GenericityViolation> out;
  const std::size_t m = config.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (config[i] == config[j]) {
        out.push_back({GenericityViolation::Kind::coincident_pair, i, j, 0});
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (config[i] == config[j]) continue;
      for (std::size_t k = j + 1; k < m; ++k) {
        if (config[k] == config[i] || config[k] == config[j]) continue;
        if (orientation(config[i], config[j], config[k]) == 0) {
          out.push_back({GenericityViolation::Kind::collinear_triple, i, j, k});
        }
      }
    }
  }
  return out;
}

// True iff p and q lie strictly on opposite sides of the line through u, v.
// Any of the four points on a common line is a degenerate query.
inline bool separates(const Point& u, const Point& v, const Point& p, const Point& q) {
  const int sp = orientation(u, v, p);
  const int sq = orientation(u, v, q);
  if (sp == 0 || sq == 0) {
    throw DegenerateInputError("separates: query point on the spanning line");
  }
  return sp != sq;
}

// Number of lines spanned by point pairs disjoint from {p_idx, q_idx} that
// separate the two indexed points. At most C(m-2, 2).
inline std::int64_t separator_count(const Configuration& config, std::size_t p_idx,
                                    std::size_t q_idx) {
  const std::size_t m = config.size();
  if (p_idx >= m || q_idx >= m) {
    throw std::out_of_range("separator_count: vertex index out of range");
  }
  if (p_idx == q_idx) {
    throw std::invalid_argument("separator_count: indices must differ");
  }
  std::int64_t count = 0;
  for (std::size_t u = 0; u < m; ++u) {
    if (u == p_idx || u == q_idx) continue;
    for (std::size_t v = u + 1; v < m; ++v) {
      if (v == p_idx || v == q_idx) continue;
      if (separates(config[u], config[v], config[p_idx], config[q_idx])) ++count;
    }
  }
  return count;
}

}  // namespace orchard
