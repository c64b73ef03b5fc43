#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "orchard/drawing.hpp"

namespace orchard {

struct RetryExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceededError : std::runtime_error {
  std::uint64_t required;
  BudgetExceededError(const std::string& msg, std::uint64_t required_)
      : std::runtime_error(msg), required(required_) {}
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Exactly uniform draw in [0, bound) by masked rejection on raw engine
// output. The standard distribution objects are implementation-defined, which
// would make seeded runs differ across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  if (bound == 1) return 0;
  std::uint64_t mask = ~std::uint64_t{0};
  const std::uint64_t top = bound - 1;
  int bits = 0;
  while ((top >> bits) != 0) ++bits;
  mask >>= (64 - bits);
  for (;;) {
    const std::uint64_t draw = rng() & mask;
    if (draw < bound) return draw;
  }
}

inline std::int64_t uniform_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_in: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(uniform_below(rng, span));
}

// Binomial coefficient, saturating at UINT64_MAX; used only to compare
// enumeration sizes against a budget.
inline std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t factor = n - k + i;
    if (result > (~std::uint64_t{0}) / factor) return ~std::uint64_t{0};
    result = result * factor / i;
  }
  return result;
}

// Advances a k-combination of {0..n-1} in lexicographic order; false at end.
inline bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i-- > 0) {
    if (comb[i] + 1 <= n - (k - i)) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline bool prefix_keeps_generic(const std::vector<Point>& pts, const Point& candidate) {
  for (const Point& p : pts) {
    if (p == candidate) return false;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (orientation(pts[i], pts[j], candidate) == 0) return false;
    }
  }
  return true;
}

}  // namespace detail

// 2n points in strictly convex position with colors alternating along the
// hull, carrying the complete bipartite graph on the color classes. Points
// sit on the integer parabola (k, k^2), whose x-sorted order is a strictly
// convex polygon; only convex position and the alternating cyclic pattern
// matter to the crossing number, so this evaluates to 4n * C(n,3).
inline ColoredDrawing convex_alternating(std::size_t n) {
  if (n < 1) throw std::invalid_argument("convex_alternating: n >= 1 required");
  const std::int64_t top = static_cast<std::int64_t>(2 * n - 1);
  if (top > 0 && top * top > kMaxCoordinate) {
    throw OverflowError("convex_alternating: n too large for the coordinate cap");
  }
  std::vector<Point> points;
  std::vector<Color> colors;
  points.reserve(2 * n);
  colors.reserve(2 * n);
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(2 * n); ++k) {
    points.push_back({k, k * k});
    colors.push_back(k % 2 == 0 ? Color::black : Color::white);
  }
  return ColoredDrawing::complete_bipartite(std::move(points), std::move(colors));
}

// Deterministic rejection sampler: points are drawn one at a time, uniformly
// on the [0, coordinate_range]^2 integer grid, and redrawn while they
// coincide with or are collinear with the prefix. The first n_black points
// are black, the rest white; the graph is the complete bipartite one. The
// retry budget bounds redraws over the whole call. coordinate_range should
// comfortably exceed the point count (a sparse grid rarely rejects); too
// small a range exhausts the budget instead of looping forever.
inline ColoredDrawing random_generic(std::size_t n_black, std::size_t n_white,
                                     std::int64_t coordinate_range, std::uint64_t seed,
                                     std::size_t retry_budget = 100000) {
  if (coordinate_range < 0) {
    throw std::invalid_argument("random_generic: coordinate_range must be nonnegative");
  }
  if (coordinate_range > kMaxCoordinate) {
    throw OverflowError("random_generic: coordinate_range exceeds the coordinate cap");
  }
  const std::size_t total = n_black + n_white;
  if (total < 1) {
    throw std::invalid_argument("random_generic: at least one point required");
  }
  std::mt19937_64 rng(seed);
  std::vector<Point> points;
  points.reserve(total);
  std::size_t retries = 0;
  while (points.size() < total) {
    const Point candidate{detail::uniform_in(rng, 0, coordinate_range),
                          detail::uniform_in(rng, 0, coordinate_range)};
    if (detail::prefix_keeps_generic(points, candidate)) {
      points.push_back(candidate);
    } else if (++retries > retry_budget) {
      throw RetryExhaustedError("random_generic: retry budget exhausted at point " +
                                std::to_string(points.size()));
    }
  }
  std::vector<Color> colors(total, Color::white);
  for (std::size_t i = 0; i < n_black; ++i) colors[i] = Color::black;
  return ColoredDrawing::complete_bipartite(std::move(points), std::move(colors));
}

struct GridSpec {
  std::int64_t width = 0;
  std::int64_t height = 0;
};

// Streams every generic placement of n black and n white points on the grid
// as complete bipartite drawings, one per (point subset, black subset) pair.
// Placements are canonical modulo relabeling equal-colored points and the
// global color swap: point subsets are index-sorted and the lowest-index
// point of each subset is always black, so each colored placement appears
// exactly once. Subsets containing a collinear triple are skipped.
//
// The enumeration size C(w*h, 2n) * C(2n-1, n-1) is computed up front and
// refused when it exceeds the budget.
class ColoredConfigStream {
 public:
  static constexpr std::uint64_t kDefaultBudget = 20'000'000;

  ColoredConfigStream(GridSpec grid, std::size_t n,
                      std::uint64_t budget = kDefaultBudget)
      : n_(n) {
    if (grid.width < 1 || grid.height < 1) {
      throw std::invalid_argument("ColoredConfigStream: grid sides must be positive");
    }
    if (n < 1) throw std::invalid_argument("ColoredConfigStream: n >= 1 required");
    if (grid.width > kMaxCoordinate || grid.height > kMaxCoordinate) {
      throw OverflowError("ColoredConfigStream: grid exceeds the coordinate cap");
    }
    const std::uint64_t cells =
        static_cast<std::uint64_t>(grid.width) * static_cast<std::uint64_t>(grid.height);
    if (cells < 2 * n) {
      throw std::invalid_argument("ColoredConfigStream: grid too small for 2n points");
    }
    bound_ = detail::binomial_saturating(cells, 2 * n);
    const std::uint64_t colorings = detail::binomial_saturating(2 * n - 1, n - 1);
    if (bound_ > 0 && colorings > (~std::uint64_t{0}) / bound_) {
      bound_ = ~std::uint64_t{0};
    } else {
      bound_ *= colorings;
    }
    if (bound_ > budget) {
      throw BudgetExceededError("ColoredConfigStream: enumeration size " +
                                    std::to_string(bound_) + " exceeds budget " +
                                    std::to_string(budget),
                                bound_);
    }
    grid_points_.reserve(cells);
    for (std::int64_t y = 0; y < grid.height; ++y)
      for (std::int64_t x = 0; x < grid.width; ++x) grid_points_.push_back({x, y});
    subset_.resize(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) subset_[i] = i;
    subset_fresh_ = true;
  }

  std::uint64_t enumeration_size() const { return bound_; }

  // Next drawing in the stream, or nullopt when exhausted.
  std::optional<ColoredDrawing> next() {
    for (;;) {
      if (subset_fresh_) {
        subset_fresh_ = false;
        if (subset_generic()) {
          black_choice_.resize(n_ - 1);
          for (std::size_t i = 0; i < n_ - 1; ++i) black_choice_[i] = i;
          have_coloring_ = true;
          return make_drawing();
        }
        have_coloring_ = false;
      }
      if (have_coloring_ && detail::next_combination(black_choice_, 2 * n_ - 1)) {
        return make_drawing();
      }
      have_coloring_ = false;
      if (!detail::next_combination(subset_, grid_points_.size())) return std::nullopt;
      subset_fresh_ = true;
    }
  }

 private:
  bool subset_generic() const {
    const std::size_t k = subset_.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        for (std::size_t l = j + 1; l < k; ++l)
          if (orientation(grid_points_[subset_[i]], grid_points_[subset_[j]],
                          grid_points_[subset_[l]]) == 0)
            return false;
    return true;
  }

  ColoredDrawing make_drawing() const {
    std::vector<Point> points;
    points.reserve(subset_.size());
    for (std::size_t idx : subset_) points.push_back(grid_points_[idx]);
    // Position 0 is black by canonicalization; black_choice_ selects the
    // other n-1 black positions among 1..2n-1.
    std::vector<Color> colors(subset_.size(), Color::white);
    colors[0] = Color::black;
    for (std::size_t pos : black_choice_) colors[pos + 1] = Color::black;
    return ColoredDrawing::complete_bipartite(std::move(points), std::move(colors));
  }

  std::size_t n_ = 0;
  std::uint64_t bound_ = 0;
  std::vector<Point> grid_points_;
  std::vector<std::size_t> subset_;
  std::vector<std::size_t> black_choice_;
  bool subset_fresh_ = false;
  bool have_coloring_ = false;
};

}  // namespace orchard
