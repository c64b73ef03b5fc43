#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orchard/analysis.hpp"
#include "orchard/generators.hpp"

namespace orchard {

enum class Objective : std::uint8_t { minimize, maximize };
enum class Strategy : std::uint8_t { exhaustive, anneal };
enum class CertificateKind : std::uint8_t { exhaustive_proof, heuristic_best };

inline const char* to_string(Objective o) {
  return o == Objective::minimize ? "minimize" : "maximize";
}
inline const char* to_string(Strategy s) {
  return s == Strategy::exhaustive ? "exhaustive" : "anneal";
}
inline const char* to_string(CertificateKind c) {
  return c == CertificateKind::exhaustive_proof ? "exhaustive-proof" : "heuristic-best";
}

// The graph to draw: K_{n,n} on n black and n white points, the complete
// graph, or an explicit edge list. Non-bipartite families draw on all-black
// points; colors only carry meaning for K_{n,n}.
struct GraphFamily {
  enum class Kind : std::uint8_t { knn, complete, explicit_edges };

  Kind kind = Kind::knn;
  std::size_t n = 0;             // side size for knn
  std::size_t vertex_count = 0;  // for complete / explicit_edges
  std::vector<GraphSpec::Edge> edges;

  static GraphFamily knn(std::size_t n) {
    if (n < 1) throw std::invalid_argument("GraphFamily::knn: n >= 1 required");
    GraphFamily f;
    f.kind = Kind::knn;
    f.n = n;
    f.vertex_count = 2 * n;
    return f;
  }

  static GraphFamily complete(std::size_t m) {
    if (m < 1) throw std::invalid_argument("GraphFamily::complete: m >= 1 required");
    GraphFamily f;
    f.kind = Kind::complete;
    f.vertex_count = m;
    return f;
  }

  static GraphFamily from_edges(std::size_t m, std::vector<GraphSpec::Edge> edges) {
    GraphFamily f;
    f.kind = Kind::explicit_edges;
    f.vertex_count = m;
    f.edges = std::move(edges);
    GraphSpec::from_edges(m, f.edges);  // validates
    return f;
  }

  std::vector<Color> colors() const {
    std::vector<Color> c(vertex_count, Color::black);
    if (kind == Kind::knn) {
      for (std::size_t i = n; i < vertex_count; ++i) c[i] = Color::white;
    }
    return c;
  }

  GraphSpec graph(const std::vector<Color>& colors) const {
    switch (kind) {
      case Kind::knn: return GraphSpec::complete_bipartite(colors);
      case Kind::complete: return GraphSpec::complete(vertex_count);
      default: return GraphSpec::from_edges(vertex_count, edges);
    }
  }
};

// Annealing knobs. Fields left at their sentinel are derived from the task:
// the coordinate box becomes [0, 5 * vertex_count] (so [0, 10n] for K_{n,n})
// and the initial temperature becomes formula_ocn_knn(n) + 1 for K_{n,n},
// else a vertex-count heuristic of the same scale. These defaults are pinned
// by the acceptance suite, not by any property of the optimum.
struct AnnealParams {
  double initial_temperature = -1;  // < 0: derive
  double cooling = 0.995;           // per-step temperature multiplier
  std::int64_t perturbation_radius = 3;
  std::int64_t coord_max = -1;      // box is [0, coord_max]^2; < 0: derive
  int proposal_retries = 32;
  int restarts = 1;                 // budget is split evenly across restarts
};

struct SearchTask {
  GraphFamily family;
  Objective objective = Objective::minimize;
  Strategy strategy = Strategy::anneal;
  std::uint64_t seed = 0;
  std::uint64_t budget = 100000;  // annealing steps; exhaustive runs ignore it
  GridSpec grid;                  // exhaustive only
  std::uint64_t enumeration_budget = ColoredConfigStream::kDefaultBudget;
  AnnealParams anneal;
};

struct TracePoint {
  std::uint64_t evaluation = 0;
  std::int64_t value = 0;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct SearchResult {
  ColoredDrawing best;
  std::int64_t best_value = 0;
  std::uint64_t evaluations = 0;
  CertificateKind certificate = CertificateKind::heuristic_best;
  std::vector<TracePoint> trace;  // strict improvements, first evaluation included
};

enum class StepOutcome : std::uint8_t { accepted, rejected, null_move };

struct AnnealStep {
  ColoredDrawing next;
  std::int64_t next_value = 0;
  StepOutcome outcome = StepOutcome::null_move;
  std::optional<std::int64_t> candidate_value;  // set unless the move was null
};

namespace detail {

inline double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

// One annealing move: pick a point uniformly, offset it uniformly within the
// perturbation radius, and accept by the standard exponential criterion on
// the crossing-number change. Proposals that leave the box, coincide with
// another point, repeat the old point, or create a collinear triple are
// redrawn; when the retry allowance runs out the move is null and the
// current drawing stands. At temperature <= 0 only non-worsening moves are
// accepted.
inline AnnealStep anneal_step(const ColoredDrawing& current, std::int64_t current_value,
                              double temperature, const AnnealParams& params,
                              Objective objective, std::mt19937_64& rng) {
  if (params.coord_max < 0) {
    throw std::invalid_argument("anneal_step: resolved coordinate box required");
  }
  const std::size_t m = current.size();
  const Configuration& cfg = current.config();
  for (int attempt = 0; attempt < params.proposal_retries; ++attempt) {
    const auto idx = static_cast<std::size_t>(detail::uniform_below(rng, m));
    const Point moved{
        cfg[idx].x + detail::uniform_in(rng, -params.perturbation_radius,
                                        params.perturbation_radius),
        cfg[idx].y + detail::uniform_in(rng, -params.perturbation_radius,
                                        params.perturbation_radius)};
    if (moved.x < 0 || moved.x > params.coord_max || moved.y < 0 ||
        moved.y > params.coord_max) {
      continue;
    }
    if (moved == cfg[idx]) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i < m; ++i) {
      if (i != idx && cfg[i] == moved) ok = false;
    }
    for (std::size_t i = 0; ok && i < m; ++i) {
      if (i == idx) continue;
      for (std::size_t j = i + 1; ok && j < m; ++j) {
        if (j == idx) continue;
        if (orientation(cfg[i], cfg[j], moved) == 0) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<Point> points = cfg.points();
    points[idx] = moved;
    ColoredDrawing candidate(Configuration(std::move(points)), current.colors(),
                             current.graph());
    const std::int64_t value = crossing_number(candidate);
    const std::int64_t delta =
        objective == Objective::minimize ? value - current_value : current_value - value;
    bool accept = delta <= 0;
    if (!accept && temperature > 0) {
      accept = detail::unit_draw(rng) <
               std::exp(-static_cast<double>(delta) / temperature);
    }
    if (accept) return {std::move(candidate), value, StepOutcome::accepted, value};
    return {current, current_value, StepOutcome::rejected, value};
  }
  return {current, current_value, StepOutcome::null_move, std::nullopt};
}

namespace detail {

struct BestTracker {
  Objective objective;
  std::optional<ColoredDrawing> drawing;
  std::int64_t value = 0;
  std::vector<TracePoint> trace;

  bool improves(std::int64_t v) const {
    if (!drawing) return true;
    return objective == Objective::minimize ? v < value : v > value;
  }

  void offer(const ColoredDrawing& d, std::int64_t v, std::uint64_t evaluation) {
    if (improves(v)) {
      drawing = d;
      value = v;
      trace.push_back({evaluation, v});
    }
  }
};

// Any drawing of K_{n,n} has crossing number at least 4n * C(n,3); seeing
// less means the evaluator is broken, so fail loudly rather than report it.
inline void guard_knn_floor(const GraphFamily& family, std::int64_t value) {
  if (family.kind == GraphFamily::Kind::knn &&
      value < formula_ocn_knn(static_cast<std::int64_t>(family.n))) {
    throw std::logic_error("search: K_{n,n} evaluation below the closed-form floor");
  }
}

inline SearchResult finish(BestTracker&& best, std::uint64_t evaluations,
                           CertificateKind certificate) {
  if (!best.drawing) {
    throw std::runtime_error("search: no generic placement found");
  }
  SearchResult result{std::move(*best.drawing), best.value, evaluations, certificate,
                      std::move(best.trace)};
  if (crossing_number(result.best) != result.best_value) {
    throw std::logic_error("search: best value fails re-evaluation");
  }
  return result;
}

inline SearchResult search_exhaustive(const SearchTask& task) {
  BestTracker best{task.objective};
  std::uint64_t evaluations = 0;
  if (task.family.kind == GraphFamily::Kind::knn) {
    ColoredConfigStream stream(task.grid, task.family.n, task.enumeration_budget);
    while (auto d = stream.next()) {
      const std::int64_t value = crossing_number(*d);
      guard_knn_floor(task.family, value);
      best.offer(*d, value, ++evaluations);
    }
    return finish(std::move(best), evaluations, CertificateKind::exhaustive_proof);
  }
  const std::size_t m = task.family.vertex_count;
  if (task.grid.width < 1 || task.grid.height < 1) {
    throw std::invalid_argument("search: exhaustive strategy requires a grid");
  }
  const std::uint64_t cells = static_cast<std::uint64_t>(task.grid.width) *
                              static_cast<std::uint64_t>(task.grid.height);
  if (cells < m) throw std::invalid_argument("search: grid too small for the family");
  const std::uint64_t bound = binomial_saturating(cells, m);
  if (bound > task.enumeration_budget) {
    throw BudgetExceededError("search: enumeration size " + std::to_string(bound) +
                                  " exceeds budget " +
                                  std::to_string(task.enumeration_budget),
                              bound);
  }
  std::vector<Point> grid_points;
  grid_points.reserve(cells);
  for (std::int64_t y = 0; y < task.grid.height; ++y)
    for (std::int64_t x = 0; x < task.grid.width; ++x) grid_points.push_back({x, y});
  const std::vector<Color> colors = task.family.colors();
  std::vector<std::size_t> subset(m);
  for (std::size_t i = 0; i < m; ++i) subset[i] = i;
  do {
    std::vector<Point> points;
    points.reserve(m);
    for (std::size_t idx : subset) points.push_back(grid_points[idx]);
    Configuration cfg(std::move(points));
    if (!validate_generic(cfg).empty()) continue;
    ColoredDrawing d(std::move(cfg), colors, task.family.graph(colors));
    best.offer(d, crossing_number(d), ++evaluations);
  } while (next_combination(subset, grid_points.size()));
  return finish(std::move(best), evaluations, CertificateKind::exhaustive_proof);
}

inline AnnealParams resolve_anneal_params(const SearchTask& task) {
  AnnealParams p = task.anneal;
  if (p.cooling <= 0 || p.cooling > 1) {
    throw std::invalid_argument("search: cooling must be in (0, 1]");
  }
  if (p.perturbation_radius < 0 || p.proposal_retries < 1 || p.restarts < 1) {
    throw std::invalid_argument("search: nonsensical annealing parameter");
  }
  if (p.coord_max < 0) {
    p.coord_max = 5 * static_cast<std::int64_t>(task.family.vertex_count);
  }
  if (p.coord_max > kMaxCoordinate) {
    throw OverflowError("search: coordinate box exceeds the coordinate cap");
  }
  if (p.initial_temperature < 0) {
    if (task.family.kind == GraphFamily::Kind::knn) {
      p.initial_temperature =
          static_cast<double>(formula_ocn_knn(static_cast<std::int64_t>(task.family.n))) + 1;
    } else {
      const double v = static_cast<double>(task.family.vertex_count);
      p.initial_temperature = v * v * v * v / 64 + 1;
    }
  }
  return p;
}

inline SearchResult search_anneal(const SearchTask& task) {
  if (task.budget < 1) throw std::invalid_argument("search: budget >= 1 required");
  const AnnealParams params = resolve_anneal_params(task);
  const std::vector<Color> colors = task.family.colors();
  const GraphSpec graph = task.family.graph(colors);
  const std::size_t n_black = task.family.kind == GraphFamily::Kind::knn
                                  ? task.family.n
                                  : task.family.vertex_count;
  const std::size_t n_white = task.family.vertex_count - n_black;
  BestTracker best{task.objective};
  std::uint64_t evaluations = 0;
  for (int r = 0; r < params.restarts && evaluations < task.budget; ++r) {
    const std::uint64_t restart_end =
        std::min(task.budget, (static_cast<std::uint64_t>(r) + 1) * task.budget /
                                  static_cast<std::uint64_t>(params.restarts));
    const std::uint64_t sub_seed =
        splitmix64(task.seed + static_cast<std::uint64_t>(r));
    ColoredDrawing start =
        random_generic(n_black, n_white, params.coord_max, sub_seed);
    ColoredDrawing current(start.config(), colors, graph);
    std::int64_t current_value = crossing_number(current);
    guard_knn_floor(task.family, current_value);
    best.offer(current, current_value, ++evaluations);
    std::mt19937_64 rng(splitmix64(sub_seed));
    double temperature = params.initial_temperature;
    while (evaluations < restart_end) {
      AnnealStep step = anneal_step(current, current_value, temperature, params,
                                    task.objective, rng);
      ++evaluations;
      temperature *= params.cooling;
      if (step.candidate_value) guard_knn_floor(task.family, *step.candidate_value);
      if (step.outcome == StepOutcome::accepted) {
        current = std::move(step.next);
        current_value = step.next_value;
        best.offer(current, current_value, evaluations);
      }
    }
  }
  return finish(std::move(best), evaluations, CertificateKind::heuristic_best);
}

}  // namespace detail

// Runs the task. Exhaustive strategy enumerates every generic placement on
// the task grid and certifies the optimum over that grid; annealing reports
// the best drawing its budget found. Identical tasks give identical results.
inline SearchResult search(const SearchTask& task) {
  return task.strategy == Strategy::exhaustive ? detail::search_exhaustive(task)
                                               : detail::search_anneal(task);
}

}  // namespace orchard
