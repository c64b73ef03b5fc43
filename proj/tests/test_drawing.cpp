#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <vector>

#include "orchard/drawing.hpp"
#include "orchard/generators.hpp"

using namespace orchard;

namespace {

ColoredDrawing square_k22() {
  return ColoredDrawing::complete_bipartite({{0, 0}, {1, 1}, {1, 0}, {0, 1}},
                                            {Color::black, Color::black, Color::white,
                                             Color::white});
}

// One point inside the triangle of the other three; colors make it K_{2,2}.
ColoredDrawing wedge_k22() {
  return ColoredDrawing::complete_bipartite({{0, 0}, {4, 0}, {0, 4}, {1, 1}},
                                            {Color::black, Color::black, Color::white,
                                             Color::white});
}

}  // namespace

TEST_CASE("GraphSpec normalizes and validates explicit edges", "[drawing]") {
  const auto g = GraphSpec::from_edges(4, {{2, 0}, {3, 1}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edges() == std::vector<GraphSpec::Edge>{{0, 2}, {1, 3}});
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.kind() == GraphKind::explicit_edges);

  CHECK_THROWS_AS(GraphSpec::from_edges(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(GraphSpec::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(GraphSpec::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("complete and complete bipartite graphs have the expected edges",
          "[drawing]") {
  const auto k4 = GraphSpec::complete(4);
  CHECK(k4.edges().size() == 6);
  CHECK(k4.kind() == GraphKind::complete);

  const std::vector<Color> colors{Color::black, Color::white, Color::black,
                                  Color::white};
  const auto k22 = GraphSpec::complete_bipartite(colors);
  CHECK(k22.edges().size() == 4);
  CHECK(k22.kind() == GraphKind::complete_bipartite);
  for (std::size_t u = 0; u < 4; ++u) {
    for (std::size_t v = u + 1; v < 4; ++v) {
      CHECK(k22.has_edge(u, v) == (colors[u] != colors[v]));
    }
  }
}

TEST_CASE("drawings validate colors and genericity", "[drawing]") {
  CHECK_THROWS_AS(ColoredDrawing::complete_bipartite({{0, 0}, {1, 0}}, {Color::black}),
                  InvalidDrawingError);
  CHECK_THROWS_AS(
      ColoredDrawing::complete_bipartite({{0, 0}, {1, 1}, {2, 2}},
                                         {Color::black, Color::white, Color::white}),
      InvalidDrawingError);
  const auto d = square_k22();
  CHECK(d.size() == 4);
  CHECK(d.count(Color::black) == 2);
  CHECK(d.count(Color::white) == 2);
  CHECK(d.is_balanced_complete_bipartite());
  const auto path = ColoredDrawing(Configuration({{0, 0}, {3, 1}, {1, 4}}),
                                   {Color::black, Color::black, Color::black},
                                   GraphSpec::from_edges(3, {{0, 1}, {1, 2}}));
  CHECK_FALSE(path.is_balanced_complete_bipartite());
}

TEST_CASE("K_{2,2} on the square has no separated edges", "[drawing]") {
  const auto d = square_k22();
  CHECK(crossing_number(d) == 0);
  CHECK(crossing_number_by_quadruples(d) == 0);
}

TEST_CASE("hexagonal K_{3,3} reaches the closed-form value", "[drawing]") {
  // Parabola points (k, k^2), alternating colors: the canonical optimum.
  std::vector<Point> pts;
  std::vector<Color> colors;
  for (std::int64_t k = 0; k < 6; ++k) {
    pts.push_back({k, k * k});
    colors.push_back(k % 2 == 0 ? Color::black : Color::white);
  }
  const auto d = ColoredDrawing::complete_bipartite(std::move(pts), std::move(colors));
  CHECK(crossing_number(d) == 12);
  CHECK(crossing_number_by_quadruples(d) == 12);
}

TEST_CASE("a non-convex quadruple contributes through its wedge lines", "[drawing]") {
  const auto d = wedge_k22();
  CHECK(quadruple_contribution(d, {0, 1, 2, 3}) == 2);
  // With four vertices there is only one quadruple, so it carries everything.
  CHECK(crossing_number(d) == 2);
  CHECK(crossing_number_by_quadruples(d) == 2);
}

TEST_CASE("quadruple_contribution rejects bad quadruples", "[drawing]") {
  const auto d = square_k22();
  CHECK_THROWS_AS(quadruple_contribution(d, {0, 1, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(quadruple_contribution(d, {0, 1, 2, 4}), std::out_of_range);
}

TEST_CASE("convex quadruple classes match the direct count for all colorings",
          "[drawing]") {
  // Convex in counterclockwise cyclic order.
  const std::array<Point, 4> quad{{{0, 0}, {4, 0}, {5, 3}, {1, 4}}};
  for (int mask = 0; mask < 16; ++mask) {
    std::array<Color, 4> colors;
    int blacks = 0;
    for (int i = 0; i < 4; ++i) {
      colors[i] = (mask >> i) & 1 ? Color::black : Color::white;
      blacks += (mask >> i) & 1;
    }
    const auto cls = classify_convex_quadruple(quad, colors);
    int expected_type;
    std::int64_t expected_contribution;
    if (blacks == 0 || blacks == 4) {
      expected_type = 1;
      expected_contribution = 0;
    } else if (blacks == 1 || blacks == 3) {
      expected_type = 3;
      expected_contribution = 1;
    } else if (colors[0] == colors[2]) {
      expected_type = 2;  // alternating around the hull
      expected_contribution = 0;
    } else {
      expected_type = 4;  // two adjacent pairs
      expected_contribution = 2;
    }
    CAPTURE(mask);
    CHECK(cls.type == expected_type);
    CHECK(cls.contribution == expected_contribution);

    const auto d = ColoredDrawing::complete_bipartite(
        {quad.begin(), quad.end()}, {colors.begin(), colors.end()});
    CHECK(cls.contribution == quadruple_contribution(d, {0, 1, 2, 3}));
    CHECK(cls.contribution == crossing_number(d));
  }
}

TEST_CASE("convex quadruple classes are rotation invariant", "[drawing]") {
  const std::array<Point, 4> quad{{{0, 0}, {4, 0}, {5, 3}, {1, 4}}};
  const std::array<Color, 4> colors{Color::black, Color::white, Color::white,
                                    Color::black};
  const auto base = classify_convex_quadruple(quad, colors);
  for (int r = 1; r < 4; ++r) {
    std::array<Point, 4> rq;
    std::array<Color, 4> rc;
    for (int i = 0; i < 4; ++i) {
      rq[i] = quad[(i + r) % 4];
      rc[i] = colors[(i + r) % 4];
    }
    const auto rot = classify_convex_quadruple(rq, rc);
    CHECK(rot.type == base.type);
    CHECK(rot.contribution == base.contribution);
  }
}

TEST_CASE("classify_convex_quadruple rejects non-convex cyclic orders", "[drawing]") {
  const std::array<Color, 4> colors{Color::black, Color::white, Color::black,
                                    Color::white};
  // Point inside the triangle of the others: no convex cyclic order exists.
  CHECK_THROWS_AS(
      classify_convex_quadruple({{{0, 0}, {4, 0}, {1, 1}, {0, 4}}}, colors),
      DegenerateInputError);
  // Convex positions listed in a crossing order.
  CHECK_THROWS_AS(
      classify_convex_quadruple({{{0, 0}, {5, 3}, {4, 0}, {1, 4}}}, colors),
      DegenerateInputError);
}

TEST_CASE("both evaluation routes agree on random drawings", "[drawing]") {
  std::uint64_t seed = 400;
  for (const auto& [nb, nw] : std::vector<std::pair<std::size_t, std::size_t>>{
           {2, 2}, {2, 3}, {3, 3}, {4, 2}, {4, 4}}) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto d = random_generic(nb, nw, 40, seed++);
      CHECK(crossing_number(d) == crossing_number_by_quadruples(d));
    }
  }
}

TEST_CASE("dropping edges never increases the crossing number", "[drawing]") {
  const auto full = random_generic(3, 3, 30, 99);
  const std::int64_t full_value = crossing_number(full);
  auto edges = full.graph().edges();
  while (!edges.empty()) {
    edges.pop_back();
    const ColoredDrawing sub(Configuration(full.config().points()), full.colors(),
                             GraphSpec::from_edges(full.size(), edges));
    CHECK(crossing_number(sub) <= full_value);
  }
}

TEST_CASE("swapping all colors preserves the crossing number", "[drawing]") {
  const auto d = random_generic(3, 3, 30, 123);
  std::vector<Color> flipped;
  for (std::size_t i = 0; i < d.size(); ++i) flipped.push_back(opposite(d.color(i)));
  const auto swapped = ColoredDrawing::complete_bipartite(d.config().points(), flipped);
  CHECK(crossing_number(swapped) == crossing_number(d));
}
