#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include "orchard/analysis.hpp"
#include "orchard/generators.hpp"

using namespace orchard;

TEST_CASE("convex_alternating builds strictly convex alternating drawings",
          "[generators]") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto d = convex_alternating(n);
    REQUIRE(d.size() == 2 * n);
    CHECK(d.is_balanced_complete_bipartite());
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(d.color(i) == (i % 2 == 0 ? Color::black : Color::white));
    }
    // On the parabola every ascending triple turns the same way.
    const auto& cfg = d.config();
    for (std::size_t a = 0; a < d.size(); ++a)
      for (std::size_t b = a + 1; b < d.size(); ++b)
        for (std::size_t c = b + 1; c < d.size(); ++c)
          CHECK(orientation(cfg[a], cfg[b], cfg[c]) == 1);
  }
  CHECK_THROWS_AS(convex_alternating(0), std::invalid_argument);
}

TEST_CASE("convex_alternating attains the closed form", "[generators]") {
  const std::vector<std::int64_t> expected{0, 0, 12, 64, 200, 480, 980, 1792};
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto d = convex_alternating(n);
    CHECK(crossing_number(d) == expected[n - 1]);
    CHECK(crossing_number(d) == formula_ocn_knn(static_cast<std::int64_t>(n)));
  }
}

TEST_CASE("random_generic is reproducible and honors its bounds", "[generators]") {
  const auto a = random_generic(3, 4, 25, 77);
  const auto b = random_generic(3, 4, 25, 77);
  CHECK(a.config().points() == b.config().points());
  CHECK(a.count(Color::black) == 3);
  CHECK(a.count(Color::white) == 4);
  for (const Point& p : a.config().points()) {
    CHECK(p.x >= 0);
    CHECK(p.x <= 25);
    CHECK(p.y >= 0);
    CHECK(p.y <= 25);
  }
  const auto c = random_generic(3, 4, 25, 78);
  CHECK(a.config().points() != c.config().points());
}

TEST_CASE("random_generic gives up on impossible boxes", "[generators]") {
  CHECK_THROWS_AS(random_generic(2, 1, 0, 5, 200), RetryExhaustedError);
  CHECK_THROWS_AS(random_generic(0, 0, 10, 5), std::invalid_argument);
}

TEST_CASE("uniform draws stay in range and cover small sets", "[generators]") {
  std::mt19937_64 rng(3);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 200; ++i) {
    const auto v = detail::uniform_in(rng, -1, 1);
    CHECK(v >= -1);
    CHECK(v <= 1);
    seen.insert(v);
  }
  CHECK(seen.size() == 3);
  std::mt19937_64 r1(9), r2(9);
  for (int i = 0; i < 50; ++i) {
    CHECK(detail::uniform_below(r1, 1000) == detail::uniform_below(r2, 1000));
  }
  CHECK_THROWS_AS(detail::uniform_in(rng, 2, 1), std::invalid_argument);
}

TEST_CASE("saturating binomials", "[generators]") {
  CHECK(detail::binomial_saturating(10, 3) == 120);
  CHECK(detail::binomial_saturating(3, 10) == 0);
  CHECK(detail::binomial_saturating(52, 5) == 2598960);
  CHECK(detail::binomial_saturating(100, 50) == ~std::uint64_t{0});
}

TEST_CASE("next_combination walks lexicographically", "[generators]") {
  std::vector<std::size_t> comb{0, 1};
  const std::vector<std::vector<std::size_t>> expected{
      {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<std::vector<std::size_t>> seen{comb};
  while (detail::next_combination(comb, 4)) seen.push_back(comb);
  CHECK(seen == expected);
}

TEST_CASE("the 3x3 stream of single pairs has 36 drawings", "[generators]") {
  ColoredConfigStream stream({3, 3}, 1);
  CHECK(stream.enumeration_size() == 36);
  std::size_t count = 0;
  std::optional<ColoredDrawing> first;
  while (auto d = stream.next()) {
    if (!first) first = d;
    CHECK(d->size() == 2);
    CHECK(d->count(Color::black) == 1);
    ++count;
  }
  CHECK(count == 36);
  // Cells are scanned row-major with x fastest, and the first subset point
  // is always the black one.
  REQUIRE(first);
  CHECK(first->config()[0] == Point{0, 0});
  CHECK(first->config()[1] == Point{1, 0});
  CHECK(first->color(0) == Color::black);
  CHECK(first->color(1) == Color::white);
}

TEST_CASE("the 2x2 stream of K_{2,2} drawings has exactly 3 colorings",
          "[generators]") {
  ColoredConfigStream stream({2, 2}, 2);
  std::size_t count = 0;
  while (auto d = stream.next()) {
    CHECK(d->is_balanced_complete_bipartite());
    CHECK(d->color(0) == Color::black);
    ++count;
  }
  CHECK(count == 3);
}

TEST_CASE("the stream skips exactly the degenerate subsets", "[generators]") {
  ColoredConfigStream stream({3, 3}, 2);
  std::size_t streamed = 0;
  while (auto d = stream.next()) ++streamed;

  // Reference count: generic 4-subsets of the 9 cells, times the 3 ways to
  // pick the black pair through the forced first point.
  std::vector<Point> cells;
  for (std::int64_t y = 0; y < 3; ++y)
    for (std::int64_t x = 0; x < 3; ++x) cells.push_back({x, y});
  std::vector<std::size_t> subset{0, 1, 2, 3};
  std::size_t generic_subsets = 0;
  do {
    std::vector<Point> pts;
    for (auto i : subset) pts.push_back(cells[i]);
    if (validate_generic(Configuration(pts)).empty()) ++generic_subsets;
  } while (detail::next_combination(subset, cells.size()));
  CHECK(streamed == generic_subsets * 3);
  CHECK(streamed > 0);
}

TEST_CASE("the stream rejects oversized enumerations up front", "[generators]") {
  try {
    ColoredConfigStream stream({10, 10}, 4, 1000);
    FAIL("expected BudgetExceededError");
  } catch (const BudgetExceededError& e) {
    CHECK(e.required > 1000);
  }
  CHECK_THROWS_AS(ColoredConfigStream({0, 3}, 1), std::invalid_argument);
  CHECK_THROWS_AS(ColoredConfigStream({3, 3}, 0), std::invalid_argument);
}
