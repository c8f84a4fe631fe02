#include <doctest.h>

#include <random>

#include "cycinv/invariant_betti.hpp"
#include "cycinv/relations.hpp"

using namespace cycinv;

TEST_CASE("invariant ring pipeline on exhaustive small systems") {
  for (std::int64_t n = 3; n <= 12; ++n)
    for (std::int64_t b = 1; b < n; ++b)
      for (std::int64_t c = 1; c < n; ++c) {
        std::vector<std::vector<std::int64_t>> systems{{b, c}};
        const std::int64_t d = ((-(b + c)) % n + n) % n;
        if (d != 0) systems.push_back({b, c, d});
        for (const auto& w : systems) {
          const WeightSystem ws(n, w);
          CAPTURE(ws.to_string());
          const auto report = invariant_ring_betti(ws);
          CHECK(report.ok());
          const auto check = hilbert_identity(report, static_cast<int>(3 * n));
          CHECK(check.holds);
          if (report.generators.is_3d()) {
            const int m = report.m;
            for (int i = 0; i <= m - 2; ++i) CHECK(report.polynomial.total(i) == report.polynomial.total(m - 2 - i));
          }
        }
      }
}

TEST_CASE("hochster and generating-function routes agree on the weighted table") {
  std::mt19937_64 rng(31);
  int compared = 0;
  while (compared < 15) {
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(10, 40)(rng);
    std::uniform_int_distribution<std::int64_t> w(1, n - 1);
    const WeightSystem ws(n, {w(rng), w(rng)});
    InvariantBettiOptions slow, fast;
    slow.hochster_max_vertices = 16;
    fast.hochster_max_vertices = 0;
    const auto a = invariant_ring_betti(ws, slow);
    if (a.m < 4 || a.m > 16) continue;
    const auto b = invariant_ring_betti(ws, fast);
    CHECK(a.route == WeightedRoute::Hochster);
    CHECK(b.route == WeightedRoute::PathCycle);
    CHECK(a.weighted == b.weighted);
    ++compared;
  }
}

TEST_CASE("large m goes through the generating-function route") {
  const WeightSystem ws(61, {1, 3});
  const auto report = invariant_ring_betti(ws);
  CHECK(report.m > 14);
  CHECK(report.route == WeightedRoute::PathCycle);
  CHECK(report.ok());
  CHECK(hilbert_identity(report, 90).holds);
}

TEST_CASE("degenerate rings") {
  const auto poly = invariant_ring_betti(WeightSystem(6, {2, 3}));
  CHECK(poly.m == 2);
  CHECK(poly.relations.empty());
  CHECK(poly.polynomial.entries().size() == 1);
  CHECK(hilbert_identity(poly, 18).holds);
  const auto cubic = invariant_ring_betti(WeightSystem(3, {1, 2}));
  CHECK(cubic.m == 3);
  CHECK(cubic.relations.size() == 1);
  CHECK(cubic.ok());
}

TEST_CASE("Betti numerator") {
  BettiTable q(Convention::Quotient, GradingKind::WeightedDegree);
  q.add(0, 0, 1);
  q.add(1, 2, 3);
  q.add(2, 3, 2);
  CHECK(betti_numerator(q, 4) == Series{1, 0, -3, 2, 0});
}
