#include <doctest.h>

#include <random>

#include "cycinv/errors.hpp"
#include "cycinv/generators.hpp"
#include "cycinv/hilbert.hpp"
#include "cycinv/relations.hpp"
#include "oracles.hpp"

using namespace cycinv;

namespace {

std::vector<oracle::Vec> images(const GeneratorSet& gens) {
  std::vector<oracle::Vec> out;
  for (const auto& g : gens.ordered()) {
    oracle::Vec v;
    for (Eigen::Index k = 0; k < g.image.size(); ++k) v.push_back(g.image[k]);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("staircase examples") {
  using P = std::vector<std::pair<std::int64_t, std::int64_t>>;
  CHECK(staircase_2d(10, 1, 2) == P{{10, 0}, {8, 1}, {6, 2}, {4, 3}, {2, 4}, {0, 5}});
  CHECK(staircase_2d(6, 2, 3) == P{{3, 0}, {0, 2}});
  CHECK(staircase_2d(3, 1, 2) == P{{3, 0}, {1, 1}, {0, 3}});
  CHECK(staircase_2d(5, 1, 1) == P{{5, 0}, {4, 1}, {3, 2}, {2, 3}, {1, 4}, {0, 5}});
}

TEST_CASE("generators agree with brute-force minimal invariants (2D)") {
  for (std::int64_t n = 3; n <= 16; ++n)
    for (std::int64_t b = 1; b < n; ++b)
      for (std::int64_t c = 1; c < n; ++c) {
        const WeightSystem ws(n, {b, c});
        const auto gens = minimal_generators(ws);
        CHECK(images(gens) == oracle::minimal_invariants(n, {b, c}));
        for (const auto& g : gens.ordered()) CHECK(g.degree == g.image.polydeg());
      }
}

TEST_CASE("generators agree with brute-force minimal invariants (3D)") {
  for (std::int64_t n = 3; n <= 10; ++n)
    for (std::int64_t b = 1; b < n; ++b)
      for (std::int64_t c = 1; c < n; ++c) {
        const std::int64_t d = ((-(b + c)) % n + n) % n;
        if (d == 0) continue;
        const WeightSystem ws(n, {b, c, d});
        const auto gens = minimal_generators(ws);
        CAPTURE(ws.to_string());
        CHECK(images(gens) == oracle::minimal_invariants(n, {b, c, d}));
        CHECK(gens.ordered().front().image == Monomial{1, 1, 1});
        const auto& bs = *gens.blocks();
        CHECK(bs.r + bs.s + bs.t == gens.m());
      }
}

TEST_CASE("3D block layout for Z/6 (1,2,3)") {
  const auto gens = minimal_generators(WeightSystem(6, {1, 2, 3}));
  const auto bs = *gens.blocks();
  CHECK(bs.r == 3);
  CHECK(bs.s == 1);
  CHECK(bs.t == 2);
  const std::vector<Monomial> expected{{1, 1, 1}, {6, 0, 0}, {4, 1, 0}, {2, 2, 0},
                                       {0, 3, 0}, {0, 0, 2}, {3, 0, 1}};
  REQUIRE(gens.ordered().size() == expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) CHECK(gens.ordered()[k].image == expected[k]);
  CHECK(gens.variable_names().front() == "A");
}

TEST_CASE("factorization: greedy and search fallback") {
  const std::vector<Monomial> allowed{{3, 0}, {1, 1}, {0, 3}};
  const auto f = factor_into(Monomial{4, 1}, allowed);
  REQUIRE(f);
  CHECK(f->exponents(0) == 1);
  CHECK(f->exponents(1) == 1);
  CHECK(!factor_into(Monomial{2, 0}, allowed));
  // greedy divides by x twice and is left with y^2; the answer is x * xy^2
  const std::vector<Monomial> tricky{{1, 2}, {1, 0}};
  const auto g = factor_into(Monomial{2, 2}, tricky);
  REQUIRE(g);
  CHECK(g->used_search);
  CHECK(g->exponents(0) == 1);
  CHECK(g->exponents(1) == 1);
}

TEST_CASE("relations are exact, Groebner, and counted correctly (exhaustive small n)") {
  for (std::int64_t n = 3; n <= 14; ++n)
    for (std::int64_t b = 1; b < n; ++b)
      for (std::int64_t c = 1; c < n; ++c) {
        std::vector<std::vector<std::int64_t>> systems{{b, c}};
        const std::int64_t d = ((-(b + c)) % n + n) % n;
        if (d != 0) systems.push_back({b, c, d});
        for (const auto& w : systems) {
          const WeightSystem ws(n, w);
          CAPTURE(ws.to_string());
          const auto gens = minimal_generators(ws);
          const auto rels = build_relations(gens);
          const int m = gens.m();
          const std::size_t expected = w.size() == 2 ? static_cast<std::size_t>(oracle::choose(m - 1, 2))
                                                     : static_cast<std::size_t>(m * (m - 3) / 2);
          CHECK(rels.size() == expected);
          const auto audit = audit_relations(rels, gens);
          CHECK(audit.ok());
          for (const auto& r : rels) CHECK(pi(r.binomial.lead, gens) == pi(*r.binomial.tail, gens));
          if (!rels.empty()) {
            const auto bins = binomials(rels);
            CHECK(groebner_verify(bins, gens.presentation_ring(), false).pass);
          }
        }
      }
}

TEST_CASE("cyclic distance") {
  CHECK(cyclic_distance(1, 6, 6) == 1);
  CHECK(cyclic_distance(1, 5, 6) == 2);
  CHECK(cyclic_distance(2, 5, 6) == 3);
}

TEST_CASE("Hilbert function: enumeration, DP oracle, standard monomials") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(3, 18)(rng);
    std::uniform_int_distribution<std::int64_t> w(1, n - 1);
    std::vector<std::int64_t> weights{w(rng), w(rng)};
    if (trial % 2) {
      const std::int64_t d = ((-(weights[0] + weights[1])) % n + n) % n;
      if (d == 0) continue;
      weights.push_back(d);
    }
    const WeightSystem ws(n, weights);
    CAPTURE(ws.to_string());
    const int top = static_cast<int>(3 * n);
    const auto counts = count_invariant_monomials(ws, top);
    CHECK(counts == oracle::invariant_counts(n, weights, top));
    const auto gens = minimal_generators(ws);
    CHECK(count_standard_monomials(build_relations(gens), gens, top) == counts);
  }
}

TEST_CASE("truncated series product") {
  CHECK(multiply({1, -1}, {1, 1, 1, 1}) == Series{1, 0});
  CHECK(multiply({1, -1, 0, 0}, {1, 1, 1, 1}) == Series{1, 0, 0, 0});
}
