// Acceptance checks: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <iostream>
#include <random>
#include <string>

#include "cycinv/betti.hpp"
#include "cycinv/graph.hpp"
#include "cycinv/invariant_betti.hpp"
#include "cycinv/relations.hpp"
#include "cycinv/simplicial.hpp"

using namespace cycinv;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  std::string name;
  double budget_seconds;
  bool passed = true;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      notes.push_back(what);
    }
  }
};

int failures = 0;

// Polynomial-degree tables produced by the earlier criteria, rechecked structurally at the end.
std::vector<std::pair<std::string, BettiTable>> produced;
std::vector<std::pair<std::string, BettiTable>> produced_3d;

void record(const std::string& tag, const InvariantBettiReport& r) {
  produced.emplace_back(tag, r.polynomial);
  if (r.generators.is_3d()) produced_3d.emplace_back(tag, r.polynomial);
}

template <typename Body>
void run_criterion(const std::string& name, double budget, Body body) {
  Criterion c{name, budget};
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  c.expect(elapsed < budget, "over time budget");
  if (!c.passed) ++failures;
  std::cout << (c.passed ? "PASS " : "FAIL ") << name << " (" << elapsed << " s, budget " << budget << " s)";
  for (const auto& n : c.notes) std::cout << "\n     " << n;
  std::cout << '\n';
}

using Grid = std::vector<std::tuple<int, std::int64_t, std::int64_t>>;

bool table_is(const BettiTable& t, const Grid& grid) {
  BettiTable expected(t.convention(), t.grading());
  for (auto [i, j, v] : grid) expected.add(i, j, v);
  return expected == t;
}

Grid row(int i, std::int64_t j0, std::initializer_list<std::int64_t> values) {
  Grid g;
  for (auto v : values) g.emplace_back(i, j0++, v);
  return g;
}

Grid concat(std::initializer_list<Grid> parts) {
  Grid g;
  for (const auto& p : parts) g.insert(g.end(), p.begin(), p.end());
  return g;
}

std::vector<std::string> relation_strings(const InvariantBettiReport& r) {
  std::vector<std::string> out;
  const auto ring = r.generators.presentation_ring();
  for (const auto& rel : r.relations) out.push_back(format_relation(rel, ring));
  return out;
}

// Every subset complex computed over Q and over F_2.
bool fields_agree(const Graph& g) {
  HochsterOptions opt;
  opt.cross_check = FieldCharacteristic{2};
  const std::vector<std::int64_t> ones(static_cast<std::size_t>(g.vertex_count()), 1);
  return hochster(g, ones, FieldCharacteristic::rationals(), opt).field_mismatches == 0;
}

}  // namespace

int main() {
  run_criterion("Z/10 weights (1,2): generators, relations, Groebner basis, Betti tables", 1.0, [](Criterion& c) {
    const auto r = invariant_ring_betti(WeightSystem(10, {1, 2}));
    record("Z/10 (1,2)", r);
    const std::vector<Monomial> gens{{10, 0}, {8, 1}, {6, 2}, {4, 3}, {2, 4}, {0, 5}};
    c.expect(r.m == 6, "6 generators");
    for (std::size_t k = 0; k < gens.size() && k < r.generators.ordered().size(); ++k)
      c.expect(r.generators.ordered()[k].image == gens[k], "generator u" + std::to_string(k + 1));
    const std::vector<std::string> rels{"R_{1,3}=U_1U_3-U_2^2", "R_{1,4}=U_1U_4-U_2U_3", "R_{1,5}=U_1U_5-U_2U_4",
                                        "R_{1,6}=U_1U_6-U_2U_5", "R_{2,4}=U_2U_4-U_3^2", "R_{2,5}=U_2U_5-U_3U_4",
                                        "R_{2,6}=U_2U_6-U_3U_5", "R_{3,5}=U_3U_5-U_4^2", "R_{3,6}=U_3U_6-U_4U_5",
                                        "R_{4,6}=U_4U_6-U_5^2"};
    c.expect(relation_strings(r) == rels, "relations verbatim");
    c.expect(r.groebner.pass, "Groebner verification");
    c.expect(r.audit.ok(), "relation audit");
    c.expect(table_is(r.polynomial, {{0, 0, 1}, {1, 2, 10}, {2, 3, 20}, {3, 4, 15}, {4, 5, 4}}),
             "polynomial Betti numbers");
    c.expect(table_is(r.weighted, concat({{{0, 0, 1}},
                                          row(1, 12, {1, 1, 2, 2, 2, 1, 1}),
                                          row(2, 19, {1, 2, 3, 4, 4, 3, 2, 1}),
                                          row(3, 27, {1, 2, 3, 3, 3, 2, 1}),
                                          row(4, 36, {1, 1, 1, 1})})),
             "weighted Betti grid");
    c.expect(r.weighted.at(2, 21) == 3 && r.weighted.at(4, 39) == 1, "beta_{2,21} = 3 and beta_{4,39} = 1");
  });

  run_criterion("Z/6 weights (1,2,3): generators, relations, Groebner basis, Betti tables", 1.0, [](Criterion& c) {
    const auto r = invariant_ring_betti(WeightSystem(6, {1, 2, 3}));
    record("Z/6 (1,2,3)", r);
    const std::vector<Monomial> gens{{1, 1, 1}, {6, 0, 0}, {4, 1, 0}, {2, 2, 0}, {0, 3, 0}, {0, 0, 2}, {3, 0, 1}};
    c.expect(r.generators.ordered().size() == gens.size(), "a plus 6 generators");
    for (std::size_t k = 0; k < gens.size() && k < r.generators.ordered().size(); ++k)
      c.expect(r.generators.ordered()[k].image == gens[k], "generator " + std::to_string(k));
    const std::vector<std::string> rels{"R_{1,3}=B_1B_3-B_2^2", "R_{1,4}=B_1B_4-B_2B_3", "R_{1,5}=B_1B_5-B_6^2",
                                        "R_{2,4}=B_2B_4-B_3^2", "R_{2,5}=B_2B_5-AB_6",   "R_{2,6}=B_2B_6-AB_1",
                                        "R_{3,5}=B_3B_5-A^2",   "R_{3,6}=B_3B_6-AB_2",   "R_{4,6}=B_4B_6-AB_3"};
    c.expect(relation_strings(r) == rels, "relations verbatim");
    c.expect(r.groebner.pass, "Groebner verification");
    c.expect(table_is(r.polynomial, {{0, 0, 1}, {1, 2, 9}, {2, 3, 16}, {3, 4, 9}, {4, 6, 1}}),
             "polynomial Betti numbers (1,9,16,9,1) at degrees (0,2,3,4,6)");
    c.expect(table_is(r.weighted, concat({{{0, 0, 1}},
                                          row(1, 6, {1, 2, 3, 2, 1}),
                                          row(2, 10, {2, 4, 4, 4, 2}),
                                          row(3, 14, {1, 2, 3, 2, 1}),
                                          {{4, 24, 1}}})),
             "weighted Betti grid");
  });

  run_criterion("m = 6 edge ideal table: closed form and Hochster", 5.0, [](Criterion& c) {
    // printed totals beta_{-1..4}; the (s = 3, i = 3) cell is printed as 4
    const std::vector<std::vector<std::int64_t>> printed{
        {1, 15, 40, 45, 24, 5}, {1, 14, 36, 39, 20, 4}, {1, 13, 32, 33, 16, 3}, {1, 12, 28, 27, 4, 2},
        {1, 11, 24, 21, 8, 1},  {1, 10, 20, 15, 4, 0},  {1, 9, 16, 9, 1, 0}};
    for (int s = 0; s <= 6; ++s) {
      const auto closed = closed_form_betti(6, s);
      const auto hoch = hochster_betti(build_xs(6, s));
      c.expect(closed == hoch, "closed form vs Hochster at s = " + std::to_string(s));
      produced.emplace_back("X[" + std::to_string(s) + "], m = 6", hoch);
      for (int i = -1; i <= 4; ++i) {
        const auto want = printed[static_cast<std::size_t>(s)][static_cast<std::size_t>(i + 1)];
        if (s == 3 && i == 3) {
          c.expect(closed.total(i) == 12 && hoch.total(i) == 12, "X[3], i = 3 should be 12 by both routes");
          if (want != 12)
            std::cout << "     note: X[3], i = 3 computes to 12 by both routes; the printed table has " << want
                      << " (suspected typo)\n";
          continue;
        }
        c.expect(closed.total(i) == want && hoch.total(i) == want,
                 "X[" + std::to_string(s) + "], i = " + std::to_string(i));
      }
    }
  });

  run_criterion("sweep 3 <= m <= 8, 0 <= s <= m: Hochster = closed form, linear strand", 60.0, [](Criterion& c) {
    for (int m = 3; m <= 8; ++m)
      for (int s = 0; s <= m; ++s) {
        const Graph g = build_xs(m, s);
        const auto hoch = hochster_betti(g);
        const std::string tag = "m = " + std::to_string(m) + ", s = " + std::to_string(s);
        produced.emplace_back("X[" + std::to_string(s) + "], " + tag, hoch);
        c.expect(hoch == closed_form_betti(m, s), tag + ": closed form");
        for (const auto& [i, v] : linear_strand_betti(g))
          c.expect(hoch.at(i, i + 2) == v, tag + ": linear strand at i = " + std::to_string(i));
      }
  });

  run_criterion("fuzz: 100 random 2D (n <= 30) and 50 random 3D (n <= 20) systems", 300.0, [](Criterion& c) {
    std::mt19937_64 rng(20240601);
    auto draw = [&rng](std::int64_t lo, std::int64_t hi) {
      return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    int done_2d = 0, done_3d = 0;
    while (done_2d < 100 || done_3d < 50) {
      std::vector<std::int64_t> w;
      std::int64_t n;
      if (done_2d < 100) {
        n = draw(3, 30);
        w = {draw(1, n - 1), draw(1, n - 1)};
      } else {
        n = draw(3, 20);
        w = {draw(1, n - 1), draw(1, n - 1)};
        const std::int64_t d = ((-(w[0] + w[1])) % n + n) % n;
        if (d == 0) continue;
        w.push_back(d);
      }
      const WeightSystem ws(n, w);
      const auto r = invariant_ring_betti(ws);
      const std::string tag = ws.to_string();
      record(tag, r);
      const int m = r.m;
      // staircase: images invariant and pairwise non-dividing
      for (const auto& g : r.generators.ordered()) {
        std::vector<std::int64_t> e(g.image.exponents().data(), g.image.exponents().data() + g.image.size());
        c.expect(ws.is_invariant(e), tag + ": generator not invariant");
        for (const auto& h : r.generators.ordered())
          c.expect(&g == &h || !g.image.divides(h.image), tag + ": generators not minimal");
      }
      const std::size_t count = w.size() == 2 ? static_cast<std::size_t>(m >= 3 ? (m - 1) * (m - 2) / 2 : 0)
                                              : static_cast<std::size_t>(m * (m - 3) / 2);
      c.expect(r.relations.size() == count, tag + ": relation count");
      c.expect(r.groebner.pass, tag + ": S-pairs");
      for (const auto& rel : r.relations)
        c.expect(pi(rel.binomial.lead, r.generators) == pi(*rel.binomial.tail, r.generators), tag + ": pi(lead) != pi(tail)");
      c.expect(r.audit.ok(), tag + ": relation audit");
      c.expect(hilbert_identity(r, static_cast<int>(3 * n)).holds, tag + ": Hilbert identity to degree 3n");
      (w.size() == 2 ? done_2d : done_3d)++;
    }
    c.expect(done_2d == 100 && done_3d == 50, "system counts");
  });

  run_criterion("structure: purity, Gorenstein symmetry, Q vs F_2 homology", 60.0, [](Criterion& c) {
    c.expect(!produced.empty() && !produced_3d.empty(), "no tables collected");
    for (const auto& [tag, table] : produced) c.expect(pure_degrees(table).has_value(), tag + ": purity");
    for (const auto& [tag, table] : produced_3d) {
      const int top = table.indices().back();  // m - 2 in the quotient convention
      for (int i = 0; i <= top; ++i)
        c.expect(table.total(i) == table.total(top - i), tag + ": Gorenstein symmetry");
    }
    // every complex of the m = 6 table and the sweep, over Q and over F_2
    for (int m = 3; m <= 8; ++m)
      for (int s = 0; s <= m; ++s)
        c.expect(fields_agree(build_xs(m, s)),
                 "m = " + std::to_string(m) + ", s = " + std::to_string(s) + ": Q and F_2 homology differ");
    std::cout << "     " << produced.size() << " tables checked for purity, " << produced_3d.size()
              << " for Gorenstein symmetry\n";
  });

  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
