#include "cycinv/invariant_betti.hpp"

#include "cycinv/errors.hpp"

namespace cycinv {

namespace {

Graph lead_graph(const std::vector<Relation>& relations, int m) {
  std::vector<Graph::Edge> edges;
  for (const auto& r : relations) edges.emplace_back(r.i - 1, r.j - 1);
  return Graph(m, edges);
}

}  // namespace

InvariantBettiReport invariant_ring_betti(const WeightSystem& ws, const InvariantBettiOptions& options) {
  InvariantBettiReport report{minimal_generators(ws)};
  const auto& gens = report.generators;
  const int m = gens.m();
  report.m = m;
  report.relations = build_relations(gens);
  report.audit = audit_relations(report.relations, gens);
  if (!report.relations.empty()) {
    const auto basis = binomials(report.relations);
    report.groebner = groebner_verify(basis, gens.presentation_ring());
  }
  for (const auto& r : report.relations) {
    if (r.used_search)
      report.diagnostics.push_back("R_{" + std::to_string(r.i) + "," + std::to_string(r.j) +
                                   "}: greedy factorization dead-ended; depth-first search used");
  }

  if (!gens.is_3d() && m <= 2) {
    // Free polynomial algebra on the generators.
    report.route = WeightedRoute::Trivial;
    report.polynomial.add(0, 0, 1);
    report.weighted.add(0, 0, 1);
    report.diagnostics.push_back("m <= 2: the invariant ring is a polynomial ring");
    return report;
  }
  if (gens.is_3d() && m < 4)
    report.diagnostics.push_back("fewer than 4 cyclic generators; the closed forms do not apply");

  const int s = gens.is_3d() ? m : m - 1;
  report.deleted_edges = s;
  const Graph leads = lead_graph(report.relations, m);
  report.lead_graph_matches = m >= 3 && leads == build_xs(m, s);

  std::vector<std::int64_t> weights;
  for (const auto& g : gens.cyclic()) weights.push_back(g.degree);

  BigradedBetti ranks;
  if (m <= options.hochster_max_vertices) {
    report.route = WeightedRoute::Hochster;
    HochsterOptions hopt;
    hopt.max_vertices = std::max(hopt.max_vertices, options.hochster_max_vertices);
    hopt.threads = options.threads;
    ranks = hochster(leads, weights, options.field, hopt).ranks;
  } else {
    if (!report.lead_graph_matches)
      throw ResourceError("lead-term graph is not X[s] and m = " + std::to_string(m) +
                          " is too large for subset enumeration");
    report.route = WeightedRoute::PathCycle;
    ranks = path_cycle_betti(m, s, weights);
  }

  const BettiTable closed = m >= 3 ? closed_form_betti(m, s) : BettiTable(Convention::Ideal, GradingKind::PolynomialDegree);
  if (ranks.polynomial() != closed) {
    report.routes_agree = false;
    report.diagnostics.push_back("multigraded ranks disagree with the closed-form polynomial table");
  }
  const BettiTable quotient = to_quotient(closed);
  const BettiTable expected_quotient = gens.is_3d() ? closed_form_invariant_3d(m) : closed_form_invariant_2d(m);
  if (quotient != expected_quotient) {
    report.routes_agree = false;
    report.diagnostics.push_back("edge-ideal closed form disagrees with the invariant-ring closed form");
  }

  std::map<int, std::int64_t> expected_degrees{{-1, 0}};
  for (int i = 0; i <= m - 2; ++i) expected_degrees[i] = i + 2;
  if (gens.is_3d() && m >= 4) expected_degrees[m - 3] = m;
  report.pure = purity_check(closed, expected_degrees);

  report.polynomial = quotient;
  report.weighted = to_quotient(ranks.weighted());
  return report;
}

Series betti_numerator(const BettiTable& quotient, int max_degree) {
  if (quotient.convention() != Convention::Quotient) throw StructuralError("betti_numerator expects a quotient table");
  Series out(static_cast<std::size_t>(max_degree) + 1, 0);
  for (const auto& [key, rank] : quotient.entries()) {
    if (key.second > max_degree) continue;
    auto& slot = out[static_cast<std::size_t>(key.second)];
    slot = checked_add(slot, key.first % 2 == 0 ? rank : -rank);
  }
  return out;
}

HilbertCheck hilbert_identity(const InvariantBettiReport& report, int max_degree) {
  HilbertCheck check;
  check.max_degree = max_degree;
  check.numerator = betti_numerator(report.weighted, max_degree);
  check.expected = multiply(count_invariant_monomials(report.generators.weights(), max_degree),
                            generator_denominator(report.generators, max_degree));
  for (int d = 0; d <= max_degree; ++d) {
    if (check.numerator[static_cast<std::size_t>(d)] != check.expected[static_cast<std::size_t>(d)]) {
      check.holds = false;
      check.first_mismatch = d;
      break;
    }
  }
  return check;
}

}  // namespace cycinv
