#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycinv/betti.hpp"
#include "cycinv/hilbert.hpp"
#include "cycinv/relations.hpp"

namespace cycinv {

struct InvariantBettiOptions {
  FieldCharacteristic field{};
  // Largest m for which the weighted table is taken from full subset
  // enumeration; larger m use path_cycle_betti.
  int hochster_max_vertices = 14;
  unsigned threads = 1;
};

enum class WeightedRoute { Trivial, Hochster, PathCycle };

struct InvariantBettiReport {
  GeneratorSet generators;
  std::vector<Relation> relations{};
  RelationAudit audit{};
  GroebnerReport groebner{};
  int m = 0;
  int deleted_edges = 0;           // s in X[s]: m-1 (2D) or m (3D)
  bool lead_graph_matches = true;  // lead-term graph equals X[s] with the standard pattern
  BettiTable polynomial{Convention::Quotient, GradingKind::PolynomialDegree};
  BettiTable weighted{Convention::Quotient, GradingKind::WeightedDegree};
  bool pure = true;
  bool routes_agree = true;  // closed form == projection of the multigraded table
  WeightedRoute route = WeightedRoute::Trivial;
  std::vector<std::string> diagnostics{};

  bool ok() const {
    return audit.ok() && groebner.pass && lead_graph_matches && pure && routes_agree;
  }
};

/// generators -> relations -> Groebner certificate -> lead-term edge ideal
/// X[m-1] (2D) or X[m] (3D, after dropping A) -> Betti tables, shifted to the
/// quotient convention.
InvariantBettiReport invariant_ring_betti(const WeightSystem& ws,
                                          const InvariantBettiOptions& options = {});

/// sum_i (-1)^i sum_j beta_{i,j} t^j for a quotient-convention table.
Series betti_numerator(const BettiTable& quotient, int max_degree);

struct HilbertCheck {
  bool holds = true;
  int max_degree = 0;
  std::optional<int> first_mismatch;
  Series numerator;  // from the Betti table
  Series expected;   // invariant monomial counts times prod (1 - t^deg g)
};

/// Compares the weighted Betti numerator with the Hilbert series of F[W]^G
/// (counted directly) times the generator denominator, through max_degree.
HilbertCheck hilbert_identity(const InvariantBettiReport& report, int max_degree);

}  // namespace cycinv
