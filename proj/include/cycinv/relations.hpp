#pragma once

#include <vector>

#include "cycinv/generators.hpp"
#include "cycinv/reduction.hpp"

namespace cycinv {

/// R_{i,j} = (variable i)(variable j) - tail.
struct Relation {
  int i = 0;  // 1-based index of the cyclic generator
  int j = 0;
  Binomial binomial;
  // Exponents d_k (k = 1..m, stored 0-based) of the factored part of the tail:
  // the product after U_{i+1} for in-block relations, the part after A^e for
  // cross-block ones.
  Exponents factorization;
  std::int64_t a_power = 0;  // exponent of A in the tail (3D cross-block relations)
  Block block = Block::Pure2D;  // Pure2D / T1 / T2 / T3, or A for cross-block relations
  bool used_search = false;
};

/// 2D relations for every pair with j - i >= 2 in lexicographic (i, j) order.
/// Empty when m <= 2. Throws InternalError if a required factorization fails.
std::vector<Relation> build_relations_2d(const GeneratorSet& gens);

/// Cyclic distance min(|i-j|, m-|i-j|).
int cyclic_distance(int i, int j, int m);

/// 3D relations for every pair with cyclic distance >= 2 in lexicographic
/// (i, j) order. Throws InternalError if a required factorization fails.
std::vector<Relation> build_relations_3d(const GeneratorSet& gens);

std::vector<Relation> build_relations(const GeneratorSet& gens);

std::vector<Binomial> binomials(const std::vector<Relation>& relations);

/// Rendered as in "R_{1,3}=U_1U_3-U_2^2".
std::string format_relation(const Relation& rel, const AmbientRing& ring);

struct RelationAudit {
  bool exact = true;          // pi(lead) == pi(tail) and equal weighted degrees
  bool leads_quadratic = true;  // square-free, quadratic, distinct, matching the index pattern
  bool tails_ordered = true;  // tail < lead, polynomial degree >= 2
  bool minimal = true;        // leads pairwise non-dividing
  bool count_ok = true;       // C(m-1, 2) in 2D, m(m-3)/2 in 3D
  bool ok() const { return exact && leads_quadratic && tails_ordered && minimal && count_ok; }
};

RelationAudit audit_relations(const std::vector<Relation>& relations, const GeneratorSet& gens);

}  // namespace cycinv
