#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "cycinv/exact_rank.hpp"
#include "cycinv/graph.hpp"

namespace cycinv {

enum class Convention { Ideal, Quotient };
enum class GradingKind { PolynomialDegree, WeightedDegree };

/// Sparse graded Betti table: (homological index i, internal degree j) -> rank.
/// In the ideal convention beta_{-1,0} = 1 stands for the ring itself; the
/// quotient convention is shifted by one: beta_{i,j}(R/I) = beta_{i-1,j}(I).
class BettiTable {
 public:
  using Key = std::pair<int, std::int64_t>;

  BettiTable(Convention convention, GradingKind grading)
      : convention_(convention), grading_(grading) {}

  Convention convention() const { return convention_; }
  GradingKind grading() const { return grading_; }
  const std::map<Key, std::int64_t>& entries() const { return entries_; }

  /// Accumulates; entries that reach zero are removed. A negative result
  /// throws InternalError.
  void add(int i, std::int64_t j, std::int64_t rank);
  std::int64_t at(int i, std::int64_t j) const;
  /// Sum over j of beta_{i,j}.
  std::int64_t total(int i) const;
  /// Homological indices with a nonzero entry, ascending.
  std::vector<int> indices() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  Convention convention_;
  GradingKind grading_;
  std::map<Key, std::int64_t> entries_;
};

BettiTable to_quotient(const BettiTable& ideal);
BettiTable to_ideal(const BettiTable& quotient);

/// Betti ranks keyed by (i, polynomial degree |Y|, weighted degree w(Y)), ideal
/// convention. Both single gradings are projections of this.
struct BigradedBetti {
  std::map<std::tuple<int, int, std::int64_t>, std::int64_t> entries;

  void add(int i, int polydeg, std::int64_t wdeg, std::int64_t rank);
  void merge(const BigradedBetti& other);
  BettiTable polynomial() const;
  BettiTable weighted() const;
};

struct HochsterOptions {
  int max_vertices = 22;  // 2^m induced complexes are built
  unsigned threads = 1;
  // When set, every complex is also computed over this field and compared.
  std::optional<FieldCharacteristic> cross_check;
};

struct HochsterResult {
  BigradedBetti ranks;
  std::int64_t complexes = 0;
  std::int64_t field_mismatches = 0;
};

/// Multigraded Hochster formula for the edge ideal of `g`: every vertex subset
/// Y contributes dim H~_k(clique complex of g^c restricted to Y) at
/// i = |Y| - k - 2, polynomial degree |Y|, weighted degree sum of weights on Y.
/// Throws ResourceError if g has more than options.max_vertices vertices and
/// ValidationError on a non-positive weight or a weight vector of wrong length.
HochsterResult hochster(const Graph& g, std::span<const std::int64_t> weights,
                        FieldCharacteristic field = {}, const HochsterOptions& options = {});

/// Ideal-convention table in the weighted grading.
BettiTable hochster_betti(const Graph& g, std::span<const std::int64_t> weights,
                          FieldCharacteristic field = {}, const HochsterOptions& options = {});

/// Unit weights: the polynomial-degree table.
BettiTable hochster_betti(const Graph& g, FieldCharacteristic field = {},
                          const HochsterOptions& options = {});

/// beta_{i,i+2} = sum over |Y| = i+2 of (#components of g^c on Y) - 1.
std::map<int, std::int64_t> linear_strand_betti(const Graph& g);

/// Exact binomial coefficient; 0 outside 0 <= k <= n. Throws
/// std::overflow_error beyond 64 bits.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Closed-form table of the edge ideal of X[s] (ideal convention, polynomial
/// degree). For s == m == 3 the complement is a filled triangle and the ideal
/// is zero, so only beta_{-1,0} remains.
BettiTable closed_form_betti(int m, int s);

/// Quotient-convention polynomial tables of the invariant rings with m
/// cyclic generators. 2D needs m >= 3, 3D needs m >= 4; smaller m give the
/// free table beta_{0,0} = 1.
BettiTable closed_form_invariant_2d(int m);
BettiTable closed_form_invariant_3d(int m);

/// True iff for every homological index all mass sits in exactly one degree and
/// that degree equals expected[i]. Indices absent from `expected` fail.
bool purity_check(const BettiTable& table, const std::map<int, std::int64_t>& expected);

/// The degree of each row if the table is pure, else nullopt.
std::optional<std::map<int, std::int64_t>> pure_degrees(const BettiTable& table);

/// Multigraded ranks of the edge ideal of X[s] for arbitrary vertex weights
/// without subset enumeration. The complement of X[s] is a union of paths
/// (s < m) or the m-cycle, so every induced clique complex is a forest except
/// the full cycle; ranks follow from edge counts by generating functions.
BigradedBetti path_cycle_betti(int m, int s, std::span<const std::int64_t> weights);

}  // namespace cycinv
