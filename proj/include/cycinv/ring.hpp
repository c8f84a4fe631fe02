#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "cycinv/monomial.hpp"

namespace cycinv {

/// Graded reverse-position order on F[U_1..U_m]: weighted degree first, then
/// the monomial with the smaller exponent at the largest differing index is
/// smaller.
struct Order2D {
  friend bool operator==(const Order2D&, const Order2D&) = default;
};

/// Order on F[A, B_1..B_m] with m = r + s + t. Variable 0 is A.
/// Weighted degree first; then a higher power of A is smaller; then the
/// exponents are compared at the largest differing position of the sequence
/// B_1..B_{r+s}, B_m, B_{m-1}, .., B_{r+s+1}.
struct Order3D {
  int r = 0;
  int s = 0;
  int t = 0;
  int m() const { return r + s + t; }
  friend bool operator==(const Order3D&, const Order3D&) = default;
};

using OrderSpec = std::variant<Order2D, Order3D>;

class AmbientRing {
 public:
  /// Throws ValidationError if a grading entry is not positive or if an
  /// Order3D does not match the variable count 1 + r + s + t.
  AmbientRing(Grading grading, OrderSpec order, std::vector<std::string> names = {});

  Eigen::Index variable_count() const { return grading_.size(); }
  const Grading& grading() const { return grading_; }
  const OrderSpec& order() const { return order_; }
  bool is_3d() const { return std::holds_alternative<Order3D>(order_); }
  const std::vector<std::string>& names() const { return names_; }

  /// Comparison position (0-based, ascending significance) of variable k
  /// within the tie-break sequence. Identity for Order2D; A has none.
  const std::vector<int>& tie_break_sequence() const { return sequence_; }

  std::int64_t wdeg(const Monomial& m) const;
  void check(const Monomial& m) const;

  std::string format(const Monomial& m) const { return m.to_string(names_); }

 private:
  Grading grading_;
  OrderSpec order_;
  std::vector<std::string> names_;
  std::vector<int> sequence_;  // variables listed from least to most significant
};

std::strong_ordering compare_2d(const Monomial& a, const Monomial& b, const AmbientRing& ring);
std::strong_ordering compare_3d(const Monomial& a, const Monomial& b, const AmbientRing& ring);

/// Dispatches on the ring's order spec.
std::strong_ordering compare(const Monomial& a, const Monomial& b, const AmbientRing& ring);

}  // namespace cycinv
