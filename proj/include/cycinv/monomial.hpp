#pragma once

#include <Eigen/Core>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace cycinv {

using Exponents = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using Grading = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// A monomial as a dense exponent vector. Two monomials are equal iff their
/// exponent vectors are equal, so no tie-breaking between "equal" monomials
/// is ever needed.
class Monomial {
 public:
  // Exponents are capped well below int64 so that products and weighted
  // degrees (exponent * weight, weight <= 10^6) cannot overflow.
  static constexpr std::int64_t kMaxExponent = std::int64_t{1} << 40;

  Monomial() = default;
  explicit Monomial(Eigen::Index variables) : e_(Exponents::Zero(variables)) {}
  explicit Monomial(Exponents e);
  Monomial(std::initializer_list<std::int64_t> e);

  static Monomial variable(Eigen::Index variables, Eigen::Index k, std::int64_t power = 1);

  Eigen::Index size() const { return e_.size(); }
  std::int64_t operator[](Eigen::Index k) const { return e_(k); }
  const Exponents& exponents() const { return e_; }

  std::int64_t polydeg() const { return e_.sum(); }
  std::int64_t wdeg(const Grading& grading) const;
  bool is_one() const { return (e_.array() == 0).all(); }
  int support_size() const { return static_cast<int>((e_.array() != 0).count()); }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e_.size() == b.e_.size() && a.e_ == b.e_;
  }

  /// "x^10*y" by default; with latex = true and an empty separator, "x^{10}y".
  std::string to_string(const std::vector<std::string>& names, const std::string& separator = "*",
                        bool latex = false) const;

 private:
  Exponents e_;
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// Exact quotient; throws StructuralError if `b` does not divide `a`.
Monomial operator/(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& a, std::int64_t k);

/// Lexicographic comparison of raw exponent vectors (no grading); used only
/// for container keys and deterministic output order.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace cycinv
