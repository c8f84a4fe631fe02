#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cycinv/ring.hpp"

namespace cycinv {

/// lead - tail, with lead > tail in the ring order. A missing tail encodes the
/// monomial element `lead`.
struct Binomial {
  Monomial lead;
  std::optional<Monomial> tail;

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Throws StructuralError unless lead > tail (and lead != tail).
void check_binomial(const Binomial& f, const AmbientRing& ring);

struct Term {
  std::int64_t coefficient;
  Monomial monomial;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with integer coefficients, terms kept in descending
/// ring order with like terms merged and zero terms dropped. Reducing a
/// binomial by binomials yields zero, one or two terms; this type covers
/// all three without assuming the coefficients stay +1/-1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<Term> terms, const AmbientRing& ring);
  static Polynomial from(const Binomial& f, const AmbientRing& ring);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  std::string to_string(const AmbientRing& ring) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

/// Lookup of basis elements whose lead divides a given monomial. Square-free
/// quadratic leads get an O(support^2) pair table; anything else is scanned.
class Reducer {
 public:
  Reducer(std::span<const Binomial> basis, const AmbientRing& ring);

  const AmbientRing& ring() const { return *ring_; }
  std::span<const Binomial> basis() const { return basis_; }

  /// Index of a basis element whose lead divides `m` (smallest index among
  /// candidates), or nullopt.
  std::optional<std::size_t> find_divisor(const Monomial& m) const;

  /// Fully reduces every term. Lead term first, then the remaining terms,
  /// restarting from the top after each rewrite.
  Polynomial normal_form(Polynomial f) const;

 private:
  std::span<const Binomial> basis_;
  const AmbientRing* ring_;
  Eigen::Index n_ = 0;
  std::vector<std::int32_t> pair_table_;  // n_*n_, -1 when empty
  std::vector<std::size_t> general_;      // basis entries not square-free quadratic
};

Polynomial normal_form(const Binomial& f, std::span<const Binomial> basis, const AmbientRing& ring);

/// lcm/lead(f) * f - lcm/lead(g) * g.
Polynomial s_polynomial(const Binomial& f, const Binomial& g, const AmbientRing& ring);

struct SPairOutcome {
  bool reduces_to_zero = false;
  bool skipped_coprime = false;
};

/// Buchberger's test for one pair. Pairs with coprime leads are skipped (and
/// reported as such) unless `use_coprime_criterion` is false.
SPairOutcome s_pair_reduces(const Binomial& f, const Binomial& g, const Reducer& reducer,
                            bool use_coprime_criterion = true);

struct GroebnerReport {
  bool pass = true;
  std::int64_t pairs_checked = 0;
  std::int64_t pairs_skipped_coprime = 0;
  // First few failing pairs (0-based basis indices).
  std::vector<std::pair<std::size_t, std::size_t>> failures;
};

/// Runs s_pair_reduces over all unordered pairs of `basis`.
GroebnerReport groebner_verify(std::span<const Binomial> basis, const AmbientRing& ring,
                               bool use_coprime_criterion = true);

}  // namespace cycinv
