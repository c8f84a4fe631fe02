#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cycinv {

/// A diagonal action of the cyclic group of order n on 2 or 3 coordinates,
/// given by the exponents of a fixed primitive root of unity on each axis.
///
/// A monomial x^e is invariant iff sum(e_k * w_k) == 0 (mod n); this
/// congruence is the only place the action is ever used.
class WeightSystem {
 public:
  static constexpr std::int64_t kMaxOrder = 1'000'000;

  /// Throws ValidationError unless n >= 3, every weight is in (0, n), there are
  /// 2 or 3 weights, and (for 3 weights) n divides their sum.
  WeightSystem(std::int64_t n, std::vector<std::int64_t> weights);

  std::int64_t order() const { return n_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  std::int64_t weight(std::size_t k) const { return weights_.at(k); }
  std::size_t dimension() const { return weights_.size(); }

  bool is_invariant(std::span<const std::int64_t> exponents) const;

  std::string to_string() const;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

 private:
  std::int64_t n_;
  std::vector<std::int64_t> weights_;
};

/// Parses "1,2" or "1,2,3". Throws ValidationError on malformed input.
std::vector<std::int64_t> parse_weight_list(const std::string& text);

}  // namespace cycinv
