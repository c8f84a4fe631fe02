#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cycinv/ring.hpp"
#include "cycinv/weights.hpp"

namespace cycinv {

enum class Block { Pure2D, T1, T2, T3, A };

std::string to_string(Block b);

/// A minimal invariant monomial of F[x,y] or F[x,y,z].
struct Generator {
  Monomial image;
  std::int64_t degree = 0;  // total degree of `image`; the grading of its presentation variable
  Block block = Block::Pure2D;
};

struct BlockSizes {
  int r = 0;
  int s = 0;
  int t = 0;
};

/// Minimal monomial generators in presentation order.
///   2D: u_1..u_m, x-exponent strictly decreasing.
///   3D: a = xyz, then the cyclic list B_1..B_m = u_1..u_r, v_1..v_s, w_1..w_t.
class GeneratorSet {
 public:
  GeneratorSet(WeightSystem weights, std::vector<Generator> ordered, std::optional<BlockSizes> blocks);

  const WeightSystem& weights() const { return weights_; }
  const std::vector<Generator>& ordered() const { return ordered_; }
  bool is_3d() const { return blocks_.has_value(); }
  const std::optional<BlockSizes>& blocks() const { return blocks_; }

  /// Generators other than a (u_1..u_m in 2D, B_1..B_m in 3D).
  std::span<const Generator> cyclic() const;
  /// m: number of cyclic generators.
  int m() const { return static_cast<int>(cyclic().size()); }

  /// The presentation ring S: F[U_1..U_m] with Order2D, or F[A, B_1..B_m]
  /// with Order3D(r, s, t). Variable gradings are the generator degrees.
  AmbientRing presentation_ring() const;

  /// Names of the presentation variables ("U_1".., or "A", "B_1"..).
  std::vector<std::string> variable_names() const;
  /// Names of the coordinate variables ("x", "y"[, "z"]).
  std::vector<std::string> coordinate_names() const;

 private:
  WeightSystem weights_;
  std::vector<Generator> ordered_;
  std::optional<BlockSizes> blocks_;
};

/// Minimal generators of F[x,y]^G as (x-exponent, y-exponent) pairs,
/// x-exponent strictly decreasing. Uses only weights (b, c) and modulus n.
std::vector<std::pair<std::int64_t, std::int64_t>> staircase_2d(std::int64_t n, std::int64_t b,
                                                                std::int64_t c);

/// Throws ValidationError unless `ws` has 2 weights.
GeneratorSet minimal_generators_2d(const WeightSystem& ws);

/// Throws ValidationError unless `ws` has 3 weights.
GeneratorSet minimal_generators_3d(const WeightSystem& ws);

/// Dispatches on the number of weights.
GeneratorSet minimal_generators(const WeightSystem& ws);

/// The presentation map: a monomial of S to the product of generator images.
Monomial pi(const Monomial& mon, const GeneratorSet& gens);

struct Factorization {
  Exponents exponents;  // one entry per allowed generator
  bool used_search = false;  // greedy dead-ended, depth-first search found it
};

/// Writes `target` as a product of `allowed` generators. Greedy: divide by
/// the largest-index allowed generator dividing the remainder; on a dead end,
/// exhaustive depth-first search preferring larger indices and larger powers.
std::optional<Factorization> factor_into(const Monomial& target, std::span<const Monomial> allowed);

}  // namespace cycinv
