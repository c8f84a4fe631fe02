#include "cycinv/generators.hpp"

#include <algorithm>
#include <numeric>

#include "cycinv/errors.hpp"

namespace cycinv {

std::string to_string(Block b) {
  switch (b) {
    case Block::Pure2D: return "2D";
    case Block::T1: return "T1";
    case Block::T2: return "T2";
    case Block::T3: return "T3";
    case Block::A: return "A";
  }
  return "?";
}

GeneratorSet::GeneratorSet(WeightSystem weights, std::vector<Generator> ordered,
                           std::optional<BlockSizes> blocks)
    : weights_(std::move(weights)), ordered_(std::move(ordered)), blocks_(blocks) {
  const auto dim = static_cast<Eigen::Index>(weights_.dimension());
  for (const auto& g : ordered_) {
    if (g.image.size() != dim) throw StructuralError("generator image has the wrong number of variables");
    if (g.image.is_one()) throw StructuralError("generator image is 1");
  }
  if (blocks_) {
    if (ordered_.empty() || ordered_.front().block != Block::A)
      throw StructuralError("3D generator list must start with a = xyz");
    if (blocks_->r + blocks_->s + blocks_->t + 1 != static_cast<int>(ordered_.size()))
      throw StructuralError("block sizes do not match the generator count");
  }
}

std::span<const Generator> GeneratorSet::cyclic() const {
  std::span<const Generator> all(ordered_);
  return blocks_ ? all.subspan(1) : all;
}

AmbientRing GeneratorSet::presentation_ring() const {
  Grading grading(static_cast<Eigen::Index>(ordered_.size()));
  for (std::size_t k = 0; k < ordered_.size(); ++k) grading(static_cast<Eigen::Index>(k)) = ordered_[k].degree;
  OrderSpec order = Order2D{};
  if (blocks_) order = Order3D{blocks_->r, blocks_->s, blocks_->t};
  return AmbientRing(std::move(grading), order, variable_names());
}

std::vector<std::string> GeneratorSet::variable_names() const {
  std::vector<std::string> names;
  if (blocks_) {
    names.push_back("A");
    for (int k = 1; k <= m(); ++k) names.push_back("B_" + std::to_string(k));
  } else {
    for (int k = 1; k <= m(); ++k) names.push_back("U_" + std::to_string(k));
  }
  return names;
}

std::vector<std::string> GeneratorSet::coordinate_names() const {
  if (blocks_) return {"x", "y", "z"};
  return {"x", "y"};
}

namespace {

// Inverse of a modulo mod, gcd(a, mod) == 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t mod) {
  std::int64_t old_r = a % mod, r = mod, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  old_s %= mod;
  return old_s < 0 ? old_s + mod : old_s;
}

// Least beta >= 0 with beta*c == rhs (mod n), if any.
std::optional<std::int64_t> least_solution(std::int64_t c, std::int64_t rhs, std::int64_t n) {
  const std::int64_t g = std::gcd(c, n);
  rhs %= n;
  if (rhs < 0) rhs += n;
  if (rhs % g != 0) return std::nullopt;
  const std::int64_t mod = n / g;
  if (mod == 1) return 0;
  return static_cast<std::int64_t>(static_cast<__int128>(rhs / g) * inverse_mod(c / g, mod) % mod);
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> staircase_2d(std::int64_t n, std::int64_t b,
                                                                std::int64_t c) {
  // (a, beta) is minimal iff beta is the least admissible y-exponent for a and
  // strictly below every admissible y-exponent at smaller x-exponents.
  const std::int64_t a_max = n / std::gcd(n, b);
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  std::int64_t best = n / std::gcd(n, c);
  out.emplace_back(0, best);
  for (std::int64_t a = 1; a <= a_max; ++a) {
    auto beta = least_solution(c, -a * b, n);
    if (beta && *beta < best) {
      best = *beta;
      out.emplace_back(a, *beta);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

GeneratorSet minimal_generators_2d(const WeightSystem& ws) {
  if (ws.dimension() != 2) throw ValidationError("2D generators need exactly 2 weights");
  std::vector<Generator> gens;
  for (auto [a, b] : staircase_2d(ws.order(), ws.weight(0), ws.weight(1)))
    gens.push_back({Monomial{a, b}, a + b, Block::Pure2D});
  return GeneratorSet(ws, std::move(gens), std::nullopt);
}

GeneratorSet minimal_generators_3d(const WeightSystem& ws) {
  if (ws.dimension() != 3) throw ValidationError("3D generators need exactly 3 weights");
  const auto n = ws.order();
  const auto b = ws.weight(0), c = ws.weight(1), d = ws.weight(2);
  std::vector<Generator> gens{{Monomial{1, 1, 1}, 3, Block::A}};
  // Each staircase runs from the pure power of its first variable to the pure
  // power of its second; dropping the last entry gives every two-variable
  // generator to exactly one block.
  auto xy = staircase_2d(n, b, c);
  auto yz = staircase_2d(n, c, d);
  auto zx = staircase_2d(n, d, b);
  for (std::size_t k = 0; k + 1 < xy.size(); ++k)
    gens.push_back({Monomial{xy[k].first, xy[k].second, 0}, xy[k].first + xy[k].second, Block::T1});
  for (std::size_t k = 0; k + 1 < yz.size(); ++k)
    gens.push_back({Monomial{0, yz[k].first, yz[k].second}, yz[k].first + yz[k].second, Block::T2});
  for (std::size_t k = 0; k + 1 < zx.size(); ++k)
    gens.push_back({Monomial{zx[k].second, 0, zx[k].first}, zx[k].first + zx[k].second, Block::T3});
  BlockSizes sizes{static_cast<int>(xy.size()) - 1, static_cast<int>(yz.size()) - 1,
                   static_cast<int>(zx.size()) - 1};
  return GeneratorSet(ws, std::move(gens), sizes);
}

GeneratorSet minimal_generators(const WeightSystem& ws) {
  return ws.dimension() == 2 ? minimal_generators_2d(ws) : minimal_generators_3d(ws);
}

Monomial pi(const Monomial& mon, const GeneratorSet& gens) {
  const auto& list = gens.ordered();
  if (mon.size() != static_cast<Eigen::Index>(list.size()))
    throw StructuralError("monomial does not live in the presentation ring of this generator set");
  Monomial out(static_cast<Eigen::Index>(gens.weights().dimension()));
  for (std::size_t k = 0; k < list.size(); ++k) {
    const auto e = mon[static_cast<Eigen::Index>(k)];
    if (e != 0) out = out * pow(list[k].image, e);
  }
  return out;
}

namespace {

std::int64_t max_power_dividing(const Monomial& g, const Monomial& target) {
  std::int64_t best = -1;
  for (Eigen::Index v = 0; v < g.size(); ++v) {
    if (g[v] == 0) continue;
    const auto p = target[v] / g[v];
    best = best < 0 ? p : std::min(best, p);
  }
  return best;
}

bool search(const Monomial& remainder, std::span<const Monomial> allowed, int k, Exponents& d) {
  if (remainder.is_one()) return true;
  if (k < 0) return false;
  const Monomial& g = allowed[static_cast<std::size_t>(k)];
  for (auto e = max_power_dividing(g, remainder); e >= 0; --e) {
    d(k) = e;
    if (search(remainder / pow(g, e), allowed, k - 1, d)) return true;
  }
  d(k) = 0;
  return false;
}

}  // namespace

std::optional<Factorization> factor_into(const Monomial& target, std::span<const Monomial> allowed) {
  for (const auto& g : allowed) {
    if (g.size() != target.size()) throw StructuralError("factor_into: variable count mismatch");
    if (g.is_one()) throw StructuralError("factor_into: allowed generator is 1");
  }
  const auto count = static_cast<Eigen::Index>(allowed.size());
  Factorization out{Exponents::Zero(count), false};
  Monomial remainder = target;
  while (!remainder.is_one()) {
    bool progressed = false;
    for (auto k = count - 1; k >= 0; --k) {
      if (allowed[static_cast<std::size_t>(k)].divides(remainder)) {
        remainder = remainder / allowed[static_cast<std::size_t>(k)];
        ++out.exponents(k);
        progressed = true;
        break;
      }
    }
    if (!progressed) {
      Exponents d = Exponents::Zero(count);
      if (!search(target, allowed, static_cast<int>(count) - 1, d)) return std::nullopt;
      return Factorization{std::move(d), true};
    }
  }
  return out;
}

}  // namespace cycinv
