#include "cycinv/betti.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "cycinv/errors.hpp"
#include "cycinv/simplicial.hpp"

namespace cycinv {

void BettiTable::add(int i, std::int64_t j, std::int64_t rank) {
  if (rank == 0) return;
  const std::int64_t value = checked_add(at(i, j), rank);
  if (value < 0) throw InternalError("negative Betti number at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (value == 0) entries_.erase({i, j});
  else entries_[{i, j}] = value;
}

std::int64_t BettiTable::at(int i, std::int64_t j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t BettiTable::total(int i) const {
  std::int64_t sum = 0;
  for (const auto& [key, rank] : entries_)
    if (key.first == i) sum = checked_add(sum, rank);
  return sum;
}

std::vector<int> BettiTable::indices() const {
  std::vector<int> out;
  for (const auto& [key, rank] : entries_)
    if (out.empty() || out.back() != key.first) out.push_back(key.first);
  return out;
}

BettiTable to_quotient(const BettiTable& ideal) {
  if (ideal.convention() != Convention::Ideal) throw StructuralError("to_quotient expects an ideal-convention table");
  BettiTable out(Convention::Quotient, ideal.grading());
  for (const auto& [key, rank] : ideal.entries()) out.add(key.first + 1, key.second, rank);
  return out;
}

BettiTable to_ideal(const BettiTable& quotient) {
  if (quotient.convention() != Convention::Quotient)
    throw StructuralError("to_ideal expects a quotient-convention table");
  BettiTable out(Convention::Ideal, quotient.grading());
  for (const auto& [key, rank] : quotient.entries()) out.add(key.first - 1, key.second, rank);
  return out;
}

void BigradedBetti::add(int i, int polydeg, std::int64_t wdeg, std::int64_t rank) {
  if (rank == 0) return;
  auto& slot = entries[{i, polydeg, wdeg}];
  slot = checked_add(slot, rank);
  if (slot < 0) throw InternalError("negative multigraded Betti number");
  if (slot == 0) entries.erase({i, polydeg, wdeg});
}

void BigradedBetti::merge(const BigradedBetti& other) {
  for (const auto& [key, rank] : other.entries) add(std::get<0>(key), std::get<1>(key), std::get<2>(key), rank);
}

BettiTable BigradedBetti::polynomial() const {
  BettiTable out(Convention::Ideal, GradingKind::PolynomialDegree);
  for (const auto& [key, rank] : entries) out.add(std::get<0>(key), std::get<1>(key), rank);
  return out;
}

BettiTable BigradedBetti::weighted() const {
  BettiTable out(Convention::Ideal, GradingKind::WeightedDegree);
  for (const auto& [key, rank] : entries) out.add(std::get<0>(key), std::get<2>(key), rank);
  return out;
}

namespace {

void check_weights(const Graph& g, std::span<const std::int64_t> weights) {
  if (static_cast<int>(weights.size()) != g.vertex_count())
    throw ValidationError("need one weight per vertex");
  for (auto w : weights)
    if (w <= 0) throw ValidationError("vertex weights must be positive");
}

std::vector<int> members(std::uint32_t mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1u) out.push_back(v);
  return out;
}

}  // namespace

HochsterResult hochster(const Graph& g, std::span<const std::int64_t> weights, FieldCharacteristic field,
                        const HochsterOptions& options) {
  const int m = g.vertex_count();
  if (m > options.max_vertices || m > 30)
    throw ResourceError("Hochster enumeration over " + std::to_string(m) + " vertices exceeds the limit of " +
                        std::to_string(std::min(options.max_vertices, 30)));
  check_weights(g, weights);
  field = FieldCharacteristic::make(field.p);
  const std::optional<FieldCharacteristic> other =
      options.cross_check ? std::optional(FieldCharacteristic::make(options.cross_check->p)) : std::nullopt;
  const Graph gc = complement(g);
  const std::uint64_t subsets = std::uint64_t{1} << m;
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(subsets)));

  std::vector<HochsterResult> partial(threads);
  auto work = [&](unsigned t) {
    auto& out = partial[t];
    for (std::uint64_t mask = t; mask < subsets; mask += threads) {
      const auto ys = members(static_cast<std::uint32_t>(mask));
      const auto size = static_cast<int>(ys.size());
      std::int64_t wdeg = 0;
      for (int v : ys) wdeg = checked_add(wdeg, weights[static_cast<std::size_t>(v)]);
      const auto complex = clique_complex(induced(gc, ys));
      const auto dims = reduced_homology_dims(complex, field);
      ++out.complexes;
      if (other && reduced_homology_dims(complex, *other) != dims) ++out.field_mismatches;
      for (std::size_t idx = 0; idx < dims.size(); ++idx) {
        const int k = static_cast<int>(idx) - 1;
        out.ranks.add(size - k - 2, size, wdeg, dims[idx]);
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  HochsterResult result;
  for (const auto& p : partial) {
    result.ranks.merge(p.ranks);
    result.complexes += p.complexes;
    result.field_mismatches += p.field_mismatches;
  }
  return result;
}

BettiTable hochster_betti(const Graph& g, std::span<const std::int64_t> weights, FieldCharacteristic field,
                          const HochsterOptions& options) {
  return hochster(g, weights, field, options).ranks.weighted();
}

BettiTable hochster_betti(const Graph& g, FieldCharacteristic field, const HochsterOptions& options) {
  const std::vector<std::int64_t> unit(static_cast<std::size_t>(g.vertex_count()), 1);
  return hochster(g, unit, field, options).ranks.polynomial();
}

std::map<int, std::int64_t> linear_strand_betti(const Graph& g) {
  const int m = g.vertex_count();
  if (m > 30) throw ResourceError("linear strand enumeration limited to 30 vertices");
  const Graph gc = complement(g);
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(m), 0);
  for (auto [a, b] : gc.edges()) {
    nbr[static_cast<std::size_t>(a)] |= 1u << b;
    nbr[static_cast<std::size_t>(b)] |= 1u << a;
  }
  std::map<int, std::int64_t> out;
  for (int i = 0; i + 2 <= m; ++i) out[i] = 0;
  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const auto y = static_cast<std::uint32_t>(mask);
    const int size = std::popcount(y);
    if (size < 2) continue;
    int comps = 0;
    std::uint32_t left = y;
    while (left) {
      std::uint32_t frontier = left & (~left + 1), seen = 0;
      while (frontier) {
        seen |= frontier;
        std::uint32_t next = 0;
        for (auto f = frontier; f; f &= f - 1) next |= nbr[static_cast<std::size_t>(std::countr_zero(f))];
        frontier = next & y & ~seen;
      }
      left &= ~seen;
      ++comps;
    }
    out[size - 2] += comps - 1;
  }
  return out;
}

BigradedBetti path_cycle_betti(int m, int s, std::span<const std::int64_t> weights) {
  if (m < 3 || s < 0 || s > m) throw ValidationError("path_cycle_betti needs m >= 3 and 0 <= s <= m");
  if (static_cast<int>(weights.size()) != m) throw ValidationError("need one weight per vertex");
  std::int64_t total = 0;
  for (auto w : weights) {
    if (w <= 0) throw ValidationError("vertex weights must be positive");
    total = checked_add(total, w);
  }
  const auto width = total + 1;
  if (checked_mul(m + 1, width) > 50'000'000)
    throw ResourceError("path_cycle_betti table of " + std::to_string(m + 1) + " x " + std::to_string(width) +
                        " entries is too large");

  using Table = std::vector<std::vector<std::int64_t>>;  // [size][weight]
  const auto rows = static_cast<std::size_t>(m) + 1;
  const auto cols = static_cast<std::size_t>(width);
  // All subsets: prod_v (1 + u t^{w_v}).
  Table all(rows, std::vector<std::int64_t>(cols, 0));
  all[0][0] = 1;
  for (int v = 0; v < m; ++v) {
    const auto w = static_cast<std::size_t>(weights[static_cast<std::size_t>(v)]);
    for (std::size_t k = static_cast<std::size_t>(v) + 1; k >= 1; --k)
      for (std::size_t x = cols; x-- > w;) all[k][x] = checked_add(all[k][x], all[k - 1][x - w]);
  }
  // Forest complement: #comp(Y) - 1 = |Y| - 1 - e(Y) for nonempty Y.
  Table acc(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t k = 1; k < rows; ++k)
    for (std::size_t x = 0; x < cols; ++x) acc[k][x] = checked_mul(static_cast<std::int64_t>(k) - 1, all[k][x]);

  auto divide_out = [&](const Table& p, std::size_t w) {
    // q * (1 + u t^w) = p.
    Table q(rows, std::vector<std::int64_t>(cols, 0));
    for (std::size_t k = 0; k < rows; ++k)
      for (std::size_t x = 0; x < cols; ++x)
        q[k][x] = p[k][x] - ((k >= 1 && x >= w) ? q[k - 1][x - w] : 0);
    return q;
  };
  for (int e = 0; e < s; ++e) {
    const int a = e, b = (e + 1) % m;
    const auto wa = static_cast<std::size_t>(weights[static_cast<std::size_t>(a)]);
    const auto wb = static_cast<std::size_t>(weights[static_cast<std::size_t>(b)]);
    const Table rest = divide_out(divide_out(all, wa), wb);
    for (std::size_t k = 2; k < rows; ++k)
      for (std::size_t x = wa + wb; x < cols; ++x) acc[k][x] -= rest[k - 2][x - wa - wb];
  }
  const auto full = static_cast<std::size_t>(total);
  if (s == m) {
    // The full vertex set induces the whole cycle: one component, not |Y| - e(Y) = 0.
    acc[rows - 1][full] += 1;
  }

  BigradedBetti out;
  out.add(-1, 0, 0, 1);
  for (std::size_t k = 2; k < rows; ++k)
    for (std::size_t x = 0; x < cols; ++x)
      if (acc[k][x] != 0) out.add(static_cast<int>(k) - 2, static_cast<int>(k), static_cast<std::int64_t>(x), acc[k][x]);
  // A cycle of length >= 4 is a circle: H~_1 = 1 at Y = V. A triangle is a filled 2-simplex.
  if (s == m && m >= 4) out.add(m - 3, m, total, 1);
  return out;
}

}  // namespace cycinv
