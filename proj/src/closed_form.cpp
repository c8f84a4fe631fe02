#include "cycinv/betti.hpp"
#include "cycinv/errors.hpp"

namespace cycinv {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::int64_t>::max())
      throw std::overflow_error("binomial(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds 64 bits");
  }
  return static_cast<std::int64_t>(acc);
}

BettiTable closed_form_betti(int m, int s) {
  if (m < 3 || s < 0 || s > m) throw ValidationError("closed_form_betti needs m >= 3 and 0 <= s <= m");
  BettiTable t(Convention::Ideal, GradingKind::PolynomialDegree);
  t.add(-1, 0, 1);
  if (s < m) {
    for (int i = 0; i <= m - 2; ++i)
      t.add(i, i + 2, checked_add(checked_mul(i + 1, binomial(m, i + 2)), -checked_mul(s, binomial(m - 2, i))));
    return t;
  }
  if (m == 3) return t;  // X[3] on three vertices has no edges
  for (int i = 0; i <= m - 4; ++i)
    t.add(i, i + 2, checked_add(checked_mul(i + 1, binomial(m, i + 2)), -checked_mul(m, binomial(m - 2, i))));
  t.add(m - 3, m, 1);
  return t;
}

BettiTable closed_form_invariant_2d(int m) {
  BettiTable t(Convention::Quotient, GradingKind::PolynomialDegree);
  t.add(0, 0, 1);
  if (m < 3) return t;
  for (int i = 1; i <= m - 2; ++i)
    t.add(i, i + 1, checked_add(checked_mul(i, binomial(m, i + 1)), -checked_mul(m - 1, binomial(m - 2, i - 1))));
  return t;
}

BettiTable closed_form_invariant_3d(int m) {
  BettiTable t(Convention::Quotient, GradingKind::PolynomialDegree);
  t.add(0, 0, 1);
  if (m < 4) return t;
  for (int i = 1; i <= m - 3; ++i)
    t.add(i, i + 1, checked_add(checked_mul(i, binomial(m, i + 1)), -checked_mul(m, binomial(m - 2, i - 1))));
  t.add(m - 2, m, 1);
  return t;
}

std::optional<std::map<int, std::int64_t>> pure_degrees(const BettiTable& table) {
  std::map<int, std::int64_t> out;
  for (const auto& [key, rank] : table.entries()) {
    auto [it, inserted] = out.emplace(key.first, key.second);
    if (!inserted && it->second != key.second) return std::nullopt;
  }
  return out;
}

bool purity_check(const BettiTable& table, const std::map<int, std::int64_t>& expected) {
  if (table.grading() != GradingKind::PolynomialDegree)
    throw StructuralError("purity is checked on polynomial-degree tables");
  auto degrees = pure_degrees(table);
  if (!degrees) return false;
  for (const auto& [i, j] : *degrees) {
    auto it = expected.find(i);
    if (it == expected.end() || it->second != j) return false;
  }
  return true;
}

}  // namespace cycinv
