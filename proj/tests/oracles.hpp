#pragma once

// Brute-force reference computations. Nothing here calls into the library
// beyond plain data types, so agreement is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline bool invariant(const Vec& e, std::int64_t n, const Vec& w) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < e.size(); ++k) s = (s + e[k] * w[k]) % n;
  return s == 0;
}

inline bool divides(const Vec& a, const Vec& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

// Minimal non-constant invariant monomials. Every minimal one has each
// exponent at most n (x^n is invariant), so the box [0,n]^d suffices.
inline std::vector<Vec> minimal_invariants(std::int64_t n, const Vec& w) {
  const std::size_t d = w.size();
  std::vector<Vec> inv;
  Vec e(d, 0);
  while (true) {
    bool nonzero = std::any_of(e.begin(), e.end(), [](auto v) { return v != 0; });
    if (nonzero && invariant(e, n, w)) inv.push_back(e);
    std::size_t k = 0;
    while (k < d && e[k] == n) e[k++] = 0;
    if (k == d) break;
    ++e[k];
  }
  std::vector<Vec> out;
  for (const auto& a : inv) {
    bool minimal = true;
    for (const auto& b : inv)
      if (b != a && divides(b, a)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Invariant monomials per total degree by dynamic programming over
// (degree, residue), one variable at a time.
inline Vec invariant_counts(std::int64_t n, const Vec& w, int max_degree) {
  std::vector<Vec> dp(static_cast<std::size_t>(max_degree + 1), Vec(static_cast<std::size_t>(n), 0));
  dp[0][0] = 1;
  for (auto wk : w) {
    for (int deg = 1; deg <= max_degree; ++deg)
      for (std::int64_t r = 0; r < n; ++r)
        dp[static_cast<std::size_t>(deg)][static_cast<std::size_t>(((r + wk) % n))] +=
            dp[static_cast<std::size_t>(deg - 1)][static_cast<std::size_t>(r)];
  }
  Vec out;
  for (int deg = 0; deg <= max_degree; ++deg) out.push_back(dp[static_cast<std::size_t>(deg)][0]);
  return out;
}

// Rank of an integer matrix modulo a large prime; rows as vectors.
inline int rank_mod(std::vector<Vec> a, std::int64_t p = 1'000'000'007) {
  int rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < a.size() && ((a[piv][c] % p) + p) % p == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[static_cast<std::size_t>(rank)]);
    auto& top = a[static_cast<std::size_t>(rank)];
    for (auto& v : top) v = ((v % p) + p) % p;
    std::int64_t inv = 1, base = top[c], e = p - 2;
    while (e) {
      if (e & 1) inv = static_cast<std::int64_t>(static_cast<__int128>(inv) * base % p);
      base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % p);
      e >>= 1;
    }
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      std::int64_t f = ((a[r][c] % p) + p) % p;
      if (!f) continue;
      f = static_cast<std::int64_t>(static_cast<__int128>(f) * inv % p);
      for (std::size_t k = 0; k < cols; ++k)
        a[r][k] = ((a[r][k] - static_cast<std::int64_t>(static_cast<__int128>(f) * top[k] % p)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Edge ideal Betti numbers (ideal convention, polynomial degree) via the
// Hochster sum, with the clique complex enumerated face by face as bitmasks.
// Result: betti[i+1][j] for i >= -1.
inline std::vector<Vec> edge_ideal_betti(int m, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::uint32_t> adj_c(static_cast<std::size_t>(m), 0);  // complement adjacency
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b) adj_c[static_cast<std::size_t>(a)] |= 1u << b;
  for (auto [a, b] : edges) {
    adj_c[static_cast<std::size_t>(a)] &= ~(1u << b);
    adj_c[static_cast<std::size_t>(b)] &= ~(1u << a);
  }
  std::vector<Vec> betti(static_cast<std::size_t>(m + 1), Vec(static_cast<std::size_t>(m + 1), 0));
  for (std::uint32_t y = 0; y < (1u << m); ++y) {
    // faces of the clique complex of the complement inside y, grouped by size
    std::vector<std::vector<std::uint32_t>> faces(static_cast<std::size_t>(m + 2));
    for (std::uint32_t f = y;; f = (f - 1) & y) {
      bool clique = true;
      for (int v = 0; v < m && clique; ++v)
        if (f >> v & 1) clique = ((f & ~(1u << v)) & ~adj_c[static_cast<std::size_t>(v)]) == 0;
      if (clique) faces[static_cast<std::size_t>(__builtin_popcount(f))].push_back(f);
      if (f == 0) break;
    }
    const int size = __builtin_popcount(y);
    // reduced homology in dimension k uses faces of sizes k+1 and k+2 / k
    auto bd_rank = [&](int sz) -> int {  // rank of boundary from size sz to size sz-1
      if (sz < 1 || faces[static_cast<std::size_t>(sz)].empty()) return 0;
      const auto& hi = faces[static_cast<std::size_t>(sz)];
      const auto& lo = faces[static_cast<std::size_t>(sz - 1)];
      std::vector<Vec> rows(hi.size(), Vec(lo.size(), 0));
      for (std::size_t r = 0; r < hi.size(); ++r) {
        int sign = 1;
        for (int v = 0; v < m; ++v) {
          if (!(hi[r] >> v & 1)) continue;
          const auto target = hi[r] & ~(1u << v);
          const auto it = std::find(lo.begin(), lo.end(), target);
          rows[r][static_cast<std::size_t>(it - lo.begin())] = sign;
          sign = -sign;
        }
      }
      return rank_mod(rows);
    };
    for (int sz = 0; sz <= size; ++sz) {
      const int k = sz - 1;  // dimension
      const auto count = static_cast<std::int64_t>(faces[static_cast<std::size_t>(sz)].size());
      const std::int64_t h = count - bd_rank(sz) - bd_rank(sz + 1);
      if (h == 0) continue;
      const int i = size - k - 2;
      betti[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(size)] += h;
    }
  }
  return betti;
}

inline std::int64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace oracle
