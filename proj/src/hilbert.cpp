#include "cycinv/hilbert.hpp"

#include <functional>

#include "cycinv/errors.hpp"

namespace cycinv {

Series count_invariant_monomials(const WeightSystem& ws, int max_degree) {
  if (max_degree < 0) throw ValidationError("max degree must be non-negative");
  Series out(static_cast<std::size_t>(max_degree) + 1, 0);
  const auto n = ws.order();
  const auto w = ws.weights();
  for (int d = 0; d <= max_degree; ++d) {
    std::int64_t count = 0;
    if (w.size() == 2) {
      for (std::int64_t a = 0; a <= d; ++a)
        if ((a * w[0] + (d - a) * w[1]) % n == 0) ++count;
    } else {
      for (std::int64_t a = 0; a <= d; ++a)
        for (std::int64_t b = 0; a + b <= d; ++b)
          if ((a * w[0] + b * w[1] + (d - a - b) * w[2]) % n == 0) ++count;
    }
    out[static_cast<std::size_t>(d)] = count;
  }
  return out;
}

Series multiply(const Series& a, const Series& b) {
  const std::size_t len = std::min(a.size(), b.size());
  Series out(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < len; ++j) out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
  }
  return out;
}

Series generator_denominator(const GeneratorSet& gens, int max_degree) {
  Series out(static_cast<std::size_t>(max_degree) + 1, 0);
  out[0] = 1;
  for (const auto& g : gens.ordered()) {
    Series factor(out.size(), 0);
    factor[0] = 1;
    if (g.degree <= max_degree) factor[static_cast<std::size_t>(g.degree)] = -1;
    out = multiply(out, factor);
  }
  return out;
}

Series count_standard_monomials(const std::vector<Relation>& relations, const GeneratorSet& gens,
                                int max_degree) {
  const AmbientRing ring = gens.presentation_ring();
  const auto nvars = static_cast<int>(ring.variable_count());
  std::vector<std::vector<bool>> lead_edge(static_cast<std::size_t>(nvars),
                                           std::vector<bool>(static_cast<std::size_t>(nvars), false));
  for (const auto& r : relations) {
    const auto& lead = r.binomial.lead;
    if (lead.polydeg() != 2 || lead.support_size() != 2)
      throw StructuralError("count_standard_monomials needs square-free quadratic leads");
    std::vector<int> vs;
    for (int k = 0; k < nvars; ++k)
      if (lead[k] != 0) vs.push_back(k);
    lead_edge[static_cast<std::size_t>(vs[0])][static_cast<std::size_t>(vs[1])] = true;
    lead_edge[static_cast<std::size_t>(vs[1])][static_cast<std::size_t>(vs[0])] = true;
  }

  const auto len = static_cast<std::size_t>(max_degree) + 1;
  // Monomials with support exactly S: prod over v in S of (t^w + t^2w + ...).
  std::vector<Series> exact_power(static_cast<std::size_t>(nvars), Series(len, 0));
  for (int v = 0; v < nvars; ++v) {
    const auto w = ring.grading()(v);
    for (std::int64_t d = w; d <= max_degree; d += w) exact_power[static_cast<std::size_t>(v)][static_cast<std::size_t>(d)] = 1;
  }

  Series total(len, 0);
  std::vector<int> chosen;
  // Standard monomials are those whose support contains no lead pair.
  std::function<void(int, const Series&)> extend = [&](int from, const Series& acc) {
    for (std::size_t d = 0; d < len; ++d) total[d] += acc[d];
    for (int v = from; v < nvars; ++v) {
      bool ok = true;
      for (int c : chosen)
        if (lead_edge[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)]) ok = false;
      if (!ok) continue;
      Series next = multiply(acc, exact_power[static_cast<std::size_t>(v)]);
      bool any = false;
      for (auto x : next) any = any || x != 0;
      if (!any) continue;
      chosen.push_back(v);
      extend(v + 1, next);
      chosen.pop_back();
    }
  };
  Series one(len, 0);
  one[0] = 1;
  extend(0, one);
  return total;
}

}  // namespace cycinv
