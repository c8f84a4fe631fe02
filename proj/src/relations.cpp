#include "cycinv/relations.hpp"

#include <algorithm>
#include <set>

#include "cycinv/errors.hpp"

namespace cycinv {

namespace {

struct Builder {
  const GeneratorSet& gens;
  AmbientRing ring;
  int offset;  // variable index of cyclic generator 1

  explicit Builder(const GeneratorSet& g) : gens(g), ring(g.presentation_ring()), offset(g.is_3d() ? 1 : 0) {}

  Eigen::Index var(int k) const { return k - 1 + offset; }
  const Monomial& image(int k) const { return gens.cyclic()[static_cast<std::size_t>(k - 1)].image; }
  Monomial unit(int k) const { return Monomial::variable(ring.variable_count(), var(k)); }

  std::string pair_name(int i, int j) const {
    return "R_{" + std::to_string(i) + "," + std::to_string(j) + "}";
  }

  // Two-dimensional construction on an ordered block: lead = L[p]*L[q],
  // tail = L[p+1] * (factorization of pi(lead)/pi(L[p+1]) over L[p+1..q-1]).
  Relation in_block(const std::vector<int>& block, std::size_t p, std::size_t q, Block label) const {
    const int i = block[p], j = block[q], next = block[p + 1];
    const Monomial product = image(i) * image(j);
    if (!image(next).divides(product))
      throw InternalError(pair_name(std::min(i, j), std::max(i, j)) + ": generator " +
                          std::to_string(next) + " does not divide the product");
    const Monomial alpha = product / image(next);
    std::vector<Monomial> allowed;
    for (std::size_t k = p + 1; k < q; ++k) allowed.push_back(image(block[k]));
    auto f = factor_into(alpha, allowed);
    if (!f)
      throw InternalError(pair_name(std::min(i, j), std::max(i, j)) +
                          ": quotient has no factorization over the intermediate generators");
    Relation rel;
    rel.i = std::min(i, j);
    rel.j = std::max(i, j);
    rel.block = label;
    rel.used_search = f->used_search;
    rel.factorization = Exponents::Zero(gens.m());
    Exponents tail = unit(next).exponents();
    for (std::size_t k = p + 1; k < q; ++k) {
      const auto d = f->exponents(static_cast<Eigen::Index>(k - p - 1));
      rel.factorization(block[k] - 1) += d;
      tail(var(block[k])) += d;
    }
    rel.binomial = {unit(i) * unit(j), Monomial(std::move(tail))};
    return rel;
  }
};

}  // namespace

std::vector<Relation> build_relations_2d(const GeneratorSet& gens) {
  if (gens.is_3d()) throw StructuralError("build_relations_2d on a 3D generator set");
  Builder b(gens);
  const int m = gens.m();
  std::vector<int> block(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) block[static_cast<std::size_t>(k)] = k + 1;
  std::vector<Relation> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 2; j <= m; ++j)
      out.push_back(b.in_block(block, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), Block::Pure2D));
  return out;
}

int cyclic_distance(int i, int j, int m) {
  const int d = std::abs(i - j);
  return std::min(d, m - d);
}

std::vector<Relation> build_relations_3d(const GeneratorSet& gens) {
  if (!gens.is_3d()) throw StructuralError("build_relations_3d on a 2D generator set");
  Builder b(gens);
  const auto [r, s, t] = *gens.blocks();
  const int m = gens.m();
  // T1 = B_1..B_{r+1}, T2 = B_{r+1}..B_{r+s+1}, T3 = B_1, B_m, B_{m-1}, .., B_{r+s+1}.
  std::vector<int> t1, t2, t3{1};
  for (int k = 1; k <= r + 1; ++k) t1.push_back(k);
  for (int k = r + 1; k <= r + s + 1; ++k) t2.push_back(k);
  for (int k = m; k >= r + s + 1; --k) t3.push_back(k);
  const std::vector<std::pair<const std::vector<int>*, Block>> blocks{
      {&t1, Block::T1}, {&t2, Block::T2}, {&t3, Block::T3}};

  auto position = [](const std::vector<int>& block, int k) -> std::optional<std::size_t> {
    auto it = std::find(block.begin(), block.end(), k);
    if (it == block.end()) return std::nullopt;
    return static_cast<std::size_t>(it - block.begin());
  };

  const Monomial a_image = gens.ordered().front().image;
  std::vector<Relation> out;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      if (cyclic_distance(i, j, m) < 2) continue;
      bool done = false;
      for (const auto& [block, label] : blocks) {
        auto p = position(*block, i), q = position(*block, j);
        if (!p || !q) continue;
        if (*p > *q) std::swap(p, q);
        out.push_back(b.in_block(*block, *p, *q, label));
        done = true;
        break;
      }
      if (done) continue;

      // Cross-block: divide out the largest power of a = xyz, leaving a
      // monomial in at most two variables, and factor it within its block.
      const Monomial product = b.image(i) * b.image(j);
      const std::int64_t e = product.exponents().minCoeff();
      if (e < 1) throw InternalError(b.pair_name(i, j) + ": cross-block product not divisible by xyz");
      const Monomial rest = product / pow(a_image, e);
      const std::vector<int>* block = rest[2] == 0 ? &t1 : rest[0] == 0 ? &t2 : &t3;
      std::vector<Monomial> allowed;
      for (int k : *block) allowed.push_back(b.image(k));
      auto f = factor_into(rest, allowed);
      if (!f) throw InternalError(b.pair_name(i, j) + ": remainder has no factorization in its block");
      Relation rel;
      rel.i = i;
      rel.j = j;
      rel.block = Block::A;
      rel.a_power = e;
      rel.used_search = f->used_search;
      rel.factorization = Exponents::Zero(m);
      Exponents tail = Exponents::Zero(b.ring.variable_count());
      tail(0) = e;
      for (std::size_t k = 0; k < block->size(); ++k) {
        const auto d = f->exponents(static_cast<Eigen::Index>(k));
        rel.factorization((*block)[k] - 1) += d;
        tail(b.var((*block)[k])) += d;
      }
      rel.binomial = {b.unit(i) * b.unit(j), Monomial(std::move(tail))};
      out.push_back(std::move(rel));
    }
  }
  return out;
}

std::vector<Relation> build_relations(const GeneratorSet& gens) {
  return gens.is_3d() ? build_relations_3d(gens) : build_relations_2d(gens);
}

std::vector<Binomial> binomials(const std::vector<Relation>& relations) {
  std::vector<Binomial> out;
  out.reserve(relations.size());
  for (const auto& r : relations) out.push_back(r.binomial);
  return out;
}

std::string format_relation(const Relation& rel, const AmbientRing& ring) {
  std::string out = "R_{" + std::to_string(rel.i) + "," + std::to_string(rel.j) + "}=" +
                    rel.binomial.lead.to_string(ring.names(), "", true);
  if (rel.binomial.tail) out += "-" + rel.binomial.tail->to_string(ring.names(), "", true);
  return out;
}

RelationAudit audit_relations(const std::vector<Relation>& relations, const GeneratorSet& gens) {
  RelationAudit audit;
  const AmbientRing ring = gens.presentation_ring();
  const int m = gens.m();
  const int offset = gens.is_3d() ? 1 : 0;

  std::size_t expected = 0;
  std::set<std::pair<int, int>> expected_pairs;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      const bool wanted = gens.is_3d() ? cyclic_distance(i, j, m) >= 2 : j - i >= 2;
      if (wanted) expected_pairs.emplace(i, j);
    }
  }
  expected = expected_pairs.size();
  const std::size_t formula = gens.is_3d()
                                  ? static_cast<std::size_t>(m >= 3 ? m * (m - 3) / 2 : 0)
                                  : static_cast<std::size_t>(m >= 3 ? (m - 1) * (m - 2) / 2 : 0);
  audit.count_ok = relations.size() == expected && expected == formula;

  std::set<std::pair<int, int>> seen;
  for (const auto& rel : relations) {
    const auto& f = rel.binomial;
    if (!f.tail) {
      audit.exact = audit.tails_ordered = false;
      continue;
    }
    if (pi(f.lead, gens) != pi(*f.tail, gens) || ring.wdeg(f.lead) != ring.wdeg(*f.tail)) audit.exact = false;
    if (compare(f.lead, *f.tail, ring) != std::strong_ordering::greater || f.tail->polydeg() < 2)
      audit.tails_ordered = false;
    const Monomial want = Monomial::variable(ring.variable_count(), rel.i - 1 + offset) *
                          Monomial::variable(ring.variable_count(), rel.j - 1 + offset);
    if (f.lead != want || !expected_pairs.contains({rel.i, rel.j}) || !seen.emplace(rel.i, rel.j).second)
      audit.leads_quadratic = false;
  }
  if (seen != expected_pairs) audit.leads_quadratic = false;

  // distinct quadratic leads with tails of polynomial degree >= 2 generate minimally
  for (const auto& r : relations)
    for (const auto& q : relations)
      if (&q != &r && q.binomial.lead.divides(r.binomial.lead)) audit.minimal = false;
  return audit;
}

}  // namespace cycinv
