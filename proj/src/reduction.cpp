#include "cycinv/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "cycinv/errors.hpp"

namespace cycinv {

void check_binomial(const Binomial& f, const AmbientRing& ring) {
  ring.check(f.lead);
  if (!f.tail) return;
  ring.check(*f.tail);
  if (compare(f.lead, *f.tail, ring) != std::strong_ordering::greater)
    throw StructuralError("binomial lead " + ring.format(f.lead) + " does not exceed tail " +
                          ring.format(*f.tail));
}

Polynomial::Polynomial(std::vector<Term> terms, const AmbientRing& ring) {
  for (const auto& t : terms) ring.check(t.monomial);
  std::sort(terms.begin(), terms.end(), [&ring](const Term& a, const Term& b) {
    return compare(a.monomial, b.monomial, ring) == std::strong_ordering::greater;
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coefficient = checked_add(terms_.back().coefficient, t.coefficient);
      if (terms_.back().coefficient == 0) terms_.pop_back();
    } else if (t.coefficient != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::from(const Binomial& f, const AmbientRing& ring) {
  std::vector<Term> terms{{1, f.lead}};
  if (f.tail) terms.push_back({-1, *f.tail});
  return Polynomial(std::move(terms), ring);
}

std::string Polynomial::to_string(const AmbientRing& ring) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    auto c = terms_[k].coefficient;
    if (k == 0) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (c != 1 && c != -1) os << (c < 0 ? -c : c) << '*';
    os << ring.format(terms_[k].monomial);
  }
  return os.str();
}

Reducer::Reducer(std::span<const Binomial> basis, const AmbientRing& ring)
    : basis_(basis), ring_(&ring), n_(ring.variable_count()) {
  pair_table_.assign(static_cast<std::size_t>(n_ * n_), -1);
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    check_binomial(basis_[b], ring);
    const auto& lead = basis_[b].lead;
    if (lead.polydeg() == 2 && lead.support_size() == 2) {
      Eigen::Index u = -1, v = -1;
      for (Eigen::Index k = 0; k < n_; ++k) {
        if (lead[k] == 0) continue;
        (u < 0 ? u : v) = k;
      }
      auto& slot = pair_table_[static_cast<std::size_t>(u * n_ + v)];
      if (slot < 0) slot = static_cast<std::int32_t>(b);
    } else {
      general_.push_back(b);
    }
  }
}

std::optional<std::size_t> Reducer::find_divisor(const Monomial& m) const {
  ring_->check(m);
  std::optional<std::size_t> best;
  std::vector<Eigen::Index> support;
  for (Eigen::Index k = 0; k < n_; ++k)
    if (m[k] != 0) support.push_back(k);
  for (std::size_t a = 0; a < support.size(); ++a) {
    for (std::size_t b = a + 1; b < support.size(); ++b) {
      auto slot = pair_table_[static_cast<std::size_t>(support[a] * n_ + support[b])];
      if (slot >= 0 && (!best || static_cast<std::size_t>(slot) < *best)) best = slot;
    }
  }
  for (auto g : general_) {
    if (best && g > *best) break;
    if (basis_[g].lead.divides(m)) {
      best = g;
      break;
    }
  }
  return best;
}

Polynomial Reducer::normal_form(Polynomial f) const {
  for (;;) {
    bool rewrote = false;
    std::vector<Term> terms = f.terms();
    for (auto& term : terms) {
      auto d = find_divisor(term.monomial);
      if (!d) continue;
      const auto& g = basis_[*d];
      if (g.tail) {
        term.monomial = (term.monomial / g.lead) * *g.tail;
      } else {
        term.coefficient = 0;
      }
      rewrote = true;
      break;
    }
    if (!rewrote) return f;
    f = Polynomial(std::move(terms), *ring_);
  }
}

Polynomial normal_form(const Binomial& f, std::span<const Binomial> basis, const AmbientRing& ring) {
  Reducer reducer(basis, ring);
  return reducer.normal_form(Polynomial::from(f, ring));
}

Polynomial s_polynomial(const Binomial& f, const Binomial& g, const AmbientRing& ring) {
  const Monomial l = lcm(f.lead, g.lead);
  const Monomial mf = l / f.lead;
  const Monomial mg = l / g.lead;
  // mf*(lead_f - tail_f) - mg*(lead_g - tail_g): the lcm terms cancel.
  std::vector<Term> terms;
  if (f.tail) terms.push_back({-1, mf * *f.tail});
  if (g.tail) terms.push_back({1, mg * *g.tail});
  return Polynomial(std::move(terms), ring);
}

SPairOutcome s_pair_reduces(const Binomial& f, const Binomial& g, const Reducer& reducer,
                            bool use_coprime_criterion) {
  if (use_coprime_criterion && f.lead.coprime(g.lead)) return {true, true};
  auto nf = reducer.normal_form(s_polynomial(f, g, reducer.ring()));
  return {nf.is_zero(), false};
}

GroebnerReport groebner_verify(std::span<const Binomial> basis, const AmbientRing& ring,
                               bool use_coprime_criterion) {
  GroebnerReport report;
  Reducer reducer(basis, ring);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      auto outcome = s_pair_reduces(basis[a], basis[b], reducer, use_coprime_criterion);
      if (outcome.skipped_coprime) {
        ++report.pairs_skipped_coprime;
        continue;
      }
      ++report.pairs_checked;
      if (!outcome.reduces_to_zero) {
        report.pass = false;
        if (report.failures.size() < 8) report.failures.emplace_back(a, b);
      }
    }
  }
  return report;
}

}  // namespace cycinv
