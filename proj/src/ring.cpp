#include "cycinv/ring.hpp"

#include "cycinv/errors.hpp"

namespace cycinv {

AmbientRing::AmbientRing(Grading grading, OrderSpec order, std::vector<std::string> names)
    : grading_(std::move(grading)), order_(order), names_(std::move(names)) {
  if (grading_.size() == 0) throw ValidationError("ring needs at least one variable");
  if ((grading_.array() <= 0).any()) throw ValidationError("grading entries must be positive");
  const auto n = static_cast<int>(grading_.size());
  if (const auto* o3 = std::get_if<Order3D>(&order_)) {
    if (o3->r < 1 || o3->s < 1 || o3->t < 1)
      throw ValidationError("Order3D block sizes must be positive");
    if (n != 1 + o3->m())
      throw ValidationError("Order3D(r,s,t) requires 1 + r + s + t variables");
    // B_1..B_{r+s}, then B_m down to B_{r+s+1}; variable k is B_k.
    for (int k = 1; k <= o3->r + o3->s; ++k) sequence_.push_back(k);
    for (int k = o3->m(); k > o3->r + o3->s; --k) sequence_.push_back(k);
  } else {
    for (int k = 0; k < n; ++k) sequence_.push_back(k);
  }
  if (names_.empty()) {
    for (int k = 0; k < n; ++k) names_.push_back("v" + std::to_string(k));
  } else if (static_cast<int>(names_.size()) != n) {
    throw ValidationError("variable name count does not match the ring");
  }
}

std::int64_t AmbientRing::wdeg(const Monomial& m) const {
  check(m);
  return m.wdeg(grading_);
}

void AmbientRing::check(const Monomial& m) const {
  if (m.size() != grading_.size())
    throw StructuralError("monomial has " + std::to_string(m.size()) + " variables, ring has " +
                          std::to_string(grading_.size()));
}

namespace {

std::strong_ordering tie_break(const Monomial& a, const Monomial& b, const std::vector<int>& seq) {
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (a[*it] != b[*it]) return a[*it] <=> b[*it];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare_2d(const Monomial& a, const Monomial& b, const AmbientRing& ring) {
  if (ring.is_3d()) throw StructuralError("compare_2d on a ring with a 3D order");
  ring.check(a);
  ring.check(b);
  if (auto c = a.wdeg(ring.grading()) <=> b.wdeg(ring.grading()); c != 0) return c;
  return tie_break(a, b, ring.tie_break_sequence());
}

std::strong_ordering compare_3d(const Monomial& a, const Monomial& b, const AmbientRing& ring) {
  if (!ring.is_3d()) throw StructuralError("compare_3d on a ring with a 2D order");
  ring.check(a);
  ring.check(b);
  if (auto c = a.wdeg(ring.grading()) <=> b.wdeg(ring.grading()); c != 0) return c;
  // More A is smaller.
  if (auto c = b[0] <=> a[0]; c != 0) return c;
  return tie_break(a, b, ring.tie_break_sequence());
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, const AmbientRing& ring) {
  return ring.is_3d() ? compare_3d(a, b, ring) : compare_2d(a, b, ring);
}

}  // namespace cycinv
