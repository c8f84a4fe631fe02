#include "cycinv/monomial.hpp"

#include <sstream>

#include "cycinv/errors.hpp"

namespace cycinv {

namespace {

void require_same_size(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    throw StructuralError("monomials over " + std::to_string(a.size()) + " and " +
                          std::to_string(b.size()) + " variables");
}

void check_range(const Exponents& e) {
  for (Eigen::Index k = 0; k < e.size(); ++k) {
    if (e(k) < 0) throw StructuralError("negative exponent");
    if (e(k) > Monomial::kMaxExponent) throw std::overflow_error("exponent out of range");
  }
}

}  // namespace

Monomial::Monomial(Exponents e) : e_(std::move(e)) { check_range(e_); }

Monomial::Monomial(std::initializer_list<std::int64_t> e) : e_(static_cast<Eigen::Index>(e.size())) {
  Eigen::Index k = 0;
  for (auto v : e) e_(k++) = v;
  check_range(e_);
}

Monomial Monomial::variable(Eigen::Index variables, Eigen::Index k, std::int64_t power) {
  Exponents e = Exponents::Zero(variables);
  e(k) = power;
  return Monomial(std::move(e));
}

std::int64_t Monomial::wdeg(const Grading& grading) const {
  if (grading.size() != e_.size()) throw StructuralError("grading length does not match monomial");
  std::int64_t acc = 0;
  for (Eigen::Index k = 0; k < e_.size(); ++k) acc = checked_add(acc, checked_mul(e_(k), grading(k)));
  return acc;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_size(*this, other);
  return (e_.array() <= other.e_.array()).all();
}

bool Monomial::coprime(const Monomial& other) const {
  require_same_size(*this, other);
  return ((e_.array() == 0) || (other.e_.array() == 0)).all();
}

std::string Monomial::to_string(const std::vector<std::string>& names, const std::string& separator,
                                bool latex) const {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index k = 0; k < e_.size(); ++k) {
    if (e_(k) == 0) continue;
    if (!first) os << separator;
    first = false;
    os << (k < static_cast<Eigen::Index>(names.size()) ? names[k] : "v" + std::to_string(k));
    if (e_(k) > 1) {
      if (latex && e_(k) > 9) os << "^{" << e_(k) << '}';
      else os << '^' << e_(k);
    }
  }
  if (first) os << '1';
  return os.str();
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  return Monomial(Exponents(a.exponents() + b.exponents()));
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw StructuralError("monomial quotient is not exact");
  return Monomial(Exponents(a.exponents() - b.exponents()));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  return Monomial(Exponents(a.exponents().cwiseMax(b.exponents())));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  return Monomial(Exponents(a.exponents().cwiseMin(b.exponents())));
}

Monomial pow(const Monomial& a, std::int64_t k) {
  if (k < 0) throw StructuralError("negative power of a monomial");
  Exponents e = a.exponents();
  for (Eigen::Index v = 0; v < e.size(); ++v) e(v) = checked_mul(e(v), k);
  return Monomial(std::move(e));
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return a[k] <=> b[k];
  }
  return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = static_cast<std::size_t>(m.size());
  for (Eigen::Index k = 0; k < m.size(); ++k)
    h ^= std::hash<std::int64_t>{}(m[k]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace cycinv
