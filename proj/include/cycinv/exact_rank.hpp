#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "cycinv/errors.hpp"

namespace cycinv {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = DenseMatrix<std::int64_t>;

namespace detail {

// (a*d - b*c) / divisor, exact by Sylvester's identity.
inline std::int64_t bareiss_update(std::int64_t a, std::int64_t d, std::int64_t b, std::int64_t c,
                                   std::int64_t divisor) {
  __int128 num = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
  __int128 q = num / divisor;
  if (q > std::numeric_limits<std::int64_t>::max() || q < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("Bareiss elimination exceeded 64-bit range");
  return static_cast<std::int64_t>(q);
}

template <typename Scalar>
Scalar bareiss_update(const Scalar& a, const Scalar& d, const Scalar& b, const Scalar& c,
                      const Scalar& divisor) {
  return (a * d - b * c) / divisor;
}

inline std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // p prime: a^(p-2)
  std::int64_t result = 1, base = mod_reduce(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) result = static_cast<std::int64_t>(static_cast<__int128>(result) * base % p);
    base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % p);
    e >>= 1;
  }
  return result;
}

}  // namespace detail

/// Rank over Q by fraction-free (Bareiss) elimination. Works for any exact
/// integral Scalar; the int64 path throws std::overflow_error rather than wrap.
template <typename Scalar>
Eigen::Index bareiss_rank(DenseMatrix<Scalar> a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Scalar prev(1);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (a(r, col) != Scalar(0)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) a.row(pivot).swap(a.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      for (Eigen::Index c = col + 1; c < cols; ++c)
        a(r, c) = detail::bareiss_update(a(r, c), a(rank, col), a(r, col), a(rank, c), prev);
      a(r, col) = Scalar(0);
    }
    prev = a(rank, col);
    ++rank;
  }
  return rank;
}

/// Rank over F_p (p prime) by ordinary Gaussian elimination.
inline Eigen::Index mod_p_rank(IntMatrix a, std::int64_t p) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  a = a.unaryExpr([p](std::int64_t v) { return detail::mod_reduce(v, p); });
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) a.row(pivot).swap(a.row(rank));
    const std::int64_t inv = detail::mod_inverse(a(rank, col), p);
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (a(r, col) == 0) continue;
      const std::int64_t factor = static_cast<std::int64_t>(static_cast<__int128>(a(r, col)) * inv % p);
      for (Eigen::Index c = col; c < cols; ++c) {
        const std::int64_t sub = static_cast<std::int64_t>(static_cast<__int128>(factor) * a(rank, c) % p);
        a(r, c) = detail::mod_reduce(a(r, c) - sub, p);
      }
    }
    ++rank;
  }
  return rank;
}

/// Characteristic of the coefficient field for homology: 0 means Q.
struct FieldCharacteristic {
  std::int64_t p = 0;

  /// Throws ValidationError unless p == 0 or p is a prime below 2^31.
  static FieldCharacteristic make(std::int64_t p);
  static FieldCharacteristic rationals() { return {0}; }

  friend bool operator==(const FieldCharacteristic&, const FieldCharacteristic&) = default;
};

inline Eigen::Index exact_rank(const IntMatrix& a, FieldCharacteristic field) {
  if (a.size() == 0) return 0;
  return field.p == 0 ? bareiss_rank<std::int64_t>(a) : mod_p_rank(a, field.p);
}

}  // namespace cycinv
