#pragma once

#include <cstdint>
#include <vector>

#include "cycinv/generators.hpp"
#include "cycinv/relations.hpp"

namespace cycinv {

/// Coefficients c_0..c_D of a power series truncated after degree D.
using Series = std::vector<std::int64_t>;

/// Number of invariant monomials of F[W] in each total degree 0..max_degree,
/// by direct enumeration.
Series count_invariant_monomials(const WeightSystem& ws, int max_degree);

/// Number of monomials of S of each weighted degree 0..max_degree that are
/// divisible by no relation lead. Requires square-free quadratic leads.
Series count_standard_monomials(const std::vector<Relation>& relations, const GeneratorSet& gens,
                                int max_degree);

/// Truncated product.
Series multiply(const Series& a, const Series& b);

/// prod over generators g (including a in 3D) of (1 - t^deg g), truncated.
Series generator_denominator(const GeneratorSet& gens, int max_degree);

}  // namespace cycinv
