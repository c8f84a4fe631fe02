#pragma once

#include <cstdint>
#include <vector>

#include "cycinv/exact_rank.hpp"
#include "cycinv/graph.hpp"

namespace cycinv {

using Face = std::vector<int>;  // sorted vertex indices

/// A simplicial complex on vertices 0..n-1 stored by its facets. Every vertex
/// lies in some facet; an isolated vertex is a singleton facet. The complex
/// on zero vertices is {empty face}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Normalises: sorts each facet, drops non-maximal and duplicate facets.
  /// Throws ValidationError if a vertex is uncovered or out of range.
  SimplicialComplex(int vertex_count, std::vector<Face> facets);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Face>& facets() const { return facets_; }
  /// -1 for the empty complex.
  int dimension() const;

  /// All faces of the given dimension (dim >= -1), sorted lexicographically.
  std::vector<Face> faces(int dim) const;

 private:
  int vertex_count_ = 0;
  std::vector<Face> facets_;
};

/// Facets are the maximal cliques (Bron-Kerbosch with pivoting).
SimplicialComplex clique_complex(const Graph& g);

/// Boundary map from dim-faces to (dim-1)-faces; dim 0 maps onto the single
/// empty face (augmentation).
IntMatrix boundary_matrix(const std::vector<Face>& faces, const std::vector<Face>& lower);

/// dim H~_k for k = -1..dim, index 0 holding k = -1.
std::vector<std::int64_t> reduced_homology_dims(const SimplicialComplex& complex,
                                                FieldCharacteristic field = {});

}  // namespace cycinv
