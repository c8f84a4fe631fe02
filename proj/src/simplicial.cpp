#include "cycinv/simplicial.hpp"

#include <algorithm>
#include <set>

#include "cycinv/errors.hpp"

namespace cycinv {

FieldCharacteristic FieldCharacteristic::make(std::int64_t p) {
  if (p == 0) return {0};
  if (p < 2 || p >= (std::int64_t{1} << 31))
    throw ValidationError("field characteristic must be 0 or a prime below 2^31, got " + std::to_string(p));
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
  return {p};
}

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Face> facets) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw ValidationError("negative vertex count");
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
      if (v < 0 || v >= vertex_count) throw ValidationError("facet vertex out of range");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (const auto& f : facets) {
    if (f.empty()) continue;
    const bool contained = std::any_of(facets.begin(), facets.end(), [&f](const Face& g) {
      return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
    });
    if (!contained) facets_.push_back(f);
  }
  std::vector<bool> covered(static_cast<std::size_t>(vertex_count), false);
  for (const auto& f : facets_)
    for (int v : f) covered[static_cast<std::size_t>(v)] = true;
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    throw ValidationError("every vertex must lie in some facet");
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

std::vector<Face> SimplicialComplex::faces(int dim) const {
  if (dim < -1) return {};
  if (dim == -1) return {Face{}};
  const auto k = static_cast<std::size_t>(dim + 1);
  std::set<Face> out;
  for (const auto& f : facets_) {
    if (f.size() < k) continue;
    // k-subsets of the facet via a selection mask.
    std::vector<bool> pick(f.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      Face face;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (pick[i]) face.push_back(f[i]);
      out.insert(std::move(face));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {out.begin(), out.end()};
}

namespace {

void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<Face>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = -1;
  std::size_t best = 0;
  for (const auto& set : {p, x}) {
    for (int u : set) {
      std::size_t cnt = 0;
      for (int v : p) cnt += g.adjacent(u, v) ? 1 : 0;
      if (pivot < 0 || cnt > best) {
        pivot = u;
        best = cnt;
      }
    }
  }
  const std::vector<int> candidates = [&] {
    std::vector<int> c;
    for (int v : p)
      if (!g.adjacent(pivot, v)) c.push_back(v);
    return c;
  }();
  for (int v : candidates) {
    std::vector<int> np, nx;
    for (int u : p)
      if (g.adjacent(u, v)) np.push_back(u);
    for (int u : x)
      if (g.adjacent(u, v)) nx.push_back(u);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

SimplicialComplex clique_complex(const Graph& g) {
  std::vector<Face> facets;
  std::vector<int> r, p(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) p[static_cast<std::size_t>(v)] = v;
  if (!p.empty()) bron_kerbosch(g, r, p, {}, facets);
  return SimplicialComplex(g.vertex_count(), std::move(facets));
}

IntMatrix boundary_matrix(const std::vector<Face>& faces, const std::vector<Face>& lower) {
  IntMatrix d = IntMatrix::Zero(static_cast<Eigen::Index>(lower.size()), static_cast<Eigen::Index>(faces.size()));
  for (std::size_t c = 0; c < faces.size(); ++c) {
    const Face& f = faces[c];
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Face sub;
      sub.reserve(f.size() - 1);
      for (std::size_t k = 0; k < f.size(); ++k)
        if (k != drop) sub.push_back(f[k]);
      auto it = std::lower_bound(lower.begin(), lower.end(), sub);
      if (it == lower.end() || *it != sub) throw InternalError("boundary face missing from the complex");
      d(it - lower.begin(), static_cast<Eigen::Index>(c)) = (drop % 2 == 0) ? 1 : -1;
    }
  }
  return d;
}

std::vector<std::int64_t> reduced_homology_dims(const SimplicialComplex& complex, FieldCharacteristic field) {
  field = FieldCharacteristic::make(field.p);
  const int top = complex.dimension();
  // faces[k + 1] holds the k-faces, k = -1..top.
  std::vector<std::vector<Face>> faces;
  for (int k = -1; k <= top; ++k) faces.push_back(complex.faces(k));
  // rank[k + 1] = rank of the boundary from k-faces to (k-1)-faces; zero for k = -1.
  std::vector<std::int64_t> rank(faces.size() + 1, 0);
  for (int k = 0; k <= top; ++k) {
    const auto idx = static_cast<std::size_t>(k + 1);
    rank[idx] = exact_rank(boundary_matrix(faces[idx], faces[idx - 1]), field);
  }
  std::vector<std::int64_t> dims;
  for (int k = -1; k <= top; ++k) {
    const auto idx = static_cast<std::size_t>(k + 1);
    const auto chains = static_cast<std::int64_t>(faces[idx].size());
    dims.push_back(chains - rank[idx] - rank[idx + 1]);
  }
  return dims;
}

}  // namespace cycinv
