#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "polyforge/face_lattice.hpp"
#include "polyforge/generators.hpp"
#include "polyforge/properties.hpp"
#include "polyforge/validation.hpp"
#include "polyforge/vertex_set_complex.hpp"

namespace polyforge {

namespace detail {

/// Stellar subdivision on the subset family: removes facet S, adds a new
/// vertex z and the faces R ∪ {z} for every proper subset R of S. The top
/// face absorbs z. Assumes a simplicial complex (every subset of a facet is
/// a face).
inline VertexSetComplex subdivide_vsc_facet(const VertexSetComplex& k, std::size_t facet_index) {
  const int m = k.rank();
  VertexSetComplex out = k;
  const std::uint32_t z = out.vertex_count++;

  auto& facets = out.faces_of_rank(m - 1);
  VertexSetComplex::FaceSet s = facets[facet_index];
  facets.erase(facets.begin() + static_cast<std::ptrdiff_t>(facet_index));

  const std::uint32_t sz = static_cast<std::uint32_t>(s.size());
  for (std::uint32_t mask = 0; mask < (1u << sz) - 1; ++mask) {
    VertexSetComplex::FaceSet r;
    for (std::uint32_t i = 0; i < sz; ++i)
      if (mask & (1u << i)) r.push_back(s[i]);
    r.push_back(z);
    out.faces_of_rank(static_cast<int>(std::popcount(mask))).push_back(std::move(r));
  }
  out.faces_of_rank(m).front().push_back(z);  // greatest face spans all vertices
  out.normalize();
  return out;
}

}  // namespace detail

/// Replaces one simplicial facet by the cone over its boundary from a fresh
/// central vertex z. Input must be vertex-describable and simplicial; the
/// output is validated. z is the vertex with the largest label.
inline FaceLattice stellar_subdivide_facet(const FaceLattice& L, FaceId facet) {
  const int n = L.rank();
  if (n < 1 || L.face_rank(facet) != n - 1)
    throw Error(ErrorKind::BadParameter, "facet id does not name a rank n-1 face");

  VertexSetComplex k;
  if (!is_vertex_describable(L, &k))
    throw Error(ErrorKind::NotVertexDescribable,
                "stellar subdivision needs faces determined by vertex sets");

  // simplicial check: every facet has n vertices and is a simplex section
  FaceLattice simplex_ref = simplex(n - 1);
  for (FaceId f = L.rank_begin(n - 1); f < L.rank_end(n - 1); ++f) {
    SectionView sec = facet_as_polytope(L, f);
    if (sec.lattice.rank_size(0) != static_cast<std::size_t>(n) ||
        !isomorphic(sec.lattice, simplex_ref))
      throw Error(ErrorKind::NotSimplicial, "facet " + std::to_string(f) + " is not a simplex");
  }

  // is_vertex_describable emits faces in lattice id order, so the facet's
  // index within its rank carries over to the subset family
  const std::size_t facet_index = facet - L.rank_begin(n - 1);
  VertexSetComplex sub = detail::subdivide_vsc_facet(k, facet_index);
  FaceLattice out = to_lattice(sub);
  ValidationReport rep = validate_polytope(out);
  if (!rep.ok())
    throw Error(ErrorKind::ValidationFailed,
                "subdivided complex is not a polytope: " +
                    (rep.failures.empty() ? std::string("unknown") : rep.failures.front()));
  return out;
}

/// The facet whose vertex-label set is lexicographically least; the
/// deterministic choice used by the symmetry-breaking pipeline.
inline FaceId lex_min_facet(const FaceLattice& L) {
  const int n = L.rank();
  FaceId best = kNoFace;
  std::vector<FaceId> best_key;
  for (FaceId f = L.rank_begin(n - 1); f < L.rank_end(n - 1); ++f) {
    std::vector<FaceId> key = L.vertices_below(f);
    if (best == kNoFace || key < best_key) {
      best = f;
      best_key = std::move(key);
    }
  }
  return best;
}

}  // namespace polyforge
