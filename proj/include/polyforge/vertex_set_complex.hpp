#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "polyforge/face_lattice.hpp"

namespace polyforge {

/// A vertex-describable polytope stored as its family of vertex subsets:
/// faces_by_rank[r+1] lists the faces of rank r (r = -1..rank()) as sorted
/// vectors of vertex indices 0..vertex_count-1. Rank -1 holds the empty set,
/// rank 0 the singletons, rank() the full vertex set.
struct VertexSetComplex {
  using FaceSet = std::vector<std::uint32_t>;

  std::uint32_t vertex_count = 0;
  std::vector<std::vector<FaceSet>> faces_by_rank;

  int rank() const { return static_cast<int>(faces_by_rank.size()) - 2; }

  const std::vector<FaceSet>& faces_of_rank(int r) const {
    return faces_by_rank[static_cast<std::size_t>(r + 1)];
  }
  std::vector<FaceSet>& faces_of_rank(int r) {
    return faces_by_rank[static_cast<std::size_t>(r + 1)];
  }

  std::size_t face_count() const {
    std::size_t c = 0;
    for (const auto& fr : faces_by_rank) c += fr.size();
    return c;
  }

  /// Sorts faces within each rank (lexicographically); the canonical form
  /// used by generators and fixtures.
  void normalize() {
    for (auto& fr : faces_by_rank) std::sort(fr.begin(), fr.end());
  }
};

/// Skeleton of a complex: ∅ at rank -1, singletons at rank 0, full set at
/// the top; middle ranks start empty.
inline VertexSetComplex make_vsc_skeleton(std::uint32_t vertices, int rank) {
  VertexSetComplex k;
  k.vertex_count = vertices;
  k.faces_by_rank.assign(static_cast<std::size_t>(rank) + 2, {});
  k.faces_of_rank(-1).push_back({});
  for (std::uint32_t v = 0; v < vertices; ++v) k.faces_of_rank(0).push_back({v});
  VertexSetComplex::FaceSet all(vertices);
  for (std::uint32_t v = 0; v < vertices; ++v) all[v] = v;
  k.faces_of_rank(rank).push_back(std::move(all));
  return k;
}

/// Rebuilds the face lattice from the subset family: covers are exactly the
/// consecutive-rank inclusions (this is the defining property of a
/// vertex-describable polytope). Canonical ids follow the complex's own
/// face order, so face k of the flattened complex becomes lattice id k.
inline FaceLattice to_lattice(const VertexSetComplex& k) {
  LatticeInput in;
  in.rank = k.rank();
  std::int64_t next = 0;
  std::vector<std::int64_t> first_of_rank;  // flattened id of the first face per rank
  for (int r = -1; r <= k.rank(); ++r) {
    first_of_rank.push_back(next);
    for (const auto& fs : k.faces_of_rank(r)) {
      in.faces.emplace_back(next, r);
      std::vector<VertexLabel> labels(fs.begin(), fs.end());
      in.vertex_labels.emplace_back(next, std::move(labels));
      ++next;
    }
  }

  for (int r = -1; r < k.rank(); ++r) {
    const auto& lower = k.faces_of_rank(r);
    const auto& upper = k.faces_of_rank(r + 1);
    // candidates via vertex -> upper-face index, to avoid the full product
    std::vector<std::vector<std::uint32_t>> by_vertex(k.vertex_count);
    for (std::uint32_t u = 0; u < upper.size(); ++u)
      for (std::uint32_t v : upper[u]) by_vertex[v].push_back(u);
    for (std::uint32_t l = 0; l < lower.size(); ++l) {
      const auto& a = lower[l];
      std::int64_t lid = first_of_rank[static_cast<std::size_t>(r + 1)] + l;
      if (a.empty()) {
        for (std::uint32_t u = 0; u < upper.size(); ++u)
          in.covers.emplace_back(lid, first_of_rank[static_cast<std::size_t>(r + 2)] + u);
        continue;
      }
      for (std::uint32_t u : by_vertex[a[0]]) {
        if (std::includes(upper[u].begin(), upper[u].end(), a.begin(), a.end()))
          in.covers.emplace_back(lid, first_of_rank[static_cast<std::size_t>(r + 2)] + u);
      }
    }
  }
  return build_lattice(in);
}

}  // namespace polyforge
