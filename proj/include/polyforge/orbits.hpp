#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "polyforge/detail/union_find.hpp"
#include "polyforge/face_lattice.hpp"
#include "polyforge/flag_graph.hpp"
#include "polyforge/symmetry.hpp"

namespace polyforge {

/// Disjoint classes of flags or of faces of one rank under a group action.
struct OrbitPartition {
  enum class Kind { Flags, Faces };

  Kind kind = Kind::Flags;
  int face_rank = 0;  // meaningful for Kind::Faces
  std::vector<std::vector<std::uint32_t>> classes;  // each sorted; ordered by least member

  std::size_t count() const { return classes.size(); }
};

/// Flag orbits. AutomorphismGroup carries the whole group, so the orbit of
/// an unvisited flag is simply its set of images; every flag is translated
/// exactly once, which keeps this linear in the number of flags.
inline OrbitPartition flag_orbits(const FaceLattice& L, const FlagGraph& fg,
                                  const AutomorphismGroup& G) {
  (void)L;
  OrbitPartition part;
  part.kind = OrbitPartition::Kind::Flags;
  const std::size_t f = fg.size();
  const std::size_t stride = static_cast<std::size_t>(fg.rank()) + 2;
  std::vector<std::uint8_t> visited(f, 0);
  std::vector<FaceId> image(stride);
  for (std::uint32_t t = 0; t < f; ++t) {
    if (visited[t]) continue;
    std::vector<std::uint32_t> orbit;
    for (const Automorphism& a : G.elements) {
      auto chain = fg.flag(t);
      for (std::size_t j = 0; j < stride; ++j) image[j] = a(chain[j]);
      std::uint32_t s = fg.find(image);
      if (!visited[s]) {
        visited[s] = 1;
        orbit.push_back(s);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    part.classes.push_back(std::move(orbit));
  }
  return part;
}

inline OrbitPartition flag_orbits(const FaceLattice& L, const AutomorphismGroup& G) {
  return flag_orbits(L, flag_graph(L), G);
}

/// Orbits of the rank-j faces. Indices in the partition are stratum-local
/// (0-based within rank j).
inline OrbitPartition face_orbits(const FaceLattice& L, const AutomorphismGroup& G, int j) {
  if (j < 0 || j > L.rank())
    throw Error(ErrorKind::BadParameter, "face rank outside 0..n");
  OrbitPartition part;
  part.kind = OrbitPartition::Kind::Faces;
  part.face_rank = j;
  const FaceId base = L.rank_begin(j);
  const std::size_t m = L.rank_size(j);
  std::vector<std::uint8_t> visited(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (visited[i]) continue;
    std::vector<std::uint32_t> orbit;
    for (const Automorphism& a : G.elements) {
      std::uint32_t s = a(base + i) - base;
      if (!visited[s]) {
        visited[s] = 1;
        orbit.push_back(s);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    part.classes.push_back(std::move(orbit));
  }
  return part;
}

}  // namespace polyforge
