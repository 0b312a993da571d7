#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "polyforge/face_lattice.hpp"

namespace polyforge {

/// A section G/F remapped to a standalone lattice of rank
/// rank(G) - rank(F) - 1, with a translation table back to the parent.
struct SectionView {
  FaceLattice lattice;
  FaceId bottom = 0, top = 0;        // parent ids
  std::vector<FaceId> to_parent;     // section id -> parent id

  FaceId parent_of(FaceId sec_id) const { return to_parent[sec_id]; }
};

inline SectionView section(const FaceLattice& L, FaceId bottom, FaceId top) {
  if (!L.leq(bottom, top))
    throw Error(ErrorKind::NotComparable,
                std::to_string(bottom) + " is not below " + std::to_string(top));
  SectionView view;
  view.bottom = bottom;
  view.top = top;

  const int shift = L.face_rank(bottom) + 1;
  std::vector<FaceId> between = L.faces_between(bottom, top);  // sorted, so canonical order

  LatticeInput in;
  in.rank = L.face_rank(top) - shift;
  in.faces.reserve(between.size());
  for (FaceId f : between)
    in.faces.emplace_back(static_cast<std::int64_t>(f), L.face_rank(f) - shift);
  if (between.size() > 1) {
    const detail::Bits& down_top = L.downset(top);
    const detail::Bits& up_bot = L.upset(bottom);
    for (FaceId f : between) {
      for (FaceId g : L.upper_covers(f)) {
        if (g <= top && down_top.test(g) && up_bot.test(g))
          in.covers.emplace_back(static_cast<std::int64_t>(f), static_cast<std::int64_t>(g));
      }
    }
  }

  std::unordered_map<std::int64_t, FaceId> id_map;
  view.lattice = build_lattice(in, &id_map);
  view.to_parent.resize(between.size());
  for (const auto& [ext, id] : id_map) view.to_parent[id] = static_cast<FaceId>(ext);
  return view;
}

/// Section F_n / v at a vertex.
inline SectionView vertex_figure(const FaceLattice& L, FaceId vertex) {
  if (L.face_rank(vertex) != 0)
    throw Error(ErrorKind::BadParameter, "vertex_figure needs a rank-0 face");
  return section(L, vertex, L.greatest_face());
}

/// Section f / F_{-1} at a facet, i.e. the facet as a polytope.
inline SectionView facet_as_polytope(const FaceLattice& L, FaceId facet) {
  if (L.face_rank(facet) != L.rank() - 1)
    throw Error(ErrorKind::BadParameter, "facet_as_polytope needs a rank n-1 face");
  return section(L, L.least_face(), facet);
}

}  // namespace polyforge
