#pragma once

#include <vector>

#include "polyforge/face_lattice.hpp"
#include "polyforge/validation.hpp"
#include "polyforge/vertex_set_complex.hpp"

namespace polyforge {

/// Order complex of a rank-n polytope: vertices are the proper faces, the
/// k-simplices are the chains of k+1 proper faces, augmented with a least
/// and a greatest face so the result is again a rank-n lattice. The output
/// is vertex-describable by construction (faces are chains as vertex sets)
/// and is validated before being returned; the vertex labels are the parent
/// face ids.
inline FaceLattice order_complex(const FaceLattice& L) {
  const int n = L.rank();
  if (n < 1) throw Error(ErrorKind::BadParameter, "order_complex needs rank >= 1");
  const FaceId p_lo = L.rank_begin(0);
  const FaceId p_hi = L.rank_begin(n);
  const std::uint32_t nv = p_hi - p_lo;

  VertexSetComplex k;
  k.vertex_count = nv;
  k.faces_by_rank.assign(static_cast<std::size_t>(n) + 2, {});
  k.faces_of_rank(-1).push_back({});
  {
    VertexSetComplex::FaceSet all(nv);
    for (std::uint32_t i = 0; i < nv; ++i) all[i] = i;
    k.faces_of_rank(n).push_back(std::move(all));
  }

  // chains of proper faces, by ascending id (= ascending rank), via DFS;
  // a chain extends by any proper face strictly above its last element
  std::vector<std::vector<FaceId>> above(nv);
  for (FaceId f = p_lo; f < p_hi; ++f)
    L.upset(f).for_each_in_range(f + 1, p_hi, [&](std::size_t i) {
      above[f - p_lo].push_back(static_cast<FaceId>(i - p_lo));
    });

  std::vector<std::uint32_t> chain;
  auto emit = [&]() {
    k.faces_of_rank(static_cast<int>(chain.size()) - 1)
        .push_back(VertexSetComplex::FaceSet(chain));
  };
  struct Frame {
    const std::vector<FaceId>* ups;
    std::size_t next = 0;
  };
  std::vector<Frame> frames;
  for (std::uint32_t start = 0; start < nv; ++start) {
    chain.assign(1, start);
    emit();
    frames.clear();
    frames.push_back({&above[start], 0});
    while (!frames.empty()) {
      Frame& fr = frames.back();
      if (fr.next < fr.ups->size()) {
        FaceId g = (*fr.ups)[fr.next++];
        chain.push_back(g);
        emit();
        frames.push_back({&above[g], 0});
      } else {
        frames.pop_back();
        chain.pop_back();
      }
    }
  }

  FaceLattice out = to_lattice(k);
  ValidationReport rep = validate_polytope(out);
  if (!rep.ok())
    throw Error(ErrorKind::ValidationFailed,
                "order complex is not a polytope: " +
                    (rep.failures.empty() ? std::string("unknown") : rep.failures.front()));
  return out;
}

}  // namespace polyforge
