#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "polyforge/face_lattice.hpp"
#include "polyforge/flag_graph.hpp"
#include "polyforge/section.hpp"
#include "polyforge/symmetry.hpp"
#include "polyforge/vertex_set_complex.hpp"

namespace polyforge {

/// Face counts per rank, f_{-1}..f_n.
struct FVector {
  std::vector<std::uint64_t> counts;

  std::uint64_t at_rank(int r) const { return counts[static_cast<std::size_t>(r + 1)]; }
  bool operator==(const FVector&) const = default;
};

inline FVector f_vector(const FaceLattice& L) {
  FVector f;
  for (int r = -1; r <= L.rank(); ++r) f.counts.push_back(L.rank_size(r));
  return f;
}

/// Schläfli symbol {p_1,...,p_{n-1}}: present iff the size of the section
/// G_{j+1}/G_{j-2} is the same p_j over all flags.
struct SchlafliSymbol {
  bool present = false;
  std::vector<int> entries;

  bool operator==(const SchlafliSymbol&) const = default;
};

inline SchlafliSymbol schlafli(const FaceLattice& L, const FlagGraph& fg) {
  (void)L;
  SchlafliSymbol s;
  const int n = fg.rank();
  if (n < 2) {
    s.present = true;  // nothing to measure below rank 2
    return s;
  }
  s.entries.resize(static_cast<std::size_t>(n - 1));
  for (int j = 1; j < n; ++j) s.entries[static_cast<std::size_t>(j - 1)] = fg.polygon_size(0, j);
  for (std::size_t t = 1; t < fg.size(); ++t) {
    for (int j = 1; j < n; ++j) {
      if (fg.polygon_size(t, j) != s.entries[static_cast<std::size_t>(j - 1)]) {
        s.entries.clear();
        return s;  // not equivelar
      }
    }
  }
  s.present = true;
  return s;
}

inline SchlafliSymbol schlafli(const FaceLattice& L) { return schlafli(L, flag_graph(L)); }

/// Vertex-describability: the map face -> vertices-below is injective on
/// proper faces and an order embedding (V_F ⊆ V_G implies F <= G; the
/// converse always holds by transitivity). On success extracts the subset
/// family, in lattice id order, including both improper faces.
inline bool is_vertex_describable(const FaceLattice& L, VertexSetComplex* out = nullptr) {
  const int n = L.rank();
  const FaceId v_lo = L.rank_begin(0), v_hi = L.rank_end(0);
  const FaceId p_lo = L.rank_begin(0);  // first proper face
  const FaceId p_hi = L.rank_begin(n);  // one past the last proper face

  // injectivity via sorting the vertex-set keys of proper faces
  {
    std::vector<std::vector<FaceId>> keys;
    keys.reserve(p_hi - p_lo);
    for (FaceId f = p_lo; f < p_hi; ++f) keys.push_back(L.vertices_below(f));
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) return false;
  }

  // order embedding: V_F ⊆ V_G must force F <= G (proper faces)
  for (FaceId f = p_lo; f < p_hi; ++f) {
    for (FaceId g = p_lo; g < p_hi; ++g) {
      if (f == g) continue;
      if (L.downset(f).subset_in_range(L.downset(g), v_lo, v_hi) && !L.leq(f, g)) return false;
    }
  }

  if (out) {
    VertexSetComplex k;
    k.vertex_count = static_cast<std::uint32_t>(v_hi - v_lo);
    k.faces_by_rank.assign(static_cast<std::size_t>(n) + 2, {});
    for (FaceId f = 0; f < L.face_count(); ++f) {
      VertexSetComplex::FaceSet fs;
      L.downset(f).for_each_in_range(v_lo, v_hi, [&](std::size_t i) {
        fs.push_back(static_cast<std::uint32_t>(i - v_lo));
      });
      k.faces_of_rank(L.face_rank(f)).push_back(std::move(fs));
    }
    *out = std::move(k);
  }
  return true;
}

/// Witness for a failed meet/join uniqueness check.
struct MeetJoinWitness {
  FaceId a = 0, b = 0;
};

/// True iff every pair of faces has a unique meet and join. A bounded finite
/// poset with all meets automatically has all joins, so only meets are
/// checked. The meet of {a,b} exists iff the downset intersection
/// D = down(a) ∧ down(b) equals down(c) for its unique top element c.
inline bool is_lattice(const FaceLattice& L, MeetJoinWitness* witness = nullptr) {
  const std::size_t nf = L.face_count();
  std::vector<std::size_t> down_size(nf);
  for (FaceId f = 0; f < nf; ++f) down_size[f] = L.downset(f).count();

  for (FaceId a = 0; a < nf; ++a) {
    for (FaceId b = a + 1; b < nf; ++b) {
      if (L.leq(a, b) || L.leq(b, a)) continue;  // meet is the lower face
      const detail::Bits& da = L.downset(a);
      const detail::Bits& db = L.downset(b);
      const int top_rank = std::min(L.face_rank(a), L.face_rank(b)) - 1;
      bool decided = false;
      for (int r = top_rank; r >= -1 && !decided; --r) {
        const std::size_t cnt =
            detail::Bits::count_and_range(da, db, L.rank_begin(r), L.rank_end(r));
        if (cnt == 0) continue;
        decided = true;
        if (cnt > 1) {
          if (witness) *witness = {a, b};
          return false;
        }
        FaceId c = kNoFace;
        detail::Bits::for_each_and_range(da, db, L.rank_begin(r), L.rank_end(r),
                                         [&](std::size_t i) { c = static_cast<FaceId>(i); });
        // unique meet iff the intersection is exactly down(c)
        std::size_t inter = 0;
        for (int q = r; q >= -1; --q)
          inter += detail::Bits::count_and_range(da, db, L.rank_begin(q), L.rank_end(q));
        if (inter != down_size[c]) {
          if (witness) *witness = {a, b};
          return false;
        }
      }
    }
  }
  return true;
}

/// True iff all facets are mutually isomorphic (checked against the first).
inline bool is_equifacetted(const FaceLattice& L) {
  const int n = L.rank();
  if (n < 1) return true;
  const FaceId lo = L.rank_begin(n - 1), hi = L.rank_end(n - 1);
  if (hi - lo <= 1) return true;
  SectionView ref = facet_as_polytope(L, lo);
  for (FaceId f = lo + 1; f < hi; ++f) {
    SectionView cur = facet_as_polytope(L, f);
    if (!isomorphic(ref.lattice, cur.lattice)) return false;
  }
  return true;
}

}  // namespace polyforge
