#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "polyforge/face_lattice.hpp"
#include "polyforge/flag_graph.hpp"
#include "polyforge/section.hpp"

namespace polyforge {

/// A rank- and incidence-preserving bijection of faces. Fixes the bounds.
struct Automorphism {
  std::vector<FaceId> face_perm;

  FaceId operator()(FaceId f) const { return face_perm[f]; }
  bool is_identity() const {
    for (std::size_t i = 0; i < face_perm.size(); ++i)
      if (face_perm[i] != i) return false;
    return true;
  }
  bool operator==(const Automorphism& o) const { return face_perm == o.face_perm; }
};

/// apply b, then a
inline Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism c;
  c.face_perm.resize(b.face_perm.size());
  for (std::size_t i = 0; i < b.face_perm.size(); ++i)
    c.face_perm[i] = a.face_perm[b.face_perm[i]];
  return c;
}

/// The full automorphism group, enumerated element by element (desk scale:
/// the order divides the flag count). elements[0] is the identity.
struct AutomorphismGroup {
  std::vector<Automorphism> elements;
  std::vector<std::size_t> generators;  // indices into elements

  std::uint64_t order() const { return elements.size(); }
  const Automorphism& identity() const { return elements.front(); }
};

namespace detail {

struct PermHash {
  std::size_t operator()(const std::vector<FaceId>& p) const {
    std::uint64_t h = 1469598103934665603ull;
    for (FaceId x : p) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// p-vector (p_1..p_{n-1}) of every flag, interned to class ids that are
// shared between the graphs of `graphs` so classes are comparable.
inline std::vector<std::vector<std::int32_t>> flag_invariant_classes(
    std::vector<const FlagGraph*> graphs) {
  std::map<std::vector<int>, std::int32_t> interned;
  std::vector<std::vector<std::int32_t>> out;
  for (const FlagGraph* fg : graphs) {
    const int n = fg->rank();
    std::vector<std::int32_t> cls(fg->size());
    std::vector<int> p(n >= 2 ? static_cast<std::size_t>(n - 1) : 0);
    for (std::size_t t = 0; t < fg->size(); ++t) {
      for (int j = 1; j < n; ++j) p[static_cast<std::size_t>(j - 1)] = fg->polygon_size(t, j);
      auto [it, unused] = interned.emplace(p, static_cast<std::int32_t>(interned.size()));
      cls[t] = it->second;
    }
    out.push_back(std::move(cls));
  }
  return out;
}

struct FlagMapScratch {
  std::vector<std::uint32_t> img;   // flag of G1 -> flag of G2, kNoFlag unset
  std::vector<std::uint8_t> used;   // target flags already taken
  std::vector<std::uint32_t> queue; // BFS order; also the undo list

  FlagMapScratch(std::size_t f1, std::size_t f2) : img(f1, kNoFlag), used(f2, 0) {}

  void rollback() {
    for (std::uint32_t t : queue) {
      used[img[t]] = 0;
      img[t] = kNoFlag;
    }
    queue.clear();
  }
};

// Propagates base -> target across the flag graphs respecting i-adjacency.
// Prunes on per-flag invariant classes. On success scratch.img holds a
// color-preserving bijection of flags; caller must rollback() afterwards.
inline bool extend_flag_map(const FlagGraph& f1, const FlagGraph& f2,
                            const std::vector<std::int32_t>& cls1,
                            const std::vector<std::int32_t>& cls2, std::uint32_t base,
                            std::uint32_t target, FlagMapScratch& s) {
  if (f1.size() != f2.size() || cls1[base] != cls2[target]) return false;
  const int n = f1.rank();
  bool ok = true;
  s.img[base] = target;
  s.used[target] = 1;
  s.queue.push_back(base);
  for (std::size_t qi = 0; ok && qi < s.queue.size(); ++qi) {
    const std::uint32_t t = s.queue[qi];
    const std::uint32_t u = s.img[t];
    for (int i = 0; i < n; ++i) {
      const std::uint32_t t2 = f1.adjacent(t, i);
      const std::uint32_t u2 = f2.adjacent(u, i);
      std::uint32_t& slot = s.img[t2];
      if (slot == kNoFlag) {
        if (s.used[u2] || cls1[t2] != cls2[u2]) {
          ok = false;
          break;
        }
        slot = u2;
        s.used[u2] = 1;
        s.queue.push_back(t2);
      } else if (slot != u2) {
        ok = false;
        break;
      }
    }
  }
  // a validated polytope has a connected flag graph, so all flags are hit
  if (ok && s.queue.size() != f1.size()) ok = false;
  if (!ok) s.rollback();
  return ok;
}

// The face map induced by a flag bijection: well-defined iff flags sharing a
// face map to flags sharing the corresponding face. Checks bijectivity.
inline std::optional<std::vector<FaceId>> induced_face_map(const FlagGraph& f1,
                                                           const FlagGraph& f2,
                                                           std::size_t faces1,
                                                           std::size_t faces2,
                                                           const std::vector<std::uint32_t>& img) {
  if (faces1 != faces2) return std::nullopt;
  const int n = f1.rank();
  std::vector<FaceId> fmap(faces1, kNoFace);
  std::vector<std::uint8_t> used(faces2, 0);
  for (std::size_t t = 0; t < f1.size(); ++t) {
    const std::uint32_t u = img[t];
    for (int r = -1; r <= n; ++r) {
      const FaceId a = f1.face(t, r);
      const FaceId b = f2.face(u, r);
      if (fmap[a] == kNoFace) {
        if (used[b]) return std::nullopt;
        fmap[a] = b;
        used[b] = 1;
      } else if (fmap[a] != b) {
        return std::nullopt;
      }
    }
  }
  for (FaceId v : fmap)
    if (v == kNoFace) return std::nullopt;  // face on no flag: not a polytope
  return fmap;
}

}  // namespace detail

/// Full automorphism group via flag propagation: for the base flag (index 0,
/// the lexicographically least) and every candidate image flag with the same
/// invariant, propagate across the flag graph and accept iff the induced
/// face map is well-defined. The action on flags is free, so each accepted
/// image yields exactly one automorphism.
inline AutomorphismGroup automorphisms(const FaceLattice& L, const FlagGraph& fg) {
  AutomorphismGroup g;
  auto cls = detail::flag_invariant_classes({&fg});
  detail::FlagMapScratch scratch(fg.size(), fg.size());
  for (std::uint32_t target = 0; target < fg.size(); ++target) {
    if (cls[0][target] != cls[0][0]) continue;
    if (!detail::extend_flag_map(fg, fg, cls[0], cls[0], 0, target, scratch)) continue;
    auto fmap =
        detail::induced_face_map(fg, fg, L.face_count(), L.face_count(), scratch.img);
    scratch.rollback();
    if (fmap) g.elements.push_back(Automorphism{std::move(*fmap)});
  }
  // candidates were scanned in ascending order, so elements[0] is identity
  g.generators.reserve(g.elements.size() > 0 ? g.elements.size() - 1 : 0);
  for (std::size_t i = 1; i < g.elements.size(); ++i) g.generators.push_back(i);
  return g;
}

inline AutomorphismGroup automorphisms(const FaceLattice& L) {
  return automorphisms(L, flag_graph(L));
}

struct IsoWitness {
  std::vector<FaceId> face_map;  // faces of L1 -> faces of L2
};

/// Combinatorial isomorphism test, with quick rejects on rank, f-vector,
/// flag count and invariant histograms before propagation.
inline bool isomorphic(const FaceLattice& L1, const FaceLattice& L2,
                       IsoWitness* witness = nullptr) {
  if (L1.rank() != L2.rank() || L1.face_count() != L2.face_count()) return false;
  for (int r = -1; r <= L1.rank(); ++r)
    if (L1.rank_size(r) != L2.rank_size(r)) return false;
  FlagGraph f1 = flag_graph(L1);
  FlagGraph f2 = flag_graph(L2);
  if (f1.size() != f2.size()) return false;
  auto cls = detail::flag_invariant_classes({&f1, &f2});
  {
    std::vector<std::int32_t> h1 = cls[0], h2 = cls[1];
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) return false;
  }
  detail::FlagMapScratch scratch(f1.size(), f2.size());
  for (std::uint32_t target = 0; target < f2.size(); ++target) {
    if (cls[1][target] != cls[0][0]) continue;
    if (!detail::extend_flag_map(f1, f2, cls[0], cls[1], 0, target, scratch)) continue;
    auto fmap =
        detail::induced_face_map(f1, f2, L1.face_count(), L2.face_count(), scratch.img);
    scratch.rollback();
    if (fmap) {
      if (witness) witness->face_map = std::move(*fmap);
      return true;
    }
  }
  return false;
}

/// Closes a generating set under composition (breadth-first products).
/// elements[0] is the identity; generator indices point at the inputs.
inline AutomorphismGroup close_under_composition(const std::vector<Automorphism>& gens,
                                                 std::size_t face_count) {
  AutomorphismGroup g;
  Automorphism id;
  id.face_perm.resize(face_count);
  for (std::size_t i = 0; i < face_count; ++i) id.face_perm[i] = static_cast<FaceId>(i);

  std::unordered_map<std::vector<FaceId>, std::size_t, detail::PermHash> seen;
  g.elements.push_back(id);
  seen.emplace(g.elements[0].face_perm, 0);
  for (const Automorphism& gen : gens) {
    if (seen.emplace(gen.face_perm, g.elements.size()).second) {
      g.generators.push_back(g.elements.size());
      g.elements.push_back(gen);
    }
  }
  for (std::size_t qi = 0; qi < g.elements.size(); ++qi) {
    for (const Automorphism& gen : gens) {
      Automorphism prod = compose(gen, g.elements[qi]);
      if (seen.emplace(prod.face_perm, g.elements.size()).second)
        g.elements.push_back(std::move(prod));
    }
  }
  return g;
}

/// Subgroup fixing a given vertex.
inline AutomorphismGroup vertex_stabilizer(const FaceLattice& L, const AutomorphismGroup& G,
                                           FaceId vertex) {
  if (L.face_rank(vertex) != 0)
    throw Error(ErrorKind::BadParameter, "vertex_stabilizer needs a rank-0 face");
  AutomorphismGroup stab;
  for (const Automorphism& a : G.elements)
    if (a(vertex) == vertex) stab.elements.push_back(a);
  for (std::size_t i = 1; i < stab.elements.size(); ++i) stab.generators.push_back(i);
  return stab;
}

/// Image of a stabilizer subgroup inside the automorphism group of a
/// section: each element must map the interval onto itself (it fixes bottom
/// and top); the face permutation is transported through the id remap.
/// Duplicate images collapse, so the result is the image subgroup.
inline AutomorphismGroup restrict_to_section(const AutomorphismGroup& stab,
                                             const SectionView& sec) {
  std::vector<Automorphism> images;
  const std::size_t m = sec.to_parent.size();
  for (const Automorphism& a : stab.elements) {
    if (a(sec.bottom) != sec.bottom || a(sec.top) != sec.top)
      throw Error(ErrorKind::BadParameter, "element does not stabilize the section");
    Automorphism b;
    b.face_perm.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      FaceId q = a(sec.to_parent[i]);
      auto it = std::lower_bound(sec.to_parent.begin(), sec.to_parent.end(), q);
      if (it == sec.to_parent.end() || *it != q)
        throw Error(ErrorKind::BadParameter, "element does not preserve the section interval");
      b.face_perm[i] = static_cast<FaceId>(it - sec.to_parent.begin());
    }
    images.push_back(std::move(b));
  }
  std::sort(images.begin(), images.end(),
            [](const Automorphism& x, const Automorphism& y) { return x.face_perm < y.face_perm; });
  images.erase(std::unique(images.begin(), images.end()), images.end());
  AutomorphismGroup out;
  out.elements = std::move(images);  // identity sorts first
  for (std::size_t i = 1; i < out.elements.size(); ++i) out.generators.push_back(i);
  return out;
}

/// Regular: the group is transitive on flags. The action is free, so this is
/// just |Gamma| == #flags.
inline bool is_regular(const FaceLattice& L, const AutomorphismGroup& G, const FlagGraph& fg) {
  (void)L;
  return G.order() == fg.size();
}
inline bool is_regular(const FaceLattice& L) {
  FlagGraph fg = flag_graph(L);
  return is_regular(L, automorphisms(L, fg), fg);
}

inline bool is_vertex_transitive(const FaceLattice& L, const AutomorphismGroup& G) {
  const std::size_t nv = L.rank_size(0);
  if (nv <= 1) return true;
  std::vector<std::uint8_t> hit(nv, 0);
  std::size_t seen = 0;
  const FaceId v0 = L.rank_begin(0);
  for (const Automorphism& a : G.elements) {
    const FaceId w = a(v0) - v0;
    if (!hit[w]) {
      hit[w] = 1;
      ++seen;
    }
  }
  return seen == nv;
}
inline bool is_vertex_transitive(const FaceLattice& L) {
  return is_vertex_transitive(L, automorphisms(L));
}

/// Semi-regular: regular facets and a vertex-transitive group. Facet
/// regularity is decided once per isomorphism class of facets.
inline bool is_semi_regular(const FaceLattice& L, const AutomorphismGroup& G) {
  if (!is_vertex_transitive(L, G)) return false;
  std::vector<FaceLattice> reps;
  std::vector<bool> rep_regular;
  for (FaceId f = L.rank_begin(L.rank() - 1); f < L.rank_end(L.rank() - 1); ++f) {
    SectionView sec = facet_as_polytope(L, f);
    bool matched = false;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (isomorphic(sec.lattice, reps[i])) {
        if (!rep_regular[i]) return false;
        matched = true;
        break;
      }
    }
    if (!matched) {
      bool reg = is_regular(sec.lattice);
      reps.push_back(std::move(sec.lattice));
      rep_regular.push_back(reg);
      if (!reg) return false;
    }
  }
  return true;
}
inline bool is_semi_regular(const FaceLattice& L) {
  return is_semi_regular(L, automorphisms(L));
}

}  // namespace polyforge
