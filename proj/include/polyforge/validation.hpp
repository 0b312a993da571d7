#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "polyforge/detail/union_find.hpp"
#include "polyforge/face_lattice.hpp"

namespace polyforge {

/// Per-axiom result of validate_polytope. Downstream operations assume a
/// passing report.
struct ValidationReport {
  bool unique_bounds = false;
  bool chains_span_all_ranks = false;  // every maximal chain has n+2 faces
  bool diamond = false;
  bool strongly_flag_connected = false;
  std::vector<std::string> failures;  // first few offending faces/sections

  bool ok() const {
    return unique_bounds && chains_span_all_ranks && diamond && strongly_flag_connected;
  }
};

namespace detail {

// Enumerates the saturated chains from `bottom` to `top` whose interior lies
// in the order interval, and checks that chains differing in exactly one
// position form a connected graph. Grouping by wildcarded position connects
// all members of a group pairwise, which is the same reachability relation.
inline bool section_flags_connected(const FaceLattice& L, FaceId bottom, FaceId top,
                                    std::vector<std::uint8_t>& in_interval,
                                    std::vector<FaceId>& touched) {
  const int gap = L.face_rank(top) - L.face_rank(bottom);
  const Bits& down_top = L.downset(top);
  const Bits& up_bot = L.upset(bottom);

  touched.clear();
  Bits::for_each_and_range(down_top, up_bot, bottom, top + 1, [&](std::size_t i) {
    in_interval[i] = 1;
    touched.push_back(static_cast<FaceId>(i));
  });

  // chains, flattened with stride gap+1
  std::vector<FaceId> chains;
  std::vector<FaceId> cur(static_cast<std::size_t>(gap) + 1);
  cur[0] = bottom;
  std::vector<std::size_t> cursor(static_cast<std::size_t>(gap) + 1, 0);
  std::size_t depth = 0;
  for (;;) {
    if (static_cast<int>(depth) == gap) {
      if (cur[depth] == top) chains.insert(chains.end(), cur.begin(), cur.end());
      if (depth == 0) break;
      --depth;
      continue;
    }
    auto ups = L.upper_covers(cur[depth]);
    std::size_t& c = cursor[depth];
    bool descended = false;
    while (c < ups.size()) {
      FaceId next = ups[c++];
      if (in_interval[next]) {
        cur[depth + 1] = next;
        ++depth;
        cursor[depth] = 0;
        descended = true;
        break;
      }
    }
    if (!descended) {
      c = 0;
      if (depth == 0) break;
      --depth;
    }
  }
  for (FaceId f : touched) in_interval[f] = 0;

  const std::size_t stride = static_cast<std::size_t>(gap) + 1;
  const std::size_t m = chains.size() / stride;
  if (m == 0) return false;
  if (m == 1) return true;

  UnionFind uf(m);
  std::vector<std::uint32_t> idx(m);
  for (std::size_t p = 1; p + 1 < stride; ++p) {
    for (std::size_t t = 0; t < m; ++t) idx[t] = static_cast<std::uint32_t>(t);
    auto key_less = [&](std::uint32_t a, std::uint32_t b) {
      const FaceId* pa = chains.data() + a * stride;
      const FaceId* pb = chains.data() + b * stride;
      for (std::size_t j = 1; j + 1 < stride; ++j) {
        if (j == p) continue;
        if (pa[j] != pb[j]) return pa[j] < pb[j];
      }
      return false;
    };
    std::sort(idx.begin(), idx.end(), key_less);
    for (std::size_t s = 1; s < m; ++s) {
      if (!key_less(idx[s - 1], idx[s])) uf.unite(idx[s - 1], idx[s]);
    }
    if (uf.component_count() == 1) return true;
  }
  return uf.component_count() == 1;
}

}  // namespace detail

/// Checks the abstract-polytope axioms: unique bounds, uniform chain length,
/// the diamond condition on every rank-2 interval, and connectivity of the
/// flag graph of every section of rank >= 1 (equivalent to strong flag
/// connectedness given the other axioms; adjacent-flag paths inside a
/// section automatically contain the common subchain).
inline ValidationReport validate_polytope(const FaceLattice& L) {
  ValidationReport rep;
  const int n = L.rank();
  const std::size_t nf = L.face_count();
  auto note = [&](std::string msg) {
    if (rep.failures.size() < 32) rep.failures.push_back(std::move(msg));
  };

  rep.unique_bounds = L.rank_size(-1) == 1 && L.rank_size(n) == 1;
  if (!rep.unique_bounds) note("bounds are not unique");

  // Covers rise exactly one rank (enforced at build), so every maximal chain
  // has n+2 faces iff only the bounds lack covers above/below.
  rep.chains_span_all_ranks = true;
  for (FaceId f = 0; f < nf; ++f) {
    if (L.face_rank(f) < n && L.upper_covers(f).empty()) {
      rep.chains_span_all_ranks = false;
      note("face " + std::to_string(f) + " has no upper cover");
    }
    if (L.face_rank(f) > -1 && L.lower_covers(f).empty()) {
      rep.chains_span_all_ranks = false;
      note("face " + std::to_string(f) + " has no lower cover");
    }
  }

  // Diamond: every path a < h < c is one of exactly two.
  rep.diamond = true;
  {
    std::vector<std::uint16_t> cnt(nf, 0);
    std::vector<FaceId> touched;
    for (FaceId a = 0; a < nf; ++a) {
      if (L.face_rank(a) > n - 2) continue;
      touched.clear();
      for (FaceId h : L.upper_covers(a)) {
        for (FaceId c : L.upper_covers(h)) {
          if (cnt[c]++ == 0) touched.push_back(c);
        }
      }
      for (FaceId c : touched) {
        if (cnt[c] != 2) {
          rep.diamond = false;
          note("diamond fails between " + std::to_string(a) + " and " + std::to_string(c) +
               " (" + std::to_string(cnt[c]) + " faces between)");
        }
        cnt[c] = 0;
      }
    }
  }

  // Section flag connectivity for every comparable pair with rank gap >= 2.
  // Gap-2 sections are connected whenever nonempty (any two of their chains
  // differ only in the middle face), so they are covered by the same code
  // path at negligible cost.
  rep.strongly_flag_connected = true;
  if (rep.chains_span_all_ranks && rep.unique_bounds) {
    std::vector<std::uint8_t> in_interval(nf, 0);
    std::vector<FaceId> touched;
    for (FaceId c = 0; c < nf; ++c) {
      const int rc = L.face_rank(c);
      if (rc < 1) continue;
      L.downset(c).for_each_in_range(0, L.rank_begin(rc - 1), [&](std::size_t ai) {
        const FaceId a = static_cast<FaceId>(ai);
        if (!detail::section_flags_connected(L, a, c, in_interval, touched)) {
          rep.strongly_flag_connected = false;
          note("section " + std::to_string(a) + ".." + std::to_string(c) +
               " has a disconnected flag graph");
        }
      });
    }
  } else {
    rep.strongly_flag_connected = false;
    note("flag connectivity not evaluated: prior axiom failed");
  }

  return rep;
}

}  // namespace polyforge
