#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "polyforge/face_lattice.hpp"

namespace polyforge {

/// A flag is a maximal chain, one face per rank -1..n.
using Flag = std::vector<FaceId>;

inline constexpr std::uint32_t kNoFlag = 0xffffffffu;

/// All flags of a lattice plus the i-adjacency maps (i = 0..n-1). Flags are
/// stored in lexicographic order of their face tuples; i-adjacency is a
/// total involution exactly when the diamond condition holds.
class FlagGraph {
 public:
  FlagGraph() = default;

  int rank() const { return n_; }
  std::size_t size() const { return count_; }

  std::span<const FaceId> flag(std::size_t t) const {
    return {faces_.data() + t * stride(), stride()};
  }
  /// Face of rank r (r in -1..n) in flag t.
  FaceId face(std::size_t t, int r) const {
    return faces_[t * stride() + static_cast<std::size_t>(r + 1)];
  }
  std::uint32_t adjacent(std::size_t t, int i) const {
    return adj_[t * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i)];
  }

  /// Index of a flag by its face tuple (binary search; kNoFlag if absent).
  std::uint32_t find(std::span<const FaceId> chain) const {
    const std::size_t k = stride();
    std::size_t lo = 0, hi = count_;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      const FaceId* p = faces_.data() + mid * k;
      int cmp = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (p[j] != chain[j]) {
          cmp = p[j] < chain[j] ? -1 : 1;
          break;
        }
      }
      if (cmp < 0)
        lo = mid + 1;
      else if (cmp > 0)
        hi = mid;
      else
        return static_cast<std::uint32_t>(mid);
    }
    return kNoFlag;
  }

  /// Size p_j of the polygonal section between the (j-2)- and (j+1)-faces of
  /// flag t: the order of the double step adj_{j-1} adj_j through t.
  int polygon_size(std::size_t t, int j) const {
    std::size_t cur = t;
    int steps = 0;
    do {
      cur = adjacent(cur, j - 1);
      cur = adjacent(cur, j);
      ++steps;
    } while (cur != t);
    return steps;
  }

  friend FlagGraph flag_graph(const FaceLattice& L);
  friend std::vector<FaceId> enumerate_flags(const FaceLattice& L);

 private:
  std::size_t stride() const { return static_cast<std::size_t>(n_) + 2; }

  int n_ = -1;
  std::size_t count_ = 0;
  std::vector<FaceId> faces_;      // stride n+2
  std::vector<std::uint32_t> adj_; // stride n
};

/// Flattened flag enumeration (lexicographic) via DFS over upper covers.
inline std::vector<FaceId> enumerate_flags(const FaceLattice& L) {
  const int n = L.rank();
  const std::size_t stride = static_cast<std::size_t>(n) + 2;
  std::vector<FaceId> out;
  std::vector<FaceId> chain(stride);
  chain[0] = L.least_face();
  // iterative DFS; upper-cover lists are sorted so output is lex-ordered
  std::vector<std::size_t> cursor(stride, 0);
  std::size_t depth = 0;  // chain[0..depth] fixed
  for (;;) {
    if (static_cast<int>(depth) == n + 1) {
      out.insert(out.end(), chain.begin(), chain.end());
      if (depth == 0) break;
      --depth;
      continue;
    }
    auto ups = L.upper_covers(chain[depth]);
    std::size_t& c = cursor[depth];
    if (c < ups.size()) {
      chain[depth + 1] = ups[c++];
      ++depth;
      cursor[depth] = 0;
    } else {
      c = 0;
      if (depth == 0) break;
      --depth;
    }
  }
  return out;
}

inline std::vector<Flag> flags(const FaceLattice& L) {
  auto flat = enumerate_flags(L);
  const std::size_t stride = static_cast<std::size_t>(L.rank()) + 2;
  std::vector<Flag> out;
  out.reserve(flat.size() / stride);
  for (std::size_t i = 0; i < flat.size(); i += stride)
    out.emplace_back(flat.begin() + i, flat.begin() + i + stride);
  return out;
}

/// Builds the flag graph. Every flag must have exactly one i-adjacent
/// partner per i (the diamond condition restated); otherwise throws
/// DiamondViolation.
inline FlagGraph flag_graph(const FaceLattice& L) {
  FlagGraph fg;
  fg.n_ = L.rank();
  fg.faces_ = enumerate_flags(L);
  const std::size_t stride = static_cast<std::size_t>(fg.n_) + 2;
  fg.count_ = fg.faces_.size() / stride;
  const int n = fg.n_;
  if (n <= 0) return fg;  // no adjacency colors below rank 1

  fg.adj_.assign(fg.count_ * static_cast<std::size_t>(n), kNoFlag);

  // For each color i, group flags by the tuple with the rank-i face masked
  // out; each group must be a pair, and the two members are i-adjacent.
  std::vector<std::uint32_t> idx(fg.count_);
  for (int i = 0; i < n; ++i) {
    const std::size_t skip = static_cast<std::size_t>(i) + 1;
    for (std::size_t t = 0; t < fg.count_; ++t) idx[t] = static_cast<std::uint32_t>(t);
    auto key_less = [&](std::uint32_t a, std::uint32_t b) {
      const FaceId* pa = fg.faces_.data() + a * stride;
      const FaceId* pb = fg.faces_.data() + b * stride;
      for (std::size_t j = 0; j < stride; ++j) {
        if (j == skip) continue;
        if (pa[j] != pb[j]) return pa[j] < pb[j];
      }
      return false;
    };
    auto key_eq = [&](std::uint32_t a, std::uint32_t b) {
      const FaceId* pa = fg.faces_.data() + a * stride;
      const FaceId* pb = fg.faces_.data() + b * stride;
      for (std::size_t j = 0; j < stride; ++j) {
        if (j == skip) continue;
        if (pa[j] != pb[j]) return false;
      }
      return true;
    };
    std::sort(idx.begin(), idx.end(), key_less);
    for (std::size_t s = 0; s < fg.count_;) {
      std::size_t e = s + 1;
      while (e < fg.count_ && key_eq(idx[s], idx[e])) ++e;
      if (e - s != 2)
        throw Error(ErrorKind::DiamondViolation,
                    "flag has " + std::to_string(e - s - 1) + " partners at rank " +
                        std::to_string(i));
      fg.adj_[idx[s] * static_cast<std::size_t>(n) + i] = idx[e - 1];
      fg.adj_[idx[e - 1] * static_cast<std::size_t>(n) + i] = idx[s];
      s = e;
    }
  }
  return fg;
}

}  // namespace polyforge
