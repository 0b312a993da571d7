#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polyforge/detail/bits.hpp"

namespace polyforge {

/// Dense face index, contiguous 0..N-1 per lattice. After a canonical build,
/// id 0 is the least face and id N-1 the greatest, and ids sort by
/// (rank, insertion order).
using FaceId = std::uint32_t;

/// External vertex label attached to rank-0 faces (and, by extension, the
/// vertex sets of higher faces). Arbitrary integers; 2^K uses bit strings.
using VertexLabel = std::int64_t;

inline constexpr FaceId kNoFace = 0xffffffffu;

enum class ErrorKind {
  BadParameter,
  MissingBound,
  RankSkip,
  DiamondViolation,
  NotComparable,
  NotSimplicial,
  NotVertexDescribable,
  TooLargeForExplicit,
  SearchExhausted,
  ValidationFailed,
  ParseError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::MissingBound: return "MissingBound";
    case ErrorKind::RankSkip: return "RankSkip";
    case ErrorKind::DiamondViolation: return "DiamondViolation";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::NotVertexDescribable: return "NotVertexDescribable";
    case ErrorKind::TooLargeForExplicit: return "TooLargeForExplicit";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raw build input: faces named by arbitrary external ids, in insertion
/// order, plus (lower, upper) cover pairs. Vertex labels are optional.
struct LatticeInput {
  int rank = 0;
  std::vector<std::pair<std::int64_t, int>> faces;  // (external id, rank)
  std::vector<std::pair<std::int64_t, std::int64_t>> covers;
  std::vector<std::pair<std::int64_t, std::vector<VertexLabel>>> vertex_labels;
};

/// A finite ranked poset given by its Hasse diagram. Immutable after build;
/// safe to share read-only across threads. The reachability closure (the
/// full <= relation) is memoized on first use as per-face bitsets; rank
/// strata are contiguous id ranges so stratified queries are range queries.
class FaceLattice {
 public:
  FaceLattice() = default;

  int rank() const { return rank_n_; }
  std::size_t face_count() const { return face_rank_.size(); }
  int face_rank(FaceId f) const { return face_rank_[f]; }
  FaceId least_face() const { return 0; }
  FaceId greatest_face() const { return static_cast<FaceId>(face_count() - 1); }

  std::span<const FaceId> upper_covers(FaceId f) const {
    return {up_list_.data() + up_off_[f], up_off_[f + 1] - up_off_[f]};
  }
  std::span<const FaceId> lower_covers(FaceId f) const {
    return {lo_list_.data() + lo_off_[f], lo_off_[f + 1] - lo_off_[f]};
  }
  std::size_t cover_count() const { return up_list_.size(); }

  /// First id of rank r (r in -1..rank()+1; rank()+1 gives the end sentinel).
  FaceId rank_begin(int r) const { return rank_off_[static_cast<std::size_t>(r + 1)]; }
  FaceId rank_end(int r) const { return rank_off_[static_cast<std::size_t>(r + 2)]; }
  std::size_t rank_size(int r) const { return rank_end(r) - rank_begin(r); }

  bool leq(FaceId a, FaceId b) const {
    if (a == b) return true;
    if (face_rank_[a] >= face_rank_[b]) return false;
    return downset(b).test(a);
  }

  /// Bitset over all ids of faces <= f (inclusive).
  const detail::Bits& downset(FaceId f) const {
    ensure_closure();
    return closure_->down[f];
  }
  /// Bitset over all ids of faces >= f (inclusive).
  const detail::Bits& upset(FaceId f) const {
    ensure_closure();
    return closure_->up[f];
  }

  /// All faces h with a <= h <= b, sorted ascending (hence by rank).
  std::vector<FaceId> faces_between(FaceId a, FaceId b) const {
    std::vector<FaceId> out;
    const detail::Bits& d = downset(b);
    const detail::Bits& u = upset(a);
    detail::Bits::for_each_and_range(d, u, 0, face_count(),
                                     [&](std::size_t i) { out.push_back(static_cast<FaceId>(i)); });
    return out;
  }

  std::size_t count_between_at_rank(FaceId a, FaceId b, int r) const {
    return detail::Bits::count_and_range(downset(b), upset(a), rank_begin(r), rank_end(r));
  }

  /// Rank-0 faces below f, ascending.
  std::vector<FaceId> vertices_below(FaceId f) const {
    std::vector<FaceId> out;
    downset(f).for_each_in_range(rank_begin(0), rank_end(0),
                                 [&](std::size_t i) { out.push_back(static_cast<FaceId>(i)); });
    return out;
  }

  bool has_vertex_labels() const { return has_labels_; }
  std::span<const VertexLabel> vertex_labels(FaceId f) const {
    return {labels_.data() + label_off_[f], label_off_[f + 1] - label_off_[f]};
  }

  template <class F>
  void for_each_cover(F&& f) const {
    for (FaceId lo = 0; lo < face_count(); ++lo)
      for (FaceId hi : upper_covers(lo)) f(lo, hi);
  }

  friend FaceLattice build_lattice(const LatticeInput&,
                                   std::unordered_map<std::int64_t, FaceId>*);

 private:
  struct Closure {
    std::once_flag once;
    std::vector<detail::Bits> down, up;
  };

  void ensure_closure() const {
    std::call_once(closure_->once, [this] {
      const std::size_t n = face_count();
      closure_->down.assign(n, detail::Bits(n));
      closure_->up.assign(n, detail::Bits(n));
      // ids ascend with rank, so one sweep per direction suffices
      for (FaceId f = 0; f < n; ++f) {
        closure_->down[f].set(f);
        for (FaceId g : lower_covers(f)) closure_->down[f] |= closure_->down[g];
      }
      for (FaceId f = static_cast<FaceId>(n); f-- > 0;) {
        closure_->up[f].set(f);
        for (FaceId g : upper_covers(f)) closure_->up[f] |= closure_->up[g];
      }
    });
  }

  int rank_n_ = -1;
  std::vector<std::int16_t> face_rank_;
  std::vector<std::uint32_t> up_off_, lo_off_;
  std::vector<FaceId> up_list_, lo_list_;
  std::vector<FaceId> rank_off_;  // size rank+3, strata offsets
  bool has_labels_ = false;
  std::vector<std::uint32_t> label_off_;
  std::vector<VertexLabel> labels_;
  // shared across copies: covers are identical, hence so is the closure
  std::shared_ptr<Closure> closure_ = std::make_shared<Closure>();
};

/// Canonicalizing builder. Renumbers faces by (rank ascending, insertion
/// order), checks bounds uniqueness and that covers rise exactly one rank.
/// On request fills `id_map` with external id -> canonical FaceId.
inline FaceLattice build_lattice(const LatticeInput& in,
                                 std::unordered_map<std::int64_t, FaceId>* id_map = nullptr) {
  const int n = in.rank;
  if (n < -1) throw Error(ErrorKind::BadParameter, "rank must be >= -1");
  const std::size_t nf = in.faces.size();
  if (nf == 0) throw Error(ErrorKind::MissingBound, "lattice has no faces");

  std::unordered_map<std::int64_t, std::uint32_t> pos;
  pos.reserve(nf * 2);
  for (std::uint32_t i = 0; i < nf; ++i) {
    const auto& [ext, r] = in.faces[i];
    if (r < -1 || r > n)
      throw Error(ErrorKind::BadParameter,
                  "face rank " + std::to_string(r) + " outside -1.." + std::to_string(n));
    if (!pos.emplace(ext, i).second)
      throw Error(ErrorKind::BadParameter, "duplicate face id " + std::to_string(ext));
  }

  // canonical order: stable sort by rank keeps insertion order within rank
  std::vector<std::uint32_t> order(nf);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return in.faces[a].second < in.faces[b].second;
  });
  std::vector<FaceId> new_id(nf);
  for (std::uint32_t i = 0; i < nf; ++i) new_id[order[i]] = i;

  FaceLattice L;
  L.rank_n_ = n;
  L.face_rank_.resize(nf);
  for (std::uint32_t i = 0; i < nf; ++i)
    L.face_rank_[new_id[i]] = static_cast<std::int16_t>(in.faces[i].second);

  L.rank_off_.assign(static_cast<std::size_t>(n) + 3, 0);
  for (std::int16_t r : L.face_rank_) L.rank_off_[static_cast<std::size_t>(r + 2)]++;
  for (std::size_t i = 1; i < L.rank_off_.size(); ++i) L.rank_off_[i] += L.rank_off_[i - 1];

  if (L.rank_size(-1) != 1 || L.rank_size(n) != 1)
    throw Error(ErrorKind::MissingBound,
                "need exactly one least and one greatest face, got " +
                    std::to_string(L.rank_size(-1)) + " and " + std::to_string(L.rank_size(n)));

  std::vector<std::pair<FaceId, FaceId>> covers;
  covers.reserve(in.covers.size());
  for (const auto& [elo, ehi] : in.covers) {
    auto ilo = pos.find(elo), ihi = pos.find(ehi);
    if (ilo == pos.end() || ihi == pos.end())
      throw Error(ErrorKind::BadParameter, "cover references unknown face id");
    FaceId a = new_id[ilo->second], b = new_id[ihi->second];
    if (L.face_rank_[b] != L.face_rank_[a] + 1)
      throw Error(ErrorKind::RankSkip,
                  "cover (" + std::to_string(elo) + ", " + std::to_string(ehi) + ") joins ranks " +
                      std::to_string(L.face_rank_[a]) + " and " + std::to_string(L.face_rank_[b]));
    covers.emplace_back(a, b);
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());

  L.up_off_.assign(nf + 1, 0);
  L.lo_off_.assign(nf + 1, 0);
  for (auto& [a, b] : covers) {
    L.up_off_[a + 1]++;
    L.lo_off_[b + 1]++;
  }
  for (std::size_t i = 1; i <= nf; ++i) {
    L.up_off_[i] += L.up_off_[i - 1];
    L.lo_off_[i] += L.lo_off_[i - 1];
  }
  L.up_list_.resize(covers.size());
  L.lo_list_.resize(covers.size());
  {
    std::vector<std::uint32_t> ucur(L.up_off_.begin(), L.up_off_.end() - 1);
    std::vector<std::uint32_t> lcur(L.lo_off_.begin(), L.lo_off_.end() - 1);
    for (auto& [a, b] : covers) {
      L.up_list_[ucur[a]++] = b;
      L.lo_list_[lcur[b]++] = a;  // covers sorted by (a,b); per-face lists stay sorted
    }
    for (FaceId f = 0; f < nf; ++f) {
      auto s = L.lo_list_.begin() + L.lo_off_[f], e = L.lo_list_.begin() + L.lo_off_[f + 1];
      std::sort(s, e);
    }
  }

  if (!in.vertex_labels.empty()) {
    L.has_labels_ = true;
    std::vector<std::vector<VertexLabel>> tmp(nf);
    for (const auto& [ext, labels] : in.vertex_labels) {
      auto it = pos.find(ext);
      if (it == pos.end())
        throw Error(ErrorKind::BadParameter, "vertex labels reference unknown face id");
      tmp[new_id[it->second]] = labels;
      std::sort(tmp[new_id[it->second]].begin(), tmp[new_id[it->second]].end());
    }
    L.label_off_.assign(nf + 1, 0);
    for (std::size_t i = 0; i < nf; ++i)
      L.label_off_[i + 1] = L.label_off_[i] + static_cast<std::uint32_t>(tmp[i].size());
    L.labels_.reserve(L.label_off_[nf]);
    for (auto& v : tmp) L.labels_.insert(L.labels_.end(), v.begin(), v.end());
  } else {
    L.label_off_.assign(nf + 1, 0);
  }

  if (id_map) {
    id_map->clear();
    for (std::uint32_t i = 0; i < nf; ++i) (*id_map)[in.faces[i].first] = new_id[i];
  }
  return L;
}

}  // namespace polyforge
