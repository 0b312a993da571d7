#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace polyforge::detail {

/// Fixed-width bit set over face ids with ranged (rank-stratum) queries.
/// Face ids are rank-contiguous, so a rank stratum is always an id range
/// [lo, hi) and the closure algorithms only ever need range variants.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::size_t count_range(std::size_t lo, std::size_t hi) const {
    std::size_t c = 0;
    scan_range(lo, hi, [&](std::uint64_t w, std::size_t) {
      c += static_cast<std::size_t>(std::popcount(w));
    });
    return c;
  }

  /// popcount of (a & b) over [lo, hi)
  static std::size_t count_and_range(const Bits& a, const Bits& b, std::size_t lo,
                                     std::size_t hi) {
    std::size_t c = 0;
    a.scan_range(lo, hi, [&](std::uint64_t w, std::size_t k) {
      c += static_cast<std::size_t>(std::popcount(w & b.w_[k]));
    });
    return c;
  }

  /// true iff (this & [lo,hi)) is a subset of o
  bool subset_in_range(const Bits& o, std::size_t lo, std::size_t hi) const {
    bool ok = true;
    scan_range(lo, hi, [&](std::uint64_t w, std::size_t k) {
      if (w & ~o.w_[k]) ok = false;
    });
    return ok;
  }

  bool intersects_range(const Bits& o, std::size_t lo, std::size_t hi) const {
    bool any = false;
    scan_range(lo, hi, [&](std::uint64_t w, std::size_t k) {
      if (w & o.w_[k]) any = true;
    });
    return any;
  }

  template <class F>
  void for_each_in_range(std::size_t lo, std::size_t hi, F&& f) const {
    scan_range(lo, hi, [&](std::uint64_t w, std::size_t k) {
      while (w) {
        unsigned b = static_cast<unsigned>(std::countr_zero(w));
        f(static_cast<std::size_t>(k * 64 + b));
        w &= w - 1;
      }
    });
  }

  template <class F>
  static void for_each_and_range(const Bits& a, const Bits& b, std::size_t lo,
                                 std::size_t hi, F&& f) {
    a.scan_range(lo, hi, [&](std::uint64_t w, std::size_t k) {
      w &= b.w_[k];
      while (w) {
        unsigned bit = static_cast<unsigned>(std::countr_zero(w));
        f(static_cast<std::size_t>(k * 64 + bit));
        w &= w - 1;
      }
    });
  }

 private:
  // Visits each word overlapping [lo, hi), masked down to the range.
  template <class F>
  void scan_range(std::size_t lo, std::size_t hi, F&& f) const {
    if (lo >= hi) return;
    std::size_t k0 = lo >> 6, k1 = (hi - 1) >> 6;
    for (std::size_t k = k0; k <= k1; ++k) {
      std::uint64_t w = w_[k];
      if (k == k0 && (lo & 63)) w &= ~std::uint64_t{0} << (lo & 63);
      if (k == k1 && (hi & 63)) w &= ~std::uint64_t{0} >> (64 - (hi & 63));
      f(w, k);
    }
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace polyforge::detail
