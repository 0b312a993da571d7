#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace polyforge::detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), roots_(n) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep the smaller index as root
    parent_[b] = a;
    --roots_;
    return true;
  }

  std::size_t component_count() const { return roots_; }

 private:
  std::vector<std::uint32_t> parent_;
  std::size_t roots_;
};

}  // namespace polyforge::detail
