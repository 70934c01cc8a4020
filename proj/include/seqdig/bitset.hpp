#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace seqdig {

/// Fixed-width bitset sized at construction; backs vertex sets and adjacency rows.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_(static_cast<size_t>((n + 63) / 64), 0) {}

  int size() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }

  bool intersects(const Bitset& other) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & other.w_[i]) return true;
    return false;
  }

  /// Calls f(i) for every set bit, ascending.
  template <class F>
  void for_each(F&& f) const {
    for (size_t b = 0; b < w_.size(); ++b)
      for (uint64_t w = w_[b]; w; w &= w - 1)
        f(static_cast<int>(b * 64 + static_cast<size_t>(std::countr_zero(w))));
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace seqdig
