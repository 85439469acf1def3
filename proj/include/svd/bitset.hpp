#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace svd {

// Fixed-capacity dynamic bitset used for point sets and search universes.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int capacity() const { return n_; }

  void set(int i) { w_[i >> 6] |= (std::uint64_t(1) << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  int count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool any() const {
    for (std::uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& and_not(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // True when every bit of *this is also set in o.
  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  int count_and(const Bitset& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += __builtin_popcountll(w_[i] & o.w_[i]);
    return c;
  }

  // Lowest set bit at position >= from, or -1.
  int next(int from) const {
    if (from >= n_) return -1;
    std::size_t wi = from >> 6;
    std::uint64_t w = w_[wi] & (~std::uint64_t(0) << (from & 63));
    while (true) {
      if (w) return int(wi * 64 + __builtin_ctzll(w));
      if (++wi >= w_.size()) return -1;
      w = w_[wi];
    }
  }
  int first() const { return next(0); }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        fn(int(wi * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::int32_t> to_indices() const {
    std::vector<std::int32_t> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace svd
