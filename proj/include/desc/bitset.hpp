#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace desc {

/// Fixed-width bitset over element indices 0..n-1.
///
/// Ordering (lex_less) is lexicographic on the sorted member list, which is
/// the canonical order used for subgroup representatives and deterministic
/// output everywhere in the library.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n, bool fill = false) : n_(n), w_((n + 63) / 64, 0) {
    if (fill) {
      for (int i = 0; i < n; ++i) set(i);
    }
  }

  int size() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }

  /// Index of the first set bit, or -1.
  int first() const { return next(-1); }

  /// Index of the first set bit strictly after i, or -1.
  int next(int i) const {
    int word = (i + 1) >> 6;
    if (word >= (int)w_.size()) return -1;
    uint64_t w = w_[word] & (~uint64_t(0) << ((i + 1) & 63));
    while (true) {
      if (w) return word * 64 + __builtin_ctzll(w);
      if (++word >= (int)w_.size()) return -1;
      w = w_[word];
    }
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  /// Sorted-member-list lexicographic order: at the lowest index where the
  /// two sets differ, the set containing that index comes first.
  bool lex_less(const Bitset& o) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t diff = w_[k] ^ o.w_[k];
      if (diff) {
        uint64_t low = diff & (~diff + 1);
        return (w_[k] & low) != 0;
      }
    }
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  std::vector<int> to_list() const {
    std::vector<int> out;
    for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
    return out;
  }

  size_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return (size_t)h;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace desc
