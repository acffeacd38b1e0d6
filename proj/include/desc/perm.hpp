#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace desc {

/// Permutation of {0,...,degree-1} in one-line notation. Composition is
/// right-to-left: (a.compose(b))(x) = a(b(x)). I/O uses 1-indexed disjoint
/// cycle notation, e.g. "(1 2)(3 4)"; the identity prints as "()".
struct Permutation {
  int degree = 0;
  std::vector<uint8_t> images;

  static Permutation identity(int degree);

  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  /// +1 for even, -1 for odd.
  int sign() const;

  bool is_identity() const;
  bool operator==(const Permutation& o) const { return degree == o.degree && images == o.images; }
  bool operator<(const Permutation& o) const;

  /// Packed 4-bit-per-point key; numeric order equals lexicographic order of
  /// one-line notation. Requires degree <= 16.
  uint64_t key() const;
  static Permutation from_key(uint64_t key, int degree);

  std::string cycle_string() const;

  /// Parses products of cycles, applied right-to-left. Accepts "()" and "".
  static Permutation parse_cycles(const std::string& text, int degree);
};

constexpr int kMaxPackedDegree = 16;

}  // namespace desc
