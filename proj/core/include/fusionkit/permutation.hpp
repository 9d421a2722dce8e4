#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fusionkit {

using Point = std::uint16_t;

/// A bijection of {0, ..., degree-1}. Products compose left to right:
/// `(a * b)[x] == b[a[x]]`, so `a * b` means "apply a, then b".
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidPermutation unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
  static Permutation from_cycles(std::size_t degree, const std::string& text);

  /// Builds from 0-based cycles.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::size_t order() const;

  /// 1-based cycle notation; the identity prints as "()".
  std::string to_cycle_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

bool is_bijection(std::span<const Point> images);

}  // namespace fusionkit
