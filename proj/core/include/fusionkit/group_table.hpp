#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "fusionkit/permutation.hpp"

namespace fusionkit {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultGroupCap = 20000;

/// Returns the enumeration cap, honouring FUSIONKIT_MAX_ORDER when set.
std::size_t default_group_cap();

/// A fully enumerated permutation group. Element 0 is the identity and the
/// remaining elements appear in breadth-first order from the identity, with
/// generators applied on the right in input order. Immutable once built.
class GroupTable {
 public:
  /// Closure of `generators`. Throws InvalidPermutation on a bad image array
  /// or degree mismatch, CapExceeded once the closure exceeds `cap` elements.
  static std::shared_ptr<const GroupTable> enumerate(std::size_t degree,
                                                     std::span<const Permutation> generators,
                                                     std::size_t cap = default_group_cap());

  std::size_t order() const { return order_; }
  std::size_t degree() const { return degree_; }
  static constexpr Elem identity() { return 0; }

  /// Indices of the input generators (duplicates and the identity included).
  const std::vector<Elem>& generators() const { return generators_; }

  std::span<const Point> images(Elem e) const {
    return {images_.data() + static_cast<std::size_t>(e) * degree_, degree_};
  }
  Permutation permutation(Elem e) const;

  /// Index of the element with the given image array, if present.
  std::optional<Elem> find(std::span<const Point> images) const;
  std::optional<Elem> find(const Permutation& p) const { return find(p.images()); }

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inverse_[a]; }
  /// g^-1 x g
  Elem conj(Elem x, Elem g) const { return mul(mul(inverse_[g], x), g); }
  Elem commutator(Elem a, Elem b) const { return mul(mul(inverse_[a], inverse_[b]), mul(a, b)); }
  Elem power(Elem a, std::size_t k) const;
  std::size_t element_order(Elem e) const { return orders_[e]; }

  /// Exhaustive check that the element list is closed under products and inverses.
  bool verify_closure() const;

 private:
  GroupTable() = default;
  Elem compose_lookup(Elem a, Elem b) const;
  void insert_index(Elem e);
  std::size_t hash_images(std::span<const Point> images) const;

  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::vector<Point> images_;
  std::vector<Elem> slots_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<Elem> generators_;
  std::vector<std::uint16_t> cayley_;  // row-major, present for small orders
};

using GroupPtr = std::shared_ptr<const GroupTable>;

}  // namespace fusionkit
