#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fusionkit/element_set.hpp"
#include "fusionkit/group_table.hpp"

namespace fusionkit {

/// A subgroup of an enumerated group: member bitset plus a generating set.
/// Two handles over the same table are equal iff their bitsets are equal.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);
  /// Smallest subgroup containing `elements`.
  static Subgroup generated(GroupPtr parent, std::span<const Elem> elements);
  /// Wraps a member set already known to be closed; a generating set is
  /// chosen greedily in index order.
  static Subgroup from_members(GroupPtr parent, ElementSet members);

  const GroupPtr& parent() const { return parent_; }
  const GroupTable& table() const { return *parent_; }
  std::size_t order() const { return elements_.size(); }
  bool is_trivial() const { return elements_.size() == 1; }
  bool contains(Elem e) const { return members_.test(e); }
  const ElementSet& members() const { return members_; }
  /// Sorted member indices; doubles as the canonical key.
  const std::vector<Elem>& elements() const { return elements_; }
  const std::vector<Elem>& generators() const { return generators_; }
  /// Position of `e` in `elements()`; `e` must be a member.
  std::size_t position(Elem e) const;

  bool is_subgroup_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }

  /// Extends by one element, reusing the existing closure.
  Subgroup joined_with(Elem e) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  GroupPtr parent_;
  ElementSet members_;
  std::vector<Elem> elements_;
  std::vector<Elem> generators_;
  friend class SubgroupBuilder;
};

/// Orders subgroups by size, then lexicographically by sorted member list.
bool canonical_less(const Subgroup& a, const Subgroup& b);

struct SubgroupHash {
  std::size_t operator()(const Subgroup& s) const { return s.members().hash(); }
};

/// Z_0 = 1 <= Z_1 <= ... <= Z_m with Z_m = Z_{m+1}.
struct CentralSeries {
  std::vector<Subgroup> terms;
};

Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup centralizer(const Subgroup& ambient, const Subgroup& target);
Subgroup centralizer(const Subgroup& ambient, Elem x);
Subgroup normalizer(const Subgroup& ambient, const Subgroup& target);
Subgroup center(const Subgroup& group);
bool is_normal(const Subgroup& h, const Subgroup& in);
/// Smallest subgroup of `ambient` containing `generators` and normal in it.
Subgroup normal_closure(const Subgroup& ambient, std::span<const Elem> generators);
Subgroup derived_subgroup(const Subgroup& group);

/// H^g = g^-1 H g.
Subgroup conjugate(const Subgroup& h, Elem g);

struct ConjugacyResult {
  bool conjugate = false;
  std::optional<Elem> witness;  // g with H^g = K
};
/// Scans every g in `ambient` in index order.
ConjugacyResult are_conjugate(const Subgroup& ambient, const Subgroup& h, const Subgroup& k);

/// Distinct conjugates Q^g (g in ambient) that lie inside `within`, ordered canonically.
std::vector<Subgroup> conjugates_within(const Subgroup& ambient, const Subgroup& q, const Subgroup& within);

/// Partition of `subgroups` into `ambient`-conjugacy classes. Each class is a
/// list of positions into `subgroups`, sorted; classes ordered by first member.
std::vector<std::vector<std::size_t>> conjugacy_classes(const Subgroup& ambient,
                                                        std::span<const Subgroup> subgroups);

CentralSeries upper_central_series(const Subgroup& p);

std::size_t element_order(const GroupTable& g, Elem e);
std::size_t exponent(const Subgroup& h);
bool is_abelian(const Subgroup& h);
bool is_cyclic(const Subgroup& h);
bool is_elementary_abelian(const Subgroup& h, unsigned p);
/// True iff |h| is a power of p (the trivial group counts).
bool is_p_group(const Subgroup& h, unsigned p);

bool is_prime(unsigned n);
/// Largest power of p dividing n.
std::size_t p_part(std::size_t n, unsigned p);
std::vector<unsigned> prime_divisors(std::size_t n);
bool is_power_of(std::size_t n, unsigned p);

}  // namespace fusionkit
