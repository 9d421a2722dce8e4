#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "fusionkit/subgroup.hpp"

namespace fusionkit {

inline constexpr std::size_t kDefaultSubgroupCap = 100000;

/// p-local invariants of one group at one prime.
struct PLocalProfile {
  unsigned prime = 0;
  Subgroup sylow;
  Subgroup op_residual;  // O^p(G)
  Subgroup hyperfocal;   // S ∩ O^p(G)
  Subgroup focal;        // S ∩ [G,G]
  bool p_nilpotent = false;
};

enum class SubgroupFilter {
  All,
  ElementaryAbelian,
  AbelianExponentAtMost4,
  CyclicOfOrderPOr4,
  MaximalAbelian,
};

std::string_view to_string(SubgroupFilter f);
SubgroupFilter subgroup_filter_from_string(std::string_view s);

/// Sylow p-subgroup by normalizer climbing from a p-element of maximal order.
/// Throws PNotPrime; returns the trivial subgroup when p does not divide |G|.
Subgroup sylow(const Subgroup& group, unsigned p);

/// Throws SylowMismatch unless `s` is a Sylow p-subgroup of `group`.
void require_sylow(const Subgroup& group, const Subgroup& s, unsigned p);

/// O^p(G): generated by all elements of order prime to p.
Subgroup op_residual(const Subgroup& group, unsigned p);

/// S ∩ O^p(G).
Subgroup hyperfocal_puig(const Subgroup& group, const Subgroup& s, unsigned p);

/// <x^-1 φ(x) : Q <= S, x in Q, φ in O^p(Aut_G(Q))>, Q over S-class representatives.
Subgroup hyperfocal_fusion(const Subgroup& group, const Subgroup& s, unsigned p);

/// S ∩ [G,G].
Subgroup focal_subgroup(const Subgroup& group, const Subgroup& s, unsigned p);

/// True iff G has a normal p-complement, decided as S ∩ O^p(G) = 1.
bool is_p_nilpotent(const Subgroup& group, unsigned p);

PLocalProfile p_local_profile(const Subgroup& group, unsigned p);

/// Subgroups of the p-group `p_group` passing `filter`, sorted canonically.
/// Throws NotPGroup when |p_group| is not a prime power, CapExceeded when more
/// than `cap` subgroups are produced.
std::vector<Subgroup> enumerate_subgroups(const Subgroup& p_group, SubgroupFilter filter,
                                          std::size_t cap = kDefaultSubgroupCap);

/// Prime of a non-trivial p-group; 0 for the trivial group. Throws NotPGroup otherwise.
unsigned prime_of_p_group(const Subgroup& p_group);

}  // namespace fusionkit
