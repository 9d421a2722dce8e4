#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fusionkit/p_structure.hpp"
#include "fusionkit/subgroup.hpp"

namespace fusionkit {

/// A p-group P with a group G of automorphisms of P containing Inn(P).
/// Automorphisms are permutations of the element indices of `p_table`.
struct AutSetup {
  unsigned prime = 0;
  GroupPtr p_table;
  Subgroup p_group;
  GroupPtr auts;
  Subgroup aut_group;
  Subgroup inn;
  /// Ambient element of each P-table index; empty for setups built from
  /// explicit automorphisms.
  std::vector<Elem> ambient_elements;

  Elem apply(Elem aut, Elem x) const { return auts->images(aut)[x]; }

  /// Checks that every permutation is an automorphism of P and that Inn(P) is
  /// contained in the generated group; throws PreconditionViolated otherwise.
  static AutSetup from_automorphisms(GroupPtr p_table, std::span<const Permutation> automorphisms, unsigned p);
};

/// G = Aut_ambient(P) acting on P. Throws NotPGroup unless P is a p-group.
AutSetup automizer_setup(const Subgroup& ambient, const Subgroup& p_sub, unsigned p);

/// <x^-1 φ(x) : x in target, φ in auts> inside the P-table.
Subgroup commutator_with_auts(const AutSetup& setup, const Subgroup& target, std::span<const Elem> auts);

/// The same subgroup expressed in the ambient table of an automizer setup.
Subgroup to_ambient(const AutSetup& setup, const GroupPtr& ambient, const Subgroup& in_p);

struct MaximalAbelianAudit {
  Subgroup a;
  bool normal_in_p = false;
  bool centralizer_is_p_group = false;
  std::size_t centralizer_order = 0;
};

struct CandidateChecks {
  bool g_invariant = false;
  bool exponent_ok = false;
  bool class_condition = false;  // [D,P] <= Z(D)
  bool faithful = false;         // non-trivial p'-elements of G act non-trivially on D
  bool all() const { return g_invariant && exponent_ok && class_condition && faithful; }
};

struct CriticalCertificate {
  Subgroup d;
  Subgroup commutator;  // [P, O^p(G)]
  CandidateChecks checks;
  std::vector<MaximalAbelianAudit> maximal_abelians;
  std::size_t candidates_examined = 0;

  bool audit_ok() const;
};

CandidateChecks check_candidate(const AutSetup& setup, const Subgroup& d);

/// Smallest (then canonically first) G-invariant D <= [P, O^p(G)] passing all
/// checks, with the maximal-abelian audit. Throws NotFound if no candidate
/// passes and CapExceeded if the candidate enumeration exceeds `cap`.
CriticalCertificate find_thompson_d(const AutSetup& setup, std::size_t cap = kDefaultSubgroupCap);

std::vector<MaximalAbelianAudit> audit_maximal_abelians(const AutSetup& setup, const Subgroup& d);

}  // namespace fusionkit
