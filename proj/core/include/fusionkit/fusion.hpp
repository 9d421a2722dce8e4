#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fusionkit/p_structure.hpp"
#include "fusionkit/subgroup.hpp"

namespace fusionkit {

/// A map table: entry i is the image of the i-th (sorted) element of the domain.
using MapTable = std::vector<std::uint32_t>;

/// Hom_X(A,B): restrictions c_g|_A with A^g <= B, g in X. Tables hold
/// positions in `codomain.elements()`, sorted lexicographically, no repeats.
struct HomSet {
  Subgroup domain;
  Subgroup codomain;
  std::vector<MapTable> maps;

  std::size_t size() const { return maps.size(); }
  bool contains(const MapTable& m) const;
};

/// Exhaustive scan over every g in `acting`.
HomSet hom_set(const Subgroup& acting, const Subgroup& a, const Subgroup& b);

/// A conjugation map c_g|_A recorded by parent element indices.
struct ConjugationMap {
  std::vector<Elem> images;  // images of a.elements(), in order
  ElementSet image;          // A^g as a member set
};

/// All distinct c_g|_A (g in acting) as maps into the parent, sorted by `images`.
std::vector<ConjugationMap> conjugation_maps(const Subgroup& acting, const Subgroup& a);

/// Positions in `codomain.elements()` of a map whose image lies in `codomain`.
MapTable to_positions(const ConjugationMap& m, const Subgroup& codomain);

/// Aut_X(Q) = N_X(Q)/C_X(Q), realized on the sorted element list of Q.
struct Automizer {
  Subgroup base;        // Q
  Subgroup normalizer;  // N_X(Q) in the ambient table
  GroupPtr aut;         // permutations of positions in base.elements()
  Subgroup aut_whole;
  Subgroup inner;                 // Aut_Q(Q)
  std::optional<Subgroup> from_s;  // Aut_S(Q)

  /// Automorphism induced by n in N_X(Q).
  Elem image_of(Elem n) const;
  /// Aut_K(Q) = image of N_K(Q) for K in the ambient table.
  Subgroup image_of(const Subgroup& k) const;
};

Automizer aut_group(const Subgroup& acting, const Subgroup& q, const std::optional<Subgroup>& s = std::nullopt);

struct FusionWitness {
  Subgroup q;
  std::vector<Elem> images;  // map in Hom_G(Q,S) \ Hom_H(Q,S), images of q.elements()
};

struct FusionDiff {
  bool equal = true;
  std::optional<FusionWitness> witness;
};

/// Throws PreconditionViolated unless S <= H <= G in one table with S of full
/// p-power order in G.
void require_chain(const Subgroup& g, const Subgroup& h, const Subgroup& s, unsigned p);

/// Compares F_S(H) with F_S(G) on Hom(Q,S) for Q over H-class representatives of
/// subgroups of S (every subgroup when `all_subgroups`). Throws PreconditionViolated
/// unless S <= H <= G with S Sylow in G.
FusionDiff fusion_equal(const Subgroup& g, const Subgroup& h, const Subgroup& s, unsigned p,
                        bool all_subgroups = false);

bool is_fully_normalized(const Subgroup& g, const Subgroup& s, const Subgroup& q);
bool is_centric(const Subgroup& g, const Subgroup& s, const Subgroup& q);
bool is_radical(const Subgroup& g, const Subgroup& s, const Subgroup& q);
bool is_essential(const Subgroup& g, const Subgroup& s, const Subgroup& q);

/// All Sylow p-subgroups of `group`, sorted canonically.
std::vector<Subgroup> sylow_subgroups(const Subgroup& group, unsigned p);

/// O_p(group) as the intersection of all Sylow p-subgroups.
Subgroup largest_normal_p_subgroup(const Subgroup& group, unsigned p);

/// Whether group/normal_p has a strongly p-embedded subgroup, decided by the
/// Sylow-intersection graph: p divides the quotient order and the graph on
/// Sylow subgroups with edges for intersections larger than `normal_p` is
/// disconnected. `normal_p` must be a normal p-subgroup of `group`.
bool has_strongly_p_embedded(const Subgroup& group, const Subgroup& normal_p, unsigned p);

/// N_G(S) re-enumerated as its own table, together with S inside it.
struct NormalizerSystem {
  GroupPtr table;
  Subgroup group;
  Subgroup sylow;
};
NormalizerSystem normalizer_system_group(const Subgroup& g, const Subgroup& s, unsigned p);

}  // namespace fusionkit
