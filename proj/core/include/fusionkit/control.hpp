#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fusionkit/fusion.hpp"

namespace fusionkit {

enum class TheoremId { Thm1, Thm1EssentialLocal, Thm2Normalizer, Thm2Inner, ConjAutomizer };

std::string_view to_string(TheoremId id);

/// First failure of a hypothesis: a pair (A, B) and a map of Hom_G(A,B)
/// missing from Hom_H(A,B). `reason` distinguishes the checks of the
/// conjugacy/automizer form ("hom", "conjugacy", "automizer").
struct HypothesisWitness {
  std::string reason = "hom";
  Subgroup a;
  Subgroup b;
  std::vector<Elem> images;  // images of a.elements(); empty for "conjugacy"
  std::size_t aut_g_order = 0;
  std::size_t aut_h_order = 0;
};

struct HypothesisResult {
  bool holds = true;
  std::optional<HypothesisWitness> witness;
};

/// Verdict of one control-of-fusion statement: hypothesis and conclusion are
/// evaluated independently and `implication_ok` is ¬hypothesis ∨ conclusion.
struct ControlReport {
  TheoremId theorem = TheoremId::Thm1;
  unsigned prime = 0;
  std::size_t order_g = 0;
  std::size_t order_h = 0;
  std::size_t order_s = 0;
  std::size_t order_hyperfocal = 0;
  HypothesisResult hypothesis;
  FusionDiff conclusion;
  bool implication_ok = true;
  /// False when the statement is evaluated outside the prime range it is made for.
  bool in_scope = true;
  /// thm2 inner: conclusion agrees with p-nilpotency. conj_automizer: the
  /// composition rederivation of Hom_G(A,A') = Hom_H(A,A') agrees with a direct
  /// comparison. Unset when not applicable.
  std::optional<bool> cross_check;
};

/// Hom_H(A,B) = Hom_G(A,B) for all A, B in the filtered subgroups of S ∩ O^p(G).
/// The filter defaults to elementary abelian (p odd) or abelian of exponent at
/// most 4 (p = 2); `forced` overrides it for diagnostics.
HypothesisResult thm1_hypothesis(const Subgroup& g, const Subgroup& h, const Subgroup& s, unsigned p,
                                 std::optional<SubgroupFilter> forced = std::nullopt);

ControlReport thm1_validate(const Subgroup& g, const Subgroup& h, const Subgroup& s, unsigned p,
                            std::optional<SubgroupFilter> forced = std::nullopt);

/// The weaker condition read off from Alperin–Goldschmidt: only abelian A of
/// exponent p or 4 inside [P, O^p(Aut_G(P))] for P an essential class
/// representative (fully normalized) or S, with codomain S.
HypothesisResult thm1_essential_local_hypothesis(const Subgroup& g, const Subgroup& h, const Subgroup& s,
                                                 unsigned p);
ControlReport thm1_essential_local_validate(const Subgroup& g, const Subgroup& h, const Subgroup& s, unsigned p);

enum class Thm2Variant { Normalizer, Inner };

/// Subsystem N_G(S) (normalizer) or S (inner) against cyclic subgroups of
/// order p or 4 in the hyperfocal subgroup.
ControlReport thm2_validate(const Subgroup& g, const Subgroup& s, unsigned p, Thm2Variant variant);

/// G-conjugacy implies H-conjugacy and Aut_G(A) = Aut_H(A) for elementary
/// abelian A, A' <= S ∩ O^p(G); then full control as the conclusion.
/// For p = 2 the report is computed but marked out of scope.
ControlReport conj_automizer_control(const Subgroup& g, const Subgroup& h, const Subgroup& s, unsigned p);

/// Aut_G(P) = <Aut_H(P), C_{Aut_G(P)}(Q)>. Throws PreconditionViolated naming
/// the failed precondition when (P, Q) is not an admissible instance.
bool main_lemma_verify(const Subgroup& g, const Subgroup& h, const Subgroup& s, unsigned p, const Subgroup& p_sub,
                       const Subgroup& q);

/// Essential subgroups of F_S(G), one fully normalized representative per
/// G-class, sorted canonically.
std::vector<Subgroup> essential_class_representatives(const Subgroup& g, const Subgroup& s);

}  // namespace fusionkit
