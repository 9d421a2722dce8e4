#include "fusionkit/control.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fusionkit/critical.hpp"
#include "fusionkit/error.hpp"

namespace fusionkit {

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::Thm1: return "thm1";
    case TheoremId::Thm1EssentialLocal: return "thm1-local";
    case TheoremId::Thm2Normalizer: return "thm2-normalizer";
    case TheoremId::Thm2Inner: return "thm2-inner";
    case TheoremId::ConjAutomizer: return "conj-aut";
  }
  return "?";
}

namespace {

SubgroupFilter default_filter(unsigned p) {
  return p == 2 ? SubgroupFilter::AbelianExponentAtMost4 : SubgroupFilter::ElementaryAbelian;
}

/// Maps in Hom_G(A, -) that are not in Hom_H(A, -), sorted by images.
std::vector<ConjugationMap> extra_maps(const Subgroup& g, const Subgroup& h, const Subgroup& a) {
  std::set<std::vector<Elem>> in_h;
  for (auto& m : conjugation_maps(h, a)) in_h.insert(std::move(m.images));
  std::vector<ConjugationMap> out;
  for (auto& m : conjugation_maps(g, a))
    if (!in_h.count(m.images)) out.push_back(std::move(m));
  return out;
}

/// Hom_G(A,B) = Hom_H(A,B) for all A in domains and B in codomains; the first
/// failure in (A, B, map) order is the witness.
HypothesisResult compare_homs(const Subgroup& g, const Subgroup& h, const std::vector<Subgroup>& domains,
                              const std::vector<Subgroup>& codomains) {
  for (const auto& a : domains) {
    const auto extra = extra_maps(g, h, a);
    if (extra.empty()) continue;
    for (const auto& b : codomains)
      for (const auto& m : extra)
        if (m.image.is_subset_of(b.members())) {
          HypothesisWitness w;
          w.a = a;
          w.b = b;
          w.images = m.images;
          return HypothesisResult{false, std::move(w)};
        }
  }
  return {};
}

std::size_t automizer_order(const Subgroup& x, const Subgroup& a) {
  return normalizer(x, a).order() / centralizer(x, a).order();
}

ControlReport base_report(TheoremId id, const Subgroup& g, const Subgroup& h, const Subgroup& s, unsigned p) {
  ControlReport r;
  r.theorem = id;
  r.prime = p;
  r.order_g = g.order();
  r.order_h = h.order();
  r.order_s = s.order();
  r.order_hyperfocal = hyperfocal_puig(g, s, p).order();
  return r;
}

void finish(ControlReport& r) { r.implication_ok = !r.hypothesis.holds || r.conclusion.equal; }

}  // namespace

HypothesisResult thm1_hypothesis(const Subgroup& g, const Subgroup& h, const Subgroup& s, unsigned p,
                                 std::optional<SubgroupFilter> forced) {
  require_chain(g, h, s, p);
  const Subgroup hyp = hyperfocal_puig(g, s, p);
  const auto list = enumerate_subgroups(hyp, forced.value_or(default_filter(p)));
  return compare_homs(g, h, list, list);
}

ControlReport thm1_validate(const Subgroup& g, const Subgroup& h, const Subgroup& s, unsigned p,
                            std::optional<SubgroupFilter> forced) {
  ControlReport r = base_report(TheoremId::Thm1, g, h, s, p);
  r.hypothesis = thm1_hypothesis(g, h, s, p, forced);
  r.conclusion = fusion_equal(g, h, s, p);
  finish(r);
  return r;
}

std::vector<Subgroup> essential_class_representatives(const Subgroup& g, const Subgroup& s) {
  std::vector<Subgroup> essentials;
  for (auto& q : enumerate_subgroups(s, SubgroupFilter::All))
    if (is_essential(g, s, q)) essentials.push_back(std::move(q));
  std::vector<Subgroup> reps;
  for (const auto& cls : conjugacy_classes(g, essentials)) {
    // Classes list members in canonical order; pick the first fully normalized one.
    for (std::size_t idx : cls)
      if (is_fully_normalized(g, s, essentials[idx])) {
        reps.push_back(essentials[idx]);
        break;
      }
  }
  std::sort(reps.begin(), reps.end(), canonical_less);
  return reps;
}

HypothesisResult thm1_essential_local_hypothesis(const Subgroup& g, const Subgroup& h, const Subgroup& s,
                                                 unsigned p) {
  require_chain(g, h, s, p);
  std::vector<Subgroup> locals = essential_class_representatives(g, s);
  locals.push_back(s);
  const std::vector<Subgroup> codomain{s};
  for (const auto& pl : locals) {
    const AutSetup setup = automizer_setup(g, pl, p);
    const Subgroup residual = op_residual(setup.aut_group, p);
    const Subgroup t = to_ambient(setup, g.parent(), commutator_with_auts(setup, setup.p_group, residual.elements()));
    auto result = compare_homs(g, h, enumerate_subgroups(t, default_filter(p)), codomain);
    if (!result.holds) return result;
  }
  return {};
}

ControlReport thm1_essential_local_validate(const Subgroup& g, const Subgroup& h, const Subgroup& s, unsigned p) {
  ControlReport r = base_report(TheoremId::Thm1EssentialLocal, g, h, s, p);
  r.hypothesis = thm1_essential_local_hypothesis(g, h, s, p);
  r.conclusion = fusion_equal(g, h, s, p);
  finish(r);
  return r;
}

ControlReport thm2_validate(const Subgroup& g, const Subgroup& s, unsigned p, Thm2Variant variant) {
  require_sylow(g, s, p);
  const Subgroup h = variant == Thm2Variant::Normalizer ? normalizer(g, s) : s;
  ControlReport r =
      base_report(variant == Thm2Variant::Normalizer ? TheoremId::Thm2Normalizer : TheoremId::Thm2Inner, g, h, s, p);
  const auto list = enumerate_subgroups(hyperfocal_puig(g, s, p), SubgroupFilter::CyclicOfOrderPOr4);
  r.hypothesis = compare_homs(g, h, list, list);
  r.conclusion = fusion_equal(g, h, s, p);
  if (variant == Thm2Variant::Inner) r.cross_check = r.conclusion.equal == is_p_nilpotent(g, p);
  finish(r);
  return r;
}

ControlReport conj_automizer_control(const Subgroup& g, const Subgroup& h, const Subgroup& s, unsigned p) {
  require_chain(g, h, s, p);
  ControlReport r = base_report(TheoremId::ConjAutomizer, g, h, s, p);
  r.in_scope = p != 2;
  const auto list = enumerate_subgroups(hyperfocal_puig(g, s, p), SubgroupFilter::ElementaryAbelian);
  const auto classes_g = conjugacy_classes(g, list);
  const auto classes_h = conjugacy_classes(h, list);
  std::vector<std::size_t> cls_g(list.size()), cls_h(list.size());
  for (std::size_t c = 0; c < classes_g.size(); ++c)
    for (std::size_t i : classes_g[c]) cls_g[i] = c;
  for (std::size_t c = 0; c < classes_h.size(); ++c)
    for (std::size_t i : classes_h[c]) cls_h[i] = c;

  for (std::size_t i = 0; i < list.size() && r.hypothesis.holds; ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j)
      if (cls_g[i] == cls_g[j] && cls_h[i] != cls_h[j]) {
        HypothesisWitness w;
        w.reason = "conjugacy";
        w.a = list[i];
        w.b = list[j];
        r.hypothesis = HypothesisResult{false, std::move(w)};
        break;
      }
    if (!r.hypothesis.holds) break;
    const std::size_t og = automizer_order(g, list[i]);
    const std::size_t oh = automizer_order(h, list[i]);
    if (og != oh) {
      HypothesisWitness w;
      w.reason = "automizer";
      w.a = list[i];
      w.b = list[i];
      w.aut_g_order = og;
      w.aut_h_order = oh;
      for (auto& m : extra_maps(g, h, list[i]))
        if (m.image == list[i].members()) {
          w.images = std::move(m.images);
          break;
        }
      r.hypothesis = HypothesisResult{false, std::move(w)};
    }
  }

  if (r.hypothesis.holds) {
    // Rederive Hom_G(A,A') = Hom_H(A,A') for G-conjugate A, A': with A' = A^k for
    // some k in H, each φ in Hom_G(A,A') is c_k ∘ θ with θ = c_k^-1 ∘ φ in Aut_G(A).
    const GroupTable& t = g.table();
    bool derived = true;
    for (std::size_t i = 0; i < list.size() && derived; ++i) {
      const Subgroup& a = list[i];
      std::set<std::vector<Elem>> aut_h;
      for (auto& m : conjugation_maps(h, a))
        if (m.image == a.members()) aut_h.insert(std::move(m.images));
      for (std::size_t j = 0; j < list.size() && derived; ++j) {
        if (cls_g[i] != cls_g[j]) continue;
        const auto k = are_conjugate(h, a, list[j]).witness;
        if (!k) {
          derived = false;
          break;
        }
        const Elem k_inv = t.inv(*k);
        for (const auto& m : conjugation_maps(g, a)) {
          if (m.image != list[j].members()) continue;
          std::vector<Elem> theta(m.images.size());
          for (std::size_t x = 0; x < m.images.size(); ++x) theta[x] = t.conj(m.images[x], k_inv);
          if (!aut_h.count(theta)) {
            derived = false;
            break;
          }
        }
      }
    }
    const bool direct = compare_homs(g, h, list, list).holds;
    r.cross_check = derived == direct;
  }

  r.conclusion = fusion_equal(g, h, s, p);
  finish(r);
  return r;
}

bool main_lemma_verify(const Subgroup& g, const Subgroup& h, const Subgroup& s, unsigned p, const Subgroup& p_sub,
                       const Subgroup& q) {
  require_chain(g, h, s, p);
  if (p_sub.parent() != s.parent() || !p_sub.is_subgroup_of(s)) throw PreconditionViolated("P is not contained in S");
  if (!is_fully_normalized(g, s, p_sub)) throw PreconditionViolated("P is not fully normalized");
  if (!is_centric(g, s, p_sub)) throw PreconditionViolated("P is not centric");
  for (const auto& r : enumerate_subgroups(normalizer(s, p_sub), SubgroupFilter::All)) {
    if (r.order() == p_sub.order() || !p_sub.is_subgroup_of(r)) continue;
    if (automizer_order(g, r) != automizer_order(h, r))
      throw PreconditionViolated("Aut_G(R) != Aut_H(R) for some P < R <= N_S(P) of order " +
                                 std::to_string(r.order()));
  }
  if (q.parent() != p_sub.parent() || !q.is_subgroup_of(p_sub) || !is_normal(q, p_sub))
    throw PreconditionViolated("Q is not normal in P");
  if (!compare_homs(g, h, {q}, {s}).holds) throw PreconditionViolated("Hom_G(Q,S) != Hom_H(Q,S)");

  const Automizer aut = aut_group(g, p_sub);
  const Subgroup aut_h = aut.image_of(h);
  std::vector<std::size_t> q_pos;
  for (Elem x : q.elements()) q_pos.push_back(p_sub.position(x));
  std::vector<Elem> gens(aut_h.generators().begin(), aut_h.generators().end());
  for (Elem phi : aut.aut_whole.elements()) {
    const auto perm = aut.aut->images(phi);
    if (std::all_of(q_pos.begin(), q_pos.end(), [&](std::size_t i) { return perm[i] == i; })) gens.push_back(phi);
  }
  return Subgroup::generated(aut.aut, gens).order() == aut.aut_whole.order();
}

}  // namespace fusionkit
