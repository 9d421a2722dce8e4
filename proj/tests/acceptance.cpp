// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>

#include "fusionkit/control.hpp"
#include "fusionkit/corpus.hpp"
#include "fusionkit/critical.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/families.hpp"
#include "fusionkit/report_json.hpp"
#include "fusionkit/suite.hpp"
#include "oracles.hpp"

using namespace fusionkit;

namespace {

struct Outcome {
  bool ok = true;
  std::size_t instances = 0;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

struct Local {
  std::string entry;
  unsigned p;
  Subgroup g, s;
  std::vector<Subgroup> pairs;
};

std::vector<LoadedEntry> g_corpus;
std::vector<Local> g_locals;

std::string where(const Local& l) { return l.entry + " p=" + std::to_string(l.p); }

int report(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s));
  std::ostringstream line;
  line << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << o.instances << " instances, ";
  line.precision(3);
  line << std::fixed << secs << " s]";
  if (!o.note.empty()) line << " " << o.note;
  std::cout << line.str() << std::endl;
  return o.ok ? 0 : 1;
}

Outcome puig() {
  Outcome o;
  for (const auto& l : g_locals) {
    ++o.instances;
    if (!(hyperfocal_fusion(l.g, l.s, l.p).members() == hyperfocal_puig(l.g, l.s, l.p).members()))
      o.fail("mismatch at " + where(l));
  }
  return o;
}

void expect_eq(Outcome& o, const std::string& what, std::size_t got, std::size_t want) {
  ++o.instances;
  if (got != want) o.fail(what + " = " + std::to_string(got) + ", expected " + std::to_string(want));
}

Outcome agl() {
  Outcome o;
  {
    const AglFamily f = build_agl_family(3, 2);
    const AglClaims c = verify_agl_claims(f);
    expect_eq(o, "|D_hat|", c.order_d_hat, 16);
    expect_eq(o, "|G|", c.order_g, 144);
    expect_eq(o, "|V|", c.v_count, 4);
    expect_eq(o, "min |Hom_H(A,B)|", c.hom_h_min, 2);
    expect_eq(o, "max |Hom_H(A,B)|", c.hom_h_max, 2);
    expect_eq(o, "|hyp|", c.order_hyperfocal, 9);
    expect_eq(o, "hyp = S", hyperfocal_puig(f.g, f.s, 3) == f.s, 1);
    expect_eq(o, "cyclic control", c.cyclic_control, 1);
    expect_eq(o, "full control", c.full_control, 0);
    expect_eq(o, "all claims", c.all_ok(), 1);
  }
  {
    const AglClaims c = verify_agl_claims(build_agl_family(2, 3));
    expect_eq(o, "|G| (2,3)", c.order_g, 168);
    expect_eq(o, "|V| (2,3)", c.v_count, 7);
    expect_eq(o, "min |Hom_H(A,B)| (2,3)", c.hom_h_min, 1);
    expect_eq(o, "max |Hom_H(A,B)| (2,3)", c.hom_h_max, 1);
    expect_eq(o, "all claims (2,3)", c.all_ok(), 1);
  }
  return o;
}

Outcome quillen() {
  Outcome o;
  const QuillenDemo d = quillen_demo();
  expect_eq(o, "elementary-abelian hypothesis", d.elementary_abelian_hypothesis, 1);
  expect_eq(o, "fusion_equal", d.fusion_equal, 0);
  expect_eq(o, "exponent-4 hypothesis", d.exponent4_hypothesis, 0);
  expect_eq(o, "witness <i> -> <j>", d.witness_is_i_to_j, 1);
  return o;
}

Outcome thm1() {
  Outcome o;
  std::size_t nontrivial = 0;
  for (const auto& l : g_locals)
    for (const auto& h : l.pairs) {
      const ControlReport r = thm1_validate(l.g, h, l.s, l.p);
      ++o.instances;
      if (!r.implication_ok) o.fail("violated at " + where(l) + " |H|=" + std::to_string(h.order()));
      nontrivial += r.hypothesis.holds && h.order() < l.g.order();
    }
  if (nontrivial == 0) o.fail("no proper H satisfies the hypothesis");
  if (o.ok) o.note = std::to_string(nontrivial) + " proper H with the hypothesis";
  return o;
}

Outcome thm2() {
  Outcome o;
  for (const auto& l : g_locals)
    for (auto v : {Thm2Variant::Normalizer, Thm2Variant::Inner}) {
      const ControlReport r = thm2_validate(l.g, l.s, l.p, v);
      ++o.instances;
      if (!r.implication_ok) o.fail("violated at " + where(l));
      if (v == Thm2Variant::Inner && r.conclusion.equal != is_p_nilpotent(l.g, l.p))
        o.fail("inner conclusion vs p-nilpotency at " + where(l));
    }
  return o;
}

Outcome thompson() {
  Outcome o;
  for (const auto& l : g_locals) {
    std::vector<Subgroup> locals = essential_class_representatives(l.g, l.s);
    locals.push_back(l.s);
    for (const auto& pl : locals) {
      ++o.instances;
      try {
        const CriticalCertificate c = find_thompson_d(automizer_setup(l.g, pl, l.p));
        if (!c.checks.all()) o.fail("D fails a check at " + where(l));
        for (const auto& row : c.maximal_abelians)
          if (!row.normal_in_p || !row.centralizer_is_p_group) o.fail("audit line fails at " + where(l));
      } catch (const NotFound&) {
        o.fail("NotFound at " + where(l));
      }
    }
  }
  return o;
}

Outcome conj_aut() {
  Outcome o;
  for (const auto& l : g_locals) {
    if (l.p == 2) continue;
    for (const auto& h : l.pairs) {
      const ControlReport r = conj_automizer_control(l.g, h, l.s, l.p);
      ++o.instances;
      if (r.hypothesis.holds && !fusion_equal(l.g, h, l.s, l.p).equal)
        o.fail("hypothesis without fusion equality at " + where(l));
    }
  }
  const AglFamily f = build_agl_family(3, 2);
  const ControlReport r = conj_automizer_control(f.g, f.h, f.s, 3);
  ++o.instances;
  if (r.hypothesis.holds || !r.hypothesis.witness) {
    o.fail("AGL pair passes the hypothesis");
  } else {
    const auto& w = *r.hypothesis.witness;
    if (!(w.a == f.s) || w.reason != "automizer" || w.aut_g_order != 16 || w.aut_h_order != 8)
      o.fail("AGL witness is not A = S with automizer orders 16 vs 8");
  }
  return o;
}

Outcome main_lemma() {
  Outcome o;
  for (const auto& l : g_locals) {
    const Subgroup n = normalizer(l.g, l.s);
    const auto subs = enumerate_subgroups(l.s, SubgroupFilter::All);
    for (const Subgroup& h : {l.g, n, l.s})
      for (const auto& pp : subs)
        for (const Subgroup& q : {pp, center(pp)}) {
          try {
            if (!main_lemma_verify(l.g, h, l.s, l.p, pp, q)) o.fail("false at " + where(l));
            ++o.instances;
          } catch (const PreconditionViolated&) {
          }
        }
  }
  return o;
}

Outcome oracles() {
  Outcome o;
  for (const auto& l : g_locals) {
    if (l.s.order() <= 16) {
      ++o.instances;
      if (enumerate_subgroups(l.s, SubgroupFilter::All).size() != oracle::subgroup_count_by_subsets(l.s))
        o.fail("subgroup count of S at " + where(l));
    }
    if (l.g.order() > 48) continue;
    const auto subs = enumerate_subgroups(l.s, SubgroupFilter::All);
    for (const auto& a : subs)
      for (const auto& b : subs) {
        if (a.order() > b.order()) continue;
        ++o.instances;
        const HomSet hs = hom_set(l.g, a, b);
        const auto want = oracle::hom_tables_by_permutations(l.g, a, b);
        if (std::set<MapTable>(hs.maps.begin(), hs.maps.end()) != want || hs.maps.size() != want.size())
          o.fail("Hom-set at " + where(l));
      }
  }
  return o;
}

Outcome determinism(const std::string& manifest) {
  Outcome o;
  std::string first;
  for (unsigned jobs : {1U, 2U}) {
    SuiteOptions opt;
    opt.jobs = jobs;
    const SuiteReport r = run_suite(load_corpus(manifest), opt);
    const std::string dump = to_json(r).dump(2);
    ++o.instances;
    if (!r.ok()) o.fail("suite reports failures");
    if (first.empty())
      first = dump;
    else if (dump != first)
      o.fail("JSON differs between runs");
  }
  o.note = std::to_string(first.size()) + " bytes";
  return o;
}

}  // namespace

int main() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("fusionkit_acceptance_" + std::to_string(::getpid()));
  write_corpus(dir.string(), builtin_corpus());
  const std::string manifest = (dir / "manifest.json").string();
  g_corpus = load_corpus(manifest);
  int failures = 0;
  for (const auto& e : g_corpus) {
    if (!e.audit_ok()) {
      std::cout << "corpus entry " << e.entry.name << " fails its own audit\n";
      ++failures;
      continue;
    }
    std::vector<Subgroup> named;
    for (const auto& n : e.entry.subgroups) named.push_back(*e.subgroup(n.name));
    for (unsigned p : e.entry.primes) {
      const Subgroup s = sylow(e.group, p);
      g_locals.push_back({e.entry.name, p, e.group, s, overgroup_pairs(e.group, s, named, kDefaultGroupCap)});
    }
  }
  std::cout << g_corpus.size() << " corpus entries, " << g_locals.size() << " (G, p) pairs\n";

  failures += report(1, "Puig oracle: hyperfocal from fusion = S ∩ O^p(G)", 120, puig);
  failures += report(2, "AΓL(1,9) and AΓL(1,8) reproduction", 5, agl);
  failures += report(3, "Quillen obstruction in SL(2,3)", 5, quillen);
  failures += report(4, "Theorem 1 implication on every S <= H <= G", 600, thm1);
  failures += report(5, "Theorem 2 implication, both variants, Frobenius consistency", 0, thm2);
  failures += report(6, "Thompson subgroup D and maximal-abelian audit", 0, thompson);
  failures += report(7, "conjugacy/automizer hypothesis implies fusion equality (odd p)", 0, conj_aut);
  failures += report(8, "main lemma on every admissible instance", 0, main_lemma);
  failures += report(9, "oracle equivalences (subset closure, Hom-set scan)", 0, oracles);
  failures += report(10, "two corpus runs give byte-identical JSON", 0, [&] { return determinism(manifest); });

  fs::remove_all(dir);
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " FAILURE(S)") << '\n';
  return failures == 0 ? 0 : 1;
}
