#include "fusionkit/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "fusionkit/critical.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/families.hpp"
#include "fusionkit/fusion.hpp"
#include "fusionkit/p_structure.hpp"

namespace fusionkit {
namespace {

std::string orders(const Subgroup& h) { return "|H|=" + std::to_string(h.order()); }

// The p'-elements form a subgroup of order |G|_p' (the normal p-complement).
bool direct_normal_complement(const Subgroup& g, unsigned p) {
  const GroupTable& t = g.table();
  std::vector<Elem> pprime;
  ElementSet in(t.order());
  for (Elem x : g.elements())
    if (t.element_order(x) % p != 0) {
      pprime.push_back(x);
      in.set(x);
    }
  if (pprime.size() != g.order() / p_part(g.order(), p)) return false;
  for (Elem x : pprime)
    for (Elem y : pprime)
      if (!in.test(t.mul(x, y))) return false;
  return true;
}

class Runner {
 public:
  Runner(EntryResult& out, unsigned p) : out_(out), p_(p) {}

  // Runs `body`, which fills in the check; exceptions count as a failure.
  void check(const std::string& name, const std::function<void(CheckResult&)>& body) {
    CheckResult c;
    c.name = name;
    c.prime = p_;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out_.checks.push_back(std::move(c));
  }

 private:
  EntryResult& out_;
  unsigned p_;
};

void fail(CheckResult& c, const std::string& why) {
  if (c.ok) c.detail = why;
  c.ok = false;
}

void prime_checks(const LoadedEntry& e, unsigned p, const SuiteOptions& opt, EntryResult& out) {
  const Subgroup& g = e.group;
  Runner run(out, p);
  Subgroup s;
  run.check("sylow", [&](CheckResult& c) {
    s = sylow(g, p);
    require_sylow(g, s, p);
    c.instances = 1;
    if (s.is_trivial()) fail(c, "p does not divide |G|");
  });
  if (s.parent() == nullptr) return;

  std::vector<Subgroup> named;
  for (const auto& n : e.entry.subgroups) named.push_back(*e.subgroup(n.name));
  const std::vector<Subgroup> pairs = overgroup_pairs(g, s, named, opt.overgroup_scan_limit);
  const std::vector<Subgroup> subs = enumerate_subgroups(s, SubgroupFilter::All);

  run.check("puig", [&](CheckResult& c) {
    c.instances = 1;
    const Subgroup a = hyperfocal_fusion(g, s, p);
    const Subgroup b = hyperfocal_puig(g, s, p);
    if (!(a.members() == b.members()))
      fail(c, "fusion-side order " + std::to_string(a.order()) + ", Puig order " + std::to_string(b.order()));
  });

  run.check("profile", [&](CheckResult& c) {
    c.instances = 1;
    const PLocalProfile pr = p_local_profile(g, p);
    if (!pr.hyperfocal.is_subgroup_of(pr.focal)) fail(c, "hyperfocal not in focal");
    if (!pr.focal.is_subgroup_of(pr.sylow)) fail(c, "focal not in S");
    if (pr.p_nilpotent != direct_normal_complement(g, p)) fail(c, "p-nilpotency disagrees with complement search");
  });

  run.check("fusion_self", [&](CheckResult& c) {
    c.instances = 1;
    if (!fusion_equal(g, g, s, p).equal) fail(c, "F_S(G) differs from itself");
  });

  run.check("frobenius", [&](CheckResult& c) {
    c.instances = 1;
    if (fusion_equal(g, s, s, p).equal != is_p_nilpotent(g, p)) fail(c, "F_S(S) = F_S(G) disagrees with p-nilpotency");
  });

  run.check("essential", [&](CheckResult& c) {
    for (const auto& q : subs) {
      if (!is_essential(g, s, q)) continue;
      ++c.instances;
      if (!is_centric(g, s, q) || !is_radical(g, s, q))
        fail(c, "essential subgroup of order " + std::to_string(q.order()) + " not centric and radical");
    }
  });

  run.check("thm1", [&](CheckResult& c) {
    std::size_t nontrivial = 0;
    for (const auto& h : pairs) {
      const ControlReport r = thm1_validate(g, h, s, p);
      ++c.instances;
      if (!r.implication_ok) fail(c, "implication violated at " + orders(h));
      if (r.hypothesis.holds && h.order() < g.order()) ++nontrivial;
    }
    if (c.ok) c.detail = std::to_string(nontrivial) + " proper H with the hypothesis";
  });

  run.check("thm1_local", [&](CheckResult& c) {
    for (const auto& h : pairs) {
      ++c.instances;
      if (!thm1_essential_local_validate(g, h, s, p).implication_ok) fail(c, "implication violated at " + orders(h));
    }
  });

  run.check("thm2", [&](CheckResult& c) {
    for (auto v : {Thm2Variant::Normalizer, Thm2Variant::Inner}) {
      const ControlReport r = thm2_validate(g, s, p, v);
      ++c.instances;
      if (!r.implication_ok) fail(c, std::string("implication violated, variant ") + std::string(to_string(r.theorem)));
      if (v == Thm2Variant::Inner && r.cross_check != true) fail(c, "inner conclusion disagrees with p-nilpotency");
    }
  });

  run.check("thompson", [&](CheckResult& c) {
    std::vector<Subgroup> locals = essential_class_representatives(g, s);
    locals.push_back(s);
    for (const auto& pl : locals) {
      const AutSetup setup = automizer_setup(g, pl, p);
      const CriticalCertificate cert = find_thompson_d(setup);
      ++c.instances;
      if (!cert.checks.all()) fail(c, "D fails a check for P of order " + std::to_string(pl.order()));
      if (!cert.audit_ok()) fail(c, "maximal-abelian audit fails for P of order " + std::to_string(pl.order()));
    }
  });

  if (p != 2)
    run.check("conj_aut", [&](CheckResult& c) {
      for (const auto& h : pairs) {
        const ControlReport r = conj_automizer_control(g, h, s, p);
        ++c.instances;
        if (!r.implication_ok) fail(c, "implication violated at " + orders(h));
        if (!r.hypothesis.holds) continue;
        if (!thm1_hypothesis(g, h, s, p).holds) fail(c, "hypothesis without the Theorem 1 hypothesis at " + orders(h));
        if (r.cross_check != true) fail(c, "rederivation disagrees at " + orders(h));
      }
    });

  run.check("main_lemma", [&](CheckResult& c) {
    std::size_t refused = 0;
    const Subgroup n = normalizer(g, s);
    for (const Subgroup& h : {g, n, s})
      for (const auto& pp : subs)
        for (const Subgroup& q : {pp, center(pp)}) {
          try {
            if (!main_lemma_verify(g, h, s, p, pp, q)) fail(c, "returned false for |P|=" + std::to_string(pp.order()));
            ++c.instances;
          } catch (const PreconditionViolated&) {
            ++refused;
          }
        }
    if (c.ok) c.detail = std::to_string(refused) + " instances outside the preconditions";
  });
}

void family_checks(const LoadedEntry& e, EntryResult& out) {
  Runner run(out, 0);
  const FamilyTag& f = *e.entry.family;
  if (f.kind == "agl") {
    run.check("family_claims", [&](CheckResult& c) {
      const AglFamily fam = build_agl_family(f.p, f.n);
      if (fam.g.order() != e.group.order()) fail(c, "group file does not match the family");
      const AglClaims cl = verify_agl_claims(fam);
      for (const auto& x : cl.claims) {
        ++c.instances;
        if (!x.ok) fail(c, x.name + ": expected " + x.expected + ", got " + x.actual);
      }
    });
  } else if (f.kind == "sl23") {
    run.check("family_claims", [&](CheckResult& c) {
      const QuillenDemo q = quillen_demo();
      c.instances = 1;
      if (build_sl23().g.order() != e.group.order()) fail(c, "group file does not match the family");
      if (!q.reproduced()) fail(c, "Quillen obstruction not reproduced");
    });
  } else {
    run.check("family_claims", [&](CheckResult& c) { fail(c, "unknown family " + f.kind); });
  }
}

}  // namespace

bool EntryResult::ok() const {
  if (error) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.ok(); }));
}

std::size_t SuiteReport::failed() const { return entries.size() - passed(); }

std::vector<Subgroup> overgroup_pairs(const Subgroup& g, const Subgroup& s, const std::vector<Subgroup>& named,
                                      std::size_t scan_limit) {
  const Subgroup n = normalizer(g, s);
  std::vector<Subgroup> out;
  auto add = [&](Subgroup h) {
    if (s.is_subgroup_of(h) && std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
  };
  add(s);
  add(n);
  add(g);
  for (const auto& h : named) add(h);
  if (g.order() > scan_limit) return out;
  // every overgroup of S, by joining one element at a time
  std::unordered_set<ElementSet, ElementSetHash> listed, reached{s.members()};
  for (const auto& h : out) listed.insert(h.members());
  std::vector<Subgroup> lattice{s};
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (Elem x : g.elements()) {
      if (lattice[i].contains(x)) continue;
      Subgroup h = lattice[i].joined_with(x);
      if (!reached.insert(h.members()).second) continue;
      if (listed.insert(h.members()).second) out.push_back(h);
      lattice.push_back(std::move(h));
    }
  return out;
}

QuillenDemo quillen_demo() {
  const Sl23 sl = build_sl23();
  QuillenDemo d;
  d.elementary_abelian_hypothesis =
      thm1_hypothesis(sl.g, sl.s, sl.s, 2, SubgroupFilter::ElementaryAbelian).holds;
  const HypothesisResult h = thm1_hypothesis(sl.g, sl.s, sl.s, 2);
  d.exponent4_hypothesis = h.holds;
  d.witness = h.witness;
  d.fusion_equal = fusion_equal(sl.g, sl.s, sl.s, 2).equal;
  if (h.witness) {
    const Elem gi[] = {sl.i};
    const Elem gj[] = {sl.j};
    const auto& w = *h.witness;
    d.witness_is_i_to_j = w.a == Subgroup::generated(sl.table, gi) && w.b == Subgroup::generated(sl.table, gj) &&
                          w.images[w.a.position(sl.i)] == sl.j;
  }
  return d;
}

EntryResult run_entry(const LoadedEntry& e, const SuiteOptions& opt) {
  EntryResult out;
  out.name = e.entry.name;
  out.primes = e.entry.primes;
  if (e.error) {
    out.error = *e.error;
    return out;
  }
  out.order = e.group.order();
  Runner(out, 0).check("closure", [&](CheckResult& c) {
    c.instances = 1;
    if (!e.closure_ok) fail(c, "closure verification failed");
  });
  Runner(out, 0).check("expectations", [&](CheckResult& c) {
    for (const auto& a : e.audit) {
      ++c.instances;
      if (a.ok) continue;
      std::ostringstream why;
      why << a.expected.key << ": expected " << a.expected.value << ", got ";
      if (a.actual)
        why << *a.actual;
      else
        why << "nothing";
      fail(c, why.str());
    }
  });
  Runner(out, 0).check("primes", [&](CheckResult& c) {
    c.instances = 1;
    if (prime_divisors(e.group.order()) != e.entry.primes) fail(c, "prime list does not match |G|");
  });
  for (unsigned p : e.entry.primes) {
    try {
      prime_checks(e, p, opt, out);
    } catch (const std::exception& ex) {
      Runner(out, p).check("setup", [&](CheckResult& c) { fail(c, ex.what()); });
    }
  }
  if (e.entry.family) family_checks(e, out);
  return out;
}

SuiteReport run_suite(const std::vector<LoadedEntry>& corpus, const SuiteOptions& opt) {
  std::vector<const LoadedEntry*> chosen;
  for (const auto& e : corpus)
    if (name_matches(e.entry.name, opt.filter)) chosen.push_back(&e);
  SuiteReport report;
  report.entries.resize(chosen.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < chosen.size(); i = next++) report.entries[i] = run_entry(*chosen[i], opt);
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(opt.jobs, static_cast<unsigned>(chosen.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace fusionkit
