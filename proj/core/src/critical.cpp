#include "fusionkit/critical.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fusionkit/error.hpp"

namespace fusionkit {
namespace {

std::vector<Point> inner_permutation(const GroupTable& p, Elem x) {
  std::vector<Point> perm(p.order());
  for (Elem y = 0; y < p.order(); ++y) perm[y] = static_cast<Point>(p.conj(y, x));
  return perm;
}

Subgroup inner_subgroup(const GroupPtr& auts, const Subgroup& p_group) {
  std::vector<Elem> gens;
  for (Elem x : p_group.generators()) {
    const auto e = auts->find(inner_permutation(p_group.table(), x));
    if (!e) throw PreconditionViolated("automorphism group does not contain Inn(P)");
    gens.push_back(*e);
  }
  return Subgroup::generated(auts, gens);
}

}  // namespace

AutSetup AutSetup::from_automorphisms(GroupPtr p_table, std::span<const Permutation> automorphisms, unsigned p) {
  if (!is_prime(p)) throw PNotPrime(p);
  const GroupTable& t = *p_table;
  if (!is_power_of(t.order(), p)) throw NotPGroup("P has order " + std::to_string(t.order()));
  if (t.order() > std::numeric_limits<Point>::max()) throw PreconditionViolated("P too large");
  for (const auto& phi : automorphisms) {
    if (phi.degree() != t.order()) throw PreconditionViolated("automorphism degree differs from |P|");
    for (Elem a = 0; a < t.order(); ++a)
      for (Elem b = 0; b < t.order(); ++b)
        if (phi[t.mul(a, b)] != t.mul(phi[a], phi[b]))
          throw PreconditionViolated("permutation is not a group automorphism of P");
  }
  AutSetup s;
  s.prime = p;
  s.p_table = std::move(p_table);
  s.p_group = Subgroup::whole(s.p_table);
  std::vector<Permutation> gens(automorphisms.begin(), automorphisms.end());
  for (Elem x : s.p_group.generators()) gens.emplace_back(inner_permutation(t, x));
  s.auts = GroupTable::enumerate(t.order(), gens, std::numeric_limits<std::size_t>::max());
  s.aut_group = Subgroup::whole(s.auts);
  s.inn = inner_subgroup(s.auts, s.p_group);
  return s;
}

AutSetup automizer_setup(const Subgroup& ambient, const Subgroup& p_sub, unsigned p) {
  if (!is_prime(p)) throw PNotPrime(p);
  if (!is_p_group(p_sub, p)) throw NotPGroup("subgroup of order " + std::to_string(p_sub.order()) + " is not a " +
                                             std::to_string(p) + "-group");
  const GroupTable& amb = ambient.table();
  AutSetup s;
  s.prime = p;
  std::vector<Permutation> pgens;
  for (Elem x : p_sub.generators()) pgens.push_back(amb.permutation(x));
  s.p_table = GroupTable::enumerate(amb.degree(), pgens, p_sub.order() + 1);
  s.p_group = Subgroup::whole(s.p_table);
  const GroupTable& pt = *s.p_table;

  std::vector<Elem> local(amb.order(), std::numeric_limits<Elem>::max());
  s.ambient_elements.resize(pt.order());
  for (Elem i = 0; i < pt.order(); ++i) {
    const Elem e = *amb.find(pt.images(i));
    s.ambient_elements[i] = e;
    local[e] = i;
  }

  const Subgroup n = normalizer(ambient, p_sub);
  std::vector<Permutation> auts;
  for (Elem g : n.generators()) {
    std::vector<Point> perm(pt.order());
    for (Elem i = 0; i < pt.order(); ++i) perm[i] = static_cast<Point>(local[amb.conj(s.ambient_elements[i], g)]);
    auts.emplace_back(std::move(perm));
  }
  s.auts = GroupTable::enumerate(pt.order(), auts, n.order() + 1);
  s.aut_group = Subgroup::whole(s.auts);
  s.inn = inner_subgroup(s.auts, s.p_group);
  return s;
}

Subgroup commutator_with_auts(const AutSetup& setup, const Subgroup& target, std::span<const Elem> auts) {
  const GroupTable& pt = *setup.p_table;
  std::vector<Elem> gens;
  for (Elem phi : auts)
    for (Elem x : target.elements()) {
      const Elem c = pt.mul(pt.inv(x), setup.apply(phi, x));
      if (c != GroupTable::identity()) gens.push_back(c);
    }
  return Subgroup::generated(setup.p_table, gens);
}

Subgroup to_ambient(const AutSetup& setup, const GroupPtr& ambient, const Subgroup& in_p) {
  std::vector<Elem> gens;
  for (Elem x : in_p.generators()) gens.push_back(setup.ambient_elements.at(x));
  return Subgroup::generated(ambient, gens);
}

CandidateChecks check_candidate(const AutSetup& setup, const Subgroup& d) {
  const GroupTable& pt = *setup.p_table;
  const unsigned p = setup.prime;
  CandidateChecks c;

  c.g_invariant = true;
  for (Elem phi : setup.aut_group.generators())
    for (Elem x : d.generators())
      if (!d.contains(setup.apply(phi, x))) c.g_invariant = false;

  const std::size_t e = exponent(d);
  c.exponent_ok = p == 2 ? (e == 1 || e == 2 || e == 4) : (e == 1 || e == p);

  const Subgroup zd = center(d);
  c.class_condition = true;
  for (Elem x : d.elements()) {
    for (Elem y : setup.p_group.elements())
      if (!zd.contains(pt.commutator(x, y))) {
        c.class_condition = false;
        break;
      }
    if (!c.class_condition) break;
  }

  c.faithful = true;
  for (Elem phi : setup.aut_group.elements()) {
    if (phi == GroupTable::identity() || setup.auts->element_order(phi) % p == 0) continue;
    bool moves = false;
    for (Elem x : d.generators())
      if (setup.apply(phi, x) != x) {
        moves = true;
        break;
      }
    if (!moves) {
      c.faithful = false;
      break;
    }
  }
  return c;
}

std::vector<MaximalAbelianAudit> audit_maximal_abelians(const AutSetup& setup, const Subgroup& d) {
  std::vector<MaximalAbelianAudit> out;
  for (auto& a : enumerate_subgroups(d, SubgroupFilter::MaximalAbelian)) {
    MaximalAbelianAudit row;
    row.normal_in_p = is_normal(a, setup.p_group);
    ElementSet fixing(setup.auts->order());
    for (Elem phi : setup.aut_group.elements()) {
      bool fixes = true;
      for (Elem x : a.generators())
        if (setup.apply(phi, x) != x) {
          fixes = false;
          break;
        }
      if (fixes) fixing.set(phi);
    }
    row.centralizer_order = fixing.count();
    row.centralizer_is_p_group = is_power_of(row.centralizer_order, setup.prime);
    row.a = std::move(a);
    out.push_back(std::move(row));
  }
  return out;
}

bool CriticalCertificate::audit_ok() const {
  return std::all_of(maximal_abelians.begin(), maximal_abelians.end(),
                     [](const auto& r) { return r.normal_in_p && r.centralizer_is_p_group; });
}

CriticalCertificate find_thompson_d(const AutSetup& setup, std::size_t cap) {
  const Subgroup residual = op_residual(setup.aut_group, setup.prime);
  CriticalCertificate cert;
  cert.commutator = commutator_with_auts(setup, setup.p_group, residual.elements());
  for (const auto& d : enumerate_subgroups(cert.commutator, SubgroupFilter::All, cap)) {
    ++cert.candidates_examined;
    const CandidateChecks c = check_candidate(setup, d);
    if (!c.all()) continue;
    cert.d = d;
    cert.checks = c;
    cert.maximal_abelians = audit_maximal_abelians(setup, d);
    return cert;
  }
  throw NotFound("no G-invariant subgroup of [P, O^p(G)] satisfies the critical-subgroup conditions");
}

}  // namespace fusionkit
