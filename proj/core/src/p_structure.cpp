#include "fusionkit/p_structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "fusionkit/error.hpp"
#include "fusionkit/fusion.hpp"

namespace fusionkit {

std::string_view to_string(SubgroupFilter f) {
  switch (f) {
    case SubgroupFilter::All: return "all";
    case SubgroupFilter::ElementaryAbelian: return "elementary_abelian";
    case SubgroupFilter::AbelianExponentAtMost4: return "abelian_exponent_le_4";
    case SubgroupFilter::CyclicOfOrderPOr4: return "cyclic_p_or_4";
    case SubgroupFilter::MaximalAbelian: return "maximal_abelian";
  }
  return "?";
}

SubgroupFilter subgroup_filter_from_string(std::string_view s) {
  for (auto f : {SubgroupFilter::All, SubgroupFilter::ElementaryAbelian, SubgroupFilter::AbelianExponentAtMost4,
                 SubgroupFilter::CyclicOfOrderPOr4, SubgroupFilter::MaximalAbelian})
    if (to_string(f) == s) return f;
  throw std::invalid_argument("unknown subgroup filter: " + std::string(s));
}

Subgroup sylow(const Subgroup& group, unsigned p) {
  if (!is_prime(p)) throw PNotPrime(p);
  const GroupTable& t = group.table();
  const std::size_t target = p_part(group.order(), p);
  if (target == 1) return Subgroup::trivial(group.parent());

  Elem seed = GroupTable::identity();
  std::size_t best = 1;
  for (Elem x : group.elements()) {
    const std::size_t o = t.element_order(x);
    if (o > best && is_power_of(o, p)) {
      best = o;
      seed = x;
    }
  }
  const Elem seed_gens[] = {seed};
  Subgroup current = Subgroup::generated(group.parent(), seed_gens);
  while (current.order() < target) {
    const Subgroup n = normalizer(group, current);
    bool extended = false;
    for (Elem y : n.elements()) {
      if (current.contains(y) || !current.contains(t.power(y, p))) continue;
      current = current.joined_with(y);
      extended = true;
      break;
    }
    if (!extended) throw std::logic_error("sylow: no p-element of N(P)/P found below the Sylow order");
  }
  return current;
}

void require_sylow(const Subgroup& group, const Subgroup& s, unsigned p) {
  if (!is_prime(p)) throw PNotPrime(p);
  if (s.parent() != group.parent() || !s.is_subgroup_of(group) || s.order() != p_part(group.order(), p))
    throw SylowMismatch("subgroup of order " + std::to_string(s.order()) + " is not a Sylow " +
                        std::to_string(p) + "-subgroup of a group of order " + std::to_string(group.order()));
}

Subgroup op_residual(const Subgroup& group, unsigned p) {
  if (!is_prime(p)) throw PNotPrime(p);
  std::vector<Elem> gens;
  for (Elem x : group.elements())
    if (group.table().element_order(x) % p != 0) gens.push_back(x);
  return Subgroup::generated(group.parent(), gens);
}

Subgroup hyperfocal_puig(const Subgroup& group, const Subgroup& s, unsigned p) {
  require_sylow(group, s, p);
  return intersection(s, op_residual(group, p));
}

Subgroup hyperfocal_fusion(const Subgroup& group, const Subgroup& s, unsigned p) {
  require_sylow(group, s, p);
  const GroupTable& t = group.table();
  const auto subs = enumerate_subgroups(s, SubgroupFilter::All);
  const auto classes = conjugacy_classes(s, subs);
  Subgroup result = Subgroup::trivial(group.parent());
  for (const auto& cls : classes) {
    const Subgroup& q = subs[cls.front()];
    if (q.is_trivial()) continue;
    const Automizer a = aut_group(group, q);
    const Subgroup residual = op_residual(a.aut_whole, p);
    for (Elem phi : residual.elements()) {
      if (phi == GroupTable::identity()) continue;
      const auto perm = a.aut->images(phi);
      for (std::size_t i = 0; i < q.order(); ++i) {
        const Elem x = q.elements()[i];
        const Elem y = q.elements()[perm[i]];
        const Elem c = t.mul(t.inv(x), y);
        if (!result.contains(c)) result = result.joined_with(c);
      }
    }
  }
  return result;
}

Subgroup focal_subgroup(const Subgroup& group, const Subgroup& s, unsigned p) {
  require_sylow(group, s, p);
  return intersection(s, derived_subgroup(group));
}

bool is_p_nilpotent(const Subgroup& group, unsigned p) {
  const Subgroup s = sylow(group, p);
  return hyperfocal_puig(group, s, p).is_trivial();
}

PLocalProfile p_local_profile(const Subgroup& group, unsigned p) {
  PLocalProfile prof;
  prof.prime = p;
  prof.sylow = sylow(group, p);
  prof.op_residual = op_residual(group, p);
  prof.hyperfocal = intersection(prof.sylow, prof.op_residual);
  prof.focal = focal_subgroup(group, prof.sylow, p);
  prof.p_nilpotent = prof.hyperfocal.is_trivial();
  return prof;
}

unsigned prime_of_p_group(const Subgroup& p_group) {
  const std::size_t n = p_group.order();
  if (n == 1) return 0;
  const auto primes = prime_divisors(n);
  if (primes.size() != 1)
    throw NotPGroup("subgroup of order " + std::to_string(n) + " is not a p-group");
  return primes.front();
}

namespace {

bool admissible(const Subgroup& h, SubgroupFilter f, unsigned p) {
  switch (f) {
    case SubgroupFilter::All: return true;
    case SubgroupFilter::ElementaryAbelian: return is_elementary_abelian(h, p);
    case SubgroupFilter::AbelianExponentAtMost4: {
      if (!is_abelian(h)) return false;
      const std::size_t e = exponent(h);
      return e == 1 || e == 2 || e == 4;
    }
    case SubgroupFilter::CyclicOfOrderPOr4: {
      const std::size_t n = h.order();
      return is_cyclic(h) && (n == 1 || n == p || (p == 2 && n == 4));
    }
    case SubgroupFilter::MaximalAbelian: return is_abelian(h);
  }
  return false;
}

}  // namespace

std::vector<Subgroup> enumerate_subgroups(const Subgroup& p_group, SubgroupFilter filter, std::size_t cap) {
  const unsigned p = prime_of_p_group(p_group);
  const GroupTable& t = p_group.table();

  // Every subgroup of order p^(k+1) of a p-group contains a normal subgroup of
  // index p, so layer k+1 is reached from layer k by one cyclic extension. The
  // filters are subgroup-closed, which lets the layers be pruned.
  std::vector<Subgroup> all;
  std::vector<Subgroup> layer{Subgroup::trivial(p_group.parent())};
  std::size_t produced = 1;
  while (!layer.empty()) {
    std::vector<Subgroup> next;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (const Subgroup& k : layer) {
      const Subgroup n = normalizer(p_group, k);
      ElementSet covered = k.members();
      for (Elem x : n.elements()) {
        if (covered.test(x) || !k.contains(t.power(x, p))) continue;
        Subgroup ext = k.joined_with(x);
        covered |= ext.members();
        if (!admissible(ext, filter, p) || !seen.insert(ext.members()).second) continue;
        if (++produced > cap) throw CapExceeded("subgroup enumeration exceeds the cap", cap);
        next.push_back(std::move(ext));
      }
    }
    for (auto& k : layer) all.push_back(std::move(k));
    layer = std::move(next);
  }

  std::vector<Subgroup> out;
  for (auto& h : all) {
    switch (filter) {
      case SubgroupFilter::CyclicOfOrderPOr4:
        if (h.is_trivial()) continue;
        break;
      case SubgroupFilter::MaximalAbelian:
        // An abelian subgroup is maximal abelian iff it is self-centralizing.
        if (centralizer(p_group, h).order() != h.order()) continue;
        break;
      default:
        break;
    }
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace fusionkit
