#include "fusionkit/fusion.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "fusionkit/error.hpp"

namespace fusionkit {

bool HomSet::contains(const MapTable& m) const { return std::binary_search(maps.begin(), maps.end(), m); }

HomSet hom_set(const Subgroup& acting, const Subgroup& a, const Subgroup& b) {
  const GroupTable& t = acting.table();
  std::set<MapTable> tables;
  for (Elem g : acting.elements()) {
    bool inside = true;
    for (Elem x : a.generators())
      if (!b.contains(t.conj(x, g))) {
        inside = false;
        break;
      }
    if (!inside) continue;
    MapTable table(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
      table[i] = static_cast<std::uint32_t>(b.position(t.conj(a.elements()[i], g)));
    tables.insert(std::move(table));
  }
  return HomSet{a, b, std::vector<MapTable>(tables.begin(), tables.end())};
}

std::vector<ConjugationMap> conjugation_maps(const Subgroup& acting, const Subgroup& a) {
  const GroupTable& t = acting.table();
  const Subgroup c = centralizer(acting, a);
  ElementSet done(t.order());
  std::vector<ConjugationMap> out;
  for (Elem g : acting.elements()) {
    if (done.test(g)) continue;
    // c_{xg} = c_g on A for x in C(A): one map per right coset.
    for (Elem x : c.elements()) done.set(t.mul(x, g));
    ConjugationMap m{std::vector<Elem>(a.order()), ElementSet(t.order())};
    for (std::size_t i = 0; i < a.order(); ++i) {
      m.images[i] = t.conj(a.elements()[i], g);
      m.image.set(m.images[i]);
    }
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.images < y.images; });
  return out;
}

MapTable to_positions(const ConjugationMap& m, const Subgroup& codomain) {
  MapTable table(m.images.size());
  for (std::size_t i = 0; i < m.images.size(); ++i)
    table[i] = static_cast<std::uint32_t>(codomain.position(m.images[i]));
  return table;
}

namespace {

std::vector<Point> induced_permutation(const Subgroup& q, Elem n) {
  const GroupTable& t = q.table();
  std::vector<Point> perm(q.order());
  for (std::size_t i = 0; i < q.order(); ++i) perm[i] = static_cast<Point>(q.position(t.conj(q.elements()[i], n)));
  return perm;
}

}  // namespace

Elem Automizer::image_of(Elem n) const {
  const auto perm = induced_permutation(base, n);
  const auto e = aut->find(perm);
  if (!e) throw std::logic_error("element does not normalize the automizer base");
  return *e;
}

Subgroup Automizer::image_of(const Subgroup& k) const {
  const Subgroup nk = intersection(normalizer, k);
  std::vector<Elem> gens;
  for (Elem n : nk.generators()) gens.push_back(image_of(n));
  return Subgroup::generated(aut, gens);
}

Automizer aut_group(const Subgroup& acting, const Subgroup& q, const std::optional<Subgroup>& s) {
  Automizer a;
  a.base = q;
  a.normalizer = normalizer(acting, q);
  std::vector<Permutation> perms;
  for (Elem n : a.normalizer.generators()) perms.emplace_back(induced_permutation(q, n));
  a.aut = GroupTable::enumerate(q.order(), perms, a.normalizer.order() + 1);
  a.aut_whole = Subgroup::whole(a.aut);
  a.inner = a.image_of(q);
  if (s) a.from_s = a.image_of(*s);
  return a;
}

void require_chain(const Subgroup& g, const Subgroup& h, const Subgroup& s, unsigned p) {
  if (!is_prime(p)) throw PNotPrime(p);
  if (g.parent() != h.parent() || g.parent() != s.parent())
    throw PreconditionViolated("subgroups live in different group tables");
  if (!h.is_subgroup_of(g)) throw PreconditionViolated("H is not contained in G");
  if (!s.is_subgroup_of(h)) throw PreconditionViolated("S is not contained in H");
  if (s.order() != p_part(g.order(), p)) throw PreconditionViolated("S is not a Sylow subgroup of G");
}

namespace {

void require_local(const Subgroup& g, const Subgroup& s, const Subgroup& q) {
  if (g.parent() != s.parent() || q.parent() != s.parent())
    throw PreconditionViolated("subgroups live in different group tables");
  if (!s.is_subgroup_of(g)) throw PreconditionViolated("S is not contained in G");
  const unsigned p = prime_of_p_group(s);
  if (p != 0 && s.order() != p_part(g.order(), p)) throw PreconditionViolated("S is not a Sylow subgroup of G");
  if (!q.is_subgroup_of(s)) throw PreconditionViolated("Q is not contained in S");
}

}  // namespace

FusionDiff fusion_equal(const Subgroup& g, const Subgroup& h, const Subgroup& s, unsigned p, bool all_subgroups) {
  require_chain(g, h, s, p);
  const auto subs = enumerate_subgroups(s, SubgroupFilter::All);
  std::vector<std::size_t> reps;
  if (all_subgroups) {
    reps.resize(subs.size());
    std::iota(reps.begin(), reps.end(), 0);
  } else {
    for (const auto& cls : conjugacy_classes(h, subs)) reps.push_back(cls.front());
    std::sort(reps.begin(), reps.end());
  }
  for (std::size_t idx : reps) {
    const Subgroup& q = subs[idx];
    const auto maps_h = conjugation_maps(h, q);
    const auto maps_g = conjugation_maps(g, q);
    std::set<std::vector<Elem>> h_tables;
    for (const auto& m : maps_h)
      if (m.image.is_subset_of(s.members())) h_tables.insert(m.images);
    for (const auto& m : maps_g) {
      if (!m.image.is_subset_of(s.members()) || h_tables.count(m.images)) continue;
      return FusionDiff{false, FusionWitness{q, m.images}};
    }
  }
  return FusionDiff{true, std::nullopt};
}

bool is_fully_normalized(const Subgroup& g, const Subgroup& s, const Subgroup& q) {
  require_local(g, s, q);
  const std::size_t own = normalizer(s, q).order();
  for (const auto& other : conjugates_within(g, q, s))
    if (normalizer(s, other).order() > own) return false;
  return true;
}

bool is_centric(const Subgroup& g, const Subgroup& s, const Subgroup& q) {
  require_local(g, s, q);
  for (const auto& other : conjugates_within(g, q, s))
    if (!centralizer(s, other).is_subgroup_of(other)) return false;
  return true;
}

bool is_radical(const Subgroup& g, const Subgroup& s, const Subgroup& q) {
  require_local(g, s, q);
  const unsigned p = prime_of_p_group(s);
  if (p == 0) return true;
  const Automizer a = aut_group(g, q);
  // Inn(Q) is a normal p-subgroup of Aut_G(Q), so O_p(Out) = 1 iff O_p(Aut) = Inn.
  return largest_normal_p_subgroup(a.aut_whole, p).order() == a.inner.order();
}

bool is_essential(const Subgroup& g, const Subgroup& s, const Subgroup& q) {
  require_local(g, s, q);
  if (q == s) return false;
  if (!is_centric(g, s, q)) return false;
  const unsigned p = prime_of_p_group(s);
  const Automizer a = aut_group(g, q);
  return has_strongly_p_embedded(a.aut_whole, a.inner, p);
}

std::vector<Subgroup> sylow_subgroups(const Subgroup& group, unsigned p) {
  const GroupTable& t = group.table();
  const Subgroup first = sylow(group, p);
  const Subgroup n = normalizer(group, first);
  ElementSet done(t.order());
  std::vector<Subgroup> out;
  for (Elem g : group.elements()) {
    if (done.test(g)) continue;
    for (Elem x : n.elements()) done.set(t.mul(x, g));
    out.push_back(conjugate(first, g));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Subgroup largest_normal_p_subgroup(const Subgroup& group, unsigned p) {
  const auto all = sylow_subgroups(group, p);
  ElementSet m = all.front().members();
  for (const auto& t : all) m &= t.members();
  return Subgroup::from_members(group.parent(), std::move(m));
}

bool has_strongly_p_embedded(const Subgroup& group, const Subgroup& normal_p, unsigned p) {
  if (p_part(group.order(), p) == normal_p.order()) return false;
  const auto sylows = sylow_subgroups(group, p);
  const std::size_t k = sylows.size();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      ElementSet m = sylows[i].members();
      m &= sylows[j].members();
      if (m.count() > normal_p.order()) parent[find(i)] = find(j);
    }
  for (std::size_t i = 1; i < k; ++i)
    if (find(i) != find(0)) return true;
  return false;
}

NormalizerSystem normalizer_system_group(const Subgroup& g, const Subgroup& s, unsigned p) {
  require_sylow(g, s, p);
  const Subgroup n = normalizer(g, s);
  const GroupTable& t = g.table();
  std::vector<Permutation> perms;
  for (Elem x : n.generators()) perms.push_back(t.permutation(x));
  NormalizerSystem out;
  out.table = GroupTable::enumerate(t.degree(), perms, n.order() + 1);
  out.group = Subgroup::whole(out.table);
  std::vector<Elem> sgens;
  for (Elem x : s.generators()) sgens.push_back(*out.table->find(t.images(x)));
  out.sylow = Subgroup::generated(out.table, sgens);
  return out;
}

}  // namespace fusionkit
