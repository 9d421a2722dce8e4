#include "fusionkit/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "fusionkit/error.hpp"

namespace fusionkit {

// Incremental closure under right multiplication by the generators.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(GroupPtr parent) : parent_(std::move(parent)), members_(parent_->order()) {
    members_.set(GroupTable::identity());
    list_.push_back(GroupTable::identity());
  }

  explicit SubgroupBuilder(const Subgroup& start)
      : parent_(start.parent_), members_(start.members_), list_(start.elements_), gens_(start.generators_) {}

  bool contains(Elem e) const { return members_.test(e); }

  void add_generator(Elem g) {
    if (g >= parent_->order()) throw std::out_of_range("element index out of range");
    if (members_.test(g)) return;
    gens_.push_back(g);
    const GroupTable& t = *parent_;
    const std::size_t old = list_.size();
    for (std::size_t i = 0; i < old; ++i) visit(t.mul(list_[i], g));
    for (std::size_t i = old; i < list_.size(); ++i)
      for (Elem h : gens_) visit(t.mul(list_[i], h));
  }

  Subgroup build() && {
    Subgroup s;
    s.parent_ = std::move(parent_);
    s.members_ = std::move(members_);
    std::sort(list_.begin(), list_.end());
    s.elements_ = std::move(list_);
    s.generators_ = std::move(gens_);
    return s;
  }

 private:
  void visit(Elem e) {
    if (!members_.test(e)) {
      members_.set(e);
      list_.push_back(e);
    }
  }

  GroupPtr parent_;
  ElementSet members_;
  std::vector<Elem> list_;
  std::vector<Elem> gens_;
};

Subgroup Subgroup::whole(GroupPtr parent) {
  const std::size_t n = parent->order();
  Subgroup s;
  s.members_ = ElementSet(n);
  s.elements_.resize(n);
  for (Elem e = 0; e < n; ++e) {
    s.members_.set(e);
    s.elements_[e] = e;
  }
  for (Elem g : parent->generators())
    if (g != GroupTable::identity() &&
        std::find(s.generators_.begin(), s.generators_.end(), g) == s.generators_.end())
      s.generators_.push_back(g);
  s.parent_ = std::move(parent);
  return s;
}

Subgroup Subgroup::trivial(GroupPtr parent) { return SubgroupBuilder(std::move(parent)).build() ; }

Subgroup Subgroup::generated(GroupPtr parent, std::span<const Elem> elements) {
  SubgroupBuilder b(std::move(parent));
  for (Elem e : elements) b.add_generator(e);
  return std::move(b).build();
}

Subgroup Subgroup::from_members(GroupPtr parent, ElementSet members) {
  if (members.size() != parent->order()) throw std::invalid_argument("member set size mismatch");
  SubgroupBuilder b(parent);
  members.for_each([&](std::size_t e) {
    if (!b.contains(static_cast<Elem>(e))) b.add_generator(static_cast<Elem>(e));
  });
  Subgroup s = std::move(b).build();
  if (!(s.members_ == members)) throw std::logic_error("from_members: member set is not a subgroup");
  return s;
}

std::size_t Subgroup::position(Elem e) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  return static_cast<std::size_t>(it - elements_.begin());
}

Subgroup Subgroup::joined_with(Elem e) const {
  SubgroupBuilder b(*this);
  b.add_generator(e);
  return std::move(b).build();
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements() < b.elements();
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  ElementSet m = a.members();
  m &= b.members();
  return Subgroup::from_members(a.parent(), std::move(m));
}

Subgroup centralizer(const Subgroup& ambient, const Subgroup& target) {
  const GroupTable& t = ambient.table();
  ElementSet m(t.order());
  for (Elem g : ambient.elements()) {
    bool ok = true;
    for (Elem x : target.generators())
      if (t.mul(g, x) != t.mul(x, g)) {
        ok = false;
        break;
      }
    if (ok) m.set(g);
  }
  return Subgroup::from_members(ambient.parent(), std::move(m));
}

Subgroup centralizer(const Subgroup& ambient, Elem x) {
  const Elem gens[] = {x};
  return centralizer(ambient, Subgroup::generated(ambient.parent(), gens));
}

Subgroup normalizer(const Subgroup& ambient, const Subgroup& target) {
  const GroupTable& t = ambient.table();
  ElementSet m(t.order());
  for (Elem g : ambient.elements()) {
    bool ok = true;
    for (Elem x : target.generators())
      if (!target.contains(t.conj(x, g))) {
        ok = false;
        break;
      }
    if (ok) m.set(g);
  }
  return Subgroup::from_members(ambient.parent(), std::move(m));
}

Subgroup center(const Subgroup& group) { return centralizer(group, group); }

bool is_normal(const Subgroup& h, const Subgroup& in) {
  const GroupTable& t = h.table();
  for (Elem g : in.generators())
    for (Elem x : h.generators())
      if (!h.contains(t.conj(x, g))) return false;
  return true;
}

Subgroup normal_closure(const Subgroup& ambient, std::span<const Elem> generators) {
  const GroupTable& t = ambient.table();
  Subgroup h = Subgroup::generated(ambient.parent(), generators);
  for (;;) {
    bool grown = false;
    for (Elem g : ambient.generators()) {
      for (std::size_t i = 0; i < h.generators().size(); ++i) {
        const Elem y = t.conj(h.generators()[i], g);
        if (!h.contains(y)) {
          h = h.joined_with(y);
          grown = true;
        }
      }
    }
    if (!grown) return h;
  }
}

Subgroup derived_subgroup(const Subgroup& group) {
  const GroupTable& t = group.table();
  std::vector<Elem> comms;
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(t.commutator(gens[i], gens[j]));
  return normal_closure(group, comms);
}

Subgroup conjugate(const Subgroup& h, Elem g) {
  const GroupTable& t = h.table();
  ElementSet m(t.order());
  for (Elem x : h.elements()) m.set(t.conj(x, g));
  return Subgroup::from_members(h.parent(), std::move(m));
}

namespace {

bool conjugates_into(const GroupTable& t, const Subgroup& h, Elem g, const Subgroup& k) {
  for (Elem x : h.generators())
    if (!k.contains(t.conj(x, g))) return false;
  return true;
}

}  // namespace

ConjugacyResult are_conjugate(const Subgroup& ambient, const Subgroup& h, const Subgroup& k) {
  if (h.order() != k.order() || exponent(h) != exponent(k) || is_abelian(h) != is_abelian(k)) return {};
  const GroupTable& t = ambient.table();
  for (Elem g : ambient.elements())
    if (conjugates_into(t, h, g, k)) return {true, g};
  return {};
}

std::vector<Subgroup> conjugates_within(const Subgroup& ambient, const Subgroup& q, const Subgroup& within) {
  const GroupTable& t = ambient.table();
  std::vector<Subgroup> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (Elem g : ambient.elements()) {
    if (!conjugates_into(t, q, g, within)) continue;
    ElementSet m(t.order());
    for (Elem x : q.elements()) m.set(t.conj(x, g));
    if (!seen.insert(m).second) continue;
    out.push_back(Subgroup::from_members(ambient.parent(), std::move(m)));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const Subgroup& ambient,
                                                        std::span<const Subgroup> subgroups) {
  const GroupTable& t = ambient.table();
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> where;
  for (std::size_t i = 0; i < subgroups.size(); ++i) where.emplace(subgroups[i].members(), i);
  std::vector<bool> assigned(subgroups.size(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> cls;
    const Subgroup& q = subgroups[i];
    // Conjugating by g and by ng (n in N(Q)) agree, so skip known normalizer cosets.
    ElementSet done(t.order());
    const Subgroup nq = normalizer(ambient, q);
    for (Elem g : ambient.elements()) {
      if (done.test(g)) continue;
      for (Elem n : nq.elements()) done.set(t.mul(n, g));
      ElementSet m(t.order());
      for (Elem x : q.elements()) m.set(t.conj(x, g));
      auto it = where.find(m);
      if (it == where.end() || assigned[it->second]) continue;
      assigned[it->second] = true;
      cls.push_back(it->second);
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

CentralSeries upper_central_series(const Subgroup& p) {
  const GroupTable& t = p.table();
  CentralSeries series;
  series.terms.push_back(Subgroup::trivial(p.parent()));
  for (;;) {
    const Subgroup& z = series.terms.back();
    ElementSet m(t.order());
    for (Elem x : p.elements()) {
      bool ok = true;
      for (Elem g : p.generators())
        if (!z.contains(t.commutator(x, g))) {
          ok = false;
          break;
        }
      if (ok) m.set(x);
    }
    if (m == z.members()) break;
    series.terms.push_back(Subgroup::from_members(p.parent(), std::move(m)));
  }
  return series;
}

std::size_t element_order(const GroupTable& g, Elem e) { return g.element_order(e); }

std::size_t exponent(const Subgroup& h) {
  std::size_t e = 1;
  for (Elem x : h.elements()) e = std::lcm(e, h.table().element_order(x));
  return e;
}

bool is_abelian(const Subgroup& h) {
  const GroupTable& t = h.table();
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (t.mul(gens[i], gens[j]) != t.mul(gens[j], gens[i])) return false;
  return true;
}

bool is_cyclic(const Subgroup& h) {
  for (Elem x : h.elements())
    if (h.table().element_order(x) == h.order()) return true;
  return false;
}

bool is_elementary_abelian(const Subgroup& h, unsigned p) {
  if (!is_abelian(h)) return false;
  for (Elem x : h.elements())
    if (x != GroupTable::identity() && h.table().element_order(x) != p) return false;
  return true;
}

bool is_power_of(std::size_t n, unsigned p) {
  if (n == 0 || p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_p_group(const Subgroup& h, unsigned p) { return is_power_of(h.order(), p); }

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::size_t p_part(std::size_t n, unsigned p) {
  std::size_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::vector<unsigned> prime_divisors(std::size_t n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; static_cast<std::size_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

}  // namespace fusionkit
