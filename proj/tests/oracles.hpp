#pragma once

// Brute-force reference computations used to cross-check the library. They
// avoid the library's shortcuts (cached tables, layered enumeration, coset
// skipping) and work straight from permutations or subsets.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "fusionkit/fusion.hpp"
#include "fusionkit/subgroup.hpp"

namespace fusionkit::oracle {

// Every subgroup, by repeatedly joining single elements onto known subgroups.
inline std::vector<Subgroup> all_subgroups_by_joins(const Subgroup& g) {
  std::vector<Subgroup> found{Subgroup::trivial(g.parent())};
  std::unordered_set<ElementSet, ElementSetHash> seen{found.front().members()};
  for (std::size_t i = 0; i < found.size(); ++i)
    for (Elem x : g.elements()) {
      if (found[i].contains(x)) continue;
      Subgroup h = found[i].joined_with(x);
      if (seen.insert(h.members()).second) found.push_back(std::move(h));
    }
  return found;
}

/// Number of subsets of g closed under multiplication (hence subgroups), by
/// checking every subset containing the identity. Only for |g| <= 16.
inline std::size_t subgroup_count_by_subsets(const Subgroup& g) {
  const std::size_t n = g.order();
  if (n > 16) throw std::invalid_argument("subset oracle limited to 16 elements");
  const auto& el = g.elements();
  const GroupTable& t = g.table();
  std::vector<std::size_t> pos(t.order(), SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) pos[el[i]] = i;
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (!(mask & 1U)) continue;  // el[0] is the identity
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      if (!(mask >> i & 1U)) continue;
      for (std::size_t j = 0; j < n && closed; ++j)
        if ((mask >> j & 1U) && !(mask >> pos[t.mul(el[i], el[j])] & 1U)) closed = false;
    }
    if (closed) ++count;
  }
  return count;
}

/// Hom_G(A,B) by conjugating permutations directly and looking the results up.
inline std::set<MapTable> hom_tables_by_permutations(const Subgroup& g, const Subgroup& a, const Subgroup& b) {
  const GroupTable& t = g.table();
  std::set<MapTable> out;
  for (Elem x : g.elements()) {
    const Permutation px = t.permutation(x);
    const Permutation inv = px.inverse();
    MapTable table;
    bool inside = true;
    for (Elem y : a.elements()) {
      const Elem img = *t.find(inv * t.permutation(y) * px);
      if (!b.contains(img)) {
        inside = false;
        break;
      }
      table.push_back(static_cast<std::uint32_t>(b.position(img)));
    }
    if (inside) out.insert(std::move(table));
  }
  return out;
}

/// Whether the p'-elements of g form a subgroup of order |g|_{p'}, which is the
/// only possible normal p-complement.
inline bool has_normal_p_complement(const Subgroup& g, unsigned p) {
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

}  // namespace fusionkit::oracle
