#include "fusionkit/families.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>

#include "fusionkit/error.hpp"
#include "fusionkit/fusion.hpp"
#include "fusionkit/p_structure.hpp"

namespace fusionkit {
namespace {

template <class F>
Permutation point_map(unsigned q, F&& f) {
  std::vector<Point> img(q);
  for (unsigned x = 0; x < q; ++x) img[x] = static_cast<Point>(f(x));
  return Permutation(std::move(img));
}

Elem find_elem(const GroupTable& t, const Permutation& perm) { return *t.find(perm); }

}  // namespace

AglFamily build_agl_family(unsigned p, unsigned n) {
  if (!is_prime(p)) throw PNotPrime(p);
  if (n < 2) throw PreconditionViolated("n must be at least 2");
  if (n % p == 0) throw PreconditionViolated("p divides n");
  std::size_t q = 1;
  for (unsigned i = 0; i < n; ++i) q *= p;
  if (q > 512) throw PreconditionViolated("p^n exceeds 512");

  AglFamily f{p, n, FiniteField(p, n), nullptr, {}, {}, {}, {}, {}};
  const FiniteField& k = f.field;
  const unsigned w = k.primitive_element();
  const auto qq = static_cast<unsigned>(q);
  const Permutation t = point_map(qq, [&](unsigned x) { return k.add(x, 1); });
  const Permutation m = point_map(qq, [&](unsigned x) { return k.mul(w, x); });
  const Permutation s = point_map(qq, [&](unsigned x) { return k.frobenius(x); });
  const std::array<Permutation, 3> gens{t, m, s};
  f.table = GroupTable::enumerate(q, gens, kFamilyGroupCap);
  const GroupTable& tab = *f.table;
  f.translation = find_elem(tab, t);
  f.multiplication = find_elem(tab, m);
  f.frobenius = find_elem(tab, s);

  f.g = Subgroup::whole(f.table);
  const Elem hg[] = {f.translation, f.multiplication};
  f.h = Subgroup::generated(f.table, hg);
  std::vector<Elem> sg;
  for (unsigned i = 0, b = 1; i < n; ++i, b *= p)
    sg.push_back(find_elem(tab, point_map(qq, [&](unsigned x) { return k.add(x, b); })));
  f.s = Subgroup::generated(f.table, sg);
  const Elem dg[] = {f.multiplication};
  f.d = Subgroup::generated(f.table, dg);
  const Elem dhg[] = {f.multiplication, f.frobenius};
  f.d_hat = Subgroup::generated(f.table, dhg);
  return f;
}

bool AglClaims::all_ok() const {
  return std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.ok; });
}

void AglClaims::throw_if_failed() const {
  for (const auto& c : claims)
    if (!c.ok) throw ClaimFailed(c.name + ": expected " + c.expected + ", got " + c.actual);
}

AglClaims verify_agl_claims(const AglFamily& f) {
  const GroupTable& t = *f.table;
  const std::size_t q = f.field.order();
  const unsigned p = f.p;
  AglClaims r;
  r.p = p;
  r.n = f.n;
  r.order_g = f.g.order();
  r.order_h = f.h.order();
  r.order_s = f.s.order();
  r.order_d_hat = f.d_hat.order();
  const auto add = [&](std::string name, std::string expected, std::string actual) {
    const bool ok = expected == actual;
    r.claims.push_back({std::move(name), std::move(expected), std::move(actual), ok});
  };
  const auto str = [](std::size_t v) { return std::to_string(v); };
  const auto tf = [](bool b) { return std::string(b ? "true" : "false"); };

  add("group_orders",
      str(q * (q - 1) * f.n) + "/" + str(q * (q - 1)) + "/" + str(q) + "/" + str((q - 1) * f.n),
      str(r.order_g) + "/" + str(r.order_h) + "/" + str(r.order_s) + "/" + str(r.order_d_hat));
  add("s_elementary_abelian", "true", tf(is_elementary_abelian(f.s, p)));

  // D acts regularly on the non-zero field elements.
  std::set<Point> orbit;
  for (Elem d : f.d.elements()) orbit.insert(t.images(d)[1]);
  add("d_regular_on_nonzero", "true", tf(f.d.order() == q - 1 && orbit.size() == q - 1 && !orbit.count(0)));

  bool power = true;
  for (Elem d : f.d.elements()) power = power && t.conj(d, f.frobenius) == t.power(d, p);
  add("frobenius_is_p_th_power", "true", tf(power));

  const auto order_p = enumerate_subgroups(f.s, SubgroupFilter::CyclicOfOrderPOr4);
  r.v_count = order_p.size();
  add("v_count", str((q - 1) / (p - 1)), str(r.v_count));

  r.hom_h_min = SIZE_MAX;
  r.cyclic_control = true;
  for (const auto& a : order_p) {
    const auto maps_h = conjugation_maps(f.h, a);
    const auto maps_g = conjugation_maps(f.g, a);
    std::set<std::vector<Elem>> in_h;
    for (const auto& m : maps_h) in_h.insert(m.images);
    for (const auto& b : order_p) {
      std::size_t count = 0;
      for (const auto& m : maps_h)
        if (m.image.is_subset_of(b.members())) ++count;
      r.hom_h_min = std::min(r.hom_h_min, count);
      r.hom_h_max = std::max(r.hom_h_max, count);
    }
    for (const auto& m : maps_g)
      if (!in_h.count(m.images)) r.cyclic_control = false;
  }
  add("hom_h_order_p", str(p - 1) + ".." + str(p - 1), str(r.hom_h_min) + ".." + str(r.hom_h_max));

  const Subgroup hyp = hyperfocal_puig(f.g, f.s, p);
  r.order_hyperfocal = hyp.order();
  std::vector<Elem> comm;
  for (Elem x : f.s.elements())
    for (Elem d : f.d.generators()) comm.push_back(t.commutator(x, d));
  const Subgroup sd = Subgroup::generated(f.table, comm);
  add("hyperfocal_equals_s", "true", tf(hyp == f.s && sd == f.s));
  add("cyclic_control", "true", tf(r.cyclic_control));

  r.full_control = fusion_equal(f.g, f.h, f.s, p).equal;
  add("no_full_control", "true", tf(!r.full_control));
  return r;
}

Sl23 build_sl23() {
  // Points: the non-zero vectors (x, y) of F_3^2 in the order x + 3y.
  std::vector<std::array<unsigned, 2>> vecs;
  for (unsigned v = 1; v < 9; ++v) vecs.push_back({v % 3, v / 3});
  const auto matrix = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
    std::vector<Point> img(8);
    for (unsigned i = 0; i < 8; ++i) {
      const unsigned x = (a * vecs[i][0] + b * vecs[i][1]) % 3;
      const unsigned y = (c * vecs[i][0] + d * vecs[i][1]) % 3;
      img[i] = static_cast<Point>(x + 3 * y - 1);
    }
    return Permutation(std::move(img));
  };
  const std::array<Permutation, 2> gens{matrix(1, 1, 0, 1), matrix(1, 0, 1, 1)};
  Sl23 out;
  out.table = GroupTable::enumerate(8, gens);
  out.g = Subgroup::whole(out.table);
  out.s = sylow(out.g, 2);
  const auto c4 = enumerate_subgroups(out.s, SubgroupFilter::CyclicOfOrderPOr4);
  std::vector<Subgroup> fours;
  for (const auto& c : c4)
    if (c.order() == 4) fours.push_back(c);
  const Subgroup& first = fours.at(0);
  const Subgroup& second = fours.at(1);
  out.i = *std::find_if(first.elements().begin(), first.elements().end(),
                        [&](Elem e) { return out.table->element_order(e) == 4; });
  for (const auto& m : conjugation_maps(out.g, first))
    if (m.image == second.members()) {
      out.j = m.images[first.position(out.i)];
      break;
    }
  out.k = out.table->mul(out.i, out.j);
  return out;
}

GroupPtr build_metacyclic(unsigned m, unsigned k, unsigned t, unsigned r) {
  if (m < 1 || k < 1 || t >= m || r >= m) throw PreconditionViolated("invalid metacyclic parameters");
  unsigned s = 0;
  for (unsigned x = 0; x < m; ++x)
    if ((x * r) % m == 1 % m) s = x;
  if (m > 1 && (r * s) % m != 1) throw PreconditionViolated("r is not a unit modulo m");
  // b^j a = a^(s^j) b^j with s = r^-1.
  std::vector<unsigned> s_pow(k, 1 % m);
  for (unsigned j = 1; j < k; ++j) s_pow[j] = (s_pow[j - 1] * s) % m;
  std::vector<Point> by_a(m * k), by_b(m * k);
  for (unsigned j = 0; j < k; ++j)
    for (unsigned i = 0; i < m; ++i) {
      by_a[i + m * j] = static_cast<Point>((i + s_pow[j]) % m + m * j);
      by_b[i + m * j] = static_cast<Point>(j + 1 < k ? i + m * (j + 1) : (i + t) % m);
    }
  std::vector<Permutation> gens;
  gens.emplace_back(std::move(by_a));
  gens.emplace_back(std::move(by_b));
  auto table = GroupTable::enumerate(m * k, gens, m * k + 1);
  if (table->order() != m * k) throw PreconditionViolated("metacyclic parameters do not define a group of order m k");
  return table;
}

}  // namespace fusionkit
