#include "fusionkit/group_table.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "fusionkit/error.hpp"

namespace fusionkit {
namespace {

constexpr Elem kEmptySlot = std::numeric_limits<Elem>::max();
constexpr std::size_t kCayleyLimit = 2048;

std::vector<Point>& scratch(std::size_t degree) {
  thread_local std::vector<Point> buffer;
  buffer.resize(degree);
  return buffer;
}

}  // namespace

std::size_t default_group_cap() {
  if (const char* env = std::getenv("FUSIONKIT_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultGroupCap;
}

std::size_t GroupTable::hash_images(std::span<const Point> images) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto x : images) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

void GroupTable::insert_index(Elem e) {
  const std::size_t mask = slots_.size() - 1;
  std::size_t pos = hash_images(images(e)) & mask;
  while (slots_[pos] != kEmptySlot) pos = (pos + 1) & mask;
  slots_[pos] = e;
}

std::optional<Elem> GroupTable::find(std::span<const Point> probe) const {
  if (probe.size() != degree_ || slots_.empty()) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  std::size_t pos = hash_images(probe) & mask;
  while (slots_[pos] != kEmptySlot) {
    const auto cand = images(slots_[pos]);
    if (std::equal(cand.begin(), cand.end(), probe.begin())) return slots_[pos];
    pos = (pos + 1) & mask;
  }
  return std::nullopt;
}

Permutation GroupTable::permutation(Elem e) const {
  const auto im = images(e);
  return Permutation(std::vector<Point>(im.begin(), im.end()));
}

Elem GroupTable::compose_lookup(Elem a, Elem b) const {
  auto& out = scratch(degree_);
  const Point* pa = images_.data() + static_cast<std::size_t>(a) * degree_;
  const Point* pb = images_.data() + static_cast<std::size_t>(b) * degree_;
  for (std::size_t x = 0; x < degree_; ++x) out[x] = pb[pa[x]];
  return *find(out);
}

Elem GroupTable::mul(Elem a, Elem b) const {
  if (!cayley_.empty()) return cayley_[static_cast<std::size_t>(a) * order_ + b];
  return compose_lookup(a, b);
}

Elem GroupTable::power(Elem a, std::size_t k) const {
  Elem result = identity();
  Elem base = a;
  while (k) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::shared_ptr<const GroupTable> GroupTable::enumerate(std::size_t degree,
                                                        std::span<const Permutation> generators,
                                                        std::size_t cap) {
  if (cap == 0) throw CapExceeded("group enumeration cap must be positive", cap);
  std::shared_ptr<GroupTable> g(new GroupTable());
  const auto id = Permutation::identity(degree);
  for (const auto& gen : generators) {
    if (gen.degree() != degree)
      throw InvalidPermutation("generator degree " + std::to_string(gen.degree()) + " differs from " +
                               std::to_string(degree));
    if (!is_bijection(gen.images())) throw InvalidPermutation("generator is not a bijection");
  }
  g->degree_ = degree;
  g->slots_.assign(64, kEmptySlot);

  const auto append = [&](std::span<const Point> im) -> Elem {
    if (g->order_ >= cap) throw CapExceeded("group closure exceeds the enumeration cap", cap);
    const Elem e = static_cast<Elem>(g->order_++);
    g->images_.insert(g->images_.end(), im.begin(), im.end());
    if (2 * g->order_ > g->slots_.size()) {
      g->slots_.assign(g->slots_.size() * 2, kEmptySlot);
      for (Elem k = 0; k < g->order_; ++k) g->insert_index(k);
    } else {
      g->insert_index(e);
    }
    return e;
  };

  append(id.images());
  std::vector<Point> buffer(degree);
  for (std::size_t head = 0; head < g->order_; ++head) {
    for (const auto& gen : generators) {
      const Point* cur = g->images_.data() + head * degree;
      for (std::size_t x = 0; x < degree; ++x) buffer[x] = gen[cur[x]];
      if (!g->find(buffer)) append(buffer);
    }
  }

  for (const auto& gen : generators) g->generators_.push_back(*g->find(gen.images()));

  const std::size_t n = g->order_;
  g->inverse_.resize(n);
  g->orders_.resize(n);
  for (Elem e = 0; e < n; ++e) {
    const auto im = g->images(e);
    for (std::size_t x = 0; x < degree; ++x) buffer[im[x]] = static_cast<Point>(x);
    g->inverse_[e] = *g->find(buffer);
    std::vector<bool> seen(degree, false);
    std::size_t ord = 1;
    for (std::size_t x = 0; x < degree; ++x) {
      if (seen[x]) continue;
      std::size_t len = 0;
      for (std::size_t y = x; !seen[y]; y = im[y]) {
        seen[y] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    g->orders_[e] = static_cast<std::uint32_t>(ord);
  }

  if (n <= kCayleyLimit) {
    g->cayley_.resize(n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) g->cayley_[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(g->compose_lookup(a, b));
  }
  return g;
}

bool GroupTable::verify_closure() const {
  auto& out = scratch(degree_);
  for (Elem a = 0; a < order_; ++a) {
    const auto ia = images(a);
    for (Elem b = 0; b < order_; ++b) {
      const auto ib = images(b);
      for (std::size_t x = 0; x < degree_; ++x) out[x] = ib[ia[x]];
      if (!find(out)) return false;
    }
    for (std::size_t x = 0; x < degree_; ++x) out[ia[x]] = static_cast<Point>(x);
    if (!find(out)) return false;
  }
  return true;
}

}  // namespace fusionkit
