#include "fusionkit/permutation.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

#include "fusionkit/error.hpp"

namespace fusionkit {

bool is_bijection(std::span<const Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto x : images) {
    if (x >= images.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw InvalidPermutation("permutation of degree 0");
  if (!is_bijection(images_)) throw InvalidPermutation("image array is not a bijection");
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0 || degree > std::numeric_limits<Point>::max())
    throw InvalidPermutation("unsupported degree " + std::to_string(degree));
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<Point> images = identity(degree).images_;
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const std::size_t from = cycle[k];
      const std::size_t to = cycle[(k + 1) % cycle.size()];
      if (from >= degree || to >= degree)
        throw InvalidPermutation("cycle point " + std::to_string(std::max(from, to) + 1) +
                                 " exceeds degree " + std::to_string(degree));
      if (used[from]) throw InvalidPermutation("point " + std::to_string(from + 1) + " repeated in cycles");
      used[from] = true;
      images[from] = static_cast<Point>(to);
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree, const std::string& text) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  const auto skip_space = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError(0, "expected '(' in cycle notation near \"" + text.substr(i) + "\"");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) throw ParseError(0, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError(0, std::string("unexpected character '") + text[i] + "' in cycle");
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > 1'000'000) throw ParseError(0, "point out of range");
        ++i;
      }
      if (value == 0) throw ParseError(0, "cycle points are 1-based");
      cycle.push_back(value - 1);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw InvalidPermutation("degree mismatch in product");
  std::vector<Point> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[x] = rhs.images_[images_[x]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[images_[x]] = static_cast<Point>(x);
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::size_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t result = 1;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out << '(';
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (!first) out << ' ';
      out << y + 1;
      first = false;
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

}  // namespace fusionkit
