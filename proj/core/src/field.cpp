#include "fusionkit/field.hpp"

#include <stdexcept>
#include <string>

#include "fusionkit/error.hpp"
#include "fusionkit/subgroup.hpp"

namespace fusionkit {
namespace {

using Poly = std::vector<unsigned>;  // coefficients, low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo the monic polynomial m over F_p.
Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    trim(a);
  }
  return a;
}

Poly monic_from_index(unsigned index, unsigned degree, unsigned p) {
  Poly m(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    m[i] = index % p;
    index /= p;
  }
  m[degree] = 1;
  return m;
}

unsigned ipow(unsigned b, unsigned e) {
  unsigned r = 1;
  while (e--) r *= b;
  return r;
}

bool irreducible(const Poly& f, unsigned p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= n; ++d)
    for (unsigned idx = 0; idx < ipow(p, d); ++idx)
      if (poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
  return true;
}

}  // namespace

FiniteField::FiniteField(unsigned p, unsigned n) : p_(p), n_(n), q_(1) {
  if (!is_prime(p)) throw PNotPrime(p);
  if (n == 0) throw PreconditionViolated("field degree must be at least 1");
  for (unsigned i = 0; i < n; ++i) {
    q_ *= p;
    if (q_ > 1024) throw PreconditionViolated("field order exceeds 1024");
  }

  for (unsigned idx = 0;; ++idx) {
    Poly m = monic_from_index(idx, n, p);
    if (irreducible(m, p)) {
      modulus_ = std::move(m);
      break;
    }
  }

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  std::vector<Poly> polys(q_);
  for (unsigned a = 0; a < q_; ++a) polys[a] = coefficients(a);
  const auto encode = [&](const Poly& c) {
    unsigned v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
  };
  for (unsigned a = 0; a < q_; ++a) {
    Poly na(n);
    for (unsigned i = 0; i < n; ++i) na[i] = (p - polys[a][i]) % p;
    neg_[a] = static_cast<std::uint16_t>(encode(na));
    for (unsigned b = 0; b < q_; ++b) {
      Poly s(n), prod(2 * n, 0);
      for (unsigned i = 0; i < n; ++i) s[i] = (polys[a][i] + polys[b][i]) % p;
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + polys[a][i] * polys[b][j]) % p;
      add_[a * q_ + b] = static_cast<std::uint16_t>(encode(s));
      mul_[a * q_ + b] = static_cast<std::uint16_t>(encode(poly_mod(prod, modulus_, p)));
    }
  }

  inv_.assign(q_, 0);
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul(a, b) == 1) {
        inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }

  for (unsigned a = 1; a < q_; ++a)
    if (multiplicative_order(a) == q_ - 1) {
      primitive_ = a;
      break;
    }
}

unsigned FiniteField::inv(unsigned a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  return inv_[a];
}

unsigned FiniteField::pow(unsigned a, unsigned long long k) const {
  unsigned r = 1;
  unsigned b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

unsigned FiniteField::multiplicative_order(unsigned a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  unsigned k = 1;
  for (unsigned x = a; x != 1; x = mul(x, a)) ++k;
  return k;
}

std::vector<unsigned> FiniteField::coefficients(unsigned a) const {
  std::vector<unsigned> c(n_);
  for (unsigned i = 0; i < n_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

}  // namespace fusionkit
