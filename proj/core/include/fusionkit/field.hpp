#pragma once

#include <cstdint>
#include <vector>

namespace fusionkit {

/// GF(p^n) with elements encoded as integers 0..q-1: digit i in base p is the
/// coefficient of x^i modulo the defining polynomial.
class FiniteField {
 public:
  /// Throws PNotPrime, or PreconditionViolated when n = 0 or q > 1024.
  FiniteField(unsigned p, unsigned n);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  unsigned order() const { return q_; }

  /// Coefficients c_0..c_n of the monic defining polynomial: the least monic
  /// irreducible of degree n when the lower coefficients are read as the base-p
  /// integer c_0 + c_1 p + ... + c_{n-1} p^{n-1}.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  /// Throws std::domain_error for 0.
  unsigned inv(unsigned a) const;
  unsigned pow(unsigned a, unsigned long long k) const;
  unsigned frobenius(unsigned a) const { return pow(a, p_); }
  unsigned multiplicative_order(unsigned a) const;
  /// Smallest element of multiplicative order q - 1.
  unsigned primitive_element() const { return primitive_; }

  std::vector<unsigned> coefficients(unsigned a) const;

 private:
  unsigned p_, n_, q_;
  std::vector<unsigned> modulus_;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
  unsigned primitive_ = 1;
};

}  // namespace fusionkit
