#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fusionkit/field.hpp"
#include "fusionkit/subgroup.hpp"

namespace fusionkit {

inline constexpr std::size_t kFamilyGroupCap = 100000;

/// AΓL(1,p^n) acting on the field elements, with its subgroups
/// H = AGL(1,p^n), S = translations, D = H_0 and D̂ = G_0.
struct AglFamily {
  unsigned p = 0;
  unsigned n = 0;
  FiniteField field;
  GroupPtr table;
  Subgroup g, h, s, d, d_hat;
  Elem translation = 0;     // x ↦ x + 1
  Elem multiplication = 0;  // x ↦ ωx, ω the primitive element
  Elem frobenius = 0;       // x ↦ x^p
};

/// Throws PNotPrime; PreconditionViolated when n < 2, p | n or p^n > 512;
/// CapExceeded when |G| exceeds kFamilyGroupCap.
AglFamily build_agl_family(unsigned p, unsigned n);

struct ClaimCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct AglClaims {
  unsigned p = 0;
  unsigned n = 0;
  std::size_t order_g = 0, order_h = 0, order_s = 0, order_d_hat = 0;
  std::size_t v_count = 0;          // subgroups of order p in S
  std::size_t hom_h_min = 0;        // min and max of |Hom_H(A,B)| over order-p A, B
  std::size_t hom_h_max = 0;
  std::size_t order_hyperfocal = 0;
  bool cyclic_control = false;      // Hom_H(A,B) = Hom_G(A,B) for order-p A, B
  bool full_control = false;        // F_S(H) = F_S(G)
  std::vector<ClaimCheck> claims;

  bool all_ok() const;
  /// Throws ClaimFailed naming the first failing claim.
  void throw_if_failed() const;
};

AglClaims verify_agl_claims(const AglFamily& family);

/// SL(2,3) on the eight non-zero vectors of F_3^2.
struct Sl23 {
  GroupPtr table;
  Subgroup g, s;
  /// i generates the canonically first cyclic subgroup of order 4 in S; j is
  /// the image of i under the first conjugation map onto the second one; k = ij.
  Elem i = 0, j = 0, k = 0;
};

Sl23 build_sl23();

/// <a, b | a^m = 1, b^k = a^t, a^b = a^r> in its regular representation on
/// the words a^i b^j (point i + m j). Throws PreconditionViolated when the
/// parameters do not define a group of order m k.
GroupPtr build_metacyclic(unsigned m, unsigned k, unsigned t, unsigned r);

}  // namespace fusionkit
