#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "clifftwist/signature.hpp"

namespace clifftwist {

/// A basis monomial e_A of Cl(p,q), encoded as an index set: bit i-1 of the
/// mask is set iff generator e_i occurs. Mask 0 is the identity monomial.
using Mask = std::uint32_t;

inline int grade(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) {
  return n == 0 ? 0u : (n >= 32 ? ~0u : ((Mask{1} << n) - 1u));
}

/// Inverse Gray code h: h(b)_i = sum_{j<=i} b_j mod 2 (prefix parity).
inline Mask gray_inverse(Mask b, int n) {
  Mask h = b;
  h ^= h << 1;
  h ^= h << 2;
  h ^= h << 4;
  h ^= h << 8;
  h ^= h << 16;
  return h & full_mask(n);
}

struct SignedMask {
  int sign = +1;  // +1 or -1
  Mask mask = 0;

  friend bool operator==(const SignedMask&, const SignedMask&) = default;
};

/// Clifford product of basis monomials through the twisted-group-ring sign:
/// e_a e_b = (-1)^{sum_{i<=p} a_i b_i} * w_a(h(b)) * e_{a xor b}, where
/// w_a(c) = (-1)^{sum a_i c_i} is the Walsh function and h the inverse Gray
/// code. This is the normative product of the engine.
inline SignedMask monomial_product(Mask a, Mask b, const Signature& sig) {
  const Mask pmask = full_mask(sig.p);
  int par = std::popcount(a & b & pmask);        // (-1)^{sum_{i<=p} a_i b_i}
  par += std::popcount(a & gray_inverse(b, sig.n()));  // Walsh factor
  return SignedMask{(par & 1) ? -1 : +1, a ^ b};
}

/// Sign s with m*m = s*1.
inline int monomial_square_sign(Mask m, const Signature& sig) {
  return monomial_product(m, m, sig).sign;
}

/// Inverse of a basis monomial: (s, m) with (s*m)*m = 1.
inline SignedMask monomial_inverse(Mask m, const Signature& sig) {
  return SignedMask{monomial_square_sign(m, sig), m};
}

/// Sign s with e_A e_B = s * e_B e_A: s = (-1)^(|A||B| - |A&B|).
inline int commutation_sign(Mask a, Mask b) {
  const int x = grade(a) * grade(b) - std::popcount(a & b);
  return (x & 1) ? -1 : +1;
}

/// Canonical admissible order: by grade first, then lexicographically on the
/// ascending index lists (so e14 precedes e23). 1 comes first.
inline bool monomial_less(Mask a, Mask b) {
  const int ga = grade(a), gb = grade(b);
  if (ga != gb) return ga < gb;
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

inline std::vector<int> monomial_indices(Mask m) {
  std::vector<int> ix;
  while (m != 0) {
    ix.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return ix;
}

/// Canonical textual rendering: "1" for the identity, "e13" for single-digit
/// index algebras, "e{1,10}" once indices beyond 9 exist.
inline std::string monomial_name(Mask m, int n) {
  if (m == 0) return "1";
  const auto ix = monomial_indices(m);
  std::string s = "e";
  if (n <= 9) {
    for (int i : ix) s += std::to_string(i);
  } else {
    s += '{';
    for (std::size_t k = 0; k < ix.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(ix[k]);
    }
    s += '}';
  }
  return s;
}

/// All 2^n basis monomials in canonical order.
std::vector<Mask> all_monomials_sorted(int n);

}  // namespace clifftwist
