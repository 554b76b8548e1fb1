#pragma once

#include <vector>

#include "clifftwist/multivector.hpp"

namespace clifftwist {

/// Radon-Hurwitz number r_i: r_0..r_7 = 0,1,2,2,3,3,3,3 with
/// r_{i+8} = r_i + 4, extended to negative i by r_{i-8} = r_i - 4.
int radon_hurwitz(int i);

/// Number of idempotent factors, k = q - r_{q-p}.
int idempotent_k(const Signature& sig);

/// The k commuting square-+1 basis monomials whose product of (1 +- e)/2
/// factors is the default primitive idempotent. Deterministic construction:
/// the largest positive index is paired with the largest negative index,
/// then the next pair, and so on; what remains is a purely definite index
/// block, completed by a depth-first scan in canonical monomial order. The
/// completion gens are listed first, the pair gens after them in ascending
/// order of their positive index.
std::vector<Mask> idempotent_generators(const Signature& sig);

/// The factored idempotent of a signature: commuting generator monomials,
/// their +-1 signs, and the expanded multivector value.
struct PrimitiveIdempotent {
  Signature sig;
  std::vector<Mask> gens;
  std::vector<int> signs;
  Multivector value;
};

/// f = prod_j (1 + signs[j] * gens[j]) / 2; default signs are all plus.
/// k = 0 degenerates to f = 1.
PrimitiveIdempotent primitive_idempotent(const Signature& sig,
                                         std::vector<int> signs = {});

/// All 2^k sign choices: mutually annihilating, summing to the identity.
std::vector<PrimitiveIdempotent> complete_idempotent_set(const Signature& sig);

inline Multivector grade_involute_idempotent(const PrimitiveIdempotent& f) {
  return grade_involution(f.value);
}

/// e = f + f-hat, the generator of the faithful ideal in the semisimple case.
inline Multivector semisimple_unit(const PrimitiveIdempotent& f) {
  return f.value + grade_involution(f.value);
}

}  // namespace clifftwist
