#pragma once

#include <random>
#include <vector>

#include "clifftwist/multivector.hpp"

namespace clifftwist::testutil {

/// Independent sign oracle for the monomial product: concatenate the index
/// lists, bubble-sort with a sign flip per adjacent swap of distinct
/// generators, then contract equal neighbours with their eps factor.
inline SignedMask product_by_swaps(Mask a, Mask b, const Signature& sig) {
  std::vector<int> ix = monomial_indices(a);
  const auto bi = monomial_indices(b);
  ix.insert(ix.end(), bi.begin(), bi.end());
  int sign = +1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < ix.size(); ++i) {
      if (ix[i] > ix[i + 1]) {
        std::swap(ix[i], ix[i + 1]);
        sign = -sign;
        moved = true;
      }
    }
  }
  std::vector<int> reduced;
  for (std::size_t i = 0; i < ix.size();) {
    if (i + 1 < ix.size() && ix[i] == ix[i + 1]) {
      sign *= sig.eps(ix[i]);
      i += 2;
    } else {
      reduced.push_back(ix[i]);
      ++i;
    }
  }
  Mask m = 0;
  for (int i : reduced) m |= Mask{1} << (i - 1);
  return SignedMask{sign, m};
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  Mask mask(int n) {
    std::uniform_int_distribution<std::uint64_t> d(0, (std::uint64_t{1} << n) - 1);
    return static_cast<Mask>(d(gen));
  }

  Rational rational() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den_pow(0, 3);
    int n = num(gen);
    if (n == 0) n = 1;
    return Rational(n, 1 << den_pow(gen));
  }

  Multivector multivector(const Signature& sig, int max_terms = 6) {
    std::uniform_int_distribution<int> nt(1, max_terms);
    Multivector u(sig);
    const int t = nt(gen);
    for (int i = 0; i < t; ++i) u.accumulate(mask(sig.n()), rational());
    return u;
  }
};

}  // namespace clifftwist::testutil
