#pragma once

#include <stdexcept>
#include <string>

namespace clifftwist {

inline constexpr int kMaxGenerators = 32;

/// Signature (p,q) of a non-degenerate diagonal quadratic form: generators
/// e_1..e_p square to +1, e_{p+1}..e_{p+q} square to -1.
struct Signature {
  int p = 0;
  int q = 0;

  int n() const { return p + q; }

  /// Square of generator e_i, 1-based index.
  int eps(int i) const { return i <= p ? +1 : -1; }

  /// p - q, the quantity whose value mod 8 drives the classification.
  int d() const { return p - q; }

  bool semisimple() const { return (((p - q) % 4) + 4) % 4 == 1; }

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature make_signature(int p, int q) {
  if (p < 0 || q < 0)
    throw std::invalid_argument("signature: p and q must be non-negative");
  if (p + q > kMaxGenerators)
    throw std::invalid_argument("signature: p+q exceeds the engine limit of " +
                                std::to_string(kMaxGenerators) + " generators");
  return Signature{p, q};
}

inline std::string to_string(const Signature& s) {
  return "Cl(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
}

}  // namespace clifftwist
