#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "clifftwist/monomial.hpp"
#include "clifftwist/rational.hpp"
#include "clifftwist/signature.hpp"

namespace clifftwist {

/// Sparse exact-rational linear combination of basis monomials over a fixed
/// signature. Zero coefficients are never stored, so equality of the term
/// maps is equality of elements. Immutable in spirit: every operation
/// returns a fresh value.
class Multivector {
 public:
  explicit Multivector(Signature sig) : sig_(sig) {}

  static Multivector zero(Signature sig) { return Multivector(sig); }

  static Multivector scalar(Signature sig, Rational c) {
    Multivector u(sig);
    u.accumulate(0, std::move(c));
    return u;
  }

  static Multivector basis(Signature sig, Mask m, Rational c = Rational(1)) {
    Multivector u(sig);
    u.accumulate(m, std::move(c));
    return u;
  }

  /// Generator e_i, 1-based.
  static Multivector generator(Signature sig, int i);

  const Signature& sig() const { return sig_; }
  const std::map<Mask, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c * e_m, dropping the term if it cancels.
  void accumulate(Mask m, Rational c);

  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  Signature sig_;
  std::map<Mask, Rational> terms_;
};

Multivector operator+(const Multivector& u, const Multivector& v);
Multivector operator-(const Multivector& u, const Multivector& v);
Multivector operator-(const Multivector& u);
Multivector operator*(const Multivector& u, const Multivector& v);
Multivector operator*(const Rational& c, const Multivector& u);
Multivector operator*(const Multivector& u, const Rational& c);

inline Multivector add(const Multivector& u, const Multivector& v) { return u + v; }
inline Multivector mul(const Multivector& u, const Multivector& v) { return u * v; }
inline Multivector scale(const Multivector& u, const Rational& c) { return c * u; }

/// Per-monomial sign (-1)^g, extended linearly.
Multivector grade_involution(const Multivector& u);
/// Per-monomial sign (-1)^{g(g-1)/2}.
Multivector reversion(const Multivector& u);
/// Per-monomial sign (-1)^{g(g+1)/2}; equals grade_involution of reversion.
Multivector conjugation(const Multivector& u);

/// The transposition anti-involution: acts on a basis monomial as m -> m^{-1}.
/// Computed here through its factorization into reversion followed by the
/// eps-dependent generator sign flip, independently of the twisted-ring route.
Multivector transposition(const Multivector& u);

/// The star map of the twisted group ring R^t[(Z_2)^n]: term-wise monomial
/// inverse through the cocycle sign. Kept as a deliberately separate code
/// path from transposition().
Multivector star(const Multivector& u);

/// Terms in canonical monomial order.
std::vector<std::pair<Mask, Rational>> sorted_terms(const Multivector& u);

/// "1/2 + 1/2 e13" style rendering, terms in canonical order.
std::string render(const Multivector& u);

}  // namespace clifftwist
