#pragma once

#include <array>
#include <string>
#include <vector>

#include "clifftwist/rational.hpp"
#include "clifftwist/signature.hpp"

namespace clifftwist {

/// The (double) division ring K = f Cl f, keyed by (p-q) mod 8:
/// residues 0,2 -> R; 3,7 -> C; 4,6 -> H; 1 -> 2R; 5 -> 2H.
enum class KClass { R, C, H, DR, DH };

KClass k_class(const Signature& sig);

/// Real dimension of one component: R/2R -> 1, C -> 2, H/2H -> 4.
int k_dim(KClass cls);

inline bool k_is_double(KClass cls) {
  return cls == KClass::DR || cls == KClass::DH;
}

/// "real", "complex", "quaternionic", "2R", "2H".
std::string k_class_name(KClass cls);

/// Multiplication table of K on its monomial basis modulo f:
/// (m_i f)(m_j f) = prod_sign[i][j] * (m_{prod_index[i][j]} f). For the
/// doubled classes the grade-involute component has the same index table but
/// possibly different signs, kept separately.
struct KStructure {
  KClass cls = KClass::R;
  int dim = 1;
  std::array<std::array<int, 4>, 4> prod_index{};
  std::array<std::array<int, 4>, 4> prod_sign{};
  std::array<std::array<int, 4>, 4> prod_sign_hat{};
  std::vector<std::string> basis_names;  // rendering only
};

/// An element of K in coordinates over the data6 basis; `b` holds the second
/// component for the doubled classes and stays empty otherwise.
struct KElement {
  KClass cls = KClass::R;
  std::vector<Rational> a;
  std::vector<Rational> b;

  friend bool operator==(const KElement&, const KElement&) = default;
};

KElement k_zero(const KStructure& ks);
KElement k_one(const KStructure& ks);
bool k_is_zero(const KElement& x);

KElement k_add(const KElement& x, const KElement& y);
KElement k_sub(const KElement& x, const KElement& y);
KElement k_neg(const KElement& x);
KElement k_scale(const Rational& c, const KElement& x);
KElement k_mul(const KStructure& ks, const KElement& x, const KElement& y);

/// The transposition anti-involution restricted to K: identity on R/2R,
/// complex conjugation on C, quaternionic conjugation on H/2H (negates every
/// non-unit coordinate, componentwise for doubles).
KElement k_conjugate(const KElement& x);

/// Multiplicative inverse of a nonzero element (componentwise for doubles;
/// throws on a zero component).
KElement k_inverse(const KStructure& ks, const KElement& x);

std::string k_render(const KStructure& ks, const KElement& x);

}  // namespace clifftwist
