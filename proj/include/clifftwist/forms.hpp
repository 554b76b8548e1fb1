#pragma once

#include <optional>
#include <vector>

#include "clifftwist/clidata.hpp"

namespace clifftwist {

enum class ProductKind { tp, beta_plus, beta_minus };

enum class InvolutionKind { reversion_kind, conjugation_kind };

/// Conjugation carried by the left slot of a form on K: identity, the
/// standard K conjugation, or some other anti-involution of K (the
/// "nonstandard" case, e.g. the star map on H).
enum class ConjKind { none, k_conjugation, nonstandard };

/// Transposition scalar product: T_eps(psi) phi = lambda f, returned as
/// lambda in K. Componentwise on S + S-hat in the semisimple case.
KElement tp_product(const Multivector& psi, const Multivector& phi,
                    const CliData& cd);

/// The monomial s in the data7 transversal with alpha(f) = s f s^-1, where
/// alpha is reversion (for beta+) or conjugation (for beta-); first match in
/// canonical order, or nothing (the associated beta form is then zero).
std::optional<VeeElement> find_s(const CliData& cd, InvolutionKind kind);

/// Lounesto scalar products: beta+ = s1 rev(psi) phi, beta- = s2 conj(psi) phi.
KElement beta_product(const Multivector& psi, const Multivector& phi,
                      const CliData& cd, ProductKind kind);

/// N x N Gram matrix of a scalar product over the data7 spinor basis, with
/// the anti-involution sigma of K carried by the left slot determined
/// mechanically (coordinate matrix of lambda -> s alpha(lambda) s^-1).
struct GramForm {
  Signature sig;
  KClass cls = KClass::R;
  ProductKind product = ProductKind::tp;
  ConjKind conj = ConjKind::none;
  int N = 1;
  std::vector<KElement> entries;  // row-major
  bool zero = false;
  /// Coordinate matrices of sigma on K, per component (column l = image of
  /// the l-th basis element). Equal to the identity for ConjKind::none.
  std::vector<std::vector<Rational>> sigma;
  std::vector<std::vector<Rational>> sigma_hat;
  std::optional<VeeElement> s;

  const KElement& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * N + j];
  }
};

GramForm gram(const CliData& cd, ProductKind kind);

}  // namespace clifftwist
