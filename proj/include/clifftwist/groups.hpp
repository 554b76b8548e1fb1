#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clifftwist/idempotent.hpp"
#include "clifftwist/monomial.hpp"

namespace clifftwist {

/// A signed basis monomial +-m, an element of the vee group.
struct VeeElement {
  Mask mask = 0;
  int sign = +1;

  /// Dense encoding (mask << 1 | negative-bit), used as a set key.
  std::uint64_t key() const {
    return (std::uint64_t{mask} << 1) | (sign < 0 ? 1u : 0u);
  }
  static VeeElement from_key(std::uint64_t k) {
    return VeeElement{static_cast<Mask>(k >> 1), (k & 1) ? -1 : +1};
  }

  friend bool operator==(const VeeElement&, const VeeElement&) = default;
};

inline VeeElement vee_mul(const VeeElement& a, const VeeElement& b,
                          const Signature& sig) {
  const SignedMask r = monomial_product(a.mask, b.mask, sig);
  return VeeElement{r.mask, a.sign * b.sign * r.sign};
}

inline VeeElement vee_inverse(const VeeElement& a, const Signature& sig) {
  const SignedMask r = monomial_inverse(a.mask, sig);
  return VeeElement{r.mask, a.sign * r.sign};
}

inline Multivector to_multivector(const VeeElement& a, const Signature& sig) {
  return Multivector::basis(sig, a.mask, Rational(a.sign));
}

/// Element order inside listings: canonical monomial order, + before -.
inline bool vee_less(const VeeElement& a, const VeeElement& b) {
  if (a.mask != b.mask) return monomial_less(a.mask, b.mask);
  return a.sign > b.sign;
}

enum class GroupKind {
  vee,
  stabilizer,
  idempotent_group,
  field_group,
  commutator,
  centralizer,
  custom,
};

/// An explicitly enumerated subgroup of the vee group.
class GroupSubset {
 public:
  GroupSubset(Signature sig, GroupKind kind, std::vector<VeeElement> elems);

  const Signature& sig() const { return sig_; }
  GroupKind kind() const { return kind_; }
  const std::vector<VeeElement>& elements() const { return elems_; }
  std::size_t order() const { return elems_.size(); }

  bool contains(const VeeElement& e) const;
  bool contains_subgroup(const GroupSubset& other) const;

  /// Closure under product and inverse, identity present.
  bool is_closed() const;

  /// Every conjugate g x g^-1, g in ambient, stays inside.
  bool is_normal_in(const GroupSubset& ambient) const;

  /// Monomials occurring (each exactly once; +-m collapse), canonical order.
  std::vector<Mask> monomials() const;

  friend bool operator==(const GroupSubset& a, const GroupSubset& b) {
    return a.sig_ == b.sig_ && a.elems_ == b.elems_;
  }

 private:
  Signature sig_;
  GroupKind kind_;
  std::vector<VeeElement> elems_;  // sorted by key()
};

/// G_{p,q} = { +-m : m a basis monomial }, order 2^{1+p+q}.
GroupSubset vee_group(const Signature& sig);

/// Closure of a generating set under products.
GroupSubset generated_subgroup(const Signature& sig, GroupKind kind,
                               std::vector<VeeElement> gens);

/// Stabilizer G_{p,q}(f): all m with m f m^-1 = f, by brute force over the
/// whole vee group with sparse multivector conjugation.
GroupSubset stabilizer(const PrimitiveIdempotent& f);

/// T_{p,q}(f) = <+-1, gens of f>, order 2^{1+k}.
GroupSubset idempotent_group(const PrimitiveIdempotent& f);

/// K_{p,q}(f) = <+-1, m : m in the K-spanning monomial set>.
GroupSubset field_group(const PrimitiveIdempotent& f,
                        const std::vector<Mask>& k_monomials);

/// Set product {ab : a in A, b in B}.
GroupSubset product_set(const GroupSubset& a, const GroupSubset& b);

GroupSubset intersection(const GroupSubset& a, const GroupSubset& b);

/// Commutator subgroup: closure of {aba^-1b^-1}.
GroupSubset commutator_subgroup(const GroupSubset& g);

/// Elements of `ambient` commuting with x / with every element of `set`.
GroupSubset centralizer(const VeeElement& x, const GroupSubset& ambient);
GroupSubset centralizer(const GroupSubset& set, const GroupSubset& ambient);

/// Canonical transversal of a subgroup: one representative per left coset,
/// the positive-sign element with the minimal monomial; 1 represents the
/// identity coset and the reps are listed in canonical order.
struct Transversal {
  Signature sig;
  std::vector<VeeElement> reps;
  std::size_t subgroup_order = 0;
  std::size_t ambient_order = 0;
};

Transversal transversal(const GroupSubset& subgroup, const GroupSubset& ambient);

/// Expected order of the stabilizer per the signature: 2^{1+p+r_{q-p}} in the
/// simple case, 2^{2+p+r_{q-p}} in the semisimple case.
std::uint64_t stabilizer_order_expected(const Signature& sig);

/// Expected field group order: 2, 4 or 8 by (p-q) mod 8.
std::uint64_t field_group_order_expected(const Signature& sig);

}  // namespace clifftwist
