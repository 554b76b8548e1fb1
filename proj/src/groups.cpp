#include "clifftwist/groups.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace clifftwist {

namespace {

std::vector<VeeElement> sorted_by_key(std::vector<VeeElement> v) {
  std::sort(v.begin(), v.end(),
            [](const VeeElement& a, const VeeElement& b) { return a.key() < b.key(); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

GroupSubset::GroupSubset(Signature sig, GroupKind kind, std::vector<VeeElement> elems)
    : sig_(sig), kind_(kind), elems_(sorted_by_key(std::move(elems))) {}

bool GroupSubset::contains(const VeeElement& e) const {
  return std::binary_search(
      elems_.begin(), elems_.end(), e,
      [](const VeeElement& a, const VeeElement& b) { return a.key() < b.key(); });
}

bool GroupSubset::contains_subgroup(const GroupSubset& other) const {
  for (const auto& e : other.elements())
    if (!contains(e)) return false;
  return true;
}

bool GroupSubset::is_closed() const {
  if (!contains(VeeElement{0, +1})) return false;
  for (const auto& a : elems_) {
    if (!contains(vee_inverse(a, sig_))) return false;
    for (const auto& b : elems_)
      if (!contains(vee_mul(a, b, sig_))) return false;
  }
  return true;
}

bool GroupSubset::is_normal_in(const GroupSubset& ambient) const {
  for (const auto& g : ambient.elements()) {
    const VeeElement ginv = vee_inverse(g, sig_);
    for (const auto& x : elems_)
      if (!contains(vee_mul(vee_mul(g, x, sig_), ginv, sig_))) return false;
  }
  return true;
}

std::vector<Mask> GroupSubset::monomials() const {
  std::vector<Mask> out;
  for (const auto& e : elems_)
    if (e.sign > 0) out.push_back(e.mask);
  std::sort(out.begin(), out.end(), monomial_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GroupSubset vee_group(const Signature& sig) {
  std::vector<VeeElement> elems;
  const std::uint64_t count = std::uint64_t{1} << sig.n();
  elems.reserve(2 * count);
  for (std::uint64_t m = 0; m < count; ++m) {
    elems.push_back(VeeElement{static_cast<Mask>(m), +1});
    elems.push_back(VeeElement{static_cast<Mask>(m), -1});
  }
  return GroupSubset(sig, GroupKind::vee, std::move(elems));
}

GroupSubset generated_subgroup(const Signature& sig, GroupKind kind,
                               std::vector<VeeElement> gens) {
  std::set<std::uint64_t> seen;
  std::vector<VeeElement> frontier{VeeElement{0, +1}};
  seen.insert(frontier.front().key());
  while (!frontier.empty()) {
    std::vector<VeeElement> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        const VeeElement y = vee_mul(x, g, sig);
        if (seen.insert(y.key()).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  std::vector<VeeElement> elems;
  elems.reserve(seen.size());
  for (auto k : seen) elems.push_back(VeeElement::from_key(k));
  return GroupSubset(sig, kind, std::move(elems));
}

GroupSubset stabilizer(const PrimitiveIdempotent& f) {
  const Signature& sig = f.sig;
  std::vector<VeeElement> elems;
  const GroupSubset g = vee_group(sig);
  for (const auto& m : g.elements()) {
    const Multivector mm = to_multivector(m, sig);
    const Multivector mi = to_multivector(vee_inverse(m, sig), sig);
    if (mm * f.value * mi == f.value) elems.push_back(m);
  }
  return GroupSubset(sig, GroupKind::stabilizer, std::move(elems));
}

GroupSubset idempotent_group(const PrimitiveIdempotent& f) {
  std::vector<VeeElement> gens{VeeElement{0, -1}};
  for (Mask g : f.gens) gens.push_back(VeeElement{g, +1});
  return generated_subgroup(f.sig, GroupKind::idempotent_group, std::move(gens));
}

GroupSubset field_group(const PrimitiveIdempotent& f,
                        const std::vector<Mask>& k_monomials) {
  std::vector<VeeElement> gens{VeeElement{0, -1}};
  for (Mask m : k_monomials) gens.push_back(VeeElement{m, +1});
  return generated_subgroup(f.sig, GroupKind::field_group, std::move(gens));
}

GroupSubset product_set(const GroupSubset& a, const GroupSubset& b) {
  std::vector<VeeElement> elems;
  elems.reserve(a.order() * b.order());
  for (const auto& x : a.elements())
    for (const auto& y : b.elements()) elems.push_back(vee_mul(x, y, a.sig()));
  return GroupSubset(a.sig(), GroupKind::custom, std::move(elems));
}

GroupSubset intersection(const GroupSubset& a, const GroupSubset& b) {
  std::vector<VeeElement> elems;
  for (const auto& x : a.elements())
    if (b.contains(x)) elems.push_back(x);
  return GroupSubset(a.sig(), GroupKind::custom, std::move(elems));
}

GroupSubset commutator_subgroup(const GroupSubset& g) {
  std::vector<VeeElement> gens;
  for (const auto& a : g.elements()) {
    const VeeElement ai = vee_inverse(a, g.sig());
    for (const auto& b : g.elements()) {
      const VeeElement bi = vee_inverse(b, g.sig());
      gens.push_back(
          vee_mul(vee_mul(a, b, g.sig()), vee_mul(ai, bi, g.sig()), g.sig()));
    }
  }
  auto grp = generated_subgroup(g.sig(), GroupKind::commutator, std::move(gens));
  return grp;
}

GroupSubset centralizer(const VeeElement& x, const GroupSubset& ambient) {
  std::vector<VeeElement> elems;
  for (const auto& g : ambient.elements())
    if (commutation_sign(g.mask, x.mask) > 0) elems.push_back(g);
  return GroupSubset(ambient.sig(), GroupKind::centralizer, std::move(elems));
}

GroupSubset centralizer(const GroupSubset& set, const GroupSubset& ambient) {
  std::vector<VeeElement> elems;
  for (const auto& g : ambient.elements()) {
    bool ok = true;
    for (const auto& x : set.elements()) {
      if (commutation_sign(g.mask, x.mask) < 0) {
        ok = false;
        break;
      }
    }
    if (ok) elems.push_back(g);
  }
  return GroupSubset(ambient.sig(), GroupKind::centralizer, std::move(elems));
}

Transversal transversal(const GroupSubset& subgroup, const GroupSubset& ambient) {
  if (!ambient.contains_subgroup(subgroup))
    throw std::invalid_argument("transversal: subgroup not contained in ambient");

  std::vector<VeeElement> order = ambient.elements();
  std::sort(order.begin(), order.end(), vee_less);

  std::set<std::uint64_t> covered;
  std::vector<VeeElement> reps;
  for (const auto& b : order) {
    if (covered.count(b.key())) continue;
    reps.push_back(b);
    for (const auto& s : subgroup.elements())
      covered.insert(vee_mul(b, s, ambient.sig()).key());
  }
  if (reps.size() * subgroup.order() != ambient.order())
    throw std::logic_error("transversal: Lagrange count mismatch");
  return Transversal{ambient.sig(), std::move(reps), subgroup.order(),
                     ambient.order()};
}

std::uint64_t stabilizer_order_expected(const Signature& sig) {
  const int r = radon_hurwitz(sig.q - sig.p);
  const int e = (sig.semisimple() ? 2 : 1) + sig.p + r;
  return std::uint64_t{1} << e;
}

std::uint64_t field_group_order_expected(const Signature& sig) {
  const int res = ((sig.p - sig.q) % 8 + 8) % 8;
  if (res == 3 || res == 7) return 4;
  if (res == 4 || res == 5 || res == 6) return 8;
  return 2;
}

}  // namespace clifftwist
