#include "clifftwist/idempotent.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace clifftwist {

int radon_hurwitz(int i) {
  static constexpr std::array<int, 8> base = {0, 1, 2, 2, 3, 3, 3, 3};
  int t = i >= 0 ? i / 8 : -((-i + 7) / 8);
  return base[static_cast<std::size_t>(i - 8 * t)] + 4 * t;
}

int idempotent_k(const Signature& sig) {
  return sig.q - radon_hurwitz(sig.q - sig.p);
}

namespace {

// GF(2) echelon basis keyed by leading bit; used to keep the chosen
// generator masks independent, which also keeps -1 out of the group they
// generate.
struct F2Basis {
  std::array<Mask, kMaxGenerators> by_lead{};

  bool try_add(Mask v) {
    while (v != 0) {
      const int lead = 31 - std::countl_zero(v);
      if (by_lead[lead] == 0) {
        by_lead[lead] = v;
        return true;
      }
      v ^= by_lead[lead];
    }
    return false;
  }
};

bool commutes_with_all(Mask c, const std::vector<Mask>& chosen) {
  for (Mask g : chosen)
    if (commutation_sign(c, g) < 0) return false;
  return true;
}

// First (in canonical candidate order) set of `need` pairwise-commuting,
// square-+1, independent monomials, by depth-first search with backtracking.
bool complete_block(const std::vector<Mask>& cands, std::size_t start, int need,
                    std::vector<Mask>& chosen, F2Basis& basis) {
  if (need == 0) return true;
  for (std::size_t i = start; i + static_cast<std::size_t>(need) <= cands.size(); ++i) {
    const Mask c = cands[i];
    if (!commutes_with_all(c, chosen)) continue;
    F2Basis saved = basis;
    if (!basis.try_add(c)) continue;
    chosen.push_back(c);
    if (complete_block(cands, i + 1, need - 1, chosen, basis)) return true;
    chosen.pop_back();
    basis = saved;
  }
  return false;
}

}  // namespace

std::vector<Mask> idempotent_generators(const Signature& sig) {
  const int k = idempotent_k(sig);
  const int p = sig.p, q = sig.q, n = sig.n();
  const int m = std::min(p, q);
  if (k < m)
    throw std::logic_error("idempotent_generators: fewer factors than mixed pairs");

  std::vector<Mask> pairs;
  for (int j = m - 1; j >= 0; --j)
    pairs.push_back((Mask{1} << (p - j - 1)) | (Mask{1} << (n - j - 1)));

  std::vector<Mask> extras;
  const int need = k - m;
  if (need > 0) {
    // Leftover block is purely definite: low positives when p > q, the
    // low negatives otherwise.
    const int lo = p > q ? 1 : p + 1;
    const int hi = p > q ? p - m : n - m;
    std::vector<Mask> cands;
    const Mask block = full_mask(hi) & ~full_mask(lo - 1);
    for (Mask c : all_monomials_sorted(n)) {
      if (c == 0 || (c & ~block) != 0) continue;
      if (monomial_square_sign(c, sig) == +1) cands.push_back(c);
    }
    F2Basis basis;
    if (!complete_block(cands, 0, need, extras, basis))
      throw std::logic_error("idempotent_generators: no completion found for " +
                             to_string(sig));
  }

  std::vector<Mask> gens = extras;
  gens.insert(gens.end(), pairs.begin(), pairs.end());

  // Engine invariants: k generators, square +1, pairwise commuting,
  // independent masks.
  if (static_cast<int>(gens.size()) != k)
    throw std::logic_error("idempotent_generators: wrong generator count");
  F2Basis check;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (monomial_square_sign(gens[i], sig) != +1)
      throw std::logic_error("idempotent_generators: generator squares to -1");
    if (!check.try_add(gens[i]))
      throw std::logic_error("idempotent_generators: dependent generators");
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (commutation_sign(gens[i], gens[j]) < 0)
        throw std::logic_error("idempotent_generators: non-commuting generators");
  }
  return gens;
}

PrimitiveIdempotent primitive_idempotent(const Signature& sig,
                                         std::vector<int> signs) {
  const auto gens = idempotent_generators(sig);
  if (signs.empty()) signs.assign(gens.size(), +1);
  if (signs.size() != gens.size())
    throw std::invalid_argument("primitive_idempotent: sign vector must have length " +
                                std::to_string(gens.size()));
  for (int s : signs)
    if (s != +1 && s != -1)
      throw std::invalid_argument("primitive_idempotent: signs must be +-1");

  Multivector f = Multivector::scalar(sig, 1);
  const Rational half(1, 2);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    Multivector factor = Multivector::scalar(sig, half);
    factor.accumulate(gens[j], signs[j] > 0 ? half : -half);
    f = f * factor;
  }
  return PrimitiveIdempotent{sig, gens, std::move(signs), std::move(f)};
}

std::vector<PrimitiveIdempotent> complete_idempotent_set(const Signature& sig) {
  const int k = idempotent_k(sig);
  std::vector<PrimitiveIdempotent> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint32_t pat = 0; pat < (std::uint32_t{1} << k); ++pat) {
    std::vector<int> signs(k);
    for (int j = 0; j < k; ++j) signs[j] = (pat >> j) & 1 ? -1 : +1;
    out.push_back(primitive_idempotent(sig, std::move(signs)));
  }
  return out;
}

}  // namespace clifftwist
