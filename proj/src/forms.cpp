#include "clifftwist/forms.hpp"

#include <stdexcept>

namespace clifftwist {

namespace {

std::vector<Rational> extract_component(const Multivector& v,
                                        const SpanSolver& solver,
                                        const char* what) {
  const auto x = solver.solve(to_dense(v));
  if (!x) throw std::logic_error(std::string(what) + ": result is not of the form lambda f");
  return *x;
}

Multivector involute(const Multivector& u, InvolutionKind kind) {
  return kind == InvolutionKind::reversion_kind ? reversion(u) : conjugation(u);
}

}  // namespace

KElement tp_product(const Multivector& psi, const Multivector& phi,
                    const CliData& cd) {
  KElement out;
  out.cls = cd.cls;
  if (cd.simple) {
    out.a = extract_component(transposition(psi) * phi, cd.k_solver(), "tp_product");
  } else {
    const Multivector ps = psi * cd.f.value, ph = phi * cd.f.value;
    const Multivector pgs = psi * cd.fhat, pgh = phi * cd.fhat;
    out.a = extract_component(transposition(ps) * ph, cd.k_solver(), "tp_product");
    out.b = extract_component(transposition(pgs) * pgh, cd.k_solver_hat(),
                              "tp_product");
  }
  return out;
}

std::optional<VeeElement> find_s(const CliData& cd, InvolutionKind kind) {
  const Multivector target = involute(cd.f.value, kind);
  for (Mask m : cd.data7) {
    const Multivector s = Multivector::basis(cd.sig, m);
    const SignedMask inv = monomial_inverse(m, cd.sig);
    const Multivector sinv = Multivector::basis(cd.sig, inv.mask, Rational(inv.sign));
    if (s * cd.f.value * sinv == target) return VeeElement{m, +1};
  }
  return std::nullopt;
}

KElement beta_product(const Multivector& psi, const Multivector& phi,
                      const CliData& cd, ProductKind kind) {
  if (kind == ProductKind::tp) return tp_product(psi, phi, cd);
  const InvolutionKind inv = kind == ProductKind::beta_plus
                                 ? InvolutionKind::reversion_kind
                                 : InvolutionKind::conjugation_kind;
  const auto s = find_s(cd, inv);
  KElement out;
  out.cls = cd.cls;
  if (!s) {
    out.a.assign(cd.kstruct.dim, Rational(0));
    if (!cd.simple) out.b.assign(cd.kstruct.dim, Rational(0));
    return out;
  }
  const Multivector sv = Multivector::basis(cd.sig, s->mask);
  if (cd.simple) {
    out.a = extract_component(sv * involute(psi, inv) * phi, cd.k_solver(),
                              "beta_product");
  } else {
    const Multivector ps = psi * cd.f.value, ph = phi * cd.f.value;
    const Multivector pgs = psi * cd.fhat, pgh = phi * cd.fhat;
    out.a = extract_component(sv * involute(ps, inv) * ph, cd.k_solver(),
                              "beta_product");
    out.b = extract_component(sv * involute(pgs, inv) * pgh, cd.k_solver_hat(),
                              "beta_product");
  }
  return out;
}

namespace {

// Coordinate matrix of lambda -> s alpha(lambda) s^-1 on the K images over
// the given idempotent component; nullopt when the image escapes K.
std::optional<std::vector<std::vector<Rational>>> sigma_matrix(
    const CliData& cd, const Multivector& comp, const SpanSolver& solver,
    const std::optional<VeeElement>& s, std::optional<InvolutionKind> alpha) {
  const int dim = cd.kstruct.dim;
  std::vector<std::vector<Rational>> cols;
  for (int l = 0; l < dim; ++l) {
    Multivector lam = Multivector::basis(cd.sig, cd.data6[l]) * comp;
    Multivector img(cd.sig);
    if (!alpha) {
      img = transposition(lam);  // the tp case: sigma = T_eps restricted to K
    } else {
      const Multivector sv = Multivector::basis(cd.sig, s->mask);
      const SignedMask inv = monomial_inverse(s->mask, cd.sig);
      const Multivector sinv =
          Multivector::basis(cd.sig, inv.mask, Rational(inv.sign));
      img = sv * involute(lam, *alpha) * sinv;
    }
    const auto x = solver.solve(to_dense(img));
    if (!x) return std::nullopt;
    cols.push_back(*x);
  }
  return cols;
}

bool is_identity_matrix(const std::vector<std::vector<Rational>>& m) {
  for (std::size_t j = 0; j < m.size(); ++j)
    for (std::size_t i = 0; i < m[j].size(); ++i)
      if (m[j][i] != (i == j ? 1 : 0)) return false;
  return true;
}

bool is_conjugation_matrix(const std::vector<std::vector<Rational>>& m) {
  for (std::size_t j = 0; j < m.size(); ++j)
    for (std::size_t i = 0; i < m[j].size(); ++i) {
      const Rational expect = (i == j) ? (j == 0 ? 1 : -1) : 0;
      if (m[j][i] != expect) return false;
    }
  return true;
}

}  // namespace

GramForm gram(const CliData& cd, ProductKind kind) {
  GramForm g;
  g.sig = cd.sig;
  g.cls = cd.cls;
  g.product = kind;
  g.N = cd.N;

  std::optional<InvolutionKind> alpha;
  if (kind == ProductKind::beta_plus) alpha = InvolutionKind::reversion_kind;
  if (kind == ProductKind::beta_minus) alpha = InvolutionKind::conjugation_kind;
  if (alpha) g.s = find_s(cd, *alpha);

  // Basis spinors: m_j f, plus the S-hat part in the semisimple case.
  std::vector<Multivector> basis;
  for (Mask m : cd.data7) {
    Multivector b = Multivector::basis(cd.sig, m) * cd.f.value;
    if (!cd.simple) b = b + Multivector::basis(cd.sig, m) * cd.fhat;
    basis.push_back(b);
  }

  g.zero = true;
  for (int i = 0; i < g.N; ++i) {
    for (int j = 0; j < g.N; ++j) {
      KElement e = beta_product(basis[i], basis[j], cd, kind);
      if (!k_is_zero(e)) g.zero = false;
      g.entries.push_back(std::move(e));
    }
  }

  if (g.zero) {
    g.conj = ConjKind::none;
    return g;
  }

  const auto sig_a = sigma_matrix(cd, cd.f.value, cd.k_solver(), g.s, alpha);
  if (!sig_a) {
    g.conj = ConjKind::nonstandard;
    return g;
  }
  g.sigma = *sig_a;
  if (!cd.simple) {
    const auto sig_b = sigma_matrix(cd, cd.fhat, cd.k_solver_hat(), g.s, alpha);
    if (!sig_b) {
      g.conj = ConjKind::nonstandard;
      return g;
    }
    g.sigma_hat = *sig_b;
  }

  // On a one-dimensional K the identity and the conjugation coincide; prefer
  // the conjugation label, matching T_eps restricted to K.
  if (is_conjugation_matrix(g.sigma) &&
      (cd.simple || is_conjugation_matrix(g.sigma_hat)))
    g.conj = ConjKind::k_conjugation;
  else if (is_identity_matrix(g.sigma) &&
           (cd.simple || is_identity_matrix(g.sigma_hat)))
    g.conj = ConjKind::none;
  else
    g.conj = ConjKind::nonstandard;
  return g;
}

}  // namespace clifftwist
