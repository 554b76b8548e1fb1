#include "clifftwist/clidata.hpp"

#include <algorithm>
#include <stdexcept>

namespace clifftwist {

namespace {

// Expands a mask list to its closure under the monomial product, which on
// index sets is the XOR span.
std::vector<Mask> xor_span(const std::vector<Mask>& gens) {
  std::vector<Mask> span{0};
  for (Mask g : gens) {
    if (std::find(span.begin(), span.end(), g) != span.end()) continue;
    const std::size_t old = span.size();
    for (std::size_t i = 0; i < old; ++i) span.push_back(span[i] ^ g);
  }
  std::sort(span.begin(), span.end(), monomial_less);
  return span;
}

}  // namespace

std::vector<Mask> k_basis(const PrimitiveIdempotent& f) {
  const Signature& sig = f.sig;
  const int target = k_dim(k_class(sig));

  // Accepts mf = fmf != 0 with an independent image. The accepted set is kept
  // closed under the monomial product (XOR of masks), so that the monomials
  // together with +-1 form a group of order 2 dim K: the field group stays as
  // small as the published order formula demands.
  auto admissible = [&](Mask m, RowEchelon& span) {
    const Multivector mf = Multivector::basis(sig, m) * f.value;
    if (mf.is_zero()) return false;
    if (!(f.value * mf == mf)) return false;
    return span.add(to_dense(mf));
  };

  std::vector<Mask> accepted{0};
  for (Mask m : all_monomials_sorted(sig.n())) {
    if (static_cast<int>(accepted.size()) == target) break;
    if (m == 0) continue;
    if (std::find(accepted.begin(), accepted.end(), m) != accepted.end())
      continue;
    std::vector<Mask> candidate = accepted;
    candidate.push_back(m);
    candidate = xor_span(candidate);
    if (static_cast<int>(candidate.size()) > target) continue;
    RowEchelon span(std::size_t{1} << sig.n());
    bool ok = true;
    for (Mask c : candidate)
      if (!admissible(c, span)) {
        ok = false;
        break;
      }
    if (ok) accepted = std::move(candidate);
  }
  if (static_cast<int>(accepted.size()) != target)
    throw std::logic_error("k_basis: K dimension not reached for " + to_string(sig));
  return accepted;
}

int ideal_corner_dimension(const PrimitiveIdempotent& f) {
  const Signature& sig = f.sig;
  RowEchelon span(std::size_t{1} << sig.n());
  for (Mask m : all_monomials_sorted(sig.n())) {
    const Multivector v = f.value * Multivector::basis(sig, m) * f.value;
    if (!v.is_zero()) span.add(to_dense(v));
  }
  return static_cast<int>(span.rank());
}

int left_ideal_dimension(const Multivector& u) {
  const Signature& sig = u.sig();
  RowEchelon span(std::size_t{1} << sig.n());
  for (Mask m : all_monomials_sorted(sig.n())) {
    const Multivector v = Multivector::basis(sig, m) * u;
    if (!v.is_zero()) span.add(to_dense(v));
  }
  return static_cast<int>(span.rank());
}

namespace {

// Structure constants of (m_i c)(m_j c) over the images {m_l c}, c the
// (grade-involute) idempotent. Every product must land on a single signed
// basis image.
void fill_sign_table(const Signature& sig, const std::vector<Mask>& data6,
                     const Multivector& c,
                     std::array<std::array<int, 4>, 4>& index_out,
                     std::array<std::array<int, 4>, 4>& sign_out) {
  const int dim = static_cast<int>(data6.size());
  std::vector<std::vector<Rational>> images;
  for (Mask m : data6) images.push_back(to_dense(Multivector::basis(sig, m) * c));
  const SpanSolver solver(images);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const Multivector prod = Multivector::basis(sig, data6[i]) *
                               Multivector::basis(sig, data6[j]) * c;
      const auto x = solver.solve(to_dense(prod));
      if (!x) throw std::logic_error("K structure: product escaped the K span");
      int idx = -1;
      int sgn = 0;
      for (int l = 0; l < dim; ++l) {
        if (is_zero((*x)[l])) continue;
        if (idx != -1 || ((*x)[l] != 1 && (*x)[l] != -1))
          throw std::logic_error("K structure: product is not a signed basis image");
        idx = l;
        sgn = (*x)[l] == 1 ? +1 : -1;
      }
      if (idx == -1) throw std::logic_error("K structure: product vanished");
      index_out[i][j] = idx;
      sign_out[i][j] = sgn;
    }
  }
}

std::vector<Mask> transversal_monomials(const Transversal& t) {
  std::vector<Mask> out;
  out.reserve(t.reps.size());
  for (const auto& r : t.reps) out.push_back(r.mask);
  return out;
}

}  // namespace

CliData make_clidata(const Signature& sig, std::vector<int> signs) {
  CliData cd(sig, primitive_idempotent(sig, std::move(signs)));
  cd.cls = k_class(sig);
  cd.simple = !sig.semisimple();
  cd.fhat = grade_involution(cd.f.value);

  const GroupSubset g = vee_group(sig);
  const GroupSubset gf = stabilizer(cd.f);
  const GroupSubset t = idempotent_group(cd.f);

  cd.data5 = transversal_monomials(transversal(t, g));
  cd.data6 = k_basis(cd.f);
  cd.data7 = transversal_monomials(transversal(gf, g));

  // data6 must be a transversal of T(f) in G(f): one monomial per coset.
  if (cd.data6.size() * t.order() != gf.order())
    throw std::logic_error("clidata: K basis size is not the T(f) coset count");
  for (std::size_t i = 0; i < cd.data6.size(); ++i) {
    if (!gf.contains(VeeElement{cd.data6[i], +1}))
      throw std::logic_error("clidata: K basis monomial escapes the stabilizer");
    for (std::size_t j = i + 1; j < cd.data6.size(); ++j)
      if (t.contains(VeeElement{cd.data6[i] ^ cd.data6[j], +1}))
        throw std::logic_error("clidata: K basis monomials share a T(f) coset");
  }

  const int k = idempotent_k(sig);
  cd.N = cd.simple ? (1 << k) : (1 << (k - 1));
  if (static_cast<int>(cd.data7.size()) != cd.N)
    throw std::logic_error("clidata: transversal size disagrees with N");

  // K multiplication tables.
  cd.kstruct.cls = cd.cls;
  cd.kstruct.dim = static_cast<int>(cd.data6.size());
  for (Mask m : cd.data6) cd.kstruct.basis_names.push_back(monomial_name(m, sig.n()));
  fill_sign_table(sig, cd.data6, cd.f.value, cd.kstruct.prod_index,
                  cd.kstruct.prod_sign);
  if (!cd.simple) {
    std::array<std::array<int, 4>, 4> idx_hat{};
    fill_sign_table(sig, cd.data6, cd.fhat, idx_hat, cd.kstruct.prod_sign_hat);
    if (idx_hat != cd.kstruct.prod_index)
      throw std::logic_error("clidata: K-hat index table mismatch");
  } else {
    cd.kstruct.prod_sign_hat = cd.kstruct.prod_sign;
  }

  // Non-unit K basis monomials square to -1 modulo f; conjugation negates
  // exactly those coordinates.
  for (int l = 1; l < cd.kstruct.dim; ++l) {
    if (cd.kstruct.prod_index[l][l] != 0 || cd.kstruct.prod_sign[l][l] != -1)
      throw std::logic_error("clidata: K basis element does not square to -1");
  }

  // Real spinor bases and coordinate solvers.
  auto build_basis = [&](const Multivector& c) {
    std::vector<Multivector> basis;
    for (Mask mj : cd.data7) {
      const Multivector mjv = Multivector::basis(sig, mj);
      for (Mask ml : cd.data6)
        basis.push_back(mjv * (Multivector::basis(sig, ml) * c));
    }
    return basis;
  };
  cd.spinor_basis = build_basis(cd.f.value);
  {
    std::vector<std::vector<Rational>> dense;
    for (const auto& v : cd.spinor_basis) dense.push_back(to_dense(v));
    cd.solver_ = std::make_shared<const SpanSolver>(dense);
  }
  if (!cd.simple) {
    cd.spinor_basis_hat = build_basis(cd.fhat);
    std::vector<std::vector<Rational>> dense;
    for (const auto& v : cd.spinor_basis_hat) dense.push_back(to_dense(v));
    cd.solver_hat_ = std::make_shared<const SpanSolver>(dense);
  }

  auto k_images = [&](const Multivector& c) {
    std::vector<std::vector<Rational>> dense;
    for (Mask m : cd.data6)
      dense.push_back(to_dense(Multivector::basis(sig, m) * c));
    return dense;
  };
  cd.k_solver_ = std::make_shared<const SpanSolver>(k_images(cd.f.value));
  if (!cd.simple)
    cd.k_solver_hat_ = std::make_shared<const SpanSolver>(k_images(cd.fhat));
  return cd;
}

namespace {

std::vector<std::vector<Rational>> component_coords(const Multivector& psi,
                                                    const SpanSolver& solver,
                                                    int n_cols, int dim) {
  const auto x = solver.solve(to_dense(psi));
  if (!x) throw std::domain_error("spinor_coords: element is not in the spinor ideal");
  std::vector<std::vector<Rational>> out(n_cols);
  for (int j = 0; j < n_cols; ++j)
    out[j].assign(x->begin() + j * dim, x->begin() + (j + 1) * dim);
  return out;
}

}  // namespace

std::vector<KElement> spinor_coords(const Multivector& psi, const CliData& cd) {
  if (!(psi.sig() == cd.sig))
    throw std::invalid_argument("spinor_coords: signature mismatch");
  const int dim = cd.kstruct.dim;
  std::vector<KElement> out(cd.N);
  if (cd.simple) {
    if (!(psi * cd.f.value == psi))
      throw std::domain_error("spinor_coords: psi f != psi");
    const auto a = component_coords(psi, cd.solver(), cd.N, dim);
    for (int j = 0; j < cd.N; ++j) out[j] = KElement{cd.cls, a[j], {}};
  } else {
    const Multivector ps = psi * cd.f.value;
    const Multivector ph = psi * cd.fhat;
    if (!(ps + ph == psi))
      throw std::domain_error("spinor_coords: psi is not in S + S-hat");
    const auto a = component_coords(ps, cd.solver(), cd.N, dim);
    const auto b = component_coords(ph, cd.solver_hat(), cd.N, dim);
    for (int j = 0; j < cd.N; ++j) out[j] = KElement{cd.cls, a[j], b[j]};
  }
  return out;
}

Multivector spinor_from_coords(const std::vector<KElement>& coords,
                               const CliData& cd) {
  const int dim = cd.kstruct.dim;
  Multivector out = Multivector::zero(cd.sig);
  for (int j = 0; j < cd.N; ++j) {
    for (int l = 0; l < dim; ++l) {
      const auto& c = coords[j].a[l];
      if (!is_zero(c)) out = out + c * cd.spinor_basis[j * dim + l];
      if (!cd.simple) {
        const auto& ch = coords[j].b[l];
        if (!is_zero(ch)) out = out + ch * cd.spinor_basis_hat[j * dim + l];
      }
    }
  }
  return out;
}

Multivector k_to_multivector(const KElement& x, const CliData& cd) {
  Multivector out = Multivector::zero(cd.sig);
  for (std::size_t l = 0; l < x.a.size(); ++l) {
    if (!is_zero(x.a[l]))
      out = out + x.a[l] * (Multivector::basis(cd.sig, cd.data6[l]) * cd.f.value);
  }
  for (std::size_t l = 0; l < x.b.size(); ++l) {
    if (!is_zero(x.b[l]))
      out = out + x.b[l] * (Multivector::basis(cd.sig, cd.data6[l]) * cd.fhat);
  }
  return out;
}

SpinorMatrix rep_matrix(const Multivector& u, const CliData& cd) {
  SpinorMatrix m;
  m.cls = cd.cls;
  m.N = cd.N;
  m.entries.assign(static_cast<std::size_t>(cd.N) * cd.N, KElement{});
  const int dim = cd.kstruct.dim;
  for (int j = 0; j < cd.N; ++j) {
    const Multivector col_s =
        u * (Multivector::basis(cd.sig, cd.data7[j]) * cd.f.value);
    const auto a = component_coords(col_s, cd.solver(), cd.N, dim);
    std::vector<std::vector<Rational>> b;
    if (!cd.simple) {
      const Multivector col_h =
          u * (Multivector::basis(cd.sig, cd.data7[j]) * cd.fhat);
      b = component_coords(col_h, cd.solver_hat(), cd.N, dim);
    }
    for (int i = 0; i < cd.N; ++i) {
      m.at(i, j) = cd.simple ? KElement{cd.cls, a[i], {}}
                             : KElement{cd.cls, a[i], b[i]};
    }
  }
  return m;
}

SpinorMatrix matrix_product(const CliData& cd, const SpinorMatrix& x,
                            const SpinorMatrix& y) {
  SpinorMatrix out;
  out.cls = x.cls;
  out.N = x.N;
  out.entries.assign(static_cast<std::size_t>(x.N) * x.N, KElement{});
  for (int i = 0; i < x.N; ++i) {
    for (int j = 0; j < x.N; ++j) {
      KElement acc = k_zero(cd.kstruct);
      for (int l = 0; l < x.N; ++l)
        acc = k_add(acc, k_mul(cd.kstruct, x.at(i, l), y.at(l, j)));
      out.at(i, j) = std::move(acc);
    }
  }
  return out;
}

SpinorMatrix matrix_identity(const CliData& cd) {
  SpinorMatrix out;
  out.cls = cd.cls;
  out.N = cd.N;
  out.entries.assign(static_cast<std::size_t>(cd.N) * cd.N, k_zero(cd.kstruct));
  for (int i = 0; i < cd.N; ++i) out.at(i, i) = k_one(cd.kstruct);
  return out;
}

SpinorMatrix matrix_dagger(const SpinorMatrix& m) {
  SpinorMatrix out;
  out.cls = m.cls;
  out.N = m.N;
  out.entries.assign(m.entries.size(), KElement{});
  for (int i = 0; i < m.N; ++i)
    for (int j = 0; j < m.N; ++j) out.at(i, j) = k_conjugate(m.at(j, i));
  return out;
}

bool dagger_check(const Multivector& u, const CliData& cd) {
  return rep_matrix(transposition(u), cd) == matrix_dagger(rep_matrix(u, cd));
}

}  // namespace clifftwist
