#include "clifftwist/classify.hpp"

#include <stdexcept>

namespace clifftwist {

namespace {

// One component of a K element: plain coordinate vector with multiplication
// through a structure-constant table.
using Comp = std::vector<Rational>;
using Table = std::array<std::array<int, 4>, 4>;

struct CompOps {
  const Table* index;
  const Table* sign;
  int dim;

  Comp zero() const { return Comp(dim, Rational(0)); }

  bool is_zero(const Comp& x) const {
    for (const auto& c : x)
      if (!clifftwist::is_zero(c)) return false;
    return true;
  }

  Comp mul(const Comp& x, const Comp& y) const {
    Comp out = zero();
    for (int i = 0; i < dim; ++i) {
      if (clifftwist::is_zero(x[i])) continue;
      for (int j = 0; j < dim; ++j) {
        if (clifftwist::is_zero(y[j])) continue;
        Rational c = x[i] * y[j];
        if ((*sign)[i][j] < 0) c = -c;
        out[(*index)[i][j]] += c;
      }
    }
    return out;
  }

  Comp conj(const Comp& x) const {
    Comp out = x;
    for (int i = 1; i < dim; ++i) out[i] = -out[i];
    return out;
  }

  Comp neg(const Comp& x) const {
    Comp out = x;
    for (auto& c : out) c = -c;
    return out;
  }

  Comp scale(const Rational& r, const Comp& x) const {
    Comp out = x;
    for (auto& c : out) c *= r;
    return out;
  }

  Comp inverse(const Comp& x) const {
    Rational norm(0);
    for (const auto& c : x) norm += c * c;
    if (clifftwist::is_zero(norm)) throw std::domain_error("component not invertible");
    Comp out = conj(x);
    for (auto& c : out) c /= norm;
    return out;
  }

  bool is_real(const Comp& x) const {
    for (int i = 1; i < dim; ++i)
      if (!clifftwist::is_zero(x[i])) return false;
    return true;
  }
};

using CompMatrix = std::vector<Comp>;  // row-major N x N

struct SymmetryClass {
  bool hermitian = false;
  bool skew = false;
};

// Applies the coordinate matrix of an anti-involution.
Comp apply_sigma(const std::vector<std::vector<Rational>>& sigma, const Comp& x) {
  Comp out(x.size(), Rational(0));
  for (std::size_t l = 0; l < x.size(); ++l) {
    if (clifftwist::is_zero(x[l])) continue;
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[l] * sigma[l][i];
  }
  return out;
}

SymmetryClass symmetry_of(const CompMatrix& m, int n,
                          const std::vector<std::vector<Rational>>& sigma,
                          const CompOps& ops) {
  SymmetryClass out{true, true};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Comp st = apply_sigma(sigma, m[static_cast<std::size_t>(j) * n + i]);
      const Comp& g = m[static_cast<std::size_t>(i) * n + j];
      if (st != g) out.hermitian = false;
      if (ops.neg(st) != g) out.skew = false;
    }
  }
  return out;
}

Comp add(const Comp& x, const Comp& y) {
  Comp out = x;
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return out;
}

// Exact signature of a sigma-Hermitian matrix by congruence; conj here is the
// standard K conjugation (identity in the real case). Returns {r, s,
// nondegenerate}.
struct FormSignature {
  int r = 0, s = 0;
  bool nondegenerate = true;
};

FormSignature hermitian_signature(CompMatrix m, int n, const CompOps& ops) {
  FormSignature out;
  auto at = [&](int i, int j) -> Comp& {
    return m[static_cast<std::size_t>(i) * n + j];
  };
  for (int t = 0; t < n; ++t) {
    int pivot = -1;
    for (int i = t; i < n; ++i) {
      if (!ops.is_zero(at(i, i))) {
        pivot = i;
        break;
      }
    }
    if (pivot == -1) {
      int bi = -1, bj = -1;
      for (int i = t; i < n && bi == -1; ++i)
        for (int j = i + 1; j < n; ++j)
          if (!ops.is_zero(at(i, j))) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == -1) {
        out.nondegenerate = false;  // zero trailing block
        return out;
      }
      // b_i <- b_i + b_j mu with mu = conj(G_ij) makes the diagonal positive.
      const Comp mu = ops.conj(at(bi, bj));
      const Comp cmu = ops.conj(mu);
      for (int c = 0; c < n; ++c) at(bi, c) = add(at(bi, c), ops.mul(cmu, at(bj, c)));
      for (int r2 = 0; r2 < n; ++r2) at(r2, bi) = add(at(r2, bi), ops.mul(at(r2, bj), mu));
      pivot = bi;
    }
    if (pivot != t) {
      for (int c = 0; c < n; ++c) std::swap(at(pivot, c), at(t, c));
      for (int r2 = 0; r2 < n; ++r2) std::swap(at(r2, pivot), at(r2, t));
    }
    const Comp d = at(t, t);
    if (!ops.is_real(d))
      throw std::logic_error("hermitian_signature: non-real diagonal pivot");
    const Rational dv = d[0];
    if (dv > 0)
      ++out.r;
    else
      ++out.s;
    for (int u = t + 1; u < n; ++u) {
      if (ops.is_zero(at(u, t))) continue;
      // b_u <- b_u + b_t nu with sigma(nu) = -G_ut / d.
      const Comp factor = ops.scale(Rational(-1) / dv, at(u, t));  // = conj(nu)
      const Comp nu = ops.conj(factor);
      for (int c = 0; c < n; ++c) at(u, c) = add(at(u, c), ops.mul(factor, at(t, c)));
      for (int r2 = 0; r2 < n; ++r2) at(r2, u) = add(at(r2, u), ops.mul(at(r2, t), nu));
    }
  }
  return out;
}

// Rank over the division algebra by left-division row reduction.
int comp_rank(CompMatrix m, int n, const CompOps& ops) {
  int rank = 0;
  auto at = [&](int i, int j) -> Comp& {
    return m[static_cast<std::size_t>(i) * n + j];
  };
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pivot = -1;
    for (int i = row; i < n; ++i)
      if (!ops.is_zero(at(i, col))) {
        pivot = i;
        break;
      }
    if (pivot == -1) continue;
    if (pivot != row)
      for (int c = 0; c < n; ++c) std::swap(at(pivot, c), at(row, c));
    const Comp inv = ops.inverse(at(row, col));
    for (int c = 0; c < n; ++c) at(row, c) = ops.mul(inv, at(row, c));
    for (int i = 0; i < n; ++i) {
      if (i == row || ops.is_zero(at(i, col))) continue;
      const Comp f = ops.neg(at(i, col));
      for (int c = 0; c < n; ++c)
        at(i, c) = add(at(i, c), ops.mul(f, at(row, c)));
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::string base_letter(KClass cls) {
  switch (cls) {
    case KClass::R:
    case KClass::DR:
      return "R";
    case KClass::C:
      return "C";
    default:
      return "H";
  }
}

struct ComponentName {
  std::string name;
  std::string alias;
  bool nonstandard = false;
};

ComponentName classify_component(const GramForm& g, const CompOps& ops,
                                 const std::vector<std::vector<Rational>>& sigma,
                                 bool hat) {
  const int n = g.N;
  CompMatrix m;
  m.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.push_back(hat ? g.at(i, j).b : g.at(i, j).a);

  const std::string letter = base_letter(g.cls);
  const std::string nstr = std::to_string(n);

  bool all_zero = true;
  for (const auto& e : m)
    if (!ops.is_zero(e)) all_zero = false;
  if (all_zero) return {"GL(" + nstr + "," + letter + ")", "", false};

  ConjKind conj = g.conj;
  CompMatrix work = m;
  std::vector<std::vector<Rational>> sig_work = sigma;
  bool nonstandard = false;

  // Over R the conjugation is the identity, so every form is plain bilinear.
  if (letter == "R") conj = ConjKind::none;

  if (conj == ConjKind::nonstandard) {
    // Over H the remaining anti-involutions are u conj(.) u^-1 for an
    // imaginary unit u: coordinate matrix diagonal with exactly one -1 among
    // the imaginary slots. Left-multiplying the form by u^-1 converts it to
    // a standard conjugate-(skew-)Hermitian one with the same automorphisms.
    if (letter != "H" || sigma.empty())
      return {"unclassified(nonstandard conjugation)", "", true};
    int neg_slot = -1;
    bool diag_ok = true;
    for (int jcol = 0; jcol < ops.dim && diag_ok; ++jcol) {
      for (int irow = 0; irow < ops.dim; ++irow) {
        const Rational& v = sigma[jcol][irow];
        if (irow == jcol) {
          if (v == 1) continue;
          if (v == -1 && jcol > 0 && neg_slot == -1) {
            neg_slot = jcol;
            continue;
          }
          diag_ok = false;
          break;
        }
        if (!clifftwist::is_zero(v)) {
          diag_ok = false;
          break;
        }
      }
    }
    if (!diag_ok || neg_slot == -1)
      return {"unclassified(nonstandard conjugation)", "", true};
    Comp u = ops.zero();
    u[neg_slot] = 1;
    const Comp uinv = ops.inverse(u);
    for (auto& e : work) e = ops.mul(uinv, e);
    // Now behave as the standard conjugation.
    sig_work.assign(ops.dim, std::vector<Rational>(ops.dim, Rational(0)));
    for (int i = 0; i < ops.dim; ++i) sig_work[i][i] = i == 0 ? 1 : -1;
    conj = ConjKind::k_conjugation;
    nonstandard = true;
  }

  const SymmetryClass sym = symmetry_of(work, n, sig_work, ops);

  if (conj == ConjKind::none) {
    if (letter == "R") {
      if (sym.hermitian) {
        const FormSignature fs = hermitian_signature(work, n, ops);
        if (!fs.nondegenerate) return {"unclassified(degenerate)", "", nonstandard};
        if (fs.r == 0 || fs.s == 0) return {"O(" + nstr + ")", "", nonstandard};
        return {"O(" + std::to_string(fs.r) + "," + std::to_string(fs.s) + ")", "",
                nonstandard};
      }
      if (sym.skew) {
        if (comp_rank(work, n, ops) != n)
          return {"unclassified(degenerate)", "", nonstandard};
        return {"Sp(" + nstr + ",R)", "", nonstandard};
      }
    } else if (letter == "C") {
      if (sym.hermitian) {
        if (comp_rank(work, n, ops) != n)
          return {"unclassified(degenerate)", "", nonstandard};
        return {"O(" + nstr + ",C)", "", nonstandard};
      }
      if (sym.skew) {
        if (comp_rank(work, n, ops) != n)
          return {"unclassified(degenerate)", "", nonstandard};
        return {"Sp(" + nstr + ",C)", "", nonstandard};
      }
    }
    return {"unclassified(bilinear over " + letter + ")", "", nonstandard};
  }

  // conj == k_conjugation from here.
  if (letter == "C") {
    CompMatrix h = work;
    SymmetryClass s2 = sym;
    if (!s2.hermitian && s2.skew) {
      // i * (skew-Hermitian) is Hermitian with the same automorphism group.
      Comp iu = ops.zero();
      iu[1] = 1;
      for (auto& e : h) e = ops.mul(iu, e);
      s2 = symmetry_of(h, n, sig_work, ops);
    }
    if (s2.hermitian) {
      const FormSignature fs = hermitian_signature(h, n, ops);
      if (!fs.nondegenerate) return {"unclassified(degenerate)", "", nonstandard};
      if (fs.r == 0 || fs.s == 0) return {"U(" + nstr + ")", "", nonstandard};
      return {"U(" + std::to_string(fs.r) + "," + std::to_string(fs.s) + ")", "",
              nonstandard};
    }
    return {"unclassified(sesquilinear over C)", "", nonstandard};
  }
  if (letter == "H") {
    if (sym.hermitian) {
      const FormSignature fs = hermitian_signature(work, n, ops);
      if (!fs.nondegenerate) return {"unclassified(degenerate)", "", nonstandard};
      if (fs.r == 0 || fs.s == 0) return {"Sp(" + nstr + ")", "", nonstandard};
      const std::string rs =
          std::to_string(fs.r) + "," + std::to_string(fs.s);
      return {"UH(" + rs + ")",
              "Sp(" + std::to_string(2 * fs.r) + "," + std::to_string(2 * fs.s) + ")",
              nonstandard};
    }
    if (sym.skew) {
      if (comp_rank(work, n, ops) != n)
        return {"unclassified(degenerate)", "", nonstandard};
      return {"O*(" + std::to_string(2 * n) + ")", "", nonstandard};
    }
    return {"unclassified(sesquilinear over H)", "", nonstandard};
  }
  // Real with detected conjugation cannot happen (conjugation is trivial).
  return {"unclassified(conjugation over R)", "", nonstandard};
}

}  // namespace

GroupName classify(const GramForm& g, const CliData& cd) {
  CompOps ops_a{&cd.kstruct.prod_index, &cd.kstruct.prod_sign, cd.kstruct.dim};
  std::vector<std::vector<Rational>> sigma = g.sigma;
  if (sigma.empty()) {
    sigma.assign(cd.kstruct.dim, std::vector<Rational>(cd.kstruct.dim, Rational(0)));
    for (int i = 0; i < cd.kstruct.dim; ++i) sigma[i][i] = 1;
  }
  const ComponentName a = classify_component(g, ops_a, sigma, false);
  if (!k_is_double(g.cls))
    return GroupName{a.name, a.alias, a.nonstandard};

  CompOps ops_b{&cd.kstruct.prod_index, &cd.kstruct.prod_sign_hat, cd.kstruct.dim};
  std::vector<std::vector<Rational>> sigma_hat = g.sigma_hat;
  if (sigma_hat.empty()) sigma_hat = sigma;
  const ComponentName b = classify_component(g, ops_b, sigma_hat, true);
  if (a.name == b.name)
    return GroupName{"2" + a.name, a.alias.empty() ? "" : "2" + a.alias,
                     a.nonstandard || b.nonstandard};
  return GroupName{a.name + " x " + b.name, "", a.nonstandard || b.nonstandard};
}

}  // namespace clifftwist
