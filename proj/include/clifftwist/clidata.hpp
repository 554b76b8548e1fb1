#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "clifftwist/groups.hpp"
#include "clifftwist/idempotent.hpp"
#include "clifftwist/kelement.hpp"
#include "clifftwist/linalg.hpp"

namespace clifftwist {

/// Monomials spanning K = f Cl f over R, modulo f: canonical-order scan
/// accepting m when m f = f m f != 0 and the image is independent of the
/// previously accepted ones; 1 always comes first.
std::vector<Mask> k_basis(const PrimitiveIdempotent& f);

/// dim_R of f Cl f, by brute force; 1, 2 or 4 depending on (p-q) mod 8.
int ideal_corner_dimension(const PrimitiveIdempotent& f);

/// dim_R of Cl u (the left ideal generated by u), by brute force rank.
int left_ideal_dimension(const Multivector& u);

/// The seven-element description of a Clifford algebra: field class, matrix
/// dimension N, simple/semisimple, the idempotent, and the three transversal
/// monomial lists (real spinor basis, K basis, K-spinor basis). Carries the
/// precomputed coordinate solvers for spinor work.
class CliData {
 public:
  Signature sig;
  KClass cls = KClass::R;
  bool simple = true;
  int N = 1;  // per component in the semisimple case
  PrimitiveIdempotent f;
  Multivector fhat;        // grade involute of f (used when semisimple)
  std::vector<Mask> data5; // transversal of T(f) in G
  std::vector<Mask> data6; // transversal of T(f) in G(f); spans K
  std::vector<Mask> data7; // transversal of G(f) in G; spans S over K
  KStructure kstruct;

  /// Real basis of S as m_j (m_l f), ordered j-major; same for S-hat.
  std::vector<Multivector> spinor_basis;
  std::vector<Multivector> spinor_basis_hat;

  const SpanSolver& solver() const { return *solver_; }
  const SpanSolver& solver_hat() const { return *solver_hat_; }

  /// Solver over the K images {m_l f} (and {m_l fhat}), for extracting a
  /// lambda in K out of a multivector of the form lambda f.
  const SpanSolver& k_solver() const { return *k_solver_; }
  const SpanSolver& k_solver_hat() const { return *k_solver_hat_; }

  friend CliData make_clidata(const Signature&, std::vector<int>);

 private:
  CliData(Signature s, PrimitiveIdempotent fi)
      : sig(s), f(std::move(fi)), fhat(sig) {}
  std::shared_ptr<const SpanSolver> solver_;
  std::shared_ptr<const SpanSolver> solver_hat_;
  std::shared_ptr<const SpanSolver> k_solver_;
  std::shared_ptr<const SpanSolver> k_solver_hat_;
};

CliData make_clidata(const Signature& sig, std::vector<int> signs = {});

/// Coordinates of a spinor over the data7 basis: psi = sum_j (m_j f) l_j,
/// right K-module convention. Throws when psi is not in the ideal. In the
/// semisimple case psi lives in S + S-hat and each returned K element pairs
/// the two component coordinates.
std::vector<KElement> spinor_coords(const Multivector& psi, const CliData& cd);

/// Inverse of spinor_coords on exact coordinates.
Multivector spinor_from_coords(const std::vector<KElement>& coords,
                               const CliData& cd);

/// Multivector representative of a K element: sum of c_l m_l f (plus the
/// grade-involute component when doubled).
Multivector k_to_multivector(const KElement& x, const CliData& cd);

/// N x N matrix over K in the spinor representation.
struct SpinorMatrix {
  KClass cls = KClass::R;
  int N = 1;
  std::vector<KElement> entries;  // row-major

  KElement& at(int i, int j) { return entries[static_cast<std::size_t>(i) * N + j]; }
  const KElement& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * N + j];
  }

  friend bool operator==(const SpinorMatrix&, const SpinorMatrix&) = default;
};

SpinorMatrix rep_matrix(const Multivector& u, const CliData& cd);
SpinorMatrix matrix_product(const CliData& cd, const SpinorMatrix& x,
                            const SpinorMatrix& y);
SpinorMatrix matrix_identity(const CliData& cd);

/// Transpose combined with entrywise K conjugation; this is plain
/// transposition over R/2R, dagger over C and double-dagger over H/2H.
SpinorMatrix matrix_dagger(const SpinorMatrix& m);

/// [T_eps(u)] == [u]^(T/dagger/ddagger) for this algebra.
bool dagger_check(const Multivector& u, const CliData& cd);

}  // namespace clifftwist
