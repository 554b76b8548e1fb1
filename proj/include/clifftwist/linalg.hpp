#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "clifftwist/multivector.hpp"
#include "clifftwist/rational.hpp"

namespace clifftwist {

/// Dense coefficient vector of a multivector, indexed by monomial mask.
std::vector<Rational> to_dense(const Multivector& u);

/// Incremental row-echelon basis over Q. Rows are normalized to pivot 1.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t dim) : dim_(dim) {}

  /// Reduces v against the current basis, returning the residual.
  std::vector<Rational> reduce(std::vector<Rational> v) const;

  /// Adds v to the span if independent; returns true when the rank grew.
  bool add(std::vector<Rational> v);

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Solves y = sum_i x_i b_i against a fixed independent basis {b_i}, with the
/// elimination work done once up front. Throws if the basis is dependent.
class SpanSolver {
 public:
  explicit SpanSolver(const std::vector<std::vector<Rational>>& basis);

  /// Coefficient vector, or nullopt when y lies outside the span.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& y) const;

  std::size_t basis_size() const { return count_; }

 private:
  std::size_t dim_ = 0;
  std::size_t count_ = 0;
  // Augmented rows [reduced basis vector | combination bookkeeping].
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace clifftwist
