#include "clifftwist/linalg.hpp"

#include <stdexcept>

namespace clifftwist {

std::vector<Rational> to_dense(const Multivector& u) {
  std::vector<Rational> v(std::size_t{1} << u.sig().n());
  for (const auto& [m, c] : u.terms()) v[m] = c;
  return v;
}

std::vector<Rational> RowEchelon::reduce(std::vector<Rational> v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = v[pivots_[r]];
    if (is_zero(c)) continue;
    const Rational factor = c;
    const auto& row = rows_[r];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!is_zero(row[j])) v[j] -= factor * row[j];
    }
  }
  return v;
}

bool RowEchelon::add(std::vector<Rational> v) {
  v = reduce(std::move(v));
  std::size_t pivot = dim_;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!is_zero(v[j])) {
      pivot = j;
      break;
    }
  }
  if (pivot == dim_) return false;
  const Rational inv = v[pivot];
  for (std::size_t j = 0; j < dim_; ++j)
    if (!is_zero(v[j])) v[j] /= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

SpanSolver::SpanSolver(const std::vector<std::vector<Rational>>& basis) {
  count_ = basis.size();
  dim_ = basis.empty() ? 0 : basis.front().size();
  for (std::size_t i = 0; i < count_; ++i) {
    std::vector<Rational> row(dim_ + count_);
    for (std::size_t j = 0; j < dim_; ++j) row[j] = basis[i][j];
    row[dim_ + i] = 1;
    // Reduce against existing rows.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational c = row[pivots_[r]];
      if (is_zero(c)) continue;
      const auto& er = rows_[r];
      for (std::size_t j = 0; j < dim_ + count_; ++j)
        if (!is_zero(er[j])) row[j] -= c * er[j];
    }
    std::size_t pivot = dim_;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!is_zero(row[j])) {
        pivot = j;
        break;
      }
    }
    if (pivot == dim_)
      throw std::invalid_argument("SpanSolver: basis vectors are dependent");
    const Rational inv = row[pivot];
    for (std::size_t j = 0; j < dim_ + count_; ++j)
      if (!is_zero(row[j])) row[j] /= inv;
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
  }
}

std::optional<std::vector<Rational>> SpanSolver::solve(
    const std::vector<Rational>& y) const {
  std::vector<Rational> v(dim_ + count_);
  for (std::size_t j = 0; j < y.size() && j < dim_; ++j) v[j] = y[j];
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational c = v[pivots_[r]];
    if (is_zero(c)) continue;
    const auto& row = rows_[r];
    for (std::size_t j = 0; j < dim_ + count_; ++j)
      if (!is_zero(row[j])) v[j] -= c * row[j];
  }
  for (std::size_t j = 0; j < dim_; ++j)
    if (!is_zero(v[j])) return std::nullopt;
  std::vector<Rational> x(count_);
  for (std::size_t i = 0; i < count_; ++i) x[i] = -v[dim_ + i];
  return x;
}

}  // namespace clifftwist
