#include "hopfkit/linsolve.hpp"

#include <stdexcept>

namespace hopfkit::exactlin {

namespace {

void swap_rows(ExactMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Scalar tmp = m.at(a, c);
    m.set(a, c, m.at(b, c));
    m.set(b, c, tmp);
  }
}

}  // namespace

RowEchelon reduced_row_echelon(ExactMatrix m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t pivot = row;
    while (pivot < nr && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == nr) continue;
    swap_rows(m, row, pivot);
    Scalar inv = m.at(row, col).inverse();
    for (std::size_t c = col; c < nc; ++c) m.set(row, c, m.at(row, c) * inv);
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == row) continue;
      const Scalar factor = m.at(r, col);
      if (factor.is_zero()) continue;
      for (std::size_t c = col; c < nc; ++c)
        m.set(r, c, m.at(r, c) - factor * m.at(row, c));
    }
    pivots.push_back(col);
    ++row;
  }
  std::size_t rank = pivots.size();
  return RowEchelon{std::move(m), std::move(pivots), rank};
}

std::size_t rank_of(const ExactMatrix& m) {
  return reduced_row_echelon(m).rank;
}

std::vector<ExactMatrix> kernel_basis(const ExactMatrix& m) {
  RowEchelon e = reduced_row_echelon(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<ExactMatrix> basis;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    ExactMatrix v(m.field(), nc, 1);
    v.set(f, 0, Scalar::one(m.field()));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v.set(e.pivots[r], 0, -e.mat.at(r, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

InverseResult try_inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols())
    return InverseResult{std::nullopt, rank_of(m)};
  const std::size_t n = m.rows();
  ExactMatrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m.at(r, c));
    aug.set(r, n + r, Scalar::one(m.field()));
  }
  RowEchelon e = reduced_row_echelon(std::move(aug));
  std::size_t left_rank = 0;
  for (std::size_t c : e.pivots)
    if (c < n) ++left_rank;
  if (left_rank < n) return InverseResult{std::nullopt, left_rank};
  ExactMatrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, e.mat.at(r, n + c));
  // Every successful inverse is verified on the spot.
  if (!(inv * m).is_identity() || !(m * inv).is_identity())
    throw std::logic_error("try_inverse produced a non-inverse (internal bug)");
  return InverseResult{std::move(inv), n};
}

AffineOutcome solve_affine(const ExactMatrix& a, const ExactMatrix& b) {
  if (b.cols() != 1 || b.rows() != a.rows())
    throw std::invalid_argument("solve_affine: b must be a column of length rows(A)");
  const std::size_t n = a.cols(), nr = a.rows();
  // Augment as [A | b | I]; a pivot in the b column certifies infeasibility
  // and the identity block turns that row into a Farkas witness.
  ExactMatrix aug(a.field(), nr, n + 1 + nr);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, a.at(r, c));
    aug.set(r, n, b.at(r, 0));
    aug.set(r, n + 1 + r, Scalar::one(a.field()));
  }
  RowEchelon e = reduced_row_echelon(std::move(aug));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] != n) continue;
    ExactMatrix y(a.field(), 1, nr);
    for (std::size_t c = 0; c < nr; ++c) y.set(0, c, e.mat.at(r, n + 1 + c));
    if (!((y * a).is_zero()) || !(y * b).at(0, 0).is_one())
      throw std::logic_error("solve_affine: bad infeasibility certificate (internal bug)");
    return AffineOutcome{std::nullopt, std::move(y)};
  }
  ExactMatrix x(a.field(), n, 1);
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    if (e.pivots[r] < n) x.set(e.pivots[r], 0, e.mat.at(r, n));
  if (!((a * x) == b))
    throw std::logic_error("solve_affine: bad particular solution (internal bug)");
  // Kernel of A, not of the augmented system.
  return AffineOutcome{AffineSolution{std::move(x), kernel_basis(a)}, std::nullopt};
}

}  // namespace hopfkit::exactlin
