#pragma once

#include <optional>
#include <vector>

#include "hopfkit/matrix.hpp"

namespace hopfkit::exactlin {

/*
 * Exact Gaussian elimination over the active field. Pivoting is deterministic:
 * columns are scanned left to right, the pivot row is the topmost unused row
 * with a nonzero entry, so repeated runs produce identical bases and
 * identical report bytes.
 */

struct RowEchelon {
  ExactMatrix mat;                  // fully reduced (RREF)
  std::vector<std::size_t> pivots;  // pivot column per pivot row
  std::size_t rank;
};

RowEchelon reduced_row_echelon(ExactMatrix m);

std::size_t rank_of(const ExactMatrix& m);

// Basis of the null space as cols x 1 column vectors, one per free column in
// ascending column order; the free coordinate is normalised to 1.
std::vector<ExactMatrix> kernel_basis(const ExactMatrix& m);

// Two-sided exact inverse, or the rank when the matrix is singular or not
// square. Singularity is a value here, not a fault. On success the products
// inv*m and m*inv are checked against the identity before returning.
struct InverseResult {
  std::optional<ExactMatrix> inverse;
  std::size_t rank = 0;
  bool ok() const { return inverse.has_value(); }
};

InverseResult try_inverse(const ExactMatrix& m);

// Complete description of the solution set of A x = b: one deterministic
// particular solution (free variables set to 0) plus a kernel basis. When the
// system is inconsistent, `solution` is empty and `infeasibility_certificate`
// holds a row vector y with y A = 0 and y b = 1.
struct AffineSolution {
  ExactMatrix particular;            // cols x 1
  std::vector<ExactMatrix> kernel;   // basis of ker A
};

struct AffineOutcome {
  std::optional<AffineSolution> solution;
  std::optional<ExactMatrix> infeasibility_certificate;  // 1 x rows
  bool ok() const { return solution.has_value(); }
};

AffineOutcome solve_affine(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace hopfkit::exactlin
