#pragma once

#include <optional>
#include <vector>

#include "hopfkit/bialgebra.hpp"
#include "hopfkit/linsolve.hpp"

namespace hopfkit::fusion {

using bialg::Bialgebra;
using bialg::ValidationReport;
using exactlin::ExactMatrix;

/*
 * The opmonoidal monad T = A (x) - attached to a bialgebra A, with
 *
 *   chi_{V,W} = (A (x) flip_{A,V} (x) W) . (delta (x) V (x) W),   theta = eps,
 *
 * its left/right fusion operators
 *
 *   H^l_{V,W} = (T(V) (x) m_W) . chi_{V,T(W)} : T(V (x) T(W)) -> T(V) (x) T(W),
 *   H^r_{V,W} = (m_V (x) T(W)) . chi_{T(V),W} : T(T(V) (x) W) -> T(V) (x) T(W),
 *
 * and the Galois maps on A (x) A
 *
 *   gamma_left  = (A (x) m) . (delta (x) A) :  x (x) y  |->  x1 (x) x2 y,
 *   gamma_right = (m (x) A) . (A (x) delta) :  x (x) y  |->  x y1 (x) y2.
 *
 * Everything here is a concrete matrix over the bialgebra's field, so each
 * "is an isomorphism" claim is decided exactly.
 */

// Matrix of chi_{V,W}: shape (dim^2 * dimV * dimW) x (dim * dimV * dimW).
ExactMatrix build_chi(const Bialgebra& b, std::size_t dim_v, std::size_t dim_w);

// theta : T(I) -> I is the counit.
ExactMatrix theta(const Bialgebra& b);

// chi/theta data bundled with its source, per the opmonoidal-monad contract.
struct OpmonoidalData {
  Bialgebra source;
  ExactMatrix theta;
  explicit OpmonoidalData(Bialgebra b);
  ExactMatrix chi(std::size_t dim_v, std::size_t dim_w) const;
};

// Unitality of chi against theta, the coassociativity-style hexagon for
// three tensor factors, and compatibility with the monad's m and e, all
// checked at component dimensions <= dim_bound.
ValidationReport verify_opmonoidal(const Bialgebra& b, std::size_t dim_bound);

// Square matrices of size dim*dimV*dim*dimW.
ExactMatrix fusion_left(const Bialgebra& b, std::size_t dim_v, std::size_t dim_w);
ExactMatrix fusion_right(const Bialgebra& b, std::size_t dim_v, std::size_t dim_w);

ExactMatrix gamma_left(const Bialgebra& b);
ExactMatrix gamma_right(const Bialgebra& b);

// Pre-Hopf-ness of A (x) - is decided on the V = I component; for this monad
// that one component settles every V (the fusion operator at (V,W) is a
// flip-conjugate of H^l_{I,I} (x) id, see fusion_left_reconstructed).
bool is_left_pre_hopf(const Bialgebra& b);
bool is_right_pre_hopf(const Bialgebra& b);

// H^l_{V,W} rebuilt from the (I,I) component by tensoring and flip
// conjugation; equals fusion_left(b, v, w) exactly.
ExactMatrix fusion_left_reconstructed(const Bialgebra& b, std::size_t dim_v,
                                      std::size_t dim_w);

struct FusionReport {
  ExactMatrix H_l, H_r;
  bool H_l_invertible = false, H_r_invertible = false;
  std::optional<ExactMatrix> H_l_inverse, H_r_inverse;   // witnesses on success
  std::vector<ExactMatrix> H_l_kernel, H_r_kernel;       // witnesses on failure
};

FusionReport fusion_report(const Bialgebra& b, std::size_t dim_v, std::size_t dim_w);

// Solves m.(S (x) id).delta = e.eps = m.(id (x) S).delta as one linear system
// in the dim^2 entries of S. Both equations are re-checked by substitution on
// success. A positive-dimensional solution space cannot occur when both
// convolution equations are imposed, but is still reported if it ever did.
struct AntipodeResult {
  std::optional<ExactMatrix> antipode;
  bool unique = true;
  std::size_t solution_space_dim = 0;
  std::optional<ExactMatrix> infeasibility_certificate;
  bool found() const { return antipode.has_value(); }
};

AntipodeResult solve_antipode(const Bialgebra& b);

// The five equivalent Hopf criteria, computed independently. They must agree
// for every genuine bialgebra; a disagreement signals an implementation bug
// and is flagged, never accepted.
struct ConsistencyReport {
  bool antipode_exists = false;
  bool gamma_left_iso = false;
  bool gamma_right_iso = false;
  bool fusion_left_iso = false;   // H^l_{I,I}
  bool fusion_right_iso = false;  // H^r_{I,I}
  bool consistent() const {
    return antipode_exists == gamma_left_iso && gamma_left_iso == gamma_right_iso &&
           gamma_right_iso == fusion_left_iso && fusion_left_iso == fusion_right_iso;
  }
  bool is_hopf() const { return antipode_exists; }
};

ConsistencyReport hopf_cross_check(const Bialgebra& b);

// sigma : A -> I (1 x dim). Checks the algebra-character equations, then
// builds sigma_bar = (sigma (x) T(I)) . chi_{I,I} and reports invertibility.
// For a right-Hopf bialgebra sigma_bar must be invertible; that consistency
// is recorded in lemma_consistent.
struct AugmentationReport {
  bool is_character = false;
  bool sigma_bar_invertible = false;
  bool lemma_consistent = true;
  std::optional<ExactMatrix> sigma_bar;
};

AugmentationReport check_augmentation(const Bialgebra& b, const ExactMatrix& sigma);

}  // namespace hopfkit::fusion
