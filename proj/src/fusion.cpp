#include "hopfkit/fusion.hpp"

#include <stdexcept>

namespace hopfkit::fusion {

using exactlin::Field;
using exactlin::Scalar;
using exactlin::kron;

namespace {

ExactMatrix id(const Bialgebra& b, std::size_t n) {
  return ExactMatrix::identity(b.field(), n);
}

ExactMatrix flip(const Bialgebra& b, std::size_t v, std::size_t w) {
  return ExactMatrix::flip(b.field(), v, w);
}

ExactMatrix flatten_row_major(const ExactMatrix& m) {
  ExactMatrix v(m.field(), m.rows() * m.cols(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      v.set(r * m.cols() + c, 0, m.at(r, c));
  return v;
}

bialg::AxiomCheck equal_check(const std::string& name, const ExactMatrix& lhs,
                              const ExactMatrix& rhs) {
  if (lhs == rhs) return {name, true, ""};
  for (std::size_t r = 0; r < lhs.rows(); ++r)
    for (std::size_t c = 0; c < lhs.cols(); ++c)
      if (lhs.at(r, c) != rhs.at(r, c))
        return {name, false,
                "entry (" + std::to_string(r) + "," + std::to_string(c) +
                    "): lhs=" + lhs.at(r, c).str() + ", rhs=" + rhs.at(r, c).str()};
  return {name, false, "shape mismatch"};
}

}  // namespace

ExactMatrix build_chi(const Bialgebra& b, std::size_t dim_v, std::size_t dim_w) {
  const std::size_t n = b.dim;
  ExactMatrix middle =
      kron(id(b, n), kron(flip(b, n, dim_v), id(b, dim_w)));
  return middle * kron(b.comult, id(b, dim_v * dim_w));
}

ExactMatrix theta(const Bialgebra& b) { return b.counit; }

OpmonoidalData::OpmonoidalData(Bialgebra b)
    : source(std::move(b)), theta(source.counit) {}

ExactMatrix OpmonoidalData::chi(std::size_t dim_v, std::size_t dim_w) const {
  return build_chi(source, dim_v, dim_w);
}

ExactMatrix fusion_left(const Bialgebra& b, std::size_t dim_v, std::size_t dim_w) {
  const std::size_t n = b.dim;
  // (T(V) (x) m_W) . chi_{V, T(W)}
  return kron(id(b, n * dim_v), kron(b.mult, id(b, dim_w))) *
         build_chi(b, dim_v, n * dim_w);
}

ExactMatrix fusion_right(const Bialgebra& b, std::size_t dim_v, std::size_t dim_w) {
  const std::size_t n = b.dim;
  // (m_V (x) T(W)) . chi_{T(V), W}
  return kron(kron(b.mult, id(b, dim_v)), id(b, n * dim_w)) *
         build_chi(b, n * dim_v, dim_w);
}

ExactMatrix gamma_left(const Bialgebra& b) {
  return kron(id(b, b.dim), b.mult) * kron(b.comult, id(b, b.dim));
}

ExactMatrix gamma_right(const Bialgebra& b) {
  return kron(b.mult, id(b, b.dim)) * kron(id(b, b.dim), b.comult);
}

bool is_left_pre_hopf(const Bialgebra& b) {
  return exactlin::try_inverse(fusion_left(b, 1, 1)).ok();
}

bool is_right_pre_hopf(const Bialgebra& b) {
  return exactlin::try_inverse(fusion_right(b, 1, 1)).ok();
}

ExactMatrix fusion_left_reconstructed(const Bialgebra& b, std::size_t dim_v,
                                      std::size_t dim_w) {
  const std::size_t n = b.dim;
  ExactMatrix core = kron(fusion_left(b, 1, 1), id(b, dim_v * dim_w));
  ExactMatrix in = kron(id(b, n), kron(flip(b, dim_v, n), id(b, dim_w)));
  ExactMatrix out = kron(id(b, n), kron(flip(b, n, dim_v), id(b, dim_w)));
  return out * core * in;
}

FusionReport fusion_report(const Bialgebra& b, std::size_t dim_v, std::size_t dim_w) {
  FusionReport rep{fusion_left(b, dim_v, dim_w), fusion_right(b, dim_v, dim_w)};
  auto left = exactlin::try_inverse(rep.H_l);
  auto right = exactlin::try_inverse(rep.H_r);
  rep.H_l_invertible = left.ok();
  rep.H_r_invertible = right.ok();
  if (left.ok()) rep.H_l_inverse = std::move(left.inverse);
  else rep.H_l_kernel = exactlin::kernel_basis(rep.H_l);
  if (right.ok()) rep.H_r_inverse = std::move(right.inverse);
  else rep.H_r_kernel = exactlin::kernel_basis(rep.H_r);
  return rep;
}

AntipodeResult solve_antipode(const Bialgebra& b) {
  const Field& f = b.field();
  const std::size_t n = b.dim;
  const ExactMatrix idn = id(b, n);

  // Both convolution equations, stacked: rows 0..n^2-1 come from
  // m.(S (x) id).delta, rows n^2..2n^2-1 from m.(id (x) S).delta. Columns are
  // the entries of S, row-major. Coefficients are assembled by probing with
  // matrix units.
  ExactMatrix system(f, 2 * n * n, n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a) {
      ExactMatrix unit_ka(f, n, n);
      unit_ka.set(k, a, Scalar::one(f));
      ExactMatrix lhs1 = b.mult * kron(unit_ka, idn) * b.comult;
      ExactMatrix lhs2 = b.mult * kron(idn, unit_ka) * b.comult;
      const std::size_t col = k * n + a;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          system.set(r * n + c, col, lhs1.at(r, c));
          system.set(n * n + r * n + c, col, lhs2.at(r, c));
        }
    }

  ExactMatrix convolution_unit = b.unit * b.counit;  // e . eps, n x n
  ExactMatrix rhs_half = flatten_row_major(convolution_unit);
  ExactMatrix rhs(f, 2 * n * n, 1);
  for (std::size_t r = 0; r < n * n; ++r) {
    rhs.set(r, 0, rhs_half.at(r, 0));
    rhs.set(n * n + r, 0, rhs_half.at(r, 0));
  }

  auto outcome = exactlin::solve_affine(system, rhs);
  if (!outcome.ok())
    return AntipodeResult{std::nullopt, true, 0,
                          std::move(outcome.infeasibility_certificate)};

  ExactMatrix s(f, n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      s.set(k, a, outcome.solution->particular.at(k * n + a, 0));

  if (b.mult * kron(s, idn) * b.comult != convolution_unit ||
      b.mult * kron(idn, s) * b.comult != convolution_unit)
    throw std::logic_error("solve_antipode: substitution check failed (internal bug)");

  const std::size_t kernel_dim = outcome.solution->kernel.size();
  return AntipodeResult{std::move(s), kernel_dim == 0, kernel_dim, std::nullopt};
}

ConsistencyReport hopf_cross_check(const Bialgebra& b) {
  ConsistencyReport rep;
  rep.antipode_exists = solve_antipode(b).found();
  rep.gamma_left_iso = exactlin::try_inverse(gamma_left(b)).ok();
  rep.gamma_right_iso = exactlin::try_inverse(gamma_right(b)).ok();
  rep.fusion_left_iso = is_left_pre_hopf(b);
  rep.fusion_right_iso = is_right_pre_hopf(b);
  return rep;
}

AugmentationReport check_augmentation(const Bialgebra& b, const ExactMatrix& sigma) {
  if (sigma.rows() != 1 || sigma.cols() != b.dim)
    throw std::invalid_argument("augmentation candidate must be 1 x dim");
  AugmentationReport rep;
  rep.is_character = sigma * b.mult == kron(sigma, sigma) &&
                     (sigma * b.unit).at(0, 0).is_one();
  if (!rep.is_character) return rep;

  // sigma_bar at V = I: (sigma (x) T(I)) . chi_{I,I} = (sigma (x) id) . delta.
  ExactMatrix sigma_bar = kron(sigma, id(b, b.dim)) * b.comult;
  rep.sigma_bar_invertible = exactlin::try_inverse(sigma_bar).ok();
  rep.sigma_bar = std::move(sigma_bar);
  if (is_right_pre_hopf(b) && !rep.sigma_bar_invertible) rep.lemma_consistent = false;
  return rep;
}

ValidationReport verify_opmonoidal(const Bialgebra& b, std::size_t dim_bound) {
  const std::size_t n = b.dim;
  ValidationReport rep;
  rep.checks.push_back(equal_check("theta . e_I = 1", b.counit * b.unit,
                                   ExactMatrix::identity(b.field(), 1)));
  for (std::size_t v = 1; v <= dim_bound; ++v) {
    const std::string sv = std::to_string(v);
    rep.checks.push_back(equal_check(
        "(theta (x) T(V)) . chi_{I,V} = id, dimV=" + sv,
        kron(b.counit, id(b, n * v)) * build_chi(b, 1, v), id(b, n * v)));
    rep.checks.push_back(equal_check(
        "(T(V) (x) theta) . chi_{V,I} = id, dimV=" + sv,
        kron(id(b, n * v), b.counit) * build_chi(b, v, 1), id(b, n * v)));
    for (std::size_t w = 1; w <= dim_bound; ++w) {
      const std::string svw = sv + "," + std::to_string(w);
      rep.checks.push_back(equal_check(
          "chi_{V,W} . e_{V(x)W} = e_V (x) e_W, dims=" + svw,
          build_chi(b, v, w) * kron(b.unit, id(b, v * w)),
          kron(kron(b.unit, id(b, v)), kron(b.unit, id(b, w)))));
      rep.checks.push_back(equal_check(
          "chi_{V,W} . m = (m (x) m) . chi_{TV,TW} . T(chi_{V,W}), dims=" + svw,
          build_chi(b, v, w) * kron(b.mult, id(b, v * w)),
          kron(kron(b.mult, id(b, v)), kron(b.mult, id(b, w))) *
              build_chi(b, n * v, n * w) * kron(id(b, n), build_chi(b, v, w))));
      for (std::size_t x = 1; x <= dim_bound; ++x) {
        rep.checks.push_back(equal_check(
            "chi associativity hexagon, dims=" + svw + "," + std::to_string(x),
            kron(build_chi(b, v, w), id(b, n * x)) * build_chi(b, v * w, x),
            kron(id(b, n * v), build_chi(b, w, x)) * build_chi(b, v, w * x)));
      }
    }
  }
  return rep;
}

}  // namespace hopfkit::fusion
