#include "hopfkit/hopf_modules.hpp"

#include <stdexcept>

namespace hopfkit::hopfmod {

using exactlin::Field;
using exactlin::Scalar;
using exactlin::kron;

namespace {

ExactMatrix id(const Field& f, std::size_t n) { return ExactMatrix::identity(f, n); }

DiagramCheck diagram(const std::string& name, std::size_t dim_v,
                     const ExactMatrix& lhs, const ExactMatrix& rhs) {
  if (lhs == rhs) return {name, dim_v, true, ""};
  for (std::size_t r = 0; r < lhs.rows(); ++r)
    for (std::size_t c = 0; c < lhs.cols(); ++c)
      if (lhs.at(r, c) != rhs.at(r, c))
        return {name, dim_v, false,
                "entry (" + std::to_string(r) + "," + std::to_string(c) +
                    "): lhs=" + lhs.at(r, c).str() + ", rhs=" + rhs.at(r, c).str()};
  return {name, dim_v, false, "shape mismatch"};
}

void check_shapes(const Bialgebra& b, const Comonoid& c, const EntwinedModule& m) {
  const std::size_t n = b.dim, v = m.dim_v, nc = n * c.dim;
  if (m.action.rows() != v || m.action.cols() != n * v)
    throw std::invalid_argument("entwined module action must be dimV x (dim*dimV)");
  if (m.coaction.rows() != v * nc || m.coaction.cols() != v)
    throw std::invalid_argument("entwined module coaction must be (dimV*dim*dimC) x dimV");
  if (!(m.action.field() == b.field()) || !(m.coaction.field() == b.field()))
    throw std::invalid_argument("entwined module field mismatch");
}

}  // namespace

bool ModuleAxiomReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

ModuleAxiomReport verify_entwined_module(const Bialgebra& b, const Comonoid& c,
                                         const EntwinedModule& m) {
  check_shapes(b, c, m);
  const Field& f = b.field();
  const std::size_t n = b.dim, v = m.dim_v, nc = n * c.dim;
  const Comonoid tc = bialg::tensor_comonoid(b, c);
  const ExactMatrix& h = m.action;
  const ExactMatrix& rho = m.coaction;

  ModuleAxiomReport rep;
  rep.checks.push_back(diagram("action unit", v, h * kron(b.unit, id(f, v)), id(f, v)));
  rep.checks.push_back(diagram("action associativity", v,
                               h * kron(b.mult, id(f, v)), h * kron(id(f, n), h)));
  rep.checks.push_back(diagram("coaction counit", v,
                               kron(id(f, v), tc.counit) * rho, id(f, v)));
  rep.checks.push_back(diagram("coaction coassociativity", v,
                               kron(rho, id(f, nc)) * rho,
                               kron(id(f, v), tc.comult) * rho));
  rep.checks.push_back(diagram(
      "pentagon", v, rho * h,
      kron(h, id(f, nc)) * fusion::entwining_component(b, c, v) * kron(id(f, n), rho)));
  return rep;
}

EntwinedModule comparison_K(const Bialgebra& b, const Comonoid& c,
                            const GrouplikeElement& g, std::size_t dim_v) {
  const Field& f = b.field();
  const std::size_t n = b.dim, v = dim_v;
  ExactMatrix action = kron(b.mult, id(f, v));
  ExactMatrix t_of_g = kron(id(f, n), g.vec);  // T(g): T(I) -> T(C)
  ExactMatrix rho = kron(id(f, n * v), t_of_g) * fusion::build_chi(b, v, 1);
  EntwinedModule m{n * v, std::move(action), std::move(rho)};
  if (!verify_entwined_module(b, c, m).all_passed())
    throw std::logic_error("comparison_K produced an invalid module (internal bug)");
  return m;
}

ComonadMorphismReport comonad_morphism_component(const Bialgebra& b, const Comonoid& c,
                                                 const GrouplikeElement& g,
                                                 std::size_t dim_v,
                                                 const ExactMatrix& action) {
  const Field& f = b.field();
  const std::size_t n = b.dim, v = dim_v, nc = n * c.dim;
  if (action.rows() != v || action.cols() != n * v)
    throw std::invalid_argument("module action must be dimV x (dim*dimV)");

  ExactMatrix chi_vi = fusion::build_chi(b, v, 1);
  ExactMatrix t_of_g = kron(id(f, n), g.vec);

  ComonadMorphismReport rep{
      kron(action, id(f, nc)) * kron(id(f, n * v), t_of_g) * chi_vi,
      kron(action, id(f, n)) * chi_vi, false, false};
  rep.factorization_holds = rep.S_gC == kron(id(f, v), t_of_g) * rep.S_eI;
  rep.S_eI_invertible = exactlin::try_inverse(rep.S_eI).ok();
  return rep;
}

std::vector<ExactMatrix> coinvariants(const Bialgebra& b, const EntwinedModule& m) {
  return coinvariants(b, Comonoid::trivial(b.field()),
                      GrouplikeElement::trivial(b.field()), m);
}

std::vector<ExactMatrix> coinvariants(const Bialgebra& b, const Comonoid& c,
                                      const GrouplikeElement& g,
                                      const EntwinedModule& m) {
  check_shapes(b, c, m);
  const ExactMatrix lifted = kron(b.unit, g.vec);  // the grouplike of T(C)
  return exactlin::kernel_basis(m.coaction -
                                kron(id(b.field(), m.dim_v), lifted));
}

FundamentalIsoReport fundamental_iso_check(const Bialgebra& b, const EntwinedModule& m) {
  const Field& f = b.field();
  const std::size_t n = b.dim, v = m.dim_v;
  std::vector<ExactMatrix> coin = coinvariants(b, m);
  const std::size_t d = coin.size();

  ExactMatrix canonical(f, v, d * n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ExactMatrix basis_j(f, n, 1);
      basis_j.set(j, 0, Scalar::one(f));
      ExactMatrix image = m.action * kron(basis_j, coin[i]);
      for (std::size_t r = 0; r < v; ++r)
        canonical.set(r, i * n + j, image.at(r, 0));
    }

  bool invertible = d * n == v && exactlin::try_inverse(canonical).ok();
  return FundamentalIsoReport{invertible, std::move(canonical), d};
}

HomSpace hom_space(const Bialgebra& b, const Comonoid& c, const EntwinedModule& m,
                   const EntwinedModule& n_mod) {
  check_shapes(b, c, m);
  check_shapes(b, c, n_mod);
  const Field& f = b.field();
  const std::size_t n = b.dim, nc = n * c.dim;
  const std::size_t vm = m.dim_v, vn = n_mod.dim_v;

  // Unknown f : M -> N (vn x vm). Stack both commutation constraints and
  // probe with matrix units to assemble the linear system.
  const std::size_t rows_a = vn * (n * vm);
  const std::size_t rows_b = (vn * nc) * vm;
  ExactMatrix system(f, rows_a + rows_b, vn * vm);
  for (std::size_t i = 0; i < vn; ++i)
    for (std::size_t j = 0; j < vm; ++j) {
      ExactMatrix unit_ij(f, vn, vm);
      unit_ij.set(i, j, Scalar::one(f));
      ExactMatrix ca = unit_ij * m.action - n_mod.action * kron(id(f, n), unit_ij);
      ExactMatrix cb = n_mod.coaction * unit_ij - kron(unit_ij, id(f, nc)) * m.coaction;
      const std::size_t col = i * vm + j;
      for (std::size_t r = 0; r < ca.rows(); ++r)
        for (std::size_t cc = 0; cc < ca.cols(); ++cc)
          system.set(r * ca.cols() + cc, col, ca.at(r, cc));
      for (std::size_t r = 0; r < cb.rows(); ++r)
        for (std::size_t cc = 0; cc < cb.cols(); ++cc)
          system.set(rows_a + r * cb.cols() + cc, col, cb.at(r, cc));
    }

  HomSpace hs;
  for (const ExactMatrix& vec : exactlin::kernel_basis(system)) {
    ExactMatrix mat(f, vn, vm);
    for (std::size_t i = 0; i < vn; ++i)
      for (std::size_t j = 0; j < vm; ++j) mat.set(i, j, vec.at(i * vm + j, 0));
    if (mat * m.action != n_mod.action * kron(id(f, n), mat) ||
        n_mod.coaction * mat != kron(mat, id(f, nc)) * m.coaction)
      throw std::logic_error("hom_space basis element fails commutation (internal bug)");
    hs.basis.push_back(std::move(mat));
  }
  hs.dimension = hs.basis.size();
  return hs;
}

std::optional<EntwinedModule> find_non_hopf_witness(const Bialgebra& b) {
  const Field& f = b.field();
  const std::size_t n = b.dim;
  const Comonoid triv = Comonoid::trivial(f);
  const GrouplikeElement g = GrouplikeElement::trivial(f);

  // Odometer over {0, 1, -1} entry vectors, lexicographic in that value order.
  auto next = [](std::vector<int>& digits) {
    for (std::size_t k = digits.size(); k-- > 0;) {
      if (++digits[k] < 3) return true;
      digits[k] = 0;
    }
    return false;
  };
  static const int values[3] = {0, 1, -1};
  auto fill = [&f](ExactMatrix& mat, const std::vector<int>& digits) {
    for (std::size_t r = 0; r < mat.rows(); ++r)
      for (std::size_t c = 0; c < mat.cols(); ++c)
        mat.set(r, c, Scalar::from_integer(f, values[digits[r * mat.cols() + c]]));
  };

  // Carrier dimension 1 always; dimension 2 only when the full {0,1,-1}
  // sweep stays small (n <= 2). Our non-Hopf corpus members all yield a
  // witness at dimension 1.
  std::vector<std::size_t> dims{1};
  if (n <= 2) dims.push_back(2);

  for (std::size_t v : dims) {
    const ExactMatrix id_v = id(f, v);
    const ExactMatrix id_n = id(f, n);
    const ExactMatrix unit_v = kron(b.unit, id_v);
    const ExactMatrix mult_v = kron(b.mult, id_v);
    const ExactMatrix counit_v = kron(id_v, b.counit);   // T(I) counit is eps
    const ExactMatrix comult_v = kron(id_v, b.comult);   // T(I) comult is delta
    const ExactMatrix lam_v = fusion::entwining_component(b, triv, v);

    std::vector<int> hd(v * n * v, 0);
    do {
      ExactMatrix h(f, v, n * v);
      fill(h, hd);
      if (h * unit_v != id_v) continue;
      if (h * mult_v != h * kron(id_n, h)) continue;
      const ExactMatrix pentagon_tail = kron(h, id_n) * lam_v;
      std::vector<int> rd(v * n * v, 0);
      do {
        ExactMatrix rho(f, v * n, v);
        fill(rho, rd);
        if (counit_v * rho != id_v) continue;            // cheapest check first
        if (kron(rho, id_n) * rho != comult_v * rho) continue;
        if (rho * h != pentagon_tail * kron(id_n, rho)) continue;
        EntwinedModule cand{v, h, rho};
        if (!fundamental_iso_check(b, cand).invertible) return cand;
      } while (next(rd));
    } while (next(hd));
  }
  return std::nullopt;
}

}  // namespace hopfkit::hopfmod
