#include "hopfkit/bialgebra.hpp"

#include <array>
#include <stdexcept>

namespace hopfkit::bialg {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

// Compare two matrices; on mismatch produce "col <tuple>, row <tuple>:
// lhs=..., rhs=..." with tensor indices decomposed along the given dims.
std::optional<std::string> mismatch_witness(const ExactMatrix& lhs, const ExactMatrix& rhs,
                                            std::vector<std::size_t> row_dims,
                                            std::vector<std::size_t> col_dims) {
  for (std::size_t r = 0; r < lhs.rows(); ++r)
    for (std::size_t c = 0; c < lhs.cols(); ++c)
      if (lhs.at(r, c) != rhs.at(r, c))
        return "basis column " + exactlin::tensor_index_name(c, col_dims) +
               ", row " + exactlin::tensor_index_name(r, row_dims) +
               ": lhs=" + lhs.at(r, c).str() + ", rhs=" + rhs.at(r, c).str();
  return std::nullopt;
}

AxiomCheck axiom(const std::string& name, const ExactMatrix& lhs, const ExactMatrix& rhs,
                 std::vector<std::size_t> row_dims, std::vector<std::size_t> col_dims) {
  auto w = mismatch_witness(lhs, rhs, std::move(row_dims), std::move(col_dims));
  return AxiomCheck{name, !w.has_value(), w.value_or("")};
}

}  // namespace

Comonoid::Comonoid(std::size_t d, ExactMatrix cm, ExactMatrix cu,
                   std::vector<std::string> lb)
    : dim(d), comult(std::move(cm)), counit(std::move(cu)), labels(std::move(lb)) {
  require(comult.rows() == dim * dim && comult.cols() == dim,
          "comonoid comultiplication must be dim^2 x dim");
  require(counit.rows() == 1 && counit.cols() == dim, "comonoid counit must be 1 x dim");
  require(comult.field() == counit.field(), "comonoid matrices must share one field");
}

Comonoid Comonoid::trivial(const Field& f) {
  return Comonoid(1, ExactMatrix::identity(f, 1), ExactMatrix::identity(f, 1), {"1"});
}

Bialgebra::Bialgebra(std::size_t d, ExactMatrix m, ExactMatrix e, ExactMatrix cm,
                     ExactMatrix cu, std::vector<std::string> lb)
    : dim(d), mult(std::move(m)), unit(std::move(e)), comult(std::move(cm)),
      counit(std::move(cu)), labels(std::move(lb)) {
  require(dim >= 1, "bialgebra dimension must be positive");
  require(mult.rows() == dim && mult.cols() == dim * dim, "mult must be dim x dim^2");
  require(unit.rows() == dim && unit.cols() == 1, "unit must be dim x 1");
  require(comult.rows() == dim * dim && comult.cols() == dim, "comult must be dim^2 x dim");
  require(counit.rows() == 1 && counit.cols() == dim, "counit must be 1 x dim");
  const Field& f = mult.field();
  require(unit.field() == f && comult.field() == f && counit.field() == f,
          "bialgebra matrices must share one field");
}

Bialgebra Bialgebra::trivial(const Field& f) {
  ExactMatrix one = ExactMatrix::identity(f, 1);
  return Bialgebra(1, one, one, one, one, {"1"});
}

bool ValidationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return c.name + ": " + c.witness;
  return "";
}

ValidationReport validate_bialgebra(const Bialgebra& b) {
  const Field& f = b.field();
  const std::size_t n = b.dim;
  const ExactMatrix id = ExactMatrix::identity(f, n);
  const ExactMatrix flip = ExactMatrix::flip(f, n, n);
  const auto& M = b.mult;
  const auto& u = b.unit;
  const auto& D = b.comult;
  const auto& E = b.counit;

  ValidationReport rep;
  rep.checks.push_back(axiom("associativity", M * kron(M, id), M * kron(id, M),
                             {n}, {n, n, n}));
  rep.checks.push_back(axiom("left unitality", M * kron(u, id), id, {n}, {n}));
  rep.checks.push_back(axiom("right unitality", M * kron(id, u), id, {n}, {n}));
  rep.checks.push_back(axiom("coassociativity", kron(D, id) * D, kron(id, D) * D,
                             {n, n, n}, {n}));
  rep.checks.push_back(axiom("left counitality", kron(E, id) * D, id, {n}, {n}));
  rep.checks.push_back(axiom("right counitality", kron(id, E) * D, id, {n}, {n}));
  rep.checks.push_back(axiom("comult is multiplicative", D * M,
                             kron(M, M) * kron(id, kron(flip, id)) * kron(D, D),
                             {n, n}, {n, n}));
  rep.checks.push_back(axiom("counit is multiplicative", E * M, kron(E, E),
                             {1}, {n, n}));
  // delta(e) = e (x) e together with eps(e) = 1: the unit is grouplike.
  ExactMatrix unit_pair(f, n * n + 1, 1);
  ExactMatrix unit_pair_expected(f, n * n + 1, 1);
  {
    ExactMatrix du = D * u, uu = kron(u, u), eu = E * u;
    for (std::size_t r = 0; r < n * n; ++r) {
      unit_pair.set(r, 0, du.at(r, 0));
      unit_pair_expected.set(r, 0, uu.at(r, 0));
    }
    unit_pair.set(n * n, 0, eu.at(0, 0));
    unit_pair_expected.set(n * n, 0, Scalar::one(f));
  }
  rep.checks.push_back(axiom("unit is grouplike", unit_pair, unit_pair_expected,
                             {n * n + 1}, {1}));
  return rep;
}

ValidationReport validate_comonoid(const Comonoid& c) {
  const Field& f = c.field();
  const std::size_t n = c.dim;
  const ExactMatrix id = ExactMatrix::identity(f, n);
  const auto& D = c.comult;
  const auto& E = c.counit;
  ValidationReport rep;
  rep.checks.push_back(axiom("coassociativity", kron(D, id) * D, kron(id, D) * D,
                             {n, n, n}, {n}));
  rep.checks.push_back(axiom("left counitality", kron(E, id) * D, id, {n}, {n}));
  rep.checks.push_back(axiom("right counitality", kron(id, E) * D, id, {n}, {n}));
  return rep;
}

bool validate_grouplike(const Comonoid& c, const ExactMatrix& v) {
  if (v.rows() != c.dim || v.cols() != 1)
    throw std::invalid_argument("grouplike candidate must be dim x 1");
  return c.comult * v == kron(v, v) && (c.counit * v).at(0, 0).is_one();
}

GrouplikeElement::GrouplikeElement(Comonoid h, ExactMatrix v)
    : host(std::move(h)), vec(std::move(v)) {
  if (!validate_grouplike(host, vec))
    throw std::invalid_argument("vector is not grouplike for the given comonoid");
}

GrouplikeElement GrouplikeElement::trivial(const Field& f) {
  return GrouplikeElement(Comonoid::trivial(f), ExactMatrix::identity(f, 1));
}

Comonoid tensor_comonoid(const Bialgebra& b, const Comonoid& c) {
  require(b.field() == c.field(), "bialgebra and comonoid must share one field");
  const Field& f = b.field();
  const std::size_t n = b.dim, k = c.dim;
  ExactMatrix middle = kron(ExactMatrix::identity(f, n),
                            kron(ExactMatrix::flip(f, n, k), ExactMatrix::identity(f, k)));
  ExactMatrix comult = middle * kron(b.comult, c.comult);
  ExactMatrix counit = kron(b.counit, c.counit);
  std::vector<std::string> labels;
  if (b.labels.size() == n && c.labels.size() == k) {
    labels.reserve(n * k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j)
        labels.push_back(b.labels[i] + "(x)" + c.labels[j]);
  }
  return Comonoid(n * k, std::move(comult), std::move(counit), std::move(labels));
}

GrouplikeElement lift_grouplike(const Bialgebra& b, const Comonoid& c,
                                const GrouplikeElement& g) {
  require(g.host.dim == c.dim && g.host.comult == c.comult,
          "grouplike element does not live on the given comonoid");
  Comonoid tc = tensor_comonoid(b, c);
  ExactMatrix lifted = kron(b.unit, g.vec);
  // GrouplikeElement's constructor re-runs validate_grouplike; that check is
  // the computable content of the lift.
  return GrouplikeElement(std::move(tc), std::move(lifted));
}

}  // namespace hopfkit::bialg
