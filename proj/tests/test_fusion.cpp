#include <doctest.h>

#include "hopfkit/entwining.hpp"
#include "hopfkit/fusion.hpp"
#include "hopfkit/generators.hpp"

using namespace hopfkit::fusion;
using namespace hopfkit::bialg;
using hopfkit::exactlin::ExactMatrix;
using hopfkit::exactlin::Field;
using hopfkit::exactlin::Scalar;
using hopfkit::exactlin::kernel_basis;
using hopfkit::exactlin::try_inverse;

namespace {

const Field Q = Field::rationals();

Bialgebra z2() { return group_algebra(Q, cyclic_table(2), cyclic_labels(2)); }
Bialgebra z3() { return group_algebra(Q, cyclic_table(3), cyclic_labels(3)); }
Bialgebra idem2() { return monoid_algebra(Q, idempotent_chain_table(2), {"1", "z"}); }

std::vector<Bialgebra> small_corpus(const Field& f) {
  return {Bialgebra::trivial(f),
          group_algebra(f, cyclic_table(2)),
          group_algebra(f, cyclic_table(3)),
          monoid_algebra(f, idempotent_chain_table(2)),
          monoid_algebra(f, idempotent_chain_table(3))};
}

}  // namespace

TEST_CASE("chi at (1,1) is the comultiplication") {
  CHECK(build_chi(z2(), 1, 1) == z2().comult);
  CHECK(build_chi(Bialgebra::trivial(Q), 1, 1) == ExactMatrix::identity(Q, 1));
  // Trivial bialgebra: chi is the identity at every component.
  CHECK(build_chi(Bialgebra::trivial(Q), 2, 3) == ExactMatrix::identity(Q, 6));
}

TEST_CASE("opmonoidal axioms hold for structure-constant bialgebras") {
  for (const auto& b : small_corpus(Q))
    CHECK(verify_opmonoidal(b, 2).all_passed());
  CHECK(verify_opmonoidal(group_algebra(Field::prime_field(2), cyclic_table(2)), 2)
            .all_passed());
}

TEST_CASE("fusion operator of Q[Z/2] at (I,I) is the expected permutation") {
  // Basis {1(x)1, 1(x)g, g(x)1, g(x)g}: x (x) y |-> x1 (x) x2 y swaps the
  // last two basis vectors' images.
  ExactMatrix expected = ExactMatrix::from_ints(
      Q, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  CHECK(fusion_left(z2(), 1, 1) == expected);
  CHECK(try_inverse(fusion_left(z2(), 1, 1)).ok());
  CHECK(fusion_left(Bialgebra::trivial(Q), 1, 1) == ExactMatrix::identity(Q, 1));
  CHECK(fusion_right(Bialgebra::trivial(Q), 1, 1) == ExactMatrix::identity(Q, 1));
}

TEST_CASE("idempotent monoid algebra: fusion collapses z(x)1 and z(x)z") {
  ExactMatrix hl = fusion_left(idem2(), 1, 1);
  ExactMatrix expected = ExactMatrix::from_ints(
      Q, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 1}});
  CHECK(hl == expected);
  auto inv = try_inverse(hl);
  CHECK(!inv.ok());
  CHECK(inv.rank == 3);
  CHECK(kernel_basis(hl).size() == 1);
}

TEST_CASE("gamma_left coincides with the (I,I) fusion operator") {
  for (const auto& b : small_corpus(Q)) CHECK(gamma_left(b) == fusion_left(b, 1, 1));
}

TEST_CASE("gamma maps of Q[Z/2] are the expected permutations") {
  ExactMatrix gr = ExactMatrix::from_ints(
      Q, {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}});
  CHECK(gamma_right(z2()) == gr);
  ExactMatrix hr = ExactMatrix::from_ints(
      Q, {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK(fusion_right(z2(), 1, 1) == hr);
}

TEST_CASE("gamma_left collision for the idempotent monoid") {
  // gamma_left(z (x) 1) = z (x) z = gamma_left(z (x) z).
  ExactMatrix g = gamma_left(idem2());
  CHECK(g.col(2) == g.col(3));
  CHECK(!try_inverse(g).ok());
}

TEST_CASE("pre-Hopf decisions on the stated examples") {
  CHECK(is_left_pre_hopf(z2()));
  CHECK(is_right_pre_hopf(z2()));
  CHECK(is_left_pre_hopf(z3()));
  CHECK(is_right_pre_hopf(z3()));
  CHECK(!is_left_pre_hopf(idem2()));
  CHECK(!is_right_pre_hopf(idem2()));
  CHECK(is_left_pre_hopf(Bialgebra::trivial(Q)));
  CHECK(is_right_pre_hopf(Bialgebra::trivial(Q)));
}

TEST_CASE("fusion operators reconstruct from the (I,I) component") {
  for (const auto& b : {z2(), idem2()})
    for (std::size_t v = 1; v <= 3; ++v)
      for (std::size_t w = 1; w <= 3; ++w)
        CHECK(fusion_left(b, v, w) == fusion_left_reconstructed(b, v, w));
}

TEST_CASE("fusion_report carries usable witnesses") {
  FusionReport good = fusion_report(z2(), 1, 1);
  CHECK(good.H_l_invertible);
  REQUIRE(good.H_l_inverse.has_value());
  CHECK((*good.H_l_inverse * good.H_l).is_identity());

  FusionReport bad = fusion_report(idem2(), 1, 1);
  CHECK(!bad.H_l_invertible);
  REQUIRE(bad.H_l_kernel.size() == 1);
  CHECK((bad.H_l * bad.H_l_kernel[0]).is_zero());
}

TEST_CASE("antipode of Q[Z/2] is the identity") {
  AntipodeResult r = solve_antipode(z2());
  REQUIRE(r.found());
  CHECK(*r.antipode == ExactMatrix::identity(Q, 2));
  CHECK(r.unique);
}

TEST_CASE("antipode of Q[Z/3] swaps g and g^2") {
  AntipodeResult r = solve_antipode(z3());
  REQUIRE(r.found());
  CHECK(*r.antipode ==
        ExactMatrix::from_ints(Q, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
}

TEST_CASE("idempotent monoid algebra has no antipode") {
  AntipodeResult r = solve_antipode(idem2());
  CHECK(!r.found());
  CHECK(r.infeasibility_certificate.has_value());
}

TEST_CASE("antipode squares to the identity on (co)commutative members") {
  for (const auto& b : {z2(), z3(), group_algebra(Q, klein_four_table())}) {
    AntipodeResult r = solve_antipode(b);
    REQUIRE(r.found());
    CHECK(*r.antipode * *r.antipode == ExactMatrix::identity(Q, b.dim));
  }
}

TEST_CASE("hopf_cross_check agrees on Hopf and non-Hopf members") {
  for (const Field& f : {Q, Field::prime_field(2), Field::prime_field(3)}) {
    for (const auto& b : small_corpus(f)) {
      ConsistencyReport rep = hopf_cross_check(b);
      CHECK(rep.consistent());
    }
    CHECK(hopf_cross_check(group_algebra(f, symmetric3_table())).consistent());
    CHECK(hopf_cross_check(group_algebra(f, symmetric3_table())).is_hopf());
    CHECK(!hopf_cross_check(monoid_algebra(f, idempotent_chain_table(2))).is_hopf());
  }
  // Modular case: F_2[Z/2] is still Hopf, the antipode is unaffected.
  ConsistencyReport modular =
      hopf_cross_check(group_algebra(Field::prime_field(2), cyclic_table(2)));
  CHECK(modular.consistent());
  CHECK(modular.is_hopf());
}

TEST_CASE("entwining components satisfy the four diagrams") {
  Comonoid z2c = z2().comonoid();
  EntwiningData e = build_entwining(z2(), z2c, 1);
  CHECK(e.lambda.rows() == 8);
  EntwiningAxiomReport rep = verify_entwining_axioms(e, 2);
  CHECK(rep.all_passed());

  // lambda^I at a trivial bialgebra is the identity.
  EntwiningData triv =
      build_entwining(Bialgebra::trivial(Q), Comonoid::trivial(Q), 1);
  CHECK(triv.lambda == ExactMatrix::identity(Q, 1));
  CHECK(verify_entwining_axioms(triv, 2).all_passed());

  // lambda^I = H^l_{-,I} by definition.
  CHECK(build_entwining(z2(), Comonoid::trivial(Q), 1).lambda ==
        fusion_left(z2(), 1, 1));
}

TEST_CASE("corrupting one lambda entry breaks a diagram") {
  Comonoid z2c = z2().comonoid();
  EntwiningData e = build_entwining(z2(), z2c, 1);
  for (std::size_t pos = 0; pos < 5; ++pos) {
    EntwiningData bad = e;
    std::size_t r = pos, c = pos * 3 % bad.lambda.cols();
    Scalar v = bad.lambda.at(r, c);
    bad.lambda.set(r, c, v + Scalar::one(Q));
    EntwiningAxiomReport rep = verify_entwining_axioms(bad, 1);
    CHECK(!rep.all_passed());
    bool witnessed = false;
    for (const auto& chk : rep.checks)
      if (!chk.passed && !chk.witness.empty()) witnessed = true;
    CHECK(witnessed);
  }
}

TEST_CASE("augmentations of Q[Z/2]") {
  AugmentationReport triv = check_augmentation(z2(), z2().counit);
  CHECK(triv.is_character);
  CHECK(triv.sigma_bar_invertible);
  CHECK(triv.lemma_consistent);

  ExactMatrix sign = ExactMatrix::from_ints(Q, {{1, -1}});
  AugmentationReport s = check_augmentation(z2(), sign);
  CHECK(s.is_character);
  CHECK(s.sigma_bar_invertible);

  ExactMatrix bad = ExactMatrix::from_ints(Q, {{0, 1}});
  AugmentationReport nb = check_augmentation(z2(), bad);
  CHECK(!nb.is_character);
  CHECK(!nb.sigma_bar.has_value());
}
