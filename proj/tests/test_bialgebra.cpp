#include <doctest.h>

#include "hopfkit/bialgebra.hpp"
#include "hopfkit/generators.hpp"

using namespace hopfkit::bialg;
using hopfkit::exactlin::ExactMatrix;
using hopfkit::exactlin::Field;
using hopfkit::exactlin::Scalar;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("group algebra Q[Z/2] passes all nine axioms") {
  Bialgebra b = group_algebra(Q, cyclic_table(2), cyclic_labels(2));
  ValidationReport rep = validate_bialgebra(b);
  CHECK(rep.checks.size() == 9);
  CHECK(rep.all_passed());
}

TEST_CASE("corrupting delta(g) to 1(x)g breaks a co-axiom with a witness") {
  Bialgebra b = group_algebra(Q, cyclic_table(2));
  // delta(g) = 1 (x) g instead of g (x) g: move the entry (g,g) -> (1,g).
  ExactMatrix bad = b.comult;
  bad.set(1 * 2 + 1, 1, Scalar::zero(Q));
  bad.set(0 * 2 + 1, 1, Scalar::one(Q));
  Bialgebra broken(b.dim, b.mult, b.unit, bad, b.counit, b.labels);
  ValidationReport rep = validate_bialgebra(broken);
  CHECK(!rep.all_passed());
  bool co_axiom_failed = false;
  for (const auto& c : rep.checks)
    if (!c.passed && (c.name == "coassociativity" || c.name == "left counitality" ||
                      c.name == "right counitality")) {
      co_axiom_failed = true;
      CHECK(!c.witness.empty());
    }
  CHECK(co_axiom_failed);
}

TEST_CASE("the one-dimensional bialgebra is valid") {
  CHECK(validate_bialgebra(Bialgebra::trivial(Q)).all_passed());
  CHECK(validate_bialgebra(Bialgebra::trivial(Field::prime_field(3))).all_passed());
}

TEST_CASE("monoid algebras validate over every corpus field") {
  for (const Field& f : {Q, Field::prime_field(2), Field::prime_field(3)}) {
    CHECK(validate_bialgebra(monoid_algebra(f, idempotent_chain_table(2))).all_passed());
    CHECK(validate_bialgebra(monoid_algebra(f, idempotent_chain_table(3))).all_passed());
    CHECK(validate_bialgebra(group_algebra(f, symmetric3_table())).all_passed());
    CHECK(validate_bialgebra(group_algebra(f, klein_four_table())).all_passed());
  }
}

TEST_CASE("S3 table is a non-abelian group") {
  MulTable t = symmetric3_table();
  CHECK(is_group_table(t));
  bool abelian = true;
  for (std::size_t i = 0; i < 6 && abelian; ++i)
    for (std::size_t j = 0; j < 6 && abelian; ++j) abelian = t[i][j] == t[j][i];
  CHECK(!abelian);
  CHECK(!is_group_table(idempotent_chain_table(2)));
}

TEST_CASE("grouplike detection on Q[Z/2]") {
  Comonoid c = group_algebra(Q, cyclic_table(2)).comonoid();
  CHECK(validate_grouplike(c, ExactMatrix::column(Q, {0, 1})));   // g itself
  CHECK(validate_grouplike(c, ExactMatrix::column(Q, {1, 0})));   // the unit
  CHECK(!validate_grouplike(c, ExactMatrix::column(Q, {1, 1})));  // eps = 2
  CHECK(validate_grouplike(Comonoid::trivial(Q), ExactMatrix::identity(Q, 1)));
}

TEST_CASE("tensor comonoid T(C) is a comonoid for small corpus pairs") {
  std::vector<Bialgebra> bs = {Bialgebra::trivial(Q),
                               group_algebra(Q, cyclic_table(2)),
                               group_algebra(Q, cyclic_table(3)),
                               monoid_algebra(Q, idempotent_chain_table(2)),
                               group_algebra(Q, symmetric3_table())};
  std::vector<Comonoid> cs = {Comonoid::trivial(Q),
                              group_algebra(Q, cyclic_table(2)).comonoid(),
                              monoid_algebra(Q, idempotent_chain_table(3)).comonoid()};
  for (const auto& b : bs)
    for (const auto& c : cs)
      CHECK(validate_comonoid(tensor_comonoid(b, c)).all_passed());
}

TEST_CASE("lift_grouplike lands on a grouplike of T(C)") {
  Bialgebra z3 = group_algebra(Q, cyclic_table(3), cyclic_labels(3));
  Comonoid z2c = group_algebra(Q, cyclic_table(2)).comonoid();
  GrouplikeElement g(z2c, ExactMatrix::column(Q, {0, 1}));

  GrouplikeElement lifted = lift_grouplike(z3, z2c, g);
  CHECK(lifted.host.dim == 6);
  CHECK(lifted.vec == kron(z3.unit, g.vec));
  CHECK(validate_grouplike(lifted.host, lifted.vec));

  // C = I: the lift is the unit vector of A.
  GrouplikeElement triv = GrouplikeElement::trivial(Q);
  GrouplikeElement lifted_triv = lift_grouplike(z3, Comonoid::trivial(Q), triv);
  CHECK(lifted_triv.vec == z3.unit);

  // Trivial bialgebra: the lift is g itself.
  GrouplikeElement same = lift_grouplike(Bialgebra::trivial(Q), z2c, g);
  CHECK(same.vec == g.vec);
}

TEST_CASE("shape mismatches are hard errors before validation") {
  Bialgebra b = group_algebra(Q, cyclic_table(2));
  CHECK_THROWS_AS(Bialgebra(2, b.mult, b.unit, b.counit.transpose(), b.counit),
                  std::invalid_argument);
  CHECK_THROWS_AS(Bialgebra(2, b.mult, b.unit, b.comult,
                            ExactMatrix(Field::prime_field(2), 1, 2)),
                  std::invalid_argument);
}
