#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/linsolve.hpp"
#include "hopfkit/matrix.hpp"

namespace hopfkit::bialg {

using exactlin::ExactMatrix;
using exactlin::Field;
using exactlin::Scalar;

/*
 * Structure-constant presentation of bialgebras and comonoids over an exact
 * field. All maps are matrices in a fixed user basis, with the i-major tensor
 * convention of ExactMatrix; the braiding is fixed to the symmetric flip.
 */

struct Comonoid {
  std::size_t dim = 0;
  ExactMatrix comult;  // dim^2 x dim
  ExactMatrix counit;  // 1 x dim
  std::vector<std::string> labels;

  Comonoid(std::size_t d, ExactMatrix cm, ExactMatrix cu,
           std::vector<std::string> lb = {});
  static Comonoid trivial(const Field& f);
  const Field& field() const { return comult.field(); }
};

struct Bialgebra {
  std::size_t dim = 0;
  ExactMatrix mult;    // dim x dim^2,  m : A (x) A -> A
  ExactMatrix unit;    // dim x 1,      e : I -> A
  ExactMatrix comult;  // dim^2 x dim,  delta : A -> A (x) A
  ExactMatrix counit;  // 1 x dim,      eps : A -> I
  std::vector<std::string> labels;

  Bialgebra(std::size_t d, ExactMatrix m, ExactMatrix e, ExactMatrix cm,
            ExactMatrix cu, std::vector<std::string> lb = {});
  static Bialgebra trivial(const Field& f);
  const Field& field() const { return mult.field(); }
  Comonoid comonoid() const { return Comonoid(dim, comult, counit, labels); }
};

struct AxiomCheck {
  std::string name;
  bool passed = false;
  std::string witness;  // first offending basis tuple, empty on pass
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  std::string first_failure() const;
};

// The nine bialgebra axioms, each reported with a pass/fail and, on failure,
// the first offending basis tuple. Shape mismatches are a hard error raised
// before any axiom is evaluated.
ValidationReport validate_bialgebra(const Bialgebra& b);

ValidationReport validate_comonoid(const Comonoid& c);

// delta(v) = v (x) v and eps(v) = 1.
bool validate_grouplike(const Comonoid& c, const ExactMatrix& v);

struct GrouplikeElement {
  Comonoid host;
  ExactMatrix vec;  // host.dim x 1

  GrouplikeElement(Comonoid h, ExactMatrix v);
  static GrouplikeElement trivial(const Field& f);
};

// The comonoid T(C) = A (x) C carried by any opmonoidal image of a comonoid:
// comultiplication (id (x) flip (x) id) . (delta_A (x) delta_C), counit
// eps_A (x) eps_C.
Comonoid tensor_comonoid(const Bialgebra& b, const Comonoid& c);

// Lift g : I -> C along the unit to e (x) g : I -> T(C); the result is
// checked to be grouplike for T(C) before it is returned.
GrouplikeElement lift_grouplike(const Bialgebra& b, const Comonoid& c,
                                const GrouplikeElement& g);

}  // namespace hopfkit::bialg
