#pragma once

#include <string>
#include <vector>

#include "hopfkit/fusion.hpp"

namespace hopfkit::fusion {

using bialg::Comonoid;

/*
 * The mixed distributive law lambda^C = H^l_{-,C} entwining the monad
 * T = A (x) - with the comonad - (x) T(C). Components are square matrices
 *
 *   lambda^C_V : T(V (x) T(C)) -> T(V) (x) T(C)
 *
 * of size dim * dimV * dim * dimC. The four entwining diagrams (unit,
 * counit collapse, coassociativity pentagon, multiplication square) are
 * checked as exact matrix identities.
 */

ExactMatrix entwining_component(const Bialgebra& b, const Comonoid& c,
                                std::size_t dim_v);

struct EntwiningData {
  Bialgebra bialgebra;
  Comonoid comonoid;
  std::size_t dim_v = 1;
  ExactMatrix lambda;  // the stored component at dim_v
};

EntwiningData build_entwining(const Bialgebra& b, const Comonoid& c,
                              std::size_t dim_v);

struct DiagramCheck {
  std::string name;
  std::size_t dim_v = 0;
  bool passed = false;
  std::string witness;
};

struct EntwiningAxiomReport {
  std::vector<DiagramCheck> checks;
  bool all_passed() const;
};

// All four diagrams at every component dimension <= dim_bound. The stored
// component of `e` is used whenever its dimension matches, so a corrupted
// lambda is exercised rather than silently recomputed.
EntwiningAxiomReport verify_entwining_axioms(const EntwiningData& e,
                                             std::size_t dim_bound);

}  // namespace hopfkit::fusion
