#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfkit/bialgebra.hpp"

namespace hopfkit::bialg {

/*
 * Built-in generators for monoid and group bialgebras, so tests and the
 * bundled corpus never rely on hand-entered structure constants. A monoid
 * algebra k[M] has basis the monoid elements, multiplication from the table,
 * delta(x) = x (x) x and eps(x) = 1.
 */

using MulTable = std::vector<std::vector<std::size_t>>;

// Index of the two-sided identity element; throws if there is none.
std::size_t identity_of(const MulTable& table);

bool is_group_table(const MulTable& table);

Bialgebra monoid_algebra(const Field& f, const MulTable& table,
                         std::vector<std::string> labels = {});

// Same construction, but insists the table is a group.
Bialgebra group_algebra(const Field& f, const MulTable& table,
                        std::vector<std::string> labels = {});

MulTable cyclic_table(std::size_t n);
MulTable direct_product_table(const MulTable& a, const MulTable& b);
MulTable klein_four_table();
MulTable symmetric3_table();
// The commutative idempotent chain monoid 1 >= a_1 >= ... >= a_{n-1}
// (x*y = min); n = 2 gives {1, z | z^2 = z}.
MulTable idempotent_chain_table(std::size_t n);

std::vector<std::string> cyclic_labels(std::size_t n);

}  // namespace hopfkit::bialg
