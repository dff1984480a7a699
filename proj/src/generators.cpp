#include "hopfkit/generators.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace hopfkit::bialg {

namespace {

void check_table(const MulTable& t) {
  const std::size_t n = t.size();
  if (n == 0) throw std::invalid_argument("empty multiplication table");
  for (const auto& row : t) {
    if (row.size() != n) throw std::invalid_argument("ragged multiplication table");
    for (std::size_t v : row)
      if (v >= n) throw std::invalid_argument("multiplication table entry out of range");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t[t[i][j]][k] != t[i][t[j][k]])
          throw std::invalid_argument("multiplication table is not associative");
}

}  // namespace

std::size_t identity_of(const MulTable& t) {
  const std::size_t n = t.size();
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      ok = t[e][i] == i && t[i][e] == i;
    if (ok) return e;
  }
  throw std::invalid_argument("multiplication table has no identity element");
}

bool is_group_table(const MulTable& t) {
  std::size_t e;
  try {
    check_table(t);
    e = identity_of(t);
  } catch (const std::invalid_argument&) {
    return false;
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    bool has_inverse = false;
    for (std::size_t j = 0; j < t.size(); ++j)
      if (t[i][j] == e && t[j][i] == e) { has_inverse = true; break; }
    if (!has_inverse) return false;
  }
  return true;
}

Bialgebra monoid_algebra(const Field& f, const MulTable& t,
                         std::vector<std::string> labels) {
  check_table(t);
  const std::size_t n = t.size();
  const std::size_t e = identity_of(t);

  ExactMatrix mult(f, n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mult.set(t[i][j], i * n + j, Scalar::one(f));

  ExactMatrix unit(f, n, 1);
  unit.set(e, 0, Scalar::one(f));

  ExactMatrix comult(f, n * n, n);
  for (std::size_t k = 0; k < n; ++k)
    comult.set(k * n + k, k, Scalar::one(f));

  ExactMatrix counit(f, 1, n);
  for (std::size_t k = 0; k < n; ++k) counit.set(0, k, Scalar::one(f));

  if (labels.empty()) {
    for (std::size_t k = 0; k < n; ++k)
      labels.push_back(k == e ? "1" : "x" + std::to_string(k));
  }
  return Bialgebra(n, std::move(mult), std::move(unit), std::move(comult),
                   std::move(counit), std::move(labels));
}

Bialgebra group_algebra(const Field& f, const MulTable& t,
                        std::vector<std::string> labels) {
  if (!is_group_table(t))
    throw std::invalid_argument("table is not a group");
  return monoid_algebra(f, t, std::move(labels));
}

MulTable cyclic_table(std::size_t n) {
  MulTable t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

MulTable direct_product_table(const MulTable& a, const MulTable& b) {
  const std::size_t na = a.size(), nb = b.size();
  MulTable t(na * nb, std::vector<std::size_t>(na * nb));
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t i2 = 0; i2 < nb; ++i2)
      for (std::size_t j1 = 0; j1 < na; ++j1)
        for (std::size_t j2 = 0; j2 < nb; ++j2)
          t[i1 * nb + i2][j1 * nb + j2] = a[i1][j1] * nb + b[i2][j2];
  return t;
}

MulTable klein_four_table() {
  return direct_product_table(cyclic_table(2), cyclic_table(2));
}

MulTable symmetric3_table() {
  // Permutations of {0,1,2} in lexicographic one-line order:
  // 012, 021, 102, 120, 201, 210. Product p*q acts as p after q
  // ((p*q)(x) = p(q(x))), matching left modules over the group algebra.
  const std::vector<std::array<std::size_t, 3>> perms = {
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto find = [&](const std::array<std::size_t, 3>& p) {
    for (std::size_t k = 0; k < perms.size(); ++k)
      if (perms[k] == p) return k;
    throw std::logic_error("permutation lookup failed");
  };
  MulTable t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<std::size_t, 3> comp{};
      for (std::size_t x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      t[i][j] = find(comp);
    }
  return t;
}

MulTable idempotent_chain_table(std::size_t n) {
  // Element 0 is the identity (top); i*j = max(i,j) otherwise.
  MulTable t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = std::max(i, j);
  return t;
}

std::vector<std::string> cyclic_labels(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t k = 0; k < n; ++k)
    l.push_back(k == 0 ? "1" : (k == 1 ? "g" : "g^" + std::to_string(k)));
  return l;
}

}  // namespace hopfkit::bialg
