#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hopfkit::finset {

/*
 * Total functions between canonical finite sets {0..n-1}, stored as tables.
 * Products are materialised with the pair (i, j) at index i*b + j (i major),
 * the same convention the tensor side uses.
 */
struct FinMap {
  std::size_t source_size = 0;
  std::size_t target_size = 0;
  std::vector<std::size_t> table;

  FinMap() = default;
  FinMap(std::size_t src, std::size_t tgt, std::vector<std::size_t> tbl);

  static FinMap identity(std::size_t n);
  static FinMap constant(std::size_t src, std::size_t tgt, std::size_t value);
  static FinMap to_terminal(std::size_t src) { return constant(src, 1, 0); }

  std::size_t operator()(std::size_t i) const { return table[i]; }

  // g . f, i.e. apply this first, then g.
  FinMap then(const FinMap& g) const;

  bool is_bijective() const;

  friend bool operator==(const FinMap&, const FinMap&) = default;
};

FinMap product_proj1(std::size_t a, std::size_t b);
FinMap product_proj2(std::size_t a, std::size_t b);
// <f, g> : X -> a x b for f : X -> a, g : X -> b.
FinMap pair_map(const FinMap& f, const FinMap& g);
// f x g : a x b -> a' x b'.
FinMap product_map(const FinMap& f, const FinMap& g);

}  // namespace hopfkit::finset
