#include "hopfkit/finmap.hpp"

#include <stdexcept>

namespace hopfkit::finset {

FinMap::FinMap(std::size_t src, std::size_t tgt, std::vector<std::size_t> tbl)
    : source_size(src), target_size(tgt), table(std::move(tbl)) {
  if (table.size() != source_size)
    throw std::invalid_argument("FinMap table length must equal source size");
  for (std::size_t v : table)
    if (v >= target_size)
      throw std::invalid_argument("FinMap table entry out of range");
}

FinMap FinMap::identity(std::size_t n) {
  std::vector<std::size_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = i;
  return FinMap(n, n, std::move(t));
}

FinMap FinMap::constant(std::size_t src, std::size_t tgt, std::size_t value) {
  if (value >= tgt) throw std::invalid_argument("constant value out of range");
  return FinMap(src, tgt, std::vector<std::size_t>(src, value));
}

FinMap FinMap::then(const FinMap& g) const {
  if (target_size != g.source_size)
    throw std::invalid_argument("FinMap composition mismatch");
  std::vector<std::size_t> t(source_size);
  for (std::size_t i = 0; i < source_size; ++i) t[i] = g.table[table[i]];
  return FinMap(source_size, g.target_size, std::move(t));
}

bool FinMap::is_bijective() const {
  if (source_size != target_size) return false;
  std::vector<bool> hit(target_size, false);
  for (std::size_t v : table) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

FinMap product_proj1(std::size_t a, std::size_t b) {
  std::vector<std::size_t> t(a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) t[i * b + j] = i;
  return FinMap(a * b, a, std::move(t));
}

FinMap product_proj2(std::size_t a, std::size_t b) {
  std::vector<std::size_t> t(a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) t[i * b + j] = j;
  return FinMap(a * b, b, std::move(t));
}

FinMap pair_map(const FinMap& f, const FinMap& g) {
  if (f.source_size != g.source_size)
    throw std::invalid_argument("pair_map requires a common source");
  std::vector<std::size_t> t(f.source_size);
  for (std::size_t i = 0; i < f.source_size; ++i)
    t[i] = f.table[i] * g.target_size + g.table[i];
  return FinMap(f.source_size, f.target_size * g.target_size, std::move(t));
}

FinMap product_map(const FinMap& f, const FinMap& g) {
  std::vector<std::size_t> t(f.source_size * g.source_size);
  for (std::size_t i = 0; i < f.source_size; ++i)
    for (std::size_t j = 0; j < g.source_size; ++j)
      t[i * g.source_size + j] = f.table[i] * g.target_size + g.table[j];
  return FinMap(f.source_size * g.source_size, f.target_size * g.target_size,
                std::move(t));
}

}  // namespace hopfkit::finset
