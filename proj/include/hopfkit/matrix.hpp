#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hopfkit/field.hpp"

namespace hopfkit::exactlin {

/*
 * Dense matrix over an exact field, row-major. This is the universal carrier
 * for every linear map in the toolkit (multiplications, comultiplications,
 * fusion operators, entwinings, antipodes, ...).
 *
 * Basis convention for tensor products: the basis of V (x) W is e_i (x) f_j
 * ordered with i major, j minor (index i*dimW + j). With that convention
 * kron(A, B) is literally the matrix of the tensor product of the two maps.
 *
 * Values are immutable in spirit: all operations return fresh matrices,
 * mutation is limited to construction-time set().
 */
class ExactMatrix {
 public:
  ExactMatrix(const Field& f, std::size_t rows, std::size_t cols);

  static ExactMatrix identity(const Field& f, std::size_t n);
  // Test/builder convenience: entries given as integers, row by row.
  static ExactMatrix from_ints(const Field& f,
                               std::initializer_list<std::initializer_list<long>> rows);
  static ExactMatrix column(const Field& f, std::initializer_list<long> entries);
  // The flip (braiding) V (x) W -> W (x) V as a permutation matrix,
  // dim V = dv, dim W = dw.
  static ExactMatrix flip(const Field& f, std::size_t dv, std::size_t dw);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Scalar v);
  void add_to(std::size_t r, std::size_t c, const Scalar& v);

  ExactMatrix operator*(const ExactMatrix& o) const;  // throws on shape/field mismatch
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix transpose() const;

  bool is_zero() const;
  bool is_identity() const;

  ExactMatrix col(std::size_t j) const;  // j-th column as a rows x 1 matrix

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  std::string str() const;  // small debug rendering

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> entries_;
};

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

// Pretty name for a tensor basis index: decompose `index` in the mixed-radix
// system given by dims and print as "(i,j,k)". Used by axiom-failure witnesses.
std::string tensor_index_name(std::size_t index, std::span<const std::size_t> dims);

}  // namespace hopfkit::exactlin
