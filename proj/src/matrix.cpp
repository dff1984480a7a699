#include "hopfkit/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfkit::exactlin {

ExactMatrix::ExactMatrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols),
      entries_(rows * cols, Scalar::zero(f)) {}

ExactMatrix ExactMatrix::identity(const Field& f, std::size_t n) {
  ExactMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

ExactMatrix ExactMatrix::from_ints(
    const Field& f, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
  ExactMatrix m(f, nr, nc);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) throw std::invalid_argument("ragged row in from_ints");
    std::size_t c = 0;
    for (long v : row) m.set(r, c++, Scalar::from_integer(f, v));
    ++r;
  }
  return m;
}

ExactMatrix ExactMatrix::column(const Field& f, std::initializer_list<long> entries) {
  ExactMatrix m(f, entries.size(), 1);
  std::size_t r = 0;
  for (long v : entries) m.set(r++, 0, Scalar::from_integer(f, v));
  return m;
}

ExactMatrix ExactMatrix::flip(const Field& f, std::size_t dv, std::size_t dw) {
  ExactMatrix m(f, dv * dw, dv * dw);
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t j = 0; j < dw; ++j)
      m.set(j * dv + i, i * dw + j, Scalar::one(f));
  return m;
}

const Scalar& ExactMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  return entries_[r * cols_ + c];
}

void ExactMatrix::set(std::size_t r, std::size_t c, Scalar v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  if (!(v.field() == field_)) throw std::invalid_argument("field mismatch in set()");
  entries_[r * cols_ + c] = std::move(v);
}

void ExactMatrix::add_to(std::size_t r, std::size_t c, const Scalar& v) {
  entries_[r * cols_ + c] += v;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (!(field_ == o.field_))
    throw std::invalid_argument("field mismatch in matmul: " + field_.name() +
                                " vs " + o.field_.name());
  if (cols_ != o.rows_)
    throw std::invalid_argument("dimension mismatch in matmul: " +
                                std::to_string(rows_) + "x" + std::to_string(cols_) +
                                " * " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  ExactMatrix res(field_, rows_, o.cols_);
  // Skip zero entries of the left factor; the structured matrices here
  // (Kronecker products of permutations and structure constants) are sparse.
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = entries_[i * cols_ + k];
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.entries_[k * o.cols_ + j];
        if (b.is_zero()) continue;
        res.entries_[i * o.cols_ + j] += a * b;
      }
    }
  }
  return res;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("shape/field mismatch in matrix addition");
  ExactMatrix res(field_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    res.entries_[i] = entries_[i] + o.entries_[i];
  return res;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("shape/field mismatch in matrix subtraction");
  ExactMatrix res(field_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    res.entries_[i] = entries_[i] - o.entries_[i];
  return res;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix res(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      res.entries_[c * rows_ + r] = entries_[r * cols_ + c];
  return res;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& e = entries_[r * cols_ + c];
      if (r == c ? !e.is_one() : !e.is_zero()) return false;
    }
  return true;
}

ExactMatrix ExactMatrix::col(std::size_t j) const {
  ExactMatrix res(field_, rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) res.entries_[r] = entries_[r * cols_ + j];
  return res;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return a.entries_ == b.entries_;
}

std::string ExactMatrix::str() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r == 0 ? "[" : " ");
    for (std::size_t c = 0; c < cols_; ++c)
      out << (c ? " " : "[") << at(r, c).str();
    out << "]" << (r + 1 == rows_ ? "]" : "\n");
  }
  return out.str();
}

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) { return a * b; }

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.field() == b.field()))
    throw std::invalid_argument("field mismatch in kron");
  ExactMatrix res(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Scalar& av = a.at(i1, j1);
      if (av.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          const Scalar& bv = b.at(i2, j2);
          if (bv.is_zero()) continue;
          res.set(i1 * b.rows() + i2, j1 * b.cols() + j2, av * bv);
        }
    }
  return res;
}

std::string tensor_index_name(std::size_t index, std::span<const std::size_t> dims) {
  std::vector<std::size_t> parts(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    parts[k] = dims[k] == 0 ? 0 : index % dims[k];
    index = dims[k] == 0 ? 0 : index / dims[k];
  }
  std::string out = "(";
  for (std::size_t k = 0; k < parts.size(); ++k)
    out += (k ? "," : "") + std::to_string(parts[k]);
  return out + ")";
}

}  // namespace hopfkit::exactlin
