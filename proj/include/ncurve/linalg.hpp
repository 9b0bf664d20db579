#ifndef NCURVE_LINALG_HPP
#define NCURVE_LINALG_HPP

#include <cstddef>
#include <vector>

#include "ncurve/field.hpp"

namespace ncurve {

using Vec = std::vector<FieldElem>;

/// Dense row-major matrix over a runtime field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  static Matrix from_rows(const Field& field, const std::vector<Vec>& rows, std::size_t cols);

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<FieldElem> data_;
};

struct EchelonForm {
  Matrix rref;                     // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination; pivots are chosen as the first nonzero entry
/// in each column, which is all exact arithmetic needs.
EchelonForm row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, returned as the rows of the unique reduced
/// echelon basis of that subspace (so the choice of basis is canonical).
std::vector<Vec> nullspace(const Matrix& m);
std::size_t nullity(const Matrix& m);

/// Canonical reduced echelon basis of the span of the given vectors.
std::vector<Vec> echelon_basis(const Field& field, const std::vector<Vec>& vectors, std::size_t dim);

/// Determinant of a square matrix.
FieldElem determinant(const Matrix& m);

/// Matrix-vector product.
Vec apply(const Matrix& m, const Vec& x);

/// Span that grows one vector at a time; insert() reports independence.
class IncrementalBasis {
 public:
  IncrementalBasis(Field field, std::size_t dim) : field_(field), dim_(dim) {}

  /// Adds v if it is independent of the current span; returns whether it was.
  bool insert(const Vec& v);
  bool contains(const Vec& v) const;
  std::size_t size() const noexcept { return rows_.size(); }

 private:
  Vec reduce(Vec v) const;

  Field field_;
  std::size_t dim_;
  std::vector<Vec> rows_;             // each normalized with 1 at its pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace ncurve

#endif  // NCURVE_LINALG_HPP
