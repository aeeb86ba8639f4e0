#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symrees/polynomial.hpp"

namespace symrees {

/// Dense matrix of polynomials over one ring.
class FormMatrix {
 public:
  FormMatrix() = default;
  FormMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  static FormMatrix from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows);
  static FormMatrix from_columns(RingPtr ring, const std::vector<std::vector<Polynomial>>& columns);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
  Polynomial& operator()(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }

  std::vector<Polynomial> row(std::size_t i) const;
  std::vector<Polynomial> column(std::size_t j) const;

  /// Degree of the first nonzero entry of each column, or the declared value.
  std::vector<int> column_degrees() const;
  void declare_column_degrees(std::vector<int> degrees);

  FormMatrix transpose() const;
  FormMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  bool is_zero() const;

  /// Square matrices only; Laplace expansion along the sparsest row.
  Polynomial determinant() const;

  /// Row vector v times this matrix.
  std::vector<Polynomial> left_multiply(const std::vector<Polynomial>& v) const;
  /// This matrix times column vector v.
  std::vector<Polynomial> apply(const std::vector<Polynomial>& v) const;

  friend FormMatrix operator*(const FormMatrix& a, const FormMatrix& b);
  friend bool operator==(const FormMatrix& a, const FormMatrix& b);

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
  std::optional<std::vector<int>> declared_degrees_;
};

/// (-1)^i det(M without row i) for an (n+1) x n matrix; every column of M is
/// a syzygy of the result.
std::vector<Polynomial> signed_maximal_minors(const FormMatrix& M);

/// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace symrees
