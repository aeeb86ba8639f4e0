#include "symrees/form_matrix.hpp"

#include <sstream>

namespace symrees {

FormMatrix::FormMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

FormMatrix FormMatrix::from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  FormMatrix m(ring, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (!rows[i][j].is_zero()) require_same_ring(ring, rows[i][j].ring());
      m(i, j) = rows[i][j].is_zero() ? Polynomial(ring) : rows[i][j];
    }
  }
  return m;
}

FormMatrix FormMatrix::from_columns(RingPtr ring, const std::vector<std::vector<Polynomial>>& columns) {
  return from_rows(ring, columns).transpose();
}

std::vector<Polynomial> FormMatrix::row(std::size_t i) const {
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back((*this)(i, j));
  return out;
}

std::vector<Polynomial> FormMatrix::column(std::size_t j) const {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

std::vector<int> FormMatrix::column_degrees() const {
  if (declared_degrees_) return *declared_degrees_;
  std::vector<int> out(cols_, -1);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i)
      if (!(*this)(i, j).is_zero()) {
        out[j] = (*this)(i, j).degree();
        break;
      }
  return out;
}

void FormMatrix::declare_column_degrees(std::vector<int> degrees) {
  if (degrees.size() != cols_) throw DomainError("column degree count mismatch");
  declared_degrees_ = std::move(degrees);
}

FormMatrix FormMatrix::transpose() const {
  FormMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FormMatrix FormMatrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  FormMatrix s(ring_, rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs[i], cs[j]);
  return s;
}

bool FormMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

Polynomial FormMatrix::determinant() const {
  if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
  if (rows_ == 0) return Polynomial::constant(ring_, 1);
  if (rows_ == 1) return (*this)(0, 0);
  if (rows_ == 2) return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
  std::size_t best = 0, best_zeros = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    std::size_t zeros = 0;
    for (std::size_t j = 0; j < cols_; ++j) zeros += (*this)(i, j).is_zero();
    if (zeros > best_zeros) {
      best = i;
      best_zeros = zeros;
    }
  }
  std::vector<std::size_t> other_rows;
  for (std::size_t i = 0; i < rows_; ++i)
    if (i != best) other_rows.push_back(i);
  Polynomial det(ring_);
  for (std::size_t j = 0; j < cols_; ++j) {
    const Polynomial& a = (*this)(best, j);
    if (a.is_zero()) continue;
    std::vector<std::size_t> other_cols;
    for (std::size_t k = 0; k < cols_; ++k)
      if (k != j) other_cols.push_back(k);
    Polynomial cof = a * submatrix(other_rows, other_cols).determinant();
    if ((best + j) % 2)
      det -= cof;
    else
      det += cof;
  }
  return det;
}

std::vector<Polynomial> FormMatrix::left_multiply(const std::vector<Polynomial>& v) const {
  if (v.size() != rows_) throw DomainError("vector length does not match matrix rows");
  std::vector<Polynomial> out(cols_, Polynomial(ring_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[i].is_zero() && !(*this)(i, j).is_zero()) out[j] += v[i] * (*this)(i, j);
  return out;
}

std::vector<Polynomial> FormMatrix::apply(const std::vector<Polynomial>& v) const {
  if (v.size() != cols_) throw DomainError("vector length does not match matrix columns");
  std::vector<Polynomial> out(rows_, Polynomial(ring_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

FormMatrix operator*(const FormMatrix& a, const FormMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shapes do not compose");
  FormMatrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
  return c;
}

bool operator==(const FormMatrix& a, const FormMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string FormMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).to_string();
    out << "]";
  }
  out << "]";
  return out.str();
}

std::vector<Polynomial> signed_maximal_minors(const FormMatrix& M) {
  if (M.rows() != M.cols() + 1) throw DomainError("signed maximal minors need an (n+1) x n matrix");
  std::vector<std::size_t> cols(M.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    std::vector<std::size_t> rows;
    for (std::size_t k = 0; k < M.rows(); ++k)
      if (k != i) rows.push_back(k);
    const Polynomial d = M.submatrix(rows, cols).determinant();
    out.push_back(i % 2 ? -d : d);
  }
  return out;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace symrees
