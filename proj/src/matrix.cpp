#include "graphlie/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "graphlie/errors.hpp"

namespace graphlie {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  for (const auto& r : rows) {
    std::vector<Rational> values(r);
    push_row(values);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

bool RationalMatrix::is_zero() const {
  for (const auto& q : data_)
    if (sgn(q) != 0) return false;
  return true;
}

void RationalMatrix::push_row(std::span<const Rational> values) {
  if (rows_ == 0 && data_.empty()) cols_ = values.size();
  if (values.size() != cols_) throw DimensionError("row length does not match column count");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product: inner dimensions differ");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

RationalVector RationalMatrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector product: size mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (sgn(v[k]) != 0) out[i] += (*this)(i, k) * v[k];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix difference: shape mismatch");
  RationalMatrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= rhs.data_[k];
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum: shape mismatch");
  RationalMatrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
  return out;
}

RrefResult rref(RationalMatrix m) {
  RrefResult result;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < m.rows() && sgn(m(r, col)) == 0) ++r;
    if (r == m.rows()) continue;

    if (r != pivot_row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(r, c), m(pivot_row, c));

    const Rational inv = 1 / m(pivot_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) *= inv;

    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || sgn(m(i, col)) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (sgn(m(pivot_row, c)) != 0) m(i, c) -= factor * m(pivot_row, c);
    }
    result.pivots.push_back(col);
    ++pivot_row;
  }
  result.matrix = std::move(m);
  return result;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

std::vector<RationalVector> nullspace_basis(const RationalMatrix& m) {
  const auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << m(i, j).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace graphlie
