#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "graphlie/rational.hpp"

namespace graphlie {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const;

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalVector operator*(std::span<const Rational> v) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Appends a row; the first appended row fixes the column count of an empty matrix.
  void push_row(std::span<const Rational> values);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  RationalMatrix matrix;
  std::vector<std::size_t> pivots;  // ascending pivot columns
};

/// Reduced row echelon form by Gauss-Jordan elimination over Q.
RrefResult rref(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column of rref(m). The vector
/// for free column f has a 1 in position f and zeros in every other free column.
std::vector<RationalVector> nullspace_basis(const RationalMatrix& m);

std::string to_string(const RationalMatrix& m);

}  // namespace graphlie
