#pragma once

#include "folinv/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace folinv {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  T* row(std::size_t i) { return data_.data() + i * cols_; }
  const T* row(std::size_t i) const { return data_.data() + i * cols_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Rank by Bareiss fraction-free elimination, single-threaded reference.
std::size_t bareiss_rank_serial(IntMatrix m);
/// Same elimination with the row updates of each pivot step spread over OpenMP threads.
std::size_t bareiss_rank_parallel(IntMatrix m);

/// Clears denominators row by row; the row space (hence the rank) is unchanged.
IntMatrix integer_rows(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix identity(std::size_t n);
bool is_zero(const RationalMatrix& m);

/// Columns form a basis of the right kernel.
RationalMatrix kernel_basis(const RationalMatrix& m);

/// [a | b], same row count.
RationalMatrix hconcat(const RationalMatrix& a, const RationalMatrix& b);

/// True when the column spaces coincide (compared via ranks of the stacked matrix).
bool same_column_space(const RationalMatrix& a, const RationalMatrix& b);

std::string str(const RationalMatrix& m);

} // namespace folinv
