#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncsf/errors.hpp"
#include "ncsf/ratfunc.hpp"

namespace ncsf {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!(a.data_[k] == b.data_[k])) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Exact determinant by row expansion over column subsets (division free,
/// zero entries pruned).  Throws ResourceLimit above 16 x 16.
MPoly determinant(const Matrix<MPoly>& m);
/// Gaussian elimination over the rationals.
Rational determinant(const Matrix<Rational>& m);
/// Inverse over the rationals; throws DivisionByZero if singular.
Matrix<Rational> inverse(const Matrix<Rational>& m);
/// Solves m x = rhs over the rationals; throws DivisionByZero if singular.
std::vector<Rational> solve(const Matrix<Rational>& m, const std::vector<Rational>& rhs);

inline constexpr std::size_t kSymbolicDeterminantLimit = 16;

Matrix<Rational> evaluate(const Matrix<MPoly>& m, const Point& point);
Matrix<Rational> evaluate(const Matrix<RatFunc>& m, const Point& point);

}  // namespace ncsf
