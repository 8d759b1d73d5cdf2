#include "ncsf/matrix.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

namespace ncsf {

MPoly determinant(const Matrix<MPoly>& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return MPoly(1);
  if (n > kSymbolicDeterminantLimit)
    throw ResourceLimit("symbolic determinant limited to 16 x 16");
  // minors[S] = signed sum over injections of the first |S| rows onto S
  std::unordered_map<std::uint32_t, MPoly> minors{{0u, MPoly(1)}};
  for (std::size_t row = 0; row < n; ++row) {
    std::unordered_map<std::uint32_t, MPoly> next;
    for (const auto& [used, value] : minors) {
      for (std::size_t col = 0; col < n; ++col) {
        std::uint32_t bit = std::uint32_t{1} << col;
        if ((used & bit) || m(row, col).is_zero()) continue;
        // each already-used column to the right of col is an inversion
        int inversions = std::popcount(used & ~((bit << 1) - 1u));
        MPoly term = value * m(row, col);
        auto& slot = next[used | bit];
        if (inversions % 2) slot -= term;
        else slot += term;
      }
    }
    minors.clear();
    for (auto& [k, v] : next)
      if (!v.is_zero()) minors.emplace(k, std::move(v));
  }
  auto it = minors.find((std::uint32_t{1} << n) - 1u);
  return it == minors.end() ? MPoly() : it->second;
}

Rational determinant(const Matrix<Rational>& input) {
  if (input.rows() != input.cols()) throw InvalidArgument("determinant of a non-square matrix");
  Matrix<Rational> a = input;
  std::size_t n = a.rows();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(a(r, col)) == 0) continue;
      Rational f = a(r, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

namespace {

// Reduces [a | b] to [I | a^{-1} b] in place.
void gauss_jordan(Matrix<Rational>& a, Matrix<Rational>& b) {
  std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == n) throw DivisionByZero("singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(pivot, j), b(col, j));
    }
    Rational inv = Rational(1) / a(col, col);
    for (std::size_t j = 0; j < n; ++j) a(col, j) *= inv;
    for (std::size_t j = 0; j < b.cols(); ++j) b(col, j) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) a(r, j) -= f * a(col, j);
      for (std::size_t j = 0; j < b.cols(); ++j) b(r, j) -= f * b(col, j);
    }
  }
}

}  // namespace

Matrix<Rational> inverse(const Matrix<Rational>& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
  Matrix<Rational> a = m;
  Matrix<Rational> b = Matrix<Rational>::identity(m.rows());
  gauss_jordan(a, b);
  return b;
}

std::vector<Rational> solve(const Matrix<Rational>& m, const std::vector<Rational>& rhs) {
  if (m.rows() != m.cols() || rhs.size() != m.rows())
    throw InvalidArgument("solve: dimension mismatch");
  Matrix<Rational> a = m;
  Matrix<Rational> b(rhs.size(), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) b(i, 0) = rhs[i];
  gauss_jordan(a, b);
  std::vector<Rational> x(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) x[i] = b(i, 0);
  return x;
}

Matrix<Rational> evaluate(const Matrix<MPoly>& m, const Point& point) {
  return m.map([&](const MPoly& p) { return evaluate(p, point); });
}

Matrix<Rational> evaluate(const Matrix<RatFunc>& m, const Point& point) {
  return m.map([&](const RatFunc& f) { return evaluate(f, point); });
}

}  // namespace ncsf
