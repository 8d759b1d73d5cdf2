#pragma once

// Hot loops with an OpenMP version and a serial reference.  Results are
// identical by construction: every parallel loop writes disjoint slots and
// reductions are merged in a fixed order.

#include <functional>
#include <vector>

#include "ncsf/composition.hpp"
#include "ncsf/matrix.hpp"

namespace ncsf {

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> multiply_serial(const Matrix<T>& a, const Matrix<T>& b);

/// One (slot, value) contribution per packed word.
using WordTerm = std::function<std::pair<std::size_t, MPoly>(const PackedWord&)>;

/// Sums term(w) over all packed words of size n into `slots` buckets.
std::vector<MPoly> packed_word_sum(int n, std::size_t slots, const WordTerm& term);
std::vector<MPoly> packed_word_sum_serial(int n, std::size_t slots, const WordTerm& term);

/// det(m) evaluated at each point.
std::vector<Rational> determinants_at(const Matrix<MPoly>& m, const std::vector<Point>& points);
std::vector<Rational> determinants_at_serial(const Matrix<MPoly>& m,
                                             const std::vector<Point>& points);

}  // namespace ncsf
