#include "ncsf/kernels.hpp"

#include <exception>

namespace ncsf {
namespace {

// Exceptions must not escape an OpenMP region; keep the first and rethrow.
class FirstError {
 public:
  template <class F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
#pragma omp critical(ncsf_first_error)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

template <class T>
void check_shapes(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product: dimension mismatch");
}

template <class T>
T dot(const Matrix<T>& a, const Matrix<T>& b, std::size_t i, std::size_t j) {
  T acc(0);
  for (std::size_t k = 0; k < a.cols(); ++k) {
    if (is_zero(a(i, k)) || is_zero(b(k, j))) continue;
    acc += a(i, k) * b(k, j);
  }
  return acc;
}

}  // namespace

template <class T>
Matrix<T> multiply_serial(const Matrix<T>& a, const Matrix<T>& b) {
  check_shapes(a, b);
  Matrix<T> out(a.rows(), b.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = dot(a, b, i, j);
  return out;
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  check_shapes(a, b);
  Matrix<T> out(a.rows(), b.cols(), T(0));
  const long cells = static_cast<long>(a.rows() * b.cols());
  FirstError err;
#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < cells; ++c) {
    std::size_t i = static_cast<std::size_t>(c) / b.cols();
    std::size_t j = static_cast<std::size_t>(c) % b.cols();
    err.run([&] { out(i, j) = dot(a, b, i, j); });
  }
  err.rethrow();
  return out;
}

template Matrix<Rational> multiply(const Matrix<Rational>&, const Matrix<Rational>&);
template Matrix<MPoly> multiply(const Matrix<MPoly>&, const Matrix<MPoly>&);
template Matrix<RatFunc> multiply(const Matrix<RatFunc>&, const Matrix<RatFunc>&);
template Matrix<Rational> multiply_serial(const Matrix<Rational>&, const Matrix<Rational>&);
template Matrix<MPoly> multiply_serial(const Matrix<MPoly>&, const Matrix<MPoly>&);
template Matrix<RatFunc> multiply_serial(const Matrix<RatFunc>&, const Matrix<RatFunc>&);

std::vector<MPoly> packed_word_sum_serial(int n, std::size_t slots, const WordTerm& term) {
  std::vector<PolyBuilder> acc(slots);
  for (const auto& w : packed_words(n)) {
    auto [slot, value] = term(w);
    if (slot >= slots) throw InvalidArgument("packed_word_sum: slot out of range");
    acc[slot].add(value);
  }
  std::vector<MPoly> out;
  out.reserve(slots);
  for (auto& b : acc) out.push_back(b.build());
  return out;
}

std::vector<MPoly> packed_word_sum(int n, std::size_t slots, const WordTerm& term) {
  const std::vector<PackedWord> words = packed_words(n);
  const long count = static_cast<long>(words.size());
  std::vector<std::pair<std::size_t, MPoly>> terms(words.size());
  FirstError err;
#pragma omp parallel for schedule(dynamic, 8)
  for (long k = 0; k < count; ++k) {
    auto idx = static_cast<std::size_t>(k);
    err.run([&] { terms[idx] = term(words[idx]); });
  }
  err.rethrow();
  std::vector<PolyBuilder> acc(slots);
  for (const auto& [slot, value] : terms) {
    if (slot >= slots) throw InvalidArgument("packed_word_sum: slot out of range");
    acc[slot].add(value);
  }
  std::vector<MPoly> out;
  out.reserve(slots);
  for (auto& b : acc) out.push_back(b.build());
  return out;
}

std::vector<Rational> determinants_at_serial(const Matrix<MPoly>& m,
                                             const std::vector<Point>& points) {
  std::vector<Rational> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(determinant(evaluate(m, p)));
  return out;
}

std::vector<Rational> determinants_at(const Matrix<MPoly>& m, const std::vector<Point>& points) {
  std::vector<Rational> out(points.size());
  const long count = static_cast<long>(points.size());
  FirstError err;
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    auto idx = static_cast<std::size_t>(k);
    err.run([&] { out[idx] = determinant(evaluate(m, points[idx])); });
  }
  err.rethrow();
  return out;
}

}  // namespace ncsf
