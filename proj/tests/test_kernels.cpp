#include <random>

#include "doctest.h"
#include "ncsf/kernels.hpp"
#include "ncsf/nabla.hpp"
#include "ncsf/parambases.hpp"
#include "ncsf/sampling.hpp"

using namespace ncsf;

TEST_CASE("parallel and serial matrix products agree") {
  std::mt19937_64 g(kDefaultSeed);
  Matrix<Rational> a(13, 9), b(9, 7);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = Rational(static_cast<long>(g() % 21) - 10, 1 + static_cast<long>(g() % 5));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = Rational(static_cast<long>(g() % 21) - 10);
  CHECK(multiply(a, b) == multiply_serial(a, b));
  auto k = kostka_matrix(4, ParamFamily::qt);
  CHECK(multiply(k, k) == multiply_serial(k, k));
  Matrix<RatFunc> kr = k.map([](const MPoly& p) { return RatFunc(p); });
  CHECK(multiply(kr, inverse_kostka(4, ParamFamily::qt)) == Matrix<RatFunc>::identity(8));
  CHECK_THROWS(multiply(a, a));
}

TEST_CASE("packed-word sums agree with the serial reference") {
  for (int n = 1; n <= 5; ++n) {
    WordTerm term = [](const PackedWord& w) {
      return std::make_pair(descent_composition(sigma_of_word(w)).canonical_index(), phi_statistic(w));
    };
    auto par = packed_word_sum(n, std::size_t{1} << (n - 1), term);
    auto ser = packed_word_sum_serial(n, std::size_t{1} << (n - 1), term);
    CHECK(par == ser);
    MPoly total;
    for (const auto& p : par) total = total + p;
    CHECK(total == w_statistic_polynomial(n));
  }
}

TEST_CASE("determinants at points match symbolic evaluation") {
  auto k = kostka_matrix(4, ParamFamily::qt);
  std::vector<MPoly> entries;
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) entries.push_back(k(i, j));
  auto vs = collect_variables(entries);
  PointSampler s(kDefaultSeed);
  std::vector<Point> pts;
  for (int p = 0; p < kRandomPointCount; ++p) pts.push_back(s.sample(vs));
  auto par = determinants_at(k, pts);
  auto ser = determinants_at_serial(k, pts);
  CHECK(par == ser);
  MPoly det = determinant(k);
  for (std::size_t p = 0; p < pts.size(); ++p) CHECK(par[p] == evaluate(det, pts[p]));
}

TEST_CASE("seeded sampling is deterministic") {
  PointSampler a(5), b(5), c(6);
  std::vector<Var> vs{vars::x(), vars::yv()};
  Point pa = a.sample(vs), pb = b.sample(vs), pc = c.sample(vs);
  CHECK(pa == pb);
  CHECK(pa != pc);
  for (const auto& [v, r] : pa) CHECK(r != Rational(0));
}
