#include "doctest.h"
#include "ncsf/errors.hpp"
#include "ncsf/kernels.hpp"
#include "ncsf/nabla.hpp"
#include "ncsf/parambases.hpp"

using namespace ncsf;
using GM = Grassmann<MPoly>;

namespace {

std::string names(const Alphabet& a) {
  std::string s;
  for (const auto& z : a) s += (s.empty() ? "" : ",") + z.to_string();
  return s;
}

RatFunc frac(const char* num, const char* den) {
  return RatFunc(parse_poly(num)) / RatFunc(parse_poly(den));
}

Matrix<RatFunc> as_rat(const Matrix<MPoly>& m) {
  return m.map([](const MPoly& p) { return RatFunc(p); });
}

}  // namespace

TEST_CASE("alphabets") {
  CHECK(names(y_alphabet(Composition({2, 1, 1}))) == "y_{0},y_{01},y_{011}");
  CHECK(names(y_alphabet(Composition({1, 3}))) == "y_{1},y_{10},y_{100}");
  CHECK(names(y_coalphabet(Composition({4}))) == "y_{1},y_{01},y_{001}");
  CHECK(names(z_alphabet(Composition({4, 1, 2, 1}))) ==
        "q_{1,1},q_{1,2},q_{1,3},t_{1,4},t_{2,4},q_{3,4},t_{3,5}");
  for (int n = 1; n <= 5; ++n) {
    Substitution s = qt_specialization(n);
    for (const auto& c : compositions_of(n)) {
      Alphabet y = y_alphabet(c), z = z_alphabet(c);
      REQUIRE(y.size() == z.size());
      for (std::size_t k = 0; k < y.size(); ++k) CHECK(specialize(y[k], s) == z[k]);
    }
  }
  MPoly kij(1);
  Alphabet z = z_alphabet(Composition({4, 1, 2, 1}));
  for (int d : Composition({2, 1, 1, 2, 2}).descent_set()) kij = kij * z[static_cast<std::size_t>(d - 1)];
  CHECK(kij == parse_poly("q_{12}q_{13}t_{14}q_{34}"));
  CHECK(substitute(MPoly(vars::q(2, 3)), hlt_specialization(5)) == MPoly(vars::qs(3)));
  CHECK(substitute(MPoly(vars::t(1, 2)), bz_specialization(4)) == MPoly(vars::ts(2)));
  CHECK(parse_family("bz") == ParamFamily::bz);
  CHECK_THROWS_AS(parse_family("xx"), InvalidArgument);
}

TEST_CASE("Kostka matrices") {
  GM p211 = basis_P(ParamFamily::generic, Composition({2, 1, 1}));
  CHECK(p211.coefficient(Composition({4})) == MPoly(1));
  CHECK(p211.coefficient(Composition({1, 1, 1, 1})) == parse_poly("y_0y_{01}y_{011}"));

  auto k3 = kostka_matrix(3, ParamFamily::qt);
  CHECK(k3(1, 0) == MPoly(1));
  CHECK(k3(1, 1) == parse_poly("t_{12}"));
  CHECK(k3(1, 2) == parse_poly("q_{11}"));
  CHECK(k3(1, 3) == parse_poly("q_{11}t_{12}"));

  // The determinant comes out with the factors (t - q), not (q - t).
  CHECK(determinant(kostka_matrix(2, ParamFamily::qt)) == parse_poly("t_{11} - q_{11}"));
  CHECK(determinant(kostka_matrix(3, ParamFamily::qt)) == det_kostka_formula(3));
  CHECK(determinant(kostka_matrix(4, ParamFamily::qt)) == det_kostka_formula(4));

  for (int n = 1; n <= 4; ++n) {
    Substitution s = qt_specialization(n);
    CHECK(kostka_matrix(n, ParamFamily::generic).map([&](const MPoly& p) { return specialize(p, s); }) ==
          kostka_matrix(n, ParamFamily::qt));
  }
  CHECK_THROWS_AS(kostka_matrix(7, ParamFamily::generic), ResourceLimit);
}

TEST_CASE("duality and inverse") {
  for (int n = 1; n <= 4; ++n) {
    auto comps = compositions_of(n);
    for (const auto& i : comps)
      for (const auto& j : comps) {
        MPoly got = dual_pairing(basis_Q(ParamFamily::generic, i), basis_P(ParamFamily::generic, j));
        CHECK(got == (i == j ? pairing_norm(ParamFamily::generic, i) : MPoly()));
      }
    for (auto f : {ParamFamily::generic, ParamFamily::qt, ParamFamily::bz})
      CHECK(multiply(as_rat(kostka_matrix(n, f)), inverse_kostka(n, f)) ==
            Matrix<RatFunc>::identity(comps.size()));
  }
}

TEST_CASE("products") {
  auto c = product_in_basis(ParamFamily::qt, Composition({2}), Composition({2}));
  CHECK(c.size() == 4);
  CHECK(c.at(Composition({4})) == frac("(t_{12}-1)(t_{13}-q_{11})", "(t_{12}-q_{12})(t_{13}-q_{13})"));
  CHECK(c.at(Composition({2, 1, 1})) == frac("(q_{12}-1)(q_{22}-q_{11})", "(q_{12}-t_{12})(q_{22}-t_{22})"));
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m)
      for (const auto& i : compositions_of(n))
        for (const auto& j : compositions_of(m)) {
          auto coeffs = product_in_basis(ParamFamily::generic, i, j);
          Grassmann<RatFunc> rhs(n + m);
          for (const auto& [k, v] : coeffs) rhs += convert<RatFunc>(basis_P(ParamFamily::generic, k)) * v;
          CHECK(convert<RatFunc>(product_sym(basis_P(ParamFamily::generic, i),
                                             basis_P(ParamFamily::generic, j))) == rhs);
          for (const auto& k : compositions_of(n + m)) CHECK(coeffs.contains(k) == in_product_interval(i, k));
        }
}

TEST_CASE("triangular specializations") {
  for (auto which : {Triangular::lower, Triangular::upper})
    for (int n = 1; n <= 3; ++n) {
      auto comps = compositions_of(n);
      auto s = triangular_product(n, which);
      for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = 0; j < comps.size(); ++j) {
          if (which == Triangular::lower ? j > i : j < i) CHECK(s(i, j).is_zero());
          CHECK(s(i, j) == triangular_entry(which, comps[i], comps[j]));
        }
    }
}

TEST_CASE("BZ bracket at n = 2") {
  GM h2 = basis_P(ParamFamily::bz, Composition({2}));
  GM h11 = basis_P(ParamFamily::bz, Composition({1, 1}));
  CHECK(bz_bracket(h2, h11) == parse_poly("q_1 - t_1"));
  CHECK(bz_bracket(h2, h2).is_zero());
}
