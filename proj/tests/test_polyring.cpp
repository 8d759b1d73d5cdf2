#include <random>

#include "doctest.h"
#include "ncsf/errors.hpp"
#include "ncsf/kernels.hpp"
#include "ncsf/matrix.hpp"
#include "ncsf/parambases.hpp"
#include "ncsf/poly.hpp"
#include "ncsf/ratfunc.hpp"
#include "ncsf/sampling.hpp"

using namespace ncsf;

namespace {

MPoly P(const char* s) { return parse_poly(s); }

MPoly random_poly(std::mt19937_64& g, const std::vector<Var>& vs) {
  MPoly out;
  int terms = 1 + static_cast<int>(g() % 4);
  for (int k = 0; k < terms; ++k) {
    MPoly m(Rational(static_cast<long>(g() % 19) - 9, 1 + static_cast<long>(g() % 4)));
    for (Var v : vs) m = m * MPoly(v).pow(static_cast<unsigned>(g() % 3));
    out = out + m;
  }
  return out;
}

}  // namespace

TEST_CASE("parsing and canonical strings") {
  CHECK(P("(x-y)+(y-x)").is_zero());
  CHECK(P("(x-y)*(x+y)") == P("x^2-y^2"));
  CHECK(P("(q_{11}-t_{11})*1") == MPoly(vars::q(1, 1)) - MPoly(vars::t(1, 1)));
  CHECK(P("y_0y_{00}y_{000}") == MPoly(vars::y("0")) * MPoly(vars::y("00")) * MPoly(vars::y("000")));
  CHECK(P("abq_1u_1x") == MPoly(vars::a()) * MPoly(vars::b()) * MPoly(vars::qs(1)) * MPoly(vars::u(1)) * MPoly(vars::x()));
  CHECK(P("t_{24}") == MPoly(vars::t(2, 4)));
  CHECK(P("(1-t^2)h_2").total_degree() == 3);
  CHECK(P("q_{11} - t_{11}").to_string() == "q_{1,1} - t_{1,1}");
  CHECK(P("3/2 x").to_string() == P("x*3/2").to_string());
  CHECK_THROWS_AS(P("(x-y"), InvalidArgument);
  CHECK_THROWS_AS(P("x$"), InvalidArgument);
  CHECK(parse_ratfunc("(x-y)/(x-y)") == RatFunc(1));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 g(kDefaultSeed);
  std::vector<Var> vs{vars::x(), vars::yv(), vars::a()};
  for (int k = 0; k < 50; ++k) {
    MPoly p = random_poly(g, vs), q = random_poly(g, vs), r = random_poly(g, vs);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK((p - p).is_zero());
    CHECK(p * MPoly(1) == p);
    if (!q.is_zero()) {
      auto d = divide_exact(p * q, q);
      REQUIRE(d);
      CHECK(*d == p);
    }
  }
  CHECK_FALSE(divide_exact(P("x^2+y"), P("x-y")));
}

TEST_CASE("specialize, substitute, evaluate") {
  Substitution s{{vars::y("0"), MPoly(vars::q(1, 1))}};
  CHECK(substitute(P("1 + y_0"), s) == P("1 + q_{11}"));
  Substitution s2{{vars::y("00"), MPoly(vars::q(1, 2))}, {vars::y("01"), MPoly(vars::t(1, 2))}};
  CHECK(specialize(P("y_{00}y_{01}"), s2) == P("q_{12}t_{12}"));
  CHECK(substitute(MPoly(vars::q(1, 2)), bz_specialization(3)) != MPoly(vars::q(1, 2)));
  CHECK_THROWS_AS(specialize(P("x + y"), Substitution{{vars::x(), MPoly(1)}}), MissingBinding);

  CHECK(evaluate(P("x-y"), Point{{vars::x(), Rational(2)}, {vars::yv(), Rational(2)}}) == Rational(0));
  CHECK(evaluate(P("(x-y)(x-aq_1y)"), Point{{vars::x(), Rational(1)}, {vars::yv(), Rational(0)},
                                            {vars::a(), Rational(5)}, {vars::qs(1), Rational(7)}}) ==
        Rational(1));
  CHECK(evaluate(P("q_{11}-t_{11}"), Point{{vars::q(1, 1), Rational(3, 2)}, {vars::t(1, 1), Rational(1, 2)}}) ==
        Rational(1));
  CHECK_THROWS_AS(evaluate(P("x"), Point{}), MissingBinding);

  std::mt19937_64 g(7);
  std::vector<Var> vs{vars::x(), vars::yv()};
  PointSampler ps(11);
  for (int k = 0; k < 20; ++k) {
    MPoly p = random_poly(g, vs), q = random_poly(g, vs);
    Substitution sig{{vars::x(), random_poly(g, {vars::a()})}, {vars::yv(), random_poly(g, {vars::a()})}};
    CHECK(specialize(p * q, sig) == specialize(p, sig) * specialize(q, sig));
    Point pt = ps.sample({vars::a()});
    Point composed{{vars::x(), evaluate(sig[vars::x()], pt)}, {vars::yv(), evaluate(sig[vars::yv()], pt)}};
    CHECK(evaluate(specialize(p, sig), pt) == evaluate(p, composed));
  }
}

TEST_CASE("rational functions") {
  RatFunc one(P("x-y"), P("x-y"));
  CHECK(one == RatFunc(1));
  CHECK((RatFunc(P("x-y")) + RatFunc(P("y-x"))).is_zero());
  RatFunc c = parse_ratfunc("(t_{12}-1)(t_{13}-q_{11})/(t_{12}-q_{12})(t_{13}-q_{13})");
  RatFunc expanded(c.numerator(), c.denominator());
  CHECK(c == expanded);
  RatFunc f(P("x"), P("y")), h(P("a"), P("b"));
  CHECK(f + h == RatFunc(P("x*b + a*y"), P("y*b")));
  CHECK(f / f == RatFunc(1));
  CHECK_THROWS_AS(RatFunc(P("x"), MPoly()), DivisionByZero);
  CHECK_THROWS_AS(evaluate(RatFunc(P("1"), P("x-y")), Point{{vars::x(), Rational(1)}, {vars::yv(), Rational(1)}}),
                  DivisionByZero);
}

TEST_CASE("determinants") {
  Matrix<MPoly> one(1, 1);
  one(0, 0) = P("x+a");
  CHECK(determinant(one) == P("x+a"));
  Matrix<MPoly> blk(2, 2);
  blk(0, 0) = P("a");
  blk(0, 1) = P("x*a");
  blk(1, 0) = P("b");
  blk(1, 1) = P("y*b");
  CHECK(determinant(blk) == P("(y-x)*a*b"));
  CHECK(determinant(kostka_matrix(3, ParamFamily::qt)) == P("(q_{11}-t_{11})^2(q_{12}-t_{12})(q_{21}-t_{21})"));
  Matrix<MPoly> k2 = kostka_matrix(2, ParamFamily::generic);
  CHECK(k2(0, 1) == MPoly(vars::y("0")));
  CHECK(k2(1, 1) == MPoly(vars::y("1")));

  Matrix<Rational> m(2, 2);
  m(0, 0) = Rational(1);
  m(0, 1) = Rational(2);
  m(1, 0) = Rational(3);
  m(1, 1) = Rational(4);
  CHECK(determinant(m) == Rational(-2));
  CHECK(multiply(m, inverse(m)) == Matrix<Rational>::identity(2));
  Matrix<Rational> sing(2, 2);
  CHECK_THROWS(inverse(sing));
}
