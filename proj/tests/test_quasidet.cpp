#include "doctest.h"
#include "ncsf/errors.hpp"
#include "ncsf/quasidet.hpp"

using namespace ncsf;
using GM = Grassmann<MPoly>;
using GQ = Grassmann<Rational>;

namespace {

MPoly sgn(int parity) { return MPoly(parity % 2 ? -1 : 1); }

}  // namespace

TEST_CASE("sigma_I") {
  CHECK(sigma_I(Composition({3})).to_string() == "312");
  CHECK(sigma_I(Composition({1, 1, 1})).to_string() == "123");
  CHECK(sigma_I(Composition({2, 1})).to_string() == "213");
  CHECK(sharp(Composition({3, 1})) == std::vector<int>{3, 0, 0, 1});
  for (int n = 1; n <= 6; ++n)
    for (const auto& c : compositions_of(n)) CHECK_NOTHROW(sigma_I(c));
}

TEST_CASE("ribbon pair gives signed ribbons") {
  for (int n = 1; n <= 5; ++n) {
    auto spec = ribbon_pair(n);
    for (const auto& c : compositions_of(n)) {
      auto w = assemble_W(spec, c);
      CHECK(is_almost_triangular(w));
      CHECK(subdiagonal_factor(w) == MPoly(1));
      GM want = GM::ribbon(c) * sgn(c.length() - 1);
      CHECK(r_expansion(w) == want);
      CHECK(s_to_r(n, s_expansion(w)) == want);
    }
  }
  auto w = assemble_W(ribbon_pair(4), Composition({2, 1, 1}));
  SExpansion<MPoly> want{{Composition({4}), MPoly(1)},
                         {Composition({3, 1}), MPoly(-1)},
                         {Composition({2, 2}), MPoly(-1)},
                         {Composition({2, 1, 1}), MPoly(1)}};
  CHECK(s_expansion(w) == want);
  CHECK(brute_force_rdet(w) == want);
  std::vector<GQ> gens{GQ()};
  for (int k = 1; k <= 4; ++k) gens.push_back(GQ::scalar(k, Rational(1)));
  SExpansion<Rational> words;
  for (const auto& [c, v] : want) words.emplace(c, v.constant_term());
  CHECK(evaluate_words(words, gens) == GQ::ribbon(Composition({2, 1, 1})));
}

TEST_CASE("random almost-triangular matrices") {
  for (int s = 0; s < 30; ++s) {
    int n = 1 + s % 5;
    auto spec = random_spec(n, 77 + static_cast<std::uint64_t>(s));
    for (const auto& c : compositions_of(n)) {
      auto w = assemble_W(spec, c);
      auto se = s_expansion(w);
      CHECK(se == brute_force_rdet(w));
      CHECK(s_to_r(n, se) == r_expansion(w));
    }
  }
  AlmostTriangularSpec bad = ribbon_pair(3);
  bad.u(2, 0) = MPoly(1);
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("factoring family at n = 3") {
  MPoly x(vars::x()), y(vars::yv());
  auto fam = factoring_family(3);
  GM h = r_expansion(fam, Composition({2, 1}));
  auto q = divide_exact(h.coefficient(Composition({1, 2})), x - y);
  REQUIRE(q);
  CHECK(*q == parse_poly("(abq_1u_1x-y)(x-y)"));
  auto q3 = divide_exact(r_expansion(fam, Composition({3})).coefficient(Composition({3})), x - y);
  REQUIRE(q3);
  CHECK(*q3 == parse_poly("(x-aq_1y)(x-aq_2y)"));
}

TEST_CASE("determinants of U and V") {
  MPoly x(vars::x()), y(vars::yv()), a(vars::a()), b(vars::b());
  for (int n = 2; n <= 5; ++n) {
    auto fam = factoring_family(n);
    MPoly wu = x - y, wv = x - y;
    for (int i = 1; i < n; ++i) {
      wu = wu * (x - a * MPoly(vars::qs(i)) * y);
      wv = wv * (b * MPoly(vars::u(n - i)) * x - y);
    }
    CHECK(determinant(fam.u) == wu);
    CHECK(determinant(fam.v) == wv);
  }
}

TEST_CASE("binomial factorization and the biword rule") {
  Substitution ab{{vars::a(), MPoly(1)}, {vars::b(), MPoly(1)}};
  for (int n = 2; n <= 4; ++n) {
    auto fam = factoring_family(n);
    for (const auto& i : compositions_of(n)) {
      GM h = r_expansion(fam, i);
      for (const auto& j : compositions_of(n)) {
        MPoly c = h.coefficient(j), rest;
        auto factors = binomial_factors(c, rest);
        MPoly prod = rest;
        for (const auto& f : factors) prod = prod * f;
        CHECK(prod == c);
        CHECK(substitute(c, ab) == biword_coefficient(i, j, true));
      }
    }
  }
}
