#include "doctest.h"
#include "ncsf/comsym.hpp"
#include "ncsf/errors.hpp"

using namespace ncsf;

TEST_CASE("partitions") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partition_string(partitions_of(4)[1]) == "[3,1]");
  CHECK(parse_partition("2,1,1") == Partition{2, 1, 1});
  CHECK(dominates({3, 1}, {2, 2}));
  CHECK_FALSE(dominates({2, 2}, {3, 1}));
  CHECK(sorted_parts(Composition({1, 3, 2})) == Partition{3, 2, 1});
}

TEST_CASE("basis conversions") {
  const SymBasis all[] = {SymBasis::h, SymBasis::e, SymBasis::p, SymBasis::m, SymBasis::s};
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitions_of(n))
      for (SymBasis a : all)
        for (SymBasis b : all) {
          ComSymElem back = basis_convert(basis_convert(basis_element(a, l), b), a);
          REQUIRE(back.coeffs.size() == 1);
          CHECK(back.coeffs.begin()->first == l);
          CHECK(back.coeffs.begin()->second == RatFunc(1));
        }
  ComSymElem want{SymBasis::p, 2, {}};
  want.add({1, 1}, RatFunc(Rational(1, 2)));
  want.add({2}, RatFunc(Rational(1, 2)));
  CHECK(equal(basis_convert(basis_element(SymBasis::h, {2}), SymBasis::p), want));
  CHECK(equal(basis_element(SymBasis::s, {1, 1}), basis_element(SymBasis::e, {2})));
}

TEST_CASE("plethystic transform") {
  MPoly q(vars::q1()), t(vars::t1());
  ComSymElem p2 = qt_transform(basis_element(SymBasis::p, {2}));
  CHECK(p2.coeffs.at({2}) == RatFunc(MPoly(1) - t.pow(2), MPoly(1) - q.pow(2)));
  ComSymElem s1 = qt_transform(basis_element(SymBasis::s, {1}));
  CHECK(s1.coeffs.at({1}) == RatFunc(MPoly(1) - t, MPoly(1) - q));
  // at t = q the transform is the identity
  ComSymElem s21 = basis_element(SymBasis::s, {2, 1});
  ComSymElem tr = qt_transform(s21);
  ComSymElem at{tr.basis, tr.n, {}};
  for (const auto& [p, c] : tr.coeffs) at.add(p, substitute(c, {{vars::t1(), q}}));
  CHECK(equal(at, s21));
}

TEST_CASE("Macdonald P") {
  MPoly q(vars::q1()), t(vars::t1());
  ComSymElem want{SymBasis::m, 2, {}};
  want.add({2}, RatFunc(1));
  want.add({1, 1}, RatFunc((MPoly(1) + q) * (MPoly(1) - t), MPoly(1) - q * t));
  CHECK(equal(macdonald_P({2}), want));
  CHECK(equal(macdonald_P({1, 1}), basis_element(SymBasis::m, {1, 1})));
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : partitions_of(n)) {
      ComSymElem pl = macdonald_P(l);
      ComSymElem at{SymBasis::m, n, {}};
      for (const auto& [p, c] : pl.coeffs) at.add(p, substitute(c, {{vars::q1(), t}}));
      CHECK(equal(at, basis_element(SymBasis::s, l)));
      CHECK(equal(macdonald_P(l, GramSolve::primal), macdonald_P(l, GramSolve::dual)));
    }
}

TEST_CASE("commutative images") {
  SExpansion<MPoly> r211{{Composition({4}), MPoly(1)},
                         {Composition({3, 1}), MPoly(-1)},
                         {Composition({2, 2}), MPoly(-1)},
                         {Composition({2, 1, 1}), MPoly(1)}};
  CHECK(equal(commutative_image(r211), basis_element(SymBasis::s, {2, 1, 1})));
  CHECK(as_h_polynomial(basis_element(SymBasis::h, {2, 1})) == MPoly(vars::h(2)) * MPoly(vars::h(1)));
}

TEST_CASE("hook checks") {
  HookResult r = hook_check(5, 2, HookMode::macdonald);
  CHECK(r.proportional);
  CHECK(r.matches_integral);
  CHECK_FALSE(r.matches);
  CHECK(r.ratio == RatFunc(integral_norm({3, 1, 1})));
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < n; ++k) {
      HookResult h = hook_check(n, k, HookMode::transform_q);
      CHECK(h.proportional);
      CHECK(h.matches);
    }
  CHECK(parse_hook_mode("transform-q") == HookMode::transform_q);
  CHECK_THROWS_AS(parse_hook_mode("other"), InvalidArgument);
}
