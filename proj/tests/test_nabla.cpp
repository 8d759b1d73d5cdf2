#include "doctest.h"
#include "ncsf/nabla.hpp"
#include "ncsf/parambases.hpp"

using namespace ncsf;
using GM = Grassmann<MPoly>;

TEST_CASE("phi statistic and W_n") {
  CHECK(phi_statistic(PackedWord::parse("22135411")) == parse_poly("q_1q_2t_5q_4t_1"));
  const long bell[] = {1, 3, 13, 75, 541};
  for (int n = 1; n <= 5; ++n) {
    MPoly w = w_statistic_polynomial(n);
    Substitution ones;
    for (Var v : w.variables()) ones[v] = MPoly(1);
    CHECK(specialize(w, ones) == MPoly(Rational(bell[n - 1])));
  }
  CHECK(w_statistic_polynomial(2) == parse_poly("1 + q_1 + t_1"));
}

TEST_CASE("nabla on Lambda_n") {
  for (int n = 1; n <= 4; ++n) {
    NablaContext ctx(n);
    Composition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
    GM def = nabla_ribbon(ctx, ones);
    CHECK(def == packed_word_expansion(ones, true));
    CHECK(def == nabla_lambda_closed_form(n));
  }
}

TEST_CASE("nabla is diagonal on the BZ basis") {
  for (int n = 1; n <= 4; ++n) {
    NablaContext ctx(n);
    for (std::size_t l = 0; l < ctx.compositions().size(); ++l) {
      GM h = basis_P(ParamFamily::bz, ctx.compositions()[l]);
      CHECK(nabla(ctx, h) == h * ctx.eigenvalue(l));
      CHECK(ctx.eigenvalue(l) == nabla_eigenvalue(ctx.compositions()[l]));
      CHECK(ctx.eigenvalue(l).size() == 1);
    }
  }
  CHECK(nabla_eigenvalue(Composition({2})) == MPoly(vars::qs(1)));
  CHECK(nabla_eigenvalue(Composition({1, 1})) == MPoly(vars::ts(1)));
}

TEST_CASE("closed forms for nabla R_I") {
  int literal_failures = 0;
  for (int n = 1; n <= 4; ++n) {
    NablaContext ctx(n);
    for (const auto& c : ctx.compositions()) {
      GM act = nabla_ribbon(ctx, c);
      MPoly s(((n + c.length()) % 2) ? -1 : 1);
      CHECK(act == nabla_ribbon_closed_form(c, {true, true, true}));
      CHECK(act == packed_word_expansion(c, true) * (s * nabla_theta(c, true)));
      if (!(act == nabla_ribbon_closed_form(c))) ++literal_failures;
    }
  }
  // The unmirrored indices are wrong for most I once n >= 3.
  CHECK(literal_failures > 0);
}

TEST_CASE("bracket on ribbons") {
  GM r2 = GM::ribbon(Composition({2})), r11 = GM::ribbon(Composition({1, 1}));
  CHECK(bz_bracket(r2, r11) == MPoly(-1));
  CHECK(bz_bracket(r2, r2).is_zero());
}
