#include "ncsf/nabla.hpp"

#include <algorithm>

#include "ncsf/kernels.hpp"
#include "ncsf/parambases.hpp"

namespace ncsf {

NablaContext::NablaContext(int n)
    : n_(n),
      comps_(compositions_of(n)),
      k_(kostka_matrix(n, ParamFamily::bz)),
      kinv_(inverse_kostka(n, ParamFamily::bz)) {
  for (const auto& c : comps_) eig_.push_back(nabla_eigenvalue(c));
  Matrix<RatFunc> id = multiply(k_.map([](const MPoly& p) { return RatFunc(p); }), kinv_);
  if (!(id == Matrix<RatFunc>::identity(comps_.size())))
    throw Error("BZ Kostka matrix and its closed-form inverse disagree");
}

MPoly nabla_eigenvalue(const Composition& c) {
  MPoly out(1);
  for (const auto& z : alphabet(ParamFamily::bz, c)) out = out * z;
  return out;
}

Grassmann<MPoly> nabla(const NablaContext& ctx, const Grassmann<MPoly>& f) {
  if (f.side() != Side::eta || f.degree() != ctx.degree())
    throw InvalidArgument("nabla: element of the wrong degree or side");
  const std::size_t dim = ctx.compositions().size();
  const int n = ctx.degree();
  // Ht-coordinates of f, scaled by the eigenvalues
  std::vector<RatFunc> h(dim, RatFunc(0));
  for (const auto& [d, c] : f.terms()) {
    std::size_t i = canonical_index_from_mask(n, d);
    for (std::size_t l = 0; l < dim; ++l) h[l] += RatFunc(c) * ctx.inverse()(i, l);
  }
  for (std::size_t l = 0; l < dim; ++l) h[l] *= RatFunc(ctx.eigenvalue(l));
  Grassmann<MPoly> out(n);
  for (std::size_t j = 0; j < dim; ++j) {
    RatFunc acc(0);
    for (std::size_t l = 0; l < dim; ++l)
      if (!h[l].is_zero()) acc += h[l] * RatFunc(ctx.kostka()(l, j));
    auto p = acc.as_polynomial();
    if (!p) throw Error("nabla produced a non-polynomial ribbon coefficient");
    out.add(mask_from_canonical_index(n, j), *p);
  }
  return out;
}

Grassmann<MPoly> nabla_ribbon(const NablaContext& ctx, const Composition& c) {
  return nabla(ctx, Grassmann<MPoly>::ribbon(c));
}

std::vector<int> recoils(const PackedWord& w) {
  return descent_composition(sigma_of_word(w).inverse()).descent_set();
}

MPoly phi_statistic(const PackedWord& w) {
  int n = w.size();
  std::vector<int> sorted = w.letters();
  std::sort(sorted.begin(), sorted.end());
  MPoly out(1);
  for (int i : recoils(w)) {
    bool equal = sorted[static_cast<std::size_t>(i - 1)] == sorted[static_cast<std::size_t>(i)];
    out = out * MPoly(equal ? vars::qs(i) : vars::ts(n - i));
  }
  return out;
}

Grassmann<MPoly> packed_word_expansion(const Composition& c, bool with_phi) {
  int n = c.size();
  const auto& sizes = descent_class_sizes(n);
  std::vector<MPoly> coeffs = packed_word_sum(n, sizes.size(), [&](const PackedWord& w) {
    if (!refines(c, evaluation(w))) return std::pair<std::size_t, MPoly>{0, MPoly()};
    Composition target = descent_composition(sigma_of_word(w).inverse());
    std::size_t idx = target.canonical_index();
    MPoly weight = with_phi ? phi_statistic(w) : MPoly(1);
    weight *= Rational(1, static_cast<long>(sizes[idx]));
    return std::pair<std::size_t, MPoly>{idx, weight};
  });
  Grassmann<MPoly> out(n);
  for (std::size_t idx = 0; idx < coeffs.size(); ++idx)
    out.add(mask_from_canonical_index(n, idx), coeffs[idx]);
  return out;
}

Grassmann<MPoly> nabla_lambda_closed_form(int n) {
  Grassmann<MPoly> out(n);
  for (const auto& j : compositions_of(n)) {
    MPoly c(1);
    for (int d : j.descent_set()) c = c * (MPoly(vars::qs(d)) + MPoly(vars::ts(n - d)));
    out.add(j.descent_mask(), c);
  }
  return out;
}

MPoly nabla_theta(const Composition& c, bool mirrored) {
  MPoly out(1);
  for (int d : omega_complement(c).descent_set())
    out = out * MPoly(vars::ts(mirrored ? c.size() - d : d));
  return out;
}

Grassmann<MPoly> nabla_ribbon_closed_form(const Composition& c, NablaVariant v) {
  int n = c.size();
  MPoly pre((n + c.length()) % 2 ? -1 : 1);
  for (int d : conjugate(c).descent_set()) pre = pre * MPoly(vars::qs(v.q_mirror ? n - d : d));
  pre = pre * nabla_theta(c, v.t_mirror);
  Composition lower = omega_complement(c);
  Grassmann<MPoly> out(n);
  for (const auto& j : compositions_of(n)) {
    if (!refines(j, lower)) continue;
    MPoly coeff = pre;
    for (int i : c.descent_set()) {
      if (!j.has_descent(i)) continue;
      MPoly f = v.swapped ? MPoly(vars::qs(i)) + MPoly(vars::ts(n - i))
                        : MPoly(vars::ts(i)) + MPoly(vars::qs(n - i));
      coeff = coeff * f;
    }
    out.add(j.descent_mask(), coeff);
  }
  return out;
}

MPoly w_statistic_polynomial(int n) {
  std::vector<MPoly> total =
      packed_word_sum(n, 1, [](const PackedWord& w) { return std::pair<std::size_t, MPoly>{0, phi_statistic(w)}; });
  return total[0];
}

MPoly bz_bracket(const Grassmann<MPoly>& f, const Grassmann<MPoly>& g) {
  f.require_compatible(g);
  if (f.side() != Side::eta) throw InvalidArgument("bz_bracket is defined on the eta side");
  int n = f.degree();
  MPoly acc;
  for (const auto& [d, a] : f.terms()) {
    // partner: Des(J) = [n-1] \ Des(I)
    DescentMask partner = full_mask(n) & ~d;
    auto it = g.terms().find(partner);
    if (it == g.terms().end()) continue;
    int length = std::popcount(d) + 1;
    MPoly term = a * it->second;
    if ((n + length) % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

}  // namespace ncsf
