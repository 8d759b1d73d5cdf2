#include "ncsf/grassmann.hpp"

#include <gmpxx.h>

namespace ncsf {

std::vector<int> subset_elements(DescentMask d) {
  std::vector<int> out;
  for (int e = 1; d != 0; ++e, d >>= 1)
    if (d & 1u) out.push_back(e);
  return out;
}

std::string subset_key(DescentMask d) {
  std::string out;
  for (int e : subset_elements(d)) {
    if (!out.empty()) out += ",";
    out += std::to_string(e);
  }
  return out;
}

int wedge_sign(DescentMask d, DescentMask e) {
  if (d & e) return 0;
  // pairs (x in D, y in E) with x > y
  int inversions = 0;
  for (int y : subset_elements(e)) inversions += std::popcount(d >> y);
  return inversions % 2 ? -1 : 1;
}

Grassmann<Rational> s_image(const Composition& c) {
  int n = c.size();
  Grassmann<Rational> out(n);
  DescentMask des = c.descent_mask();
  // subsets of Des(I), each with coefficient 1
  for (DescentMask d = des;; d = (d - 1) & des) {
    out.add(d, Rational(1));
    if (d == 0) break;
  }
  return out;
}

Grassmann<Rational> lambda_image(const Composition& c) {
  int n = c.size();
  Grassmann<Rational> out(n);
  DescentMask des = c.descent_mask();
  DescentMask forced = full_mask(n) & ~des;
  for (DescentMask d = des;; d = (d - 1) & des) {
    out.add(forced | d, Rational(1));
    if (d == 0) break;
  }
  return out;
}

Grassmann<Rational> psi_image(int n) {
  Grassmann<Rational> out(n);
  for (int k = 0; k < n; ++k) out.add(full_mask(k + 1), Rational(k % 2 ? -1 : 1));
  return out;
}

Grassmann<Rational> phi_image(int n) {
  Grassmann<Rational> out(n);
  for (DescentMask d = 0; d <= full_mask(n); ++d) {
    int k = std::popcount(d);
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n - 1), static_cast<unsigned long>(k));
    Rational c(k % 2 ? -1 : 1);
    c /= Rational(binom);
    out.add(d, c);
  }
  return out;
}

Grassmann<Rational> phi_product_image(const Composition& c) {
  Grassmann<Rational> out = Grassmann<Rational>::scalar(0, Rational(1));
  for (int part : c.parts()) out = product_sym(out, phi_image(part));
  return out;
}

Grassmann<MPoly> klyachko(int n) {
  std::vector<MPoly> z;
  for (int i = 1; i < n; ++i) z.push_back(MPoly(vars::q1()).pow(static_cast<unsigned>(i)));
  return k_factorized(z);
}

Grassmann<MPoly> hivert_hl(const Composition& c) {
  int n = c.size();
  Grassmann<MPoly> out = Grassmann<MPoly>::scalar(n, MPoly(1));
  unsigned k = 0;
  for (int d : c.descent_set()) {
    ++k;
    Grassmann<MPoly> factor = Grassmann<MPoly>::generator(n, d);
    factor.add(0, MPoly(vars::q1()).pow(k));
    out = wedge(out, factor);
  }
  return out;
}

Grassmann<Rational> phi_dual_exponential(int r) {
  if (r < 1 || r > 7) throw InvalidArgument("phi_dual_exponential needs 1 <= r <= 7");
  const auto& sizes = descent_class_sizes(r);
  Grassmann<Rational> out(r, Side::xi);
  for (std::size_t idx = 0; idx < sizes.size(); ++idx)
    out.add(mask_from_canonical_index(r, idx), Rational(static_cast<long>(sizes[idx])));
  return out;
}

ClassicalBasis parse_classical_basis(const std::string& name) {
  if (name == "S") return ClassicalBasis::S;
  if (name == "Lambda") return ClassicalBasis::Lambda;
  if (name == "R") return ClassicalBasis::R;
  if (name == "Psi") return ClassicalBasis::Psi;
  if (name == "Phi") return ClassicalBasis::Phi;
  if (name == "Klyachko") return ClassicalBasis::Klyachko;
  if (name == "HivertHL") return ClassicalBasis::HivertHL;
  throw InvalidArgument("unknown classical basis: " + name);
}

Grassmann<MPoly> classical_image(ClassicalBasis which, const Composition& c) {
  auto lift = [](const Grassmann<Rational>& g) { return convert<MPoly>(g); };
  switch (which) {
    case ClassicalBasis::S: return lift(s_image(c));
    case ClassicalBasis::Lambda: return lift(lambda_image(c));
    case ClassicalBasis::R: return Grassmann<MPoly>::ribbon(c);
    case ClassicalBasis::Psi: return lift(psi_image(c.size()));
    case ClassicalBasis::Phi: return lift(phi_image(c.size()));
    case ClassicalBasis::Klyachko: return klyachko(c.size());
    case ClassicalBasis::HivertHL: return hivert_hl(c);
  }
  throw InvalidArgument("unknown classical basis");
}

}  // namespace ncsf
