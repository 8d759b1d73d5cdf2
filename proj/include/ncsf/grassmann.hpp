#pragma once

// Sym_n and QSym_n as Grassmann algebras on eta_1..eta_{n-1} (resp. xi).
//
// The ribbon R_I is the monomial eta_D with D = Des(I), and F_I is xi_D.
// Subsets of [n-1] are DescentMasks.  Coefficients may be Rational, MPoly or
// RatFunc.

#include <bit>
#include <map>
#include <string>
#include <vector>

#include "ncsf/composition.hpp"
#include "ncsf/errors.hpp"
#include "ncsf/ratfunc.hpp"

namespace ncsf {

enum class Side { eta, xi };

inline std::string render(const Rational& r) { return to_string(r); }
inline std::string render(const MPoly& p) { return p.to_string(); }
inline std::string render(const RatFunc& f) { return f.to_string(); }

/// "1,3" for {1,3}; "" for the empty set.
std::string subset_key(DescentMask d);
std::vector<int> subset_elements(DescentMask d);

/// Sign of eta_D eta_E = sign * eta_{D u E}; 0 if D and E meet.
int wedge_sign(DescentMask d, DescentMask e);

template <class C>
class Grassmann {
 public:
  using Coeff = C;

  Grassmann() = default;
  explicit Grassmann(int degree, Side side = Side::eta) : degree_(degree), side_(side) {
    if (degree < 0 || degree > kMaxDegree) throw InvalidArgument("Grassmann degree out of range");
  }

  static Grassmann scalar(int degree, const C& c, Side side = Side::eta) {
    return monomial(degree, 0, c, side);
  }
  static Grassmann monomial(int degree, DescentMask d, const C& c = C(1), Side side = Side::eta) {
    Grassmann g(degree, side);
    g.add(d, c);
    return g;
  }
  /// eta_i (or xi_i), 1 <= i <= n-1.
  static Grassmann generator(int degree, int i, Side side = Side::eta) {
    if (i < 1 || i >= degree) throw InvalidArgument("generator index out of range");
    return monomial(degree, DescentMask{1} << (i - 1), C(1), side);
  }
  /// R_I on the eta side.
  static Grassmann ribbon(const Composition& c) { return monomial(c.size(), c.descent_mask()); }
  /// F_I on the xi side.
  static Grassmann fundamental(const Composition& c) {
    return monomial(c.size(), c.descent_mask(), C(1), Side::xi);
  }

  int degree() const { return degree_; }
  Side side() const { return side_; }
  const std::map<DescentMask, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(DescentMask d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? C(0) : it->second;
  }
  C coefficient(const Composition& c) const {
    if (c.size() != degree_) throw InvalidArgument("composition size differs from degree");
    return coefficient(c.descent_mask());
  }

  void add(DescentMask d, const C& c) {
    if ((d & ~full_mask(degree_)) != 0) throw InvalidArgument("subset not contained in [n-1]");
    if (is_zero_coeff(c)) return;
    auto [it, fresh] = terms_.try_emplace(d, c);
    if (fresh) return;
    it->second += c;
    if (is_zero_coeff(it->second)) terms_.erase(it);
  }

  /// Applies f to every coefficient.
  template <class F>
  auto map(F&& f) const {
    using D = decltype(f(std::declval<const C&>()));
    Grassmann<D> out(degree_, side_);
    for (const auto& [d, c] : terms_) out.add(d, f(c));
    return out;
  }

  Grassmann operator-() const {
    Grassmann out(degree_, side_);
    for (const auto& [d, c] : terms_) out.terms_.emplace(d, C(-c));
    return out;
  }
  Grassmann& operator+=(const Grassmann& o) {
    require_compatible(o);
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
  }
  Grassmann& operator-=(const Grassmann& o) { return *this += -o; }
  Grassmann& operator*=(const C& s) {
    if (is_zero_coeff(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [d, c] : terms_) c = C(c * s);
    return *this;
  }
  friend Grassmann operator+(Grassmann a, const Grassmann& b) { return a += b; }
  friend Grassmann operator-(Grassmann a, const Grassmann& b) { return a -= b; }
  friend Grassmann operator*(Grassmann a, const C& s) { return a *= s; }
  friend Grassmann operator*(const C& s, Grassmann a) { return a *= s; }

  friend bool operator==(const Grassmann& a, const Grassmann& b) {
    if (a.degree_ != b.degree_ || a.side_ != b.side_ || a.terms_.size() != b.terms_.size())
      return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
  }

  void require_compatible(const Grassmann& o) const {
    if (degree_ != o.degree_) throw InvalidArgument("Grassmann degree mismatch");
    if (side_ != o.side_) throw InvalidArgument("Grassmann side mismatch");
  }

  /// "eta{1,3}: <coeff>" lines in canonical composition order.
  std::string to_string() const {
    std::map<std::size_t, DescentMask> order;
    for (const auto& [d, c] : terms_) order[canonical_index_from_mask(std::max(degree_, 1), d)] = d;
    std::string out;
    const char* name = side_ == Side::eta ? "eta{" : "xi{";
    for (const auto& [idx, d] : order)
      out += name + subset_key(d) + "}: " + render(terms_.at(d)) + "\n";
    return out;
  }

 private:
  static bool is_zero_coeff(const C& c) { return ncsf::is_zero(c); }

  int degree_ = 0;
  Side side_ = Side::eta;
  std::map<DescentMask, C> terms_;
};

template <class C>
Grassmann<C> wedge(const Grassmann<C>& f, const Grassmann<C>& g) {
  f.require_compatible(g);
  Grassmann<C> out(f.degree(), f.side());
  for (const auto& [d, a] : f.terms())
    for (const auto& [e, b] : g.terms()) {
      int s = wedge_sign(d, e);
      if (s == 0) continue;
      C c = a * b;
      out.add(d | e, s > 0 ? c : C(-c));
    }
  return out;
}

/// eta_i^* = (-1)^i eta_i extended as an anti-involution:
/// (eta_D)^* = (-1)^{sum D} (-1)^{k(k-1)/2} eta_D for |D| = k.
template <class C>
Grassmann<C> star(const Grassmann<C>& f) {
  if (f.side() != Side::eta) throw InvalidArgument("star is defined on the eta side");
  Grassmann<C> out(f.degree(), Side::eta);
  for (const auto& [d, c] : f.terms()) {
    int sum = 0;
    for (int e : subset_elements(d)) sum += e;
    int k = std::popcount(d);
    bool negative = ((sum + k * (k - 1) / 2) % 2) != 0;
    out.add(d, negative ? C(-c) : c);
  }
  return out;
}

/// Coefficient of eta_1 ... eta_{n-1}.
template <class C>
C integral(const Grassmann<C>& f) {
  if (f.side() != Side::eta) throw InvalidArgument("integral is defined on the eta side");
  return f.coefficient(full_mask(f.degree()));
}

/// (f, g) = integral of f^* g.
template <class C>
C bilinear_form(const Grassmann<C>& f, const Grassmann<C>& g) {
  f.require_compatible(g);
  return integral(wedge(star(f), g));
}

/// <xi_D, eta_E> = delta_{DE}.
template <class C>
C dual_pairing(const Grassmann<C>& f, const Grassmann<C>& g) {
  if (f.side() != Side::xi || g.side() != Side::eta)
    throw InvalidArgument("dual pairing takes a xi-side and an eta-side element");
  if (f.degree() != g.degree()) throw InvalidArgument("Grassmann degree mismatch");
  C acc(0);
  for (const auto& [d, a] : f.terms()) {
    auto it = g.terms().find(d);
    if (it != g.terms().end()) acc += a * it->second;
  }
  return acc;
}

/// K_n(Z) = (1 + z_1 eta_1) ... (1 + z_{n-1} eta_{n-1}), n = |Z| + 1.
template <class C>
Grassmann<C> k_factorized(const std::vector<C>& z) {
  int n = static_cast<int>(z.size()) + 1;
  Grassmann<C> out(n);
  for (DescentMask d = 0; d <= full_mask(n); ++d) {
    C c(1);
    for (int e : subset_elements(d)) c = C(c * z[static_cast<std::size_t>(e - 1)]);
    out.add(d, c);
  }
  return out;
}

/// L_n(Z) = (z_1 - xi_1) ... (z_{n-1} - xi_{n-1}).
template <class C>
Grassmann<C> l_factorized(const std::vector<C>& z) {
  int n = static_cast<int>(z.size()) + 1;
  Grassmann<C> out(n, Side::xi);
  for (DescentMask d = 0; d <= full_mask(n); ++d) {
    C c(std::popcount(d) % 2 ? -1 : 1);
    for (int e = 1; e < n; ++e)
      if (!((d >> (e - 1)) & 1u)) c = C(c * z[static_cast<std::size_t>(e - 1)]);
    out.add(d, c);
  }
  return out;
}

/// External product: f(eta_1..eta_{n-1}) (1 + eta_n) g(eta_{n+1}..eta_{n+m-1}).
template <class C>
Grassmann<C> product_sym(const Grassmann<C>& f, const Grassmann<C>& g) {
  if (f.side() != Side::eta || g.side() != Side::eta)
    throw InvalidArgument("product_sym is defined on the eta side");
  int n = f.degree();
  int m = g.degree();
  if (n + m > kMaxDegree) throw ResourceLimit("product degree too large");
  Grassmann<C> out(n + m);
  if (n == 0 || m == 0) {
    const Grassmann<C>& scalar = n == 0 ? f : g;
    const Grassmann<C>& other = n == 0 ? g : f;
    out = other;
    return out * scalar.coefficient(0);
  }
  DescentMask glue = DescentMask{1} << (n - 1);
  for (const auto& [d, a] : f.terms())
    for (const auto& [e, b] : g.terms()) {
      C c = a * b;
      out.add(d | (e << n), c);
      out.add(d | glue | (e << n), c);
    }
  return out;
}

/// Coefficients on the basis S^I, keyed by composition.
template <class C>
using SExpansion = std::map<Composition, C>;

/// R-basis element (eta side) to S-basis coefficients.
template <class C>
SExpansion<C> r_to_s(const Grassmann<C>& f) {
  if (f.side() != Side::eta) throw InvalidArgument("r_to_s expects an eta-side element");
  int n = f.degree();
  if (n < 1) throw InvalidArgument("r_to_s needs degree >= 1");
  DescentMask full = full_mask(n);
  std::vector<C> a(static_cast<std::size_t>(full) + 1, C(0));
  for (const auto& [d, c] : f.terms()) a[d] = c;
  // Moebius inversion over supersets.
  for (int bit = 0; bit < n - 1; ++bit)
    for (DescentMask d = 0; d <= full; ++d)
      if (!((d >> bit) & 1u)) a[d] -= a[d | (DescentMask{1} << bit)];
  SExpansion<C> out;
  for (DescentMask d = 0; d <= full; ++d)
    if (!ncsf::is_zero(a[d])) out.emplace(Composition::from_descents(n, d), a[d]);
  return out;
}

/// S-basis coefficients to the R-basis: S^I = sum_{Des K in Des I} R_K.
template <class C>
Grassmann<C> s_to_r(int n, const SExpansion<C>& s) {
  if (n < 1) throw InvalidArgument("s_to_r needs degree >= 1");
  DescentMask full = full_mask(n);
  std::vector<C> a(static_cast<std::size_t>(full) + 1, C(0));
  for (const auto& [comp, c] : s) {
    if (comp.size() != n) throw InvalidArgument("s_to_r: composition of the wrong size");
    a[comp.descent_mask()] += c;
  }
  for (int bit = 0; bit < n - 1; ++bit)
    for (DescentMask d = 0; d <= full; ++d)
      if (!((d >> bit) & 1u)) a[d] += a[d | (DescentMask{1} << bit)];
  Grassmann<C> out(n);
  for (DescentMask d = 0; d <= full; ++d) out.add(d, a[d]);
  return out;
}

// Images of classical elements.

/// S^I = prod over descents (1 + eta_d).
Grassmann<Rational> s_image(const Composition& c);
/// Lambda^I = prod_i theta_i, theta_i = eta_i (i not in Des) or 1 + eta_i.
Grassmann<Rational> lambda_image(const Composition& c);
Grassmann<Rational> psi_image(int n);
Grassmann<Rational> phi_image(int n);
/// Phi^J = Phi_{j_1} ... Phi_{j_r} (external product).
Grassmann<Rational> phi_product_image(const Composition& c);
/// K_n(q) = (1 + q eta_1)(1 + q^2 eta_2) ... with the one-parameter q.
Grassmann<MPoly> klyachko(int n);
/// (eta_{d_1} + q)(eta_{d_2} + q^2) ... (eta_{d_k} + q^k) over Des(I).
Grassmann<MPoly> hivert_hl(const Composition& c);
/// f_{r-1} = sum_D a_D xi_D with a_D the descent-class sizes of S_r.
Grassmann<Rational> phi_dual_exponential(int r);

enum class ClassicalBasis { S, Lambda, R, Psi, Phi, Klyachko, HivertHL };
/// Throws InvalidArgument for an unknown name.
ClassicalBasis parse_classical_basis(const std::string& name);
Grassmann<MPoly> classical_image(ClassicalBasis which, const Composition& c);

template <class To, class From>
Grassmann<To> convert(const Grassmann<From>& f) {
  return f.map([](const From& c) { return To(c); });
}

}  // namespace ncsf
