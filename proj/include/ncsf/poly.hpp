#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncsf/registry.hpp"

namespace ncsf {

using Rational = mpq_class;

std::string to_string(const Rational& r);

/// Finitely supported exponent vector, stored as (variable id, exponent) pairs
/// sorted by id with positive exponents.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Var v, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(Var v) const;
  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
  friend class MPoly;
};

/// Graded lexicographic order on variable ids.  A monomial order, used for
/// storage and exact division; rendering uses the key order instead.
std::strong_ordering internal_order(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return internal_order(a, b) < 0;
  }
};

class MPoly;
using Substitution = std::map<Var, MPoly>;
using Point = std::map<Var, Rational>;

class MPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MPoly() = default;
  MPoly(int c);  // NOLINT(google-explicit-constructor)
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MPoly(Var v);  // NOLINT(google-explicit-constructor)
  MPoly(const Monomial& m, const Rational& c);

  /// Terms sorted ascending in internal order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Rational constant_term() const;
  /// Largest term in internal order.  Requires !is_zero().
  const Term& leading_term() const { return terms_.back(); }
  std::uint32_t total_degree() const;
  std::vector<Var> variables() const;
  Rational coefficient(const Monomial& m) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  MPoly pow(unsigned e) const;

  /// Canonical rendering: terms in descending graded-lex key order.
  std::string to_string() const;

 private:
  friend class PolyBuilder;
  std::vector<Term> terms_;
};

/// Accumulates terms in arbitrary order and produces a canonical MPoly.
class PolyBuilder {
 public:
  void add(const Monomial& m, const Rational& c);
  void add(const MPoly& p, const Rational& scale = Rational(1));
  MPoly build();

 private:
  std::map<Monomial, Rational, MonomialLess> acc_;
};

/// Exact quotient p / d if d divides p, otherwise nullopt.  Throws
/// DivisionByZero for d == 0.
std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& d);

/// Simultaneous substitution; every variable of p must be bound.
MPoly specialize(const MPoly& p, const Substitution& sigma);
/// Simultaneous substitution of the bound variables only.
MPoly substitute(const MPoly& p, const Substitution& sigma);
/// Exact value at a rational point covering every variable of p.
Rational evaluate(const MPoly& p, const Point& point);

/// Leading term in the canonical (key) order, used for normalization.
MPoly::Term canonical_leading_term(const MPoly& p);

/// Parses the canonical rendering and the usual shorthand for compositions of
/// variables: "q_{12}" is q_{1,2}, "y_0" is y_{0}, juxtaposition multiplies,
/// "^" raises to a nonnegative integer power.  Division is only accepted by a
/// constant.
MPoly parse_poly(const std::string& text);

}  // namespace ncsf
