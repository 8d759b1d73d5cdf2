#pragma once

// Rational functions over the polynomial kernel.
//
// No multivariate GCD is available, so the denominator is kept as a list of
// normalized factors (canonical leading coefficient 1, never constant).  Sums
// use the least common multiple of the factor lists, matching factors by
// equality; equality of two rational functions is decided by
// cross-multiplication.

#include <optional>
#include <string>
#include <vector>

#include "ncsf/poly.hpp"

namespace ncsf {

class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(int c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RatFunc(MPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Var v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero if den == 0.
  RatFunc(MPoly num, const MPoly& den);

  /// prod(num_factors) / prod(den_factors) with identical factors cancelled
  /// before expansion.
  static RatFunc from_factors(const std::vector<MPoly>& num_factors,
                              const std::vector<MPoly>& den_factors);

  const MPoly& numerator() const { return num_; }
  const std::vector<MPoly>& denominator_factors() const { return den_; }
  MPoly denominator() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  /// The polynomial value, cancelling denominator factors that divide the
  /// numerator exactly; nullopt if some factor does not divide.
  std::optional<MPoly> as_polynomial() const;
  /// Cancels every denominator factor dividing the numerator.
  RatFunc& reduce();

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  /// Cross-multiplication equality.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  /// "num" or "(num)/((f1)*(f2))" with factors sorted by rendering.
  std::string to_string() const;

 private:
  void push_den(const MPoly& factor);

  MPoly num_;
  std::vector<MPoly> den_;
};

/// Splits off the canonical leading coefficient: p = c * monic.
std::pair<Rational, MPoly> make_monic(const MPoly& p);

Rational evaluate(const RatFunc& f, const Point& point);
/// Throws SingularSpecialization if the denominator vanishes.
RatFunc specialize(const RatFunc& f, const Substitution& sigma);
RatFunc substitute(const RatFunc& f, const Substitution& sigma);

/// Accepts what parse_poly accepts plus '/' between factors.
RatFunc parse_ratfunc(const std::string& text);

bool is_zero(const RatFunc& f);
bool is_zero(const MPoly& p);
bool is_zero(const Rational& r);

}  // namespace ncsf
