#include "ncsf/ratfunc.hpp"

#include <algorithm>

#include "ncsf/errors.hpp"

namespace ncsf {

bool is_zero(const RatFunc& f) { return f.is_zero(); }
bool is_zero(const MPoly& p) { return p.is_zero(); }
bool is_zero(const Rational& r) { return sgn(r) == 0; }

std::pair<Rational, MPoly> make_monic(const MPoly& p) {
  if (p.is_zero()) throw DivisionByZero("zero polynomial has no monic form");
  Rational lead = canonical_leading_term(p).second;
  MPoly monic = p;
  monic *= Rational(1) / lead;
  return {lead, std::move(monic)};
}

void RatFunc::push_den(const MPoly& factor) {
  if (factor.is_zero()) throw DivisionByZero("division by zero");
  if (factor.is_constant()) {
    num_ *= Rational(1) / factor.constant_term();
    return;
  }
  auto [lead, monic] = make_monic(factor);
  num_ *= Rational(1) / lead;
  den_.push_back(std::move(monic));
}

RatFunc::RatFunc(MPoly num, const MPoly& den) : num_(std::move(num)) {
  push_den(den);
  if (num_.is_zero()) den_.clear();
}

RatFunc RatFunc::from_factors(const std::vector<MPoly>& num_factors,
                              const std::vector<MPoly>& den_factors) {
  std::vector<MPoly> nums;
  Rational scale(1);
  for (const auto& f : num_factors) {
    if (f.is_zero()) return RatFunc();
    if (f.is_constant()) {
      scale *= f.constant_term();
      continue;
    }
    auto [lead, monic] = make_monic(f);
    scale *= lead;
    nums.push_back(std::move(monic));
  }
  RatFunc out;
  out.num_ = MPoly(scale);
  for (const auto& f : den_factors) {
    if (f.is_zero()) throw DivisionByZero("zero factor in denominator");
    if (f.is_constant()) {
      out.num_ *= Rational(1) / f.constant_term();
      continue;
    }
    auto [lead, monic] = make_monic(f);
    out.num_ *= Rational(1) / lead;
    auto hit = std::find(nums.begin(), nums.end(), monic);
    if (hit != nums.end()) {
      nums.erase(hit);
    } else {
      out.den_.push_back(std::move(monic));
    }
  }
  for (const auto& f : nums) out.num_ = out.num_ * f;
  return out;
}

MPoly RatFunc::denominator() const {
  MPoly d(1);
  for (const auto& f : den_) d = d * f;
  return d;
}

RatFunc& RatFunc::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  for (std::size_t k = 0; k < den_.size();) {
    if (auto q = divide_exact(num_, den_[k])) {
      num_ = std::move(*q);
      den_.erase(den_.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  return *this;
}

std::optional<MPoly> RatFunc::as_polynomial() const {
  RatFunc copy = *this;
  copy.reduce();
  if (!copy.den_.empty()) return std::nullopt;
  return copy.num_;
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

namespace {

// Multiset difference want \ have.
std::vector<MPoly> missing_from(const std::vector<MPoly>& have, const std::vector<MPoly>& want) {
  std::vector<bool> used(have.size(), false);
  std::vector<MPoly> extra;
  for (const auto& f : want) {
    bool matched = false;
    for (std::size_t k = 0; k < have.size(); ++k) {
      if (!used[k] && have[k] == f) {
        used[k] = true;
        matched = true;
        break;
      }
    }
    if (!matched) extra.push_back(f);
  }
  return extra;
}

MPoly product(const std::vector<MPoly>& factors) {
  MPoly out(1);
  for (const auto& f : factors) out = out * f;
  return out;
}

}  // namespace

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  // lcm = den_ + (o.den_ \ den_)
  std::vector<MPoly> mine_missing = missing_from(den_, o.den_);
  std::vector<MPoly> theirs_missing = missing_from(o.den_, den_);
  num_ = num_ * product(mine_missing) + o.num_ * product(theirs_missing);
  den_.insert(den_.end(), mine_missing.begin(), mine_missing.end());
  if (num_.is_zero()) den_.clear();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (num_.is_zero() || o.num_.is_zero()) {
    num_ = MPoly();
    den_.clear();
    return *this;
  }
  num_ = num_ * o.num_;
  den_.insert(den_.end(), o.den_.begin(), o.den_.end());
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.num_.is_zero()) throw DivisionByZero("division by zero rational function");
  num_ = num_ * product(o.den_);
  if (!num_.is_zero()) push_den(o.num_);
  return *this;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.num_.is_zero() || b.num_.is_zero()) return a.num_.is_zero() && b.num_.is_zero();
  std::vector<MPoly> a_only = missing_from(b.den_, a.den_);
  std::vector<MPoly> b_only = missing_from(a.den_, b.den_);
  return a.num_ * product(b_only) == b.num_ * product(a_only);
}

std::string RatFunc::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::vector<std::string> factors;
  for (const auto& f : den_) factors.push_back("(" + f.to_string() + ")");
  std::sort(factors.begin(), factors.end());
  std::string out = "(" + num_.to_string() + ")/(";
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) out += "*";
    out += factors[k];
  }
  return out + ")";
}

Rational evaluate(const RatFunc& f, const Point& point) {
  Rational den(1);
  for (const auto& factor : f.denominator_factors()) den *= evaluate(factor, point);
  if (sgn(den) == 0) throw DivisionByZero("denominator vanishes at the evaluation point");
  return evaluate(f.numerator(), point) / den;
}

namespace {

RatFunc apply(const RatFunc& f, const Substitution& sigma, bool strict) {
  auto map = [&](const MPoly& p) { return strict ? specialize(p, sigma) : substitute(p, sigma); };
  std::vector<MPoly> dens;
  for (const auto& factor : f.denominator_factors()) {
    MPoly image = map(factor);
    if (image.is_zero())
      throw SingularSpecialization("specialization sends a denominator factor to zero: " +
                                   factor.to_string());
    dens.push_back(std::move(image));
  }
  return RatFunc::from_factors({map(f.numerator())}, dens);
}

}  // namespace

RatFunc specialize(const RatFunc& f, const Substitution& sigma) { return apply(f, sigma, true); }

RatFunc substitute(const RatFunc& f, const Substitution& sigma) { return apply(f, sigma, false); }

}  // namespace ncsf
