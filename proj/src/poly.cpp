#include "ncsf/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ncsf/errors.hpp"

namespace ncsf {

std::string to_string(const Rational& r) { return r.get_str(); }

Monomial::Monomial(Var v, std::uint32_t exponent) {
  if (exponent > 0) factors_.emplace_back(v.id(), exponent);
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

std::uint32_t Monomial::exponent(Var v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{v.id(), 0});
  return (it != factors_.end() && it->first == v.id()) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it == other.factors_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  auto mine = factors_.begin();
  for (const auto& [v, e] : other.factors_) {
    while (mine != factors_.end() && mine->first < v) ++mine;
    std::uint32_t sub = (mine != factors_.end() && mine->first == v) ? mine->second : 0;
    if (e > sub) out.factors_.emplace_back(v, e - sub);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::strong_ordering internal_order(const Monomial& a, const Monomial& b) {
  auto da = a.degree();
  auto db = b.degree();
  if (da != db) return da <=> db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t k = 0;
  for (; k < fa.size() && k < fb.size(); ++k) {
    if (fa[k].first != fb[k].first)
      // The monomial carrying the smaller variable id is larger.
      return fa[k].first < fb[k].first ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
    if (fa[k].second != fb[k].second) return fa[k].second <=> fb[k].second;
  }
  return fa.size() <=> fb.size();
}

MPoly::MPoly(int c) : MPoly(Rational(c)) {}

// gmp arithmetic assumes reduced operands; mpq_class(a, b) is not reduced.
MPoly::MPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace_back(Monomial(), c);
  if (!terms_.empty()) terms_.back().second.canonicalize();
}

MPoly::MPoly(Var v) { terms_.emplace_back(Monomial(v), Rational(1)); }

MPoly::MPoly(const Monomial& m, const Rational& c) {
  if (sgn(c) != 0) terms_.emplace_back(m, c);
  if (!terms_.empty()) terms_.back().second.canonicalize();
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

Rational MPoly::constant_term() const {
  if (!terms_.empty() && terms_.front().first.is_one()) return terms_.front().second;
  return Rational(0);
}

std::uint32_t MPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.back().first.degree();
}

std::vector<Var> MPoly::variables() const {
  std::vector<std::uint32_t> ids;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) ids.push_back(v);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Var> out;
  out.reserve(ids.size());
  for (auto id : ids) out.emplace_back(id);
  return out;
}

Rational MPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) {
                               return internal_order(t.first, key) < 0;
                             });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& term : out.terms_) term.second = -term.second;
  return out;
}

namespace {

std::vector<MPoly::Term> merge(const std::vector<MPoly::Term>& a,
                               const std::vector<MPoly::Term>& b, bool subtract) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    std::strong_ordering cmp = std::strong_ordering::equal;
    if (i == a.end()) cmp = std::strong_ordering::greater;
    else if (j == b.end()) cmp = std::strong_ordering::less;
    else cmp = internal_order(i->first, j->first);
    if (cmp < 0) {
      out.push_back(*i++);
    } else if (cmp > 0) {
      out.emplace_back(j->first, subtract ? Rational(-j->second) : j->second);
      ++j;
    } else {
      Rational c = subtract ? Rational(i->second - j->second) : Rational(i->second + j->second);
      if (sgn(c) != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  Rational r(c);
  r.canonicalize();
  for (auto& term : terms_) term.second *= r;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  if (a.is_constant()) return MPoly(b) *= a.terms_.front().second;
  if (b.is_constant()) return MPoly(a) *= b.terms_.front().second;
  std::vector<MPoly::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) products.emplace_back(ma * mb, ca * cb);
  std::sort(products.begin(), products.end(), [](const auto& x, const auto& y) {
    return internal_order(x.first, y.first) < 0;
  });
  MPoly out;
  for (auto& term : products) {
    if (!out.terms_.empty() && out.terms_.back().first == term.first) {
      out.terms_.back().second += term.second;
    } else {
      if (!out.terms_.empty() && sgn(out.terms_.back().second) == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(term));
    }
  }
  if (!out.terms_.empty() && sgn(out.terms_.back().second) == 0) out.terms_.pop_back();
  return out;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1);
  MPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

void PolyBuilder::add(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  Rational r(c);
  r.canonicalize();
  auto [it, inserted] = acc_.try_emplace(m, r);
  if (!inserted) {
    it->second += r;
    if (sgn(it->second) == 0) acc_.erase(it);
  }
}

void PolyBuilder::add(const MPoly& p, const Rational& scale) {
  for (const auto& [m, c] : p.terms()) add(m, c * scale);
}

MPoly PolyBuilder::build() {
  MPoly out;
  out.terms_.reserve(acc_.size());
  for (auto& [m, c] : acc_) out.terms_.emplace_back(m, std::move(c));
  acc_.clear();
  return out;
}

std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& d) {
  if (d.is_zero()) throw DivisionByZero("division by the zero polynomial");
  if (p.is_zero()) return MPoly();
  const auto& [lm, lc] = d.leading_term();
  std::map<Monomial, Rational, MonomialLess> rest;
  for (const auto& [m, c] : p.terms()) rest.emplace(m, c);
  PolyBuilder quotient;
  while (!rest.empty()) {
    auto top = std::prev(rest.end());
    if (!lm.divides(top->first)) return std::nullopt;
    Monomial qm = lm.quotient_of(top->first);
    Rational qc = top->second / lc;
    quotient.add(qm, qc);
    for (const auto& [m, c] : d.terms()) {
      Monomial prod = qm * m;
      auto [it, inserted] = rest.try_emplace(prod, -qc * c);
      if (!inserted) {
        it->second -= qc * c;
        if (sgn(it->second) == 0) rest.erase(it);
      }
    }
  }
  return quotient.build();
}

namespace {

template <class Image>
MPoly apply(const MPoly& p, const std::map<Var, Image>& sigma, bool strict) {
  PolyBuilder out;
  std::map<std::pair<std::uint32_t, std::uint32_t>, MPoly> powers;
  for (const auto& [m, c] : p.terms()) {
    MPoly term(Monomial(), c);
    Monomial kept;
    for (const auto& [v, e] : m.factors()) {
      auto it = sigma.find(Var(v));
      if (it == sigma.end()) {
        if (strict) throw MissingBinding("no binding for variable " + name_of(Var(v)));
        kept = kept * Monomial(Var(v), e);
        continue;
      }
      auto key = std::make_pair(v, e);
      auto pit = powers.find(key);
      if (pit == powers.end()) pit = powers.emplace(key, MPoly(it->second).pow(e)).first;
      term = term * pit->second;
    }
    if (!kept.is_one()) term = term * MPoly(kept, Rational(1));
    out.add(term);
  }
  return out.build();
}

}  // namespace

MPoly specialize(const MPoly& p, const Substitution& sigma) { return apply(p, sigma, true); }

MPoly substitute(const MPoly& p, const Substitution& sigma) { return apply(p, sigma, false); }

Rational evaluate(const MPoly& p, const Point& point) {
  Rational total(0);
  for (const auto& [m, c] : p.terms()) {
    Rational value = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = point.find(Var(v));
      if (it == point.end()) throw MissingBinding("no value for variable " + name_of(Var(v)));
      Rational base = it->second;
      Rational power(1);
      for (std::uint32_t k = 0; k < e; ++k) power *= base;
      value *= power;
    }
    total += value;
  }
  return total;
}

namespace {

// Dense exponent vectors over the variables of p, ordered by key.
struct CanonicalView {
  std::vector<std::uint32_t> ids;  // sorted by key
  std::vector<std::vector<std::uint32_t>> exps;
  std::vector<std::uint32_t> degrees;

  explicit CanonicalView(const MPoly& p) {
    for (Var v : p.variables()) ids.push_back(v.id());
    std::sort(ids.begin(), ids.end(), [](std::uint32_t a, std::uint32_t b) {
      return key_of(Var(a)) < key_of(Var(b));
    });
    for (const auto& [m, c] : p.terms()) {
      std::vector<std::uint32_t> e(ids.size(), 0);
      for (std::size_t k = 0; k < ids.size(); ++k) e[k] = m.exponent(Var(ids[k]));
      exps.push_back(std::move(e));
      degrees.push_back(m.degree());
    }
  }

  // true if term a comes before term b in descending canonical order
  bool before(std::size_t a, std::size_t b) const {
    if (degrees[a] != degrees[b]) return degrees[a] > degrees[b];
    return exps[a] > exps[b];
  }

  std::vector<std::size_t> descending() const {
    std::vector<std::size_t> order(exps.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [this](std::size_t a, std::size_t b) { return before(a, b); });
    return order;
  }
};

}  // namespace

MPoly::Term canonical_leading_term(const MPoly& p) {
  if (p.is_zero()) throw InvalidArgument("leading term of zero polynomial");
  CanonicalView view(p);
  std::size_t best = 0;
  for (std::size_t k = 1; k < p.terms().size(); ++k)
    if (view.before(k, best)) best = k;
  return p.terms()[best];
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  CanonicalView view(*this);
  std::ostringstream os;
  bool first = true;
  for (std::size_t idx : view.descending()) {
    const auto& [m, c] = terms_[idx];
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (m.is_one() || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t k = 0; k < view.ids.size(); ++k) {
      std::uint32_t e = view.exps[idx][k];
      if (e == 0) continue;
      if (wrote) os << '*';
      os << name_of(Var(view.ids[k]));
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace ncsf
