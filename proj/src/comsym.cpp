#include "ncsf/comsym.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "ncsf/matrix.hpp"
#include "ncsf/quasidet.hpp"

namespace ncsf {

namespace {

void require_degree(int n, int limit = kMaxComSymDegree) {
  if (n < 1 || n > limit)
    throw InvalidArgument("symmetric function degree out of range (1.." + std::to_string(limit) + ")");
}

void generate(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

std::size_t index_of(const Partition& p) {
  int n = std::accumulate(p.begin(), p.end(), 0);
  const auto& all = partitions_of(n);
  auto it = std::find(all.begin(), all.end(), p);
  if (it == all.end()) throw InvalidArgument("not a partition: " + partition_string(p));
  return static_cast<std::size_t>(it - all.begin());
}

MPoly one_minus(Var v, int k) { return MPoly(1) - MPoly(v).pow(static_cast<unsigned>(k)); }

// Generator polynomials in x_1..x_n.
MPoly complete(int k, int nvars) {
  // h_k(x_1..x_m) = sum_j x_m^j h_{k-j}(x_1..x_{m-1})
  std::vector<MPoly> prev(static_cast<std::size_t>(k) + 1, MPoly());
  prev[0] = MPoly(1);
  for (int m = 1; m <= nvars; ++m) {
    std::vector<MPoly> cur(prev.size());
    MPoly xm(vars::x(m));
    for (int d = 0; d <= k; ++d) {
      MPoly acc;
      MPoly power(1);
      for (int j = 0; j <= d; ++j) {
        acc += power * prev[static_cast<std::size_t>(d - j)];
        power *= xm;
      }
      cur[static_cast<std::size_t>(d)] = acc;
    }
    prev = std::move(cur);
  }
  return prev[static_cast<std::size_t>(k)];
}

MPoly elementary(int k, int nvars) {
  std::vector<MPoly> e(static_cast<std::size_t>(k) + 1, MPoly());
  e[0] = MPoly(1);
  for (int m = 1; m <= nvars; ++m) {
    MPoly xm(vars::x(m));
    for (int d = k; d >= 1; --d) e[static_cast<std::size_t>(d)] += xm * e[static_cast<std::size_t>(d - 1)];
  }
  return e[static_cast<std::size_t>(k)];
}

MPoly power_sum(int k, int nvars) {
  MPoly out;
  for (int m = 1; m <= nvars; ++m) out += MPoly(vars::x(m)).pow(static_cast<unsigned>(k));
  return out;
}

Rational monomial_coefficient(const MPoly& p, const Partition& mu) {
  Monomial m;
  for (std::size_t i = 0; i < mu.size(); ++i)
    m = m * Monomial(vars::x(static_cast<int>(i) + 1), static_cast<std::uint32_t>(mu[i]));
  return p.coefficient(m);
}

// Jacobi-Trudi in the h basis: s_lambda = det(h_{lambda_i - i + j}).
std::map<Partition, Rational> schur_in_h(const Partition& lambda) {
  int l = static_cast<int>(lambda.size());
  std::vector<int> perm(static_cast<std::size_t>(l));
  std::iota(perm.begin(), perm.end(), 0);
  std::map<Partition, Rational> out;
  do {
    Partition parts;
    bool zero = false;
    for (int i = 0; i < l && !zero; ++i) {
      int k = lambda[static_cast<std::size_t>(i)] - i + perm[static_cast<std::size_t>(i)];
      if (k < 0) zero = true;
      else if (k > 0) parts.push_back(k);
    }
    if (zero) continue;
    std::sort(parts.rbegin(), parts.rend());
    std::vector<int> images;
    for (int v : perm) images.push_back(v + 1);
    out[parts] += Rational(Permutation(images).sign());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct Tables {
  std::vector<std::vector<Rational>> to_m;
  Matrix<Rational> from_m;  // inverse of to_m
};

std::mutex tables_mutex;
std::map<std::pair<int, int>, Tables> tables_cache;

Tables build_tables(SymBasis b, int n) {
  const auto& parts = partitions_of(n);
  std::size_t dim = parts.size();
  std::vector<std::vector<Rational>> rows(dim, std::vector<Rational>(dim, Rational(0)));
  if (b == SymBasis::m) {
    for (std::size_t i = 0; i < dim; ++i) rows[i][i] = 1;
  } else if (b == SymBasis::s) {
    const auto& h = to_monomial_matrix(SymBasis::h, n);
    for (std::size_t i = 0; i < dim; ++i)
      for (const auto& [hp, c] : schur_in_h(parts[i])) {
        std::size_t r = index_of(hp);
        for (std::size_t j = 0; j < dim; ++j) rows[i][j] += c * h[r][j];
      }
  } else {
    for (std::size_t i = 0; i < dim; ++i) {
      MPoly prod(1);
      for (int k : parts[i]) {
        MPoly g = b == SymBasis::h ? complete(k, n) : b == SymBasis::e ? elementary(k, n) : power_sum(k, n);
        prod *= g;
      }
      for (std::size_t j = 0; j < dim; ++j) rows[i][j] = monomial_coefficient(prod, parts[j]);
    }
  }
  Matrix<Rational> m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = rows[i][j];
  return Tables{rows, inverse(m)};
}

const Tables& tables(SymBasis b, int n) {
  require_degree(n);
  auto key = std::make_pair(static_cast<int>(b), n);
  {
    std::lock_guard<std::mutex> lock(tables_mutex);
    auto it = tables_cache.find(key);
    if (it != tables_cache.end()) return it->second;
  }
  Tables t = build_tables(b, n);
  std::lock_guard<std::mutex> lock(tables_mutex);
  return tables_cache.try_emplace(key, std::move(t)).first->second;
}

std::vector<RatFunc> to_m_vector(const ComSymElem& e) {
  const auto& parts = partitions_of(e.n);
  const auto& rows = tables(e.basis, e.n).to_m;
  std::vector<RatFunc> v(parts.size(), RatFunc(0));
  for (const auto& [p, c] : e.coeffs) {
    std::size_t i = index_of(p);
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (sgn(rows[i][j]) != 0) v[j] += c * RatFunc(rows[i][j]);
  }
  return v;
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  require_degree(n);
  static std::once_flag once;
  static std::vector<std::vector<Partition>> cache;
  std::call_once(once, [] {
    cache.resize(kMaxComSymDegree + 1);
    for (int m = 1; m <= kMaxComSymDegree; ++m) {
      Partition cur;
      generate(m, m, cur, cache[static_cast<std::size_t>(m)]);
    }
  });
  return cache[static_cast<std::size_t>(n)];
}

std::string partition_string(const Partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out + "]";
}

Partition parse_partition(const std::string& text) {
  Composition c = Composition::parse(text);
  Partition p = c.parts();
  if (!std::is_sorted(p.rbegin(), p.rend())) throw InvalidArgument("parts must be weakly decreasing: " + text);
  return p;
}

bool dominates(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return sa == sb;
}

Partition sorted_parts(const Composition& c) {
  Partition p = c.parts();
  std::sort(p.rbegin(), p.rend());
  return p;
}

std::string basis_name(SymBasis b) {
  switch (b) {
    case SymBasis::h: return "h";
    case SymBasis::e: return "e";
    case SymBasis::p: return "p";
    case SymBasis::m: return "m";
    case SymBasis::s: return "s";
  }
  return "?";
}

void ComSymElem::add(const Partition& p, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = coeffs.try_emplace(p, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) coeffs.erase(it);
}

std::string ComSymElem::to_string() const {
  std::string out;
  for (const Partition& p : partitions_of(n)) {
    auto it = coeffs.find(p);
    if (it == coeffs.end()) continue;
    out += basis_name(basis) + partition_string(p) + ": " + it->second.to_string() + "\n";
  }
  return out;
}

const std::vector<std::vector<Rational>>& to_monomial_matrix(SymBasis b, int n) {
  return tables(b, n).to_m;
}

ComSymElem basis_element(SymBasis b, const Partition& p) {
  int n = std::accumulate(p.begin(), p.end(), 0);
  index_of(p);
  ComSymElem e{b, n, {}};
  e.add(p, RatFunc(1));
  return e;
}

ComSymElem basis_convert(const ComSymElem& e, SymBasis target) {
  if (e.basis == target) return e;
  std::vector<RatFunc> v = to_m_vector(e);
  const auto& parts = partitions_of(e.n);
  ComSymElem out{target, e.n, {}};
  if (target == SymBasis::m) {
    for (std::size_t j = 0; j < parts.size(); ++j) out.add(parts[j], v[j]);
    return out;
  }
  const Matrix<Rational>& inv = tables(target, e.n).from_m;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    RatFunc acc(0);
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (!v[i].is_zero() && sgn(inv(i, j)) != 0) acc += v[i] * RatFunc(inv(i, j));
    out.add(parts[j], acc);
  }
  return out;
}

bool equal(const ComSymElem& a, const ComSymElem& b) {
  if (a.n != b.n) return false;
  std::vector<RatFunc> va = to_m_vector(a), vb = to_m_vector(b);
  for (std::size_t i = 0; i < va.size(); ++i)
    if (!(va[i] == vb[i])) return false;
  return true;
}

ComSymElem scale(const ComSymElem& e, const RatFunc& c) {
  ComSymElem out{e.basis, e.n, {}};
  for (const auto& [p, v] : e.coeffs) out.add(p, v * c);
  return out;
}

ComSymElem commutative_image(const SExpansion<MPoly>& e) {
  SExpansion<RatFunc> r;
  for (const auto& [c, v] : e) r.emplace(c, RatFunc(v));
  return commutative_image(r);
}

ComSymElem commutative_image(const SExpansion<RatFunc>& e) {
  if (e.empty()) throw InvalidArgument("empty expansion");
  int n = e.begin()->first.size();
  require_degree(n);
  ComSymElem out{SymBasis::h, n, {}};
  for (const auto& [c, v] : e) out.add(sorted_parts(c), v);
  return out;
}

MPoly as_h_polynomial(const ComSymElem& e) {
  ComSymElem h = basis_convert(e, SymBasis::h);
  MPoly out;
  for (const auto& [p, c] : h.coeffs) {
    auto poly = c.as_polynomial();
    if (!poly) throw InvalidArgument("coefficient is not a polynomial");
    MPoly term = *poly;
    for (int k : p) term *= MPoly(vars::h(k));
    out += term;
  }
  return out;
}

ComSymElem qt_transform(const ComSymElem& e) {
  ComSymElem p = basis_convert(e, SymBasis::p);
  ComSymElem out{SymBasis::p, e.n, {}};
  for (const auto& [part, c] : p.coeffs) {
    std::vector<MPoly> num, den;
    for (int k : part) {
      num.push_back(one_minus(vars::t1(), k));
      den.push_back(one_minus(vars::q1(), k));
    }
    out.add(part, c * RatFunc::from_factors(num, den));
  }
  return out;
}

RatFunc qt_norm(const Partition& p) {
  Rational z(1);
  std::map<int, int> mult;
  for (int k : p) ++mult[k];
  for (auto [k, m] : mult)
    for (int i = 1; i <= m; ++i) z *= Rational(k * i);
  std::vector<MPoly> num{MPoly(z)}, den;
  for (int k : p) {
    num.push_back(one_minus(vars::q1(), k));
    den.push_back(one_minus(vars::t1(), k));
  }
  return RatFunc::from_factors(num, den);
}

namespace {

// Basis of {b : M b = 0} for a rational matrix given by rows.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = Rational(1) / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

Rational z_factor(const Partition& rho) {
  Rational z(1);
  std::map<int, int> mult;
  for (int k : rho) ++mult[k];
  for (auto [k, m] : mult)
    for (int i = 1; i <= m; ++i) z *= Rational(k * i);
  return z;
}

// P_lambda through y = W x, W the diagonal p-basis weights: y is orthogonal
// (in the plain sense) to the m_nu below lambda, and x = W^{-1} y must lie in
// the span of the m_mu with mu <= lambda.
ComSymElem macdonald_dual(const Partition& lambda, int n, std::size_t li,
                          const std::vector<std::size_t>& lower) {
  const auto& parts = partitions_of(n);
  std::size_t dim = parts.size();
  const Matrix<Rational>& m_to_p = tables(SymBasis::p, n).from_m;
  const auto& p_to_m = to_monomial_matrix(SymBasis::p, n);
  auto row = [&](std::size_t mu) {
    std::vector<Rational> v(dim);
    for (std::size_t r = 0; r < dim; ++r) v[r] = m_to_p(mu, r);
    return v;
  };
  std::vector<std::vector<Rational>> below, ideal{row(li)};
  for (std::size_t mu : lower) {
    below.push_back(row(mu));
    ideal.push_back(row(mu));
  }
  auto kernel = nullspace(below, dim);      // candidates for y
  auto annihilator = nullspace(ideal, dim);  // conditions on x
  // W^{-1} scaled by prod_k (1 - q^k)^{n/k} to stay polynomial
  MPoly common(1);
  for (int k = 1; k <= n; ++k) common *= one_minus(vars::q1(), k).pow(static_cast<unsigned>(n / k));
  std::vector<MPoly> inv_weight;
  for (const Partition& rho : parts) {
    MPoly num(Rational(1) / z_factor(rho)), den(1);
    for (int k : rho) {
      num *= one_minus(vars::t1(), k);
      den *= one_minus(vars::q1(), k);
    }
    inv_weight.push_back(num * *divide_exact(common, den));
  }
  std::size_t c = annihilator.size();
  if (kernel.size() != c + 1) throw Error("macdonald_P: unexpected kernel dimension");
  Matrix<MPoly> e(c, c + 1);
  for (std::size_t r = 0; r < c; ++r)
    for (std::size_t k = 0; k <= c; ++k) {
      MPoly acc;
      for (std::size_t rho = 0; rho < dim; ++rho) {
        Rational f = annihilator[r][rho] * kernel[k][rho];
        if (sgn(f) != 0) acc += inv_weight[rho] * f;
      }
      e(r, k) = acc;
    }
  std::vector<MPoly> d(c + 1);
  for (std::size_t k = 0; k <= c; ++k) {
    Matrix<MPoly> minor(c, c);
    for (std::size_t r = 0; r < c; ++r)
      for (std::size_t j = 0, col = 0; j <= c; ++j)
        if (j != k) minor(r, col++) = e(r, j);
    d[k] = k % 2 ? -determinant(minor) : determinant(minor);
  }
  std::vector<MPoly> x(dim);
  for (std::size_t rho = 0; rho < dim; ++rho) {
    MPoly y;
    for (std::size_t k = 0; k <= c; ++k)
      if (sgn(kernel[k][rho]) != 0) y += d[k] * kernel[k][rho];
    x[rho] = y * inv_weight[rho];
  }
  std::vector<MPoly> coeff(dim);
  for (std::size_t mu = 0; mu < dim; ++mu)
    for (std::size_t rho = 0; rho < dim; ++rho)
      if (sgn(p_to_m[rho][mu]) != 0) coeff[mu] += x[rho] * p_to_m[rho][mu];
  if (coeff[li].is_zero()) throw Error("macdonald_P: degenerate solution");
  ComSymElem out{SymBasis::m, n, {}};
  out.add(lambda, RatFunc(1));
  for (std::size_t mu : lower) out.add(parts[mu], RatFunc(coeff[mu], coeff[li]));
  return out;
}

}  // namespace

ComSymElem macdonald_P(const Partition& lambda, GramSolve how) {
  int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  require_degree(n, 5);
  const auto& parts = partitions_of(n);
  std::size_t li = index_of(lambda);
  std::vector<std::size_t> lower;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (i != li && dominates(lambda, parts[i])) lower.push_back(i);
  if (how == GramSolve::automatic)
    how = lower.size() <= parts.size() - lower.size() - 1 ? GramSolve::primal : GramSolve::dual;
  if (how == GramSolve::dual) return macdonald_dual(lambda, n, li, lower);
  ComSymElem out{SymBasis::m, n, {}};
  out.add(lambda, RatFunc(1));
  if (lower.empty()) return out;

  // <p_rho, p_rho> times a common denominator, so the Gram matrix is polynomial
  MPoly common(1);
  for (int k = 1; k <= n; ++k) common *= one_minus(vars::t1(), k).pow(static_cast<unsigned>(n / k));
  std::vector<MPoly> weight;
  for (const Partition& rho : parts) {
    Rational z(1);
    std::map<int, int> mult;
    for (int k : rho) ++mult[k];
    for (auto [k, m] : mult)
      for (int i = 1; i <= m; ++i) z *= Rational(k * i);
    MPoly num(z), den(1);
    for (int k : rho) {
      num *= one_minus(vars::q1(), k);
      den *= one_minus(vars::t1(), k);
    }
    auto scaled = divide_exact(common, den);
    if (!scaled) throw Error("macdonald_P: common denominator is not a multiple");
    weight.push_back(num * *scaled);
  }
  const Matrix<Rational>& m_to_p = tables(SymBasis::p, n).from_m;
  auto gram = [&](std::size_t a, std::size_t b) {
    MPoly g;
    for (std::size_t r = 0; r < parts.size(); ++r) {
      Rational c = m_to_p(a, r) * m_to_p(b, r);
      if (sgn(c) != 0) g += weight[r] * c;
    }
    return g;
  };
  std::size_t k = lower.size();
  Matrix<MPoly> system(k, k);
  std::vector<MPoly> rhs(k);
  for (std::size_t r = 0; r < k; ++r) {
    rhs[r] = -gram(li, lower[r]);
    for (std::size_t c = 0; c < k; ++c) system(r, c) = gram(lower[c], lower[r]);
  }
  MPoly det = determinant(system);
  if (det.is_zero()) throw Error("macdonald_P: singular Gram matrix");
  for (std::size_t c = 0; c < k; ++c) {
    Matrix<MPoly> replaced = system;
    for (std::size_t r = 0; r < k; ++r) replaced(r, c) = rhs[r];
    out.add(parts[lower[c]], RatFunc(determinant(replaced), det));
  }
  return out;
}

MPoly q_factorial(int k, bool divided) {
  if (k < 0) throw InvalidArgument("q_factorial of a negative integer");
  MPoly out(1);
  for (int j = 1; j <= k; ++j) {
    MPoly f = one_minus(vars::q1(), j);
    if (divided) f = *divide_exact(f, one_minus(vars::q1(), 1));
    out *= f;
  }
  return out;
}

HookMode parse_hook_mode(const std::string& name) {
  if (name == "macdonald") return HookMode::macdonald;
  if (name == "transform") return HookMode::transform;
  if (name == "transform-q") return HookMode::transform_q;
  throw InvalidArgument("unknown hook mode: " + name);
}

std::string hook_mode_name(HookMode m) {
  switch (m) {
    case HookMode::macdonald: return "macdonald";
    case HookMode::transform: return "transform";
    case HookMode::transform_q: return "transform-q";
  }
  return "?";
}

MPoly integral_norm(const Partition& lambda) {
  MPoly out(1);
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      auto arm = static_cast<unsigned>(lambda[i] - j - 1);
      unsigned leg = 0;
      for (std::size_t r = i + 1; r < lambda.size() && lambda[r] > j; ++r) ++leg;
      out *= MPoly(1) - MPoly(vars::q1()).pow(arm) * MPoly(vars::t1()).pow(leg + 1);
    }
  return out;
}

Substitution hook_specialization(int n, HookMode mode) {
  Substitution s;
  MPoly q(vars::q1()), t(vars::t1());
  s[vars::x()] = MPoly(1);
  s[vars::yv()] = t;
  s[vars::a()] = MPoly(1);
  s[vars::b()] = MPoly(1);
  for (int i = 1; i <= n; ++i) {
    s[vars::qs(i)] = q.pow(static_cast<unsigned>(i));
    auto e = static_cast<unsigned>(i);
    s[vars::u(i)] = mode == HookMode::macdonald ? t.pow(e) : mode == HookMode::transform_q ? q.pow(e) : MPoly(1);
  }
  return s;
}

HookResult hook_check(int n, int k, HookMode mode) {
  require_degree(n, 5);
  Composition hk = hook(n, k);
  HookResult r;
  r.n = n;
  r.k = k;
  r.mode = mode;
  Substitution sigma = hook_specialization(n, mode);
  SExpansion<MPoly> se;
  for (const auto& [c, v] : s_expansion(factoring_family(n), hk)) {
    MPoly sv = specialize(v, sigma);
    if (!sv.is_zero()) se.emplace(c, sv);
  }
  r.image = se.empty() ? ComSymElem{SymBasis::m, n, {}} : basis_convert(commutative_image(se), SymBasis::m);
  Partition shape = sorted_parts(hk);
  if (mode == HookMode::macdonald) r.reference = macdonald_P(shape);
  else r.reference = basis_convert(qt_transform(basis_element(SymBasis::s, shape)), SymBasis::m);

  for (const auto& [p, c] : r.reference.coeffs) {
    auto it = r.image.coeffs.find(p);
    r.ratio = it == r.image.coeffs.end() ? RatFunc(0) : it->second / c;
    break;
  }
  r.proportional = equal(r.image, scale(r.reference, r.ratio));
  MPoly tail = one_minus(vars::q1(), n);
  r.predicted = RatFunc(q_factorial(k, false) * q_factorial(n - k - 1, false) * tail);
  r.predicted_alt = RatFunc(q_factorial(k, true) * q_factorial(n - k - 1, true) * tail);
  r.matches = r.proportional && r.ratio == r.predicted;
  r.matches_alt = r.proportional && r.ratio == r.predicted_alt;
  r.matches_unit = r.proportional && r.ratio == RatFunc(1);
  r.matches_integral = r.proportional && r.ratio == RatFunc(integral_norm(shape));
  return r;
}

}  // namespace ncsf
