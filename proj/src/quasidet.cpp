#include "ncsf/quasidet.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ncsf/sampling.hpp"

namespace ncsf {

namespace {

MPoly binom_xy(const MPoly& mx, const MPoly& my) {
  return mx * MPoly(vars::x()) - my * MPoly(vars::yv());
}

MPoly power_x(int k) { return MPoly(vars::x()).pow(static_cast<unsigned>(k)); }
MPoly power_y(int k) { return MPoly(vars::yv()).pow(static_cast<unsigned>(k)); }

void require_size(int n) {
  if (n < 1 || n > kMaxDegree) throw InvalidArgument("matrix size out of range");
}

}  // namespace

bool is_almost_triangular(const Matrix<MPoly>& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j + 1 < i; ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

void AlmostTriangularSpec::validate() const {
  require_size(n);
  auto sz = static_cast<std::size_t>(n);
  if (u.rows() != sz || v.rows() != sz || u.cols() != sz || v.cols() != sz)
    throw InvalidArgument("U and V must be n x n");
  if (!is_almost_triangular(u) || !is_almost_triangular(v))
    throw InvalidArgument("U and V must vanish below the subdiagonal");
}

AlmostTriangularSpec ribbon_pair(int n) {
  require_size(n);
  auto sz = static_cast<std::size_t>(n);
  AlmostTriangularSpec s{n, Matrix<MPoly>(sz, sz), Matrix<MPoly>(sz, sz), DescentRows::u};
  for (std::size_t j = 0; j < sz; ++j) {
    s.u(0, j) = MPoly(1);
    s.v(0, j) = MPoly(1);
  }
  for (std::size_t i = 1; i < sz; ++i) {
    for (std::size_t j = i - 1; j < sz; ++j) s.u(i, j) = MPoly(-1);
    s.v(i, i - 1) = MPoly(-1);
  }
  return s;
}

AlmostTriangularSpec factoring_family(int n) {
  require_size(n);
  auto sz = static_cast<std::size_t>(n);
  AlmostTriangularSpec s{n, Matrix<MPoly>(sz, sz), Matrix<MPoly>(sz, sz), DescentRows::v};
  MPoly a(vars::a()), b(vars::b());
  for (int j = 1; j <= n; ++j) {
    MPoly top = power_x(j) - power_y(j);
    s.u(0, static_cast<std::size_t>(j - 1)) = top;
    s.v(0, static_cast<std::size_t>(j - 1)) = top;
  }
  for (int i = 2; i <= n; ++i)
    for (int j = i - 1; j <= n; ++j) {
      int e = j - i + 1;
      auto r = static_cast<std::size_t>(i - 1), c = static_cast<std::size_t>(j - 1);
      s.u(r, c) = a * MPoly(vars::qs(i - 1)) * power_x(e) - power_y(e);
      s.v(r, c) = power_x(e) - b * MPoly(vars::u(n + 1 - i)) * power_y(e);
    }
  return s;
}

AlmostTriangularSpec random_spec(int n, std::uint64_t seed) {
  require_size(n);
  auto sz = static_cast<std::size_t>(n);
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  auto draw = [&](bool nonzero) {
    int v = dist(gen);
    while (nonzero && v == 0) v = dist(gen);
    return MPoly(v);
  };
  AlmostTriangularSpec s{n, Matrix<MPoly>(sz, sz), Matrix<MPoly>(sz, sz), DescentRows::u};
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = i == 0 ? 0 : i - 1; j < sz; ++j) {
      bool sub = i > 0 && j + 1 == i;
      s.u(i, j) = draw(sub);
      s.v(i, j) = draw(sub);
    }
  return s;
}

Matrix<MPoly> assemble_W(const AlmostTriangularSpec& spec, const Composition& c) {
  spec.validate();
  if (c.size() != spec.n) throw InvalidArgument("composition size differs from matrix size");
  auto sz = static_cast<std::size_t>(spec.n);
  Matrix<MPoly> w(sz, sz);
  for (int i = 1; i <= spec.n; ++i) {
    bool descent = c.has_descent(i - 1);
    bool from_u = (spec.descent_rows == DescentRows::u) == descent;
    const Matrix<MPoly>& src = from_u ? spec.u : spec.v;
    auto r = static_cast<std::size_t>(i - 1);
    for (std::size_t j = 0; j < sz; ++j) w(r, j) = src(r, j);
  }
  return w;
}

std::vector<int> sharp(const Composition& c) {
  std::vector<int> out;
  for (int p : c.parts()) {
    out.push_back(p);
    out.insert(out.end(), static_cast<std::size_t>(p - 1), 0);
  }
  return out;
}

Permutation sigma_I(const Composition& c) {
  std::vector<int> s = sharp(c);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += static_cast<int>(i);
  std::vector<int> check = s;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != static_cast<int>(i) + 1) throw Error("sigma_I is not a permutation");
  return Permutation(std::move(s));
}

SExpansion<MPoly> s_expansion(const Matrix<MPoly>& w) {
  if (!is_almost_triangular(w)) throw InvalidArgument("matrix is not almost triangular");
  int n = static_cast<int>(w.rows());
  require_size(n);
  SExpansion<MPoly> out;
  for (const Composition& c : compositions_of(n)) {
    Permutation s = sigma_I(c);
    MPoly coeff(s.sign());
    for (int i = 1; i <= n && !coeff.is_zero(); ++i)
      coeff *= w(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(s(i) - 1));
    if (!coeff.is_zero()) out.emplace(c, std::move(coeff));
  }
  return out;
}

SExpansion<MPoly> s_expansion(const AlmostTriangularSpec& spec, const Composition& c) {
  return s_expansion(assemble_W(spec, c));
}

SExpansion<MPoly> brute_force_rdet(const Matrix<MPoly>& w) {
  if (w.rows() != w.cols()) throw InvalidArgument("row determinant of a non-square matrix");
  int n = static_cast<int>(w.rows());
  require_size(n);
  if (n > 7) throw ResourceLimit("brute-force row determinant limited to n <= 7");
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::map<Composition, PolyBuilder> acc;
  do {
    MPoly coeff(1);
    std::vector<int> word;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      int k = p[static_cast<std::size_t>(i)] - i + 1;  // G index, G_0 = 1
      if (k < 0) ok = false;
      else {
        coeff *= w(static_cast<std::size_t>(i), static_cast<std::size_t>(p[static_cast<std::size_t>(i)]));
        if (coeff.is_zero()) ok = false;
        if (k > 0) word.push_back(k);
      }
    }
    if (!ok) continue;
    std::vector<int> images;
    for (int v : p) images.push_back(v + 1);
    acc[Composition(word)].add(coeff, Rational(Permutation(images).sign()));
  } while (std::next_permutation(p.begin(), p.end()));
  SExpansion<MPoly> out;
  for (auto& [c, b] : acc) {
    MPoly v = b.build();
    if (!v.is_zero()) out.emplace(c, std::move(v));
  }
  return out;
}

Grassmann<MPoly> r_expansion(const Matrix<MPoly>& w) {
  if (!is_almost_triangular(w)) throw InvalidArgument("matrix is not almost triangular");
  int n = static_cast<int>(w.rows());
  require_size(n);
  Grassmann<MPoly> out(n);
  for (const Composition& c : compositions_of(n)) {
    MPoly coeff(1);
    std::size_t start = 0;
    for (int part : c.parts()) {
      auto k = static_cast<std::size_t>(part);
      Matrix<MPoly> block(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) block(i, j) = w(start + i, start + j);
      coeff *= determinant(block);
      if (coeff.is_zero()) break;
      start += k;
    }
    out.add(c.descent_mask(), coeff);
  }
  return out;
}

Grassmann<MPoly> r_expansion(const AlmostTriangularSpec& spec, const Composition& c) {
  return r_expansion(assemble_W(spec, c));
}

MPoly subdiagonal_factor(const Matrix<MPoly>& w) {
  MPoly out(1);
  for (std::size_t i = 1; i < w.rows(); ++i) out *= -w(i, i - 1);
  return out;
}

Grassmann<Rational> evaluate_words(const SExpansion<Rational>& words,
                                   const std::vector<Grassmann<Rational>>& generators) {
  if (words.empty()) throw InvalidArgument("empty word expansion");
  int n = words.begin()->first.size();
  Grassmann<Rational> out(n);
  for (const auto& [c, coeff] : words) {
    Grassmann<Rational> word = Grassmann<Rational>::scalar(0, Rational(1));
    for (int p : c.parts()) {
      if (p >= static_cast<int>(generators.size()))
        throw InvalidArgument("missing generator image");
      word = product_sym(word, generators[static_cast<std::size_t>(p)]);
    }
    out += word * coeff;
  }
  return out;
}

MPoly biword_coefficient(const Composition& ci, const Composition& cj, bool corrected) {
  int n = ci.size();
  if (n < 2 || cj.size() != n) throw InvalidArgument("biword rule needs two compositions of n >= 2");
  std::string u = ci.boolean_word(), v = cj.boolean_word();
  auto bit = [](const std::string& w, int i) { return w[static_cast<std::size_t>(i - 1)] == '1'; };
  auto q = [](int i) { return MPoly(vars::qs(i)); };
  auto uu = [](int i) { return MPoly(vars::u(i)); };
  MPoly one(1);
  MPoly x_minus_y = binom_xy(one, one);
  MPoly out = x_minus_y;
  if (!bit(v, 1)) {
    if (!bit(u, 1)) out *= binom_xy(one, q(1));
    else out *= corrected ? binom_xy(uu(n - 1), one) : binom_xy(one, uu(n - 1));
  }
  if (bit(v, n - 1)) {
    if (bit(u, n - 1)) out *= binom_xy(one, uu(1));
    else out *= corrected ? binom_xy(q(n - 1), one) : binom_xy(one, q(n - 1));
  }
  for (int i = 1; i + 1 <= n - 1; ++i) {
    bool ui = bit(u, i), uj = bit(u, i + 1), vi = bit(v, i), vj = bit(v, i + 1);
    if (!vi && !vj) {
      out *= uj ? binom_xy(uu(n - i - 1), one) : binom_xy(one, q(i + 1));
    } else if (vi && vj) {
      out *= ui ? binom_xy(one, uu(n - i)) : binom_xy(q(i), one);
    } else if (vi && !vj) {
      MPoly f;
      if (!ui && !uj) f = binom_xy(q(i), q(i + 1));
      else if (!ui && uj) f = binom_xy(q(i) * uu(n - i - 1), one);
      else if (ui && !uj) f = binom_xy(one, q(i + 1) * uu(n - i));
      else f = binom_xy(uu(n - i - 1), uu(n - i));
      out *= f * x_minus_y;
    }
  }
  return out;
}

std::vector<MPoly> binomial_factors(const MPoly& p, MPoly& rest) {
  std::vector<MPoly> found;
  rest = p;
  if (p.is_zero()) return found;
  Var xv = vars::x(), yv = vars::yv();
  std::set<Var> params;
  for (Var v : p.variables())
    if (v != xv && v != yv) params.insert(v);
  // monomial pool: each subset of {a, b} times at most one q_i and one u_i
  std::vector<Var> qs, us;
  bool has_a = false, has_b = false;
  for (Var v : params) {
    Family f = key_of(v).family;
    if (f == Family::qseq) qs.push_back(v);
    else if (f == Family::useq) us.push_back(v);
    else if (f == Family::a) has_a = true;
    else if (f == Family::b) has_b = true;
  }
  std::vector<MPoly> pool;
  std::vector<MPoly> ab{MPoly(1)};
  if (has_a) ab.push_back(MPoly(vars::a()));
  if (has_b) ab.push_back(MPoly(vars::b()));
  if (has_a && has_b) ab.push_back(MPoly(vars::a()) * MPoly(vars::b()));
  std::vector<MPoly> qpart{MPoly(1)}, upart{MPoly(1)};
  for (Var v : qs) qpart.emplace_back(v);
  for (Var v : us) upart.emplace_back(v);
  for (const auto& m1 : ab)
    for (const auto& m2 : qpart)
      for (const auto& m3 : upart) pool.push_back(m1 * m2 * m3);

  PointSampler sampler(kDefaultSeed);
  Point pt;
  for (Var v : params) pt[v] = sampler.value();
  auto ev = [&](const MPoly& m) { return evaluate(m, pt); };
  std::vector<Rational> pool_values;
  for (const auto& m : pool) pool_values.push_back(ev(m));
  std::vector<std::vector<bool>> coprime(pool.size(), std::vector<bool>(pool.size(), true));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j)
      for (Var v : pool[i].variables())
        if (pool[j].leading_term().first.exponent(v) > 0) coprime[i][j] = false;

  // P(x, 1) at the sample point, as coefficients in x
  auto univariate = [&](const MPoly& poly) {
    std::vector<Rational> c;
    for (const auto& [mono, coeff] : poly.terms()) {
      Rational v = coeff;
      std::uint32_t dx = 0;
      for (auto [id, e] : mono.factors()) {
        Var var(id);
        if (var == xv) dx = e;
        else if (var != yv) {
          Rational base = pt.at(var);
          for (std::uint32_t k = 0; k < e; ++k) v *= base;
        }
      }
      if (c.size() <= dx) c.resize(dx + 1, Rational(0));
      c[dx] += v;
    }
    return c;
  };
  std::vector<Rational> uni = univariate(rest);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < pool.size() && !progress; ++i)
      for (std::size_t j = 0; j < pool.size() && !progress; ++j) {
        if (sgn(pool_values[i]) == 0 || !coprime[i][j]) continue;
        Rational r = pool_values[j] / pool_values[i];
        Rational acc(0);
        for (auto it = uni.rbegin(); it != uni.rend(); ++it) acc = acc * r + *it;
        if (sgn(acc) != 0) continue;
        MPoly cand = binom_xy(pool[i], pool[j]);
        auto quotient = divide_exact(rest, cand);
        if (!quotient) continue;
        found.push_back(cand);
        rest = *quotient;
        uni = univariate(rest);
        progress = true;
      }
  }
  return found;
}

}  // namespace ncsf
