#include "ncsf/parambases.hpp"

#include <gmpxx.h>

#include "ncsf/kernels.hpp"

namespace ncsf {

ParamFamily parse_family(const std::string& name) {
  if (name == "generic" || name == "y") return ParamFamily::generic;
  if (name == "qt") return ParamFamily::qt;
  if (name == "bz") return ParamFamily::bz;
  if (name == "hlt") return ParamFamily::hlt;
  throw InvalidArgument("unknown family: " + name);
}

std::string family_name(ParamFamily f) {
  switch (f) {
    case ParamFamily::generic: return "generic";
    case ParamFamily::qt: return "qt";
    case ParamFamily::bz: return "bz";
    case ParamFamily::hlt: return "hlt";
  }
  return "?";
}

namespace {

// (|w|_1 + 1, |w|_0 + 1) for the word u = w x.
std::pair<int, int> qt_indices(std::string_view word) {
  int ones = 0;
  int zeros = 0;
  for (char c : word.substr(0, word.size() - 1)) (c == '1' ? ones : zeros)++;
  return {ones + 1, zeros + 1};
}

void check_word(std::string_view word) {
  if (word.empty() || word.find_first_not_of("01") != std::string_view::npos)
    throw InvalidArgument("parameter index must be a nonempty binary word");
}

}  // namespace

MPoly family_param(ParamFamily f, int n, std::string_view word) {
  check_word(word);
  if (f == ParamFamily::generic) return MPoly(vars::y(word));
  auto [i, j] = qt_indices(word);
  bool is_q = word.back() == '0';
  switch (f) {
    case ParamFamily::qt: return MPoly(is_q ? vars::q(i, j) : vars::t(i, j));
    case ParamFamily::bz: {
      if (i + j > n) throw InvalidArgument("BZ parameter outside degree " + std::to_string(n));
      return MPoly(is_q ? vars::qs(i + j - 1) : vars::ts(n + 1 - i - j));
    }
    case ParamFamily::hlt: return MPoly(is_q ? vars::qs(j) : vars::ts(i));
    default: break;
  }
  throw InvalidArgument("unknown family");
}

Alphabet alphabet(ParamFamily f, const Composition& c) {
  std::string u = c.boolean_word();
  Alphabet out;
  for (std::size_t k = 1; k <= u.size(); ++k) out.push_back(family_param(f, c.size(), u.substr(0, k)));
  return out;
}

Alphabet coalphabet(ParamFamily f, const Composition& c) {
  std::string u = c.boolean_word();
  Alphabet out;
  for (std::size_t k = 1; k <= u.size(); ++k) {
    std::string w = u.substr(0, k);
    w.back() = w.back() == '0' ? '1' : '0';
    out.push_back(family_param(f, c.size(), w));
  }
  return out;
}

Alphabet z_alphabet(const Composition& c) {
  Alphabet out;
  int col = 1;
  for (int row = 1; row <= c.length(); ++row) {
    int part = c.parts()[static_cast<std::size_t>(row - 1)];
    for (int k = 0; k < part; ++k) {
      int j = col + k;
      if (row == 1 && k == 0) continue;
      if (k == 0) out.push_back(MPoly(vars::t(row - 1, j)));
      else out.push_back(MPoly(vars::q(row, j - 1)));
    }
    col += part - 1;
  }
  return out;
}

namespace {

void all_words(int max_len, const std::function<void(const std::string&)>& f) {
  for (int len = 1; len <= max_len; ++len)
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      std::string w(static_cast<std::size_t>(len), '0');
      for (int k = 0; k < len; ++k)
        if ((bits >> (len - 1 - k)) & 1u) w[static_cast<std::size_t>(k)] = '1';
      f(w);
    }
}

}  // namespace

Substitution qt_specialization(int n) {
  Substitution s;
  all_words(n - 1, [&](const std::string& w) { s[vars::y(w)] = family_param(ParamFamily::qt, n, w); });
  return s;
}

Substitution bz_specialization(int n) {
  Substitution s;
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) {
      s[vars::q(i, j)] = MPoly(vars::qs(i + j - 1));
      s[vars::t(i, j)] = MPoly(vars::ts(n + 1 - i - j));
    }
  return s;
}

Substitution hlt_specialization(int n) {
  Substitution s;
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) {
      s[vars::q(i, j)] = MPoly(vars::qs(j));
      s[vars::t(i, j)] = MPoly(vars::ts(i));
    }
  return s;
}

Grassmann<MPoly> basis_P(ParamFamily f, const Composition& c) { return k_factorized(alphabet(f, c)); }

Grassmann<MPoly> basis_Q(ParamFamily f, const Composition& c) { return l_factorized(coalphabet(f, c)); }

Matrix<MPoly> kostka_matrix(int n, ParamFamily f) {
  if (n < 1 || n > 6) throw ResourceLimit("kostka_matrix supports 1 <= n <= 6");
  auto comps = compositions_of(n);
  std::vector<Alphabet> al;
  for (const auto& c : comps) al.push_back(alphabet(f, c));
  Matrix<MPoly> k(comps.size(), comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = 0; j < comps.size(); ++j) {
      MPoly e(1);
      for (int d : comps[j].descent_set()) e = e * al[i][static_cast<std::size_t>(d - 1)];
      k(i, j) = e;
    }
  return k;
}

Matrix<RatFunc> inverse_kostka(int n, ParamFamily f) {
  if (n < 1 || n > 6) throw ResourceLimit("inverse_kostka supports 1 <= n <= 6");
  auto comps = compositions_of(n);
  Matrix<RatFunc> inv(comps.size(), comps.size());
  for (std::size_t j = 0; j < comps.size(); ++j) {
    Alphabet al = alphabet(f, comps[j]);
    Alphabet co = coalphabet(f, comps[j]);
    std::vector<MPoly> den;
    for (std::size_t p = 0; p < al.size(); ++p) den.push_back(co[p] - al[p]);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      std::vector<MPoly> num{MPoly(comps[i].length() % 2 ? 1 : -1)};
      for (int d : omega_complement(comps[i]).descent_set()) num.push_back(co[static_cast<std::size_t>(d - 1)]);
      inv(i, j) = RatFunc::from_factors(num, den);
    }
  }
  return inv;
}

MPoly det_kostka_formula(int n) {
  MPoly out(1);
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i + j - 2),
                   static_cast<unsigned long>(i - 1));
      unsigned e = static_cast<unsigned>(binom.get_ui()) << (n - i - j);
      out = out * (MPoly(vars::q(i, j)) - MPoly(vars::t(i, j))).pow(e);
    }
  return out;
}

MPoly pairing_norm(ParamFamily f, const Composition& c) {
  Alphabet al = alphabet(f, c);
  Alphabet co = coalphabet(f, c);
  MPoly out(1);
  for (std::size_t k = 0; k < al.size(); ++k) out = out * (co[k] - al[k]);
  return out;
}

RatFunc product_coefficient(ParamFamily f, const Composition& i, const Composition& j,
                            const Composition& k) {
  if (k.size() != i.size() + j.size()) throw InvalidArgument("product_coefficient: size mismatch");
  Alphabet mid = alphabet(f, i);
  mid.push_back(MPoly(1));
  for (auto& z : alphabet(f, j)) mid.push_back(z);
  Alphabet al = alphabet(f, k);
  Alphabet co = coalphabet(f, k);
  std::vector<MPoly> num;
  std::vector<MPoly> den;
  for (std::size_t p = 0; p < al.size(); ++p) {
    num.push_back(co[p] - mid[p]);
    den.push_back(co[p] - al[p]);
  }
  return RatFunc::from_factors(num, den);
}

std::map<Composition, RatFunc> product_in_basis(ParamFamily f, const Composition& i,
                                                const Composition& j) {
  int n = i.size() + j.size();
  if (n > 6) throw ResourceLimit("product_in_basis supports |I| + |J| <= 6");
  std::map<Composition, RatFunc> out;
  if (i.empty() || j.empty()) {
    out.emplace(i.empty() ? j : i, RatFunc(1));
    return out;
  }
  for (const auto& k : compositions_of(n)) {
    RatFunc c = product_coefficient(f, i, j, k);
    if (!c.is_zero()) out.emplace(k, std::move(c));
  }
  return out;
}

bool in_product_interval(const Composition& i, const Composition& k) {
  std::string a = i.boolean_word();
  std::string b = k.boolean_word();
  return b.size() >= a.size() && b.compare(0, a.size(), a) == 0;
}

Substitution triangular_specialization(int n, Triangular which) {
  char last = which == Triangular::lower ? '1' : '0';
  Substitution s;
  all_words(n - 1, [&](const std::string& w) {
    if (w.back() == last) s[vars::y(w)] = MPoly(1);
    else s[vars::y(w)] = MPoly(vars::y(w));
  });
  return s;
}

Matrix<RatFunc> triangular_product(int n, Triangular which) {
  Substitution s = triangular_specialization(n, which);
  Matrix<RatFunc> k = kostka_matrix(n, ParamFamily::generic).map([](const MPoly& p) { return RatFunc(p); });
  Matrix<RatFunc> kp_inv = inverse_kostka(n, ParamFamily::generic).map([&](const RatFunc& r) {
    return specialize(r, s);
  });
  return multiply(k, kp_inv);
}

RatFunc triangular_entry(Triangular which, const Composition& i, const Composition& j) {
  if (i.size() != j.size()) throw InvalidArgument("triangular_entry: size mismatch");
  Substitution s = triangular_specialization(i.size(), which);
  Alphabet yi = y_alphabet(i);
  Alphabet al = y_alphabet(j);
  Alphabet co = y_coalphabet(j);
  std::vector<MPoly> num;
  std::vector<MPoly> den;
  for (std::size_t k = 0; k < yi.size(); ++k) {
    MPoly cop = specialize(co[k], s);
    num.push_back(yi[k] - cop);
    den.push_back(specialize(al[k], s) - cop);
  }
  return RatFunc::from_factors(num, den);
}

}  // namespace ncsf
