#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncsf/errors.hpp"
#include "ncsf/grassmann.hpp"
#include "ncsf/parambases.hpp"
#include "ncsf/quasidet.hpp"
#include "ncsf/suites.hpp"

using namespace ncsf;
using json = nlohmann::ordered_json;

namespace {

struct Shared {
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  std::string out;
};

struct Term {
  std::string label;
  std::string value;
};

// Expansion-like output: a list of (label, value) with header fields.
std::string render_terms(Format f, const json& header, const std::string& label_key,
                         const std::vector<Term>& terms) {
  if (f == Format::json) {
    json j = header;
    j["terms"] = json::array();
    for (const auto& t : terms) j["terms"].push_back({{label_key, t.label}, {"coefficient", t.value}});
    return j.dump(2) + "\n";
  }
  std::string out;
  if (f == Format::csv) {
    out = label_key + ",coefficient\n";
    for (const auto& t : terms) out += csv_field(t.label) + "," + csv_field(t.value) + "\n";
    return out;
  }
  out = "% " + header.dump() + "\n\\begin{align*}\n";
  for (std::size_t i = 0; i < terms.size(); ++i)
    out += (i ? "&+ " : "&") + std::string("\\left(") + latex_poly(terms[i].value) + "\\right) " +
           label_key.substr(0, 1) + "_{" + terms[i].label + "}" + (i + 1 < terms.size() ? " \\\\\n" : "\n");
  return out + "\\end{align*}\n";
}

template <class C>
std::vector<Term> ribbon_terms(const Grassmann<C>& g) {
  std::vector<Term> t;
  for (const auto& c : compositions_of(g.degree())) {
    const C& v = g.coefficient(c);
    if (!is_zero(v)) t.push_back({c.to_string(), render(v)});
  }
  return t;
}

std::string kostka_output(int n, ParamFamily fam, bool inverse, Format f) {
  auto comps = compositions_of(n);
  std::vector<std::vector<std::string>> cells;
  if (inverse) {
    Matrix<RatFunc> m = inverse_kostka(n, fam);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      cells.emplace_back();
      for (std::size_t j = 0; j < m.cols(); ++j) cells.back().push_back(m(i, j).to_string());
    }
  } else {
    Matrix<MPoly> m = kostka_matrix(n, fam);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      cells.emplace_back();
      for (std::size_t j = 0; j < m.cols(); ++j) cells.back().push_back(m(i, j).to_string());
    }
  }
  if (f == Format::json) {
    json j;
    j["n"] = n;
    j["family"] = family_name(fam);
    j["inverse"] = inverse;
    j["order"] = json::array();
    for (const auto& c : comps) j["order"].push_back(c.to_string());
    j["entries"] = cells;
    return j.dump(2) + "\n";
  }
  std::string out;
  if (f == Format::csv) {
    for (const auto& row : cells) {
      for (std::size_t j = 0; j < row.size(); ++j) out += (j ? "," : "") + csv_field(row[j]);
      out += "\n";
    }
    return out;
  }
  out = "\\left(\\begin{array}{" + std::string(comps.size(), 'c') + "}\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells[i].size(); ++j) out += (j ? " & " : "") + latex_poly(cells[i][j]);
    out += i + 1 < cells.size() ? "\\\\\n" : "\n";
  }
  return out + "\\end{array}\\right)\n";
}

Grassmann<MPoly> expand_basis(const std::string& basis, const std::string& family, const Composition& c) {
  if (basis == "P" || basis == "Q") {
    ParamFamily f = parse_family(family);
    return basis == "P" ? basis_P(f, c) : basis_Q(f, c);
  }
  return classical_image(parse_classical_basis(basis), c);
}

void emit(const Shared& s, const std::string& text) {
  if (s.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(s.out);
  if (!f) throw InvalidArgument("cannot open " + s.out);
  f << text;
}

void add_shared(CLI::App* sub, Shared& s) {
  sub->add_option("--format", s.format, "json, csv or latex")
      ->check(CLI::IsMember({"json", "csv", "latex"}));
  sub->add_option("--seed", s.seed, "seed for random-point checks")->envname("NCSF_SEED");
  sub->add_option("--out", s.out, "write output to FILE");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ncsf: multiparameter bases of noncommutative symmetric functions"};
  app.require_subcommand(1);
  Shared s;
  int rc = 0;

  auto* kostka = app.add_subcommand("kostka", "Kostka matrix P_I -> R_J");
  int kn = 3;
  std::string kfam = "generic";
  bool kinv = false;
  kostka->add_option("--n", kn)->required();
  kostka->add_option("--family", kfam)->check(CLI::IsMember({"generic", "qt", "bz", "hlt"}));
  kostka->add_flag("--inverse", kinv);
  add_shared(kostka, s);

  auto* expand = app.add_subcommand("expand", "ribbon expansion of a basis element");
  std::string ebasis = "P", efam = "generic", ecomp;
  expand->add_option("--basis", ebasis, "P, Q, S, Lambda, R, Psi, Phi, Klyachko, HivertHL");
  expand->add_option("--family", efam)->check(CLI::IsMember({"generic", "qt", "bz", "hlt"}));
  expand->add_option("--composition", ecomp)->required();
  add_shared(expand, s);

  auto* product = app.add_subcommand("product", "P_I P_J in the P basis");
  std::string pfam = "generic", pl, pr;
  product->add_option("--family", pfam)->check(CLI::IsMember({"generic", "qt", "bz", "hlt"}));
  product->add_option("--left", pl)->required();
  product->add_option("--right", pr)->required();
  add_shared(product, s);

  auto* nabla = app.add_subcommand("nabla", "nabla Lambda_n or nabla R_I against the closed forms");
  int nn = 3;
  std::vector<std::string> ninput{"lambda"};
  std::string ncheck = "nablam";
  nabla->add_option("--n", nn)->required();
  nabla->add_option("--input", ninput, "lambda | ribbon I")->expected(1, 2);
  nabla->add_option("--check", ncheck)->check(CLI::IsMember({"nablam", "nablaRI"}));
  add_shared(nabla, s);

  auto* quasi = app.add_subcommand("quasidet", "quasideterminant H_I(U,V)");
  int qn = 3;
  std::string qfam = "ribbon", qcomp, qbasis = "R";
  quasi->add_option("--n", qn)->required();
  quasi->add_option("--family", qfam)->check(CLI::IsMember({"ribbon", "factoring"}));
  quasi->add_option("--composition", qcomp)->required();
  quasi->add_option("--basis", qbasis)->check(CLI::IsMember({"S", "R"}));
  add_shared(quasi, s);

  auto* hookc = app.add_subcommand("hookcheck", "commutative image of H'_{n-k,1^k}");
  int hn = 3, hk = 1;
  std::string hmode = "macdonald";
  hookc->add_option("--n", hn)->required();
  hookc->add_option("--k", hk)->required();
  hookc->add_option("--mode", hmode)->check(CLI::IsMember({"macdonald", "transform", "transform-q"}));
  add_shared(hookc, s);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string vsuite = "all";
  int vmax = 4;
  int vcrit = 0;
  bool vtiming = false;
  verify->add_flag("--timing", vtiming, "include wall-clock seconds (output no longer reproducible)");
  verify->add_option("--suite", vsuite, "module name or all");
  verify->add_option("--max-n", vmax);
  verify->add_option("--criterion", vcrit, "acceptance criterion 1..10 instead of a suite");
  add_shared(verify, s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Format f = parse_format(s.format);
    if (kostka->parsed()) {
      emit(s, kostka_output(kn, parse_family(kfam), kinv, f));
    } else if (expand->parsed()) {
      Composition c = Composition::parse(ecomp);
      json h{{"basis", ebasis}, {"composition", c.to_string()}};
      if (ebasis == "P" || ebasis == "Q") h["family"] = efam;
      emit(s, render_terms(f, h, "ribbon", ribbon_terms(expand_basis(ebasis, efam, c))));
    } else if (product->parsed()) {
      Composition i = Composition::parse(pl), j = Composition::parse(pr);
      auto coeffs = product_in_basis(parse_family(pfam), i, j);
      std::vector<Term> terms;
      for (const auto& k : compositions_of(i.size() + j.size())) {
        auto it = coeffs.find(k);
        if (it != coeffs.end()) terms.push_back({k.to_string(), it->second.to_string()});
      }
      json h{{"family", pfam}, {"left", i.to_string()}, {"right", j.to_string()}};
      emit(s, render_terms(f, h, "P", terms));
    } else if (nabla->parsed()) {
      std::optional<Composition> ribbon;
      if (ninput[0] == "ribbon") {
        if (ninput.size() != 2) throw InvalidArgument("--input ribbon needs a composition");
        ribbon = Composition::parse(ninput[1]);
      } else if (ninput[0] != "lambda" || ninput.size() != 1) {
        throw InvalidArgument("--input must be 'lambda' or 'ribbon I'");
      }
      if (ncheck == "nablaRI" && !ribbon)
        ribbon = Composition(std::vector<int>(static_cast<std::size_t>(nn), 1));
      Report r = nabla_report(nn, ribbon, ncheck == "nablaRI");
      emit(s, r.render(f));
      rc = r.passed() ? 0 : 1;
    } else if (quasi->parsed()) {
      Composition c = Composition::parse(qcomp);
      if (c.size() != qn) throw InvalidArgument("composition size differs from --n");
      auto spec = qfam == "ribbon" ? ribbon_pair(qn) : factoring_family(qn);
      json h{{"n", qn}, {"family", qfam}, {"composition", c.to_string()}, {"basis", qbasis}};
      std::vector<Term> terms;
      if (qbasis == "R") {
        terms = ribbon_terms(r_expansion(spec, c));
      } else {
        auto se = s_expansion(spec, c);
        for (const auto& k : compositions_of(qn)) {
          auto it = se.find(k);
          if (it != se.end() && !it->second.is_zero()) terms.push_back({k.to_string(), it->second.to_string()});
        }
      }
      emit(s, render_terms(f, h, qbasis, terms));
    } else if (hookc->parsed()) {
      if (hk < 0 || hk >= hn) throw InvalidArgument("need 0 <= k < n");
      Report r = hook_report(hn, hk, parse_hook_mode(hmode));
      emit(s, r.render(f));
      rc = r.passed() ? 0 : 1;
    } else if (verify->parsed()) {
      auto t0 = std::chrono::steady_clock::now();
      Report r = vcrit ? acceptance_criterion(vcrit, s.seed) : run_suite(vsuite, {vmax, s.seed});
      if (vtiming)
        r.set_timing(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      emit(s, r.render(f));
      rc = r.passed() ? 0 : 1;
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
