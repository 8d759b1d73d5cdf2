#include "ncsf/sampling.hpp"

#include <set>

namespace ncsf {
namespace {

Rational value_from(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 97);
  std::uniform_int_distribution<int> den(1, 11);
  std::bernoulli_distribution neg(0.5);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return neg(rng) ? Rational(-r) : r;
}

}  // namespace

Rational PointSampler::value() { return value_from(rng_); }

Point PointSampler::sample(const std::vector<Var>& vars) {
  Point p;
  for (Var v : vars) p[v] = value();
  return p;
}

std::vector<Var> collect_variables(const std::vector<MPoly>& polys) {
  std::set<Var> seen;
  for (const auto& p : polys)
    for (Var v : p.variables()) seen.insert(v);
  return {seen.begin(), seen.end()};
}

}  // namespace ncsf
