// One line per criterion: "criterion k: PASS|FAIL title", then the checks.
#include <cstdlib>
#include <iostream>

#include "ncsf/suites.hpp"

int main() {
  std::cout << std::unitbuf;
  std::uint64_t seed = ncsf::kDefaultSeed;
  if (const char* env = std::getenv("NCSF_SEED")) seed = std::strtoull(env, nullptr, 10);
  int failed = 0;
  for (int k = 1; k <= ncsf::kCriterionCount; ++k) {
    ncsf::Report r = ncsf::acceptance_criterion(k, seed);
    bool ok = r.passed();
    if (!ok) ++failed;
    std::cout << "criterion " << k << ": " << (ok ? "PASS" : "FAIL") << "  " << ncsf::criterion_title(k) << "\n";
    for (const auto& c : r.checks())
      std::cout << "    [" << (c.ok ? "ok" : "FAIL") << "] " << c.name
                << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    for (const auto& d : r.discrepancies())
      std::cout << "    [discrepancy] " << d.name << (d.detail.empty() ? "" : "  (" + d.detail + ")") << "\n";
    for (const auto& w : r.witnesses())
      std::cout << "    witness " << w.identity << ": " << w.lhs << "  vs  " << w.rhs << "\n";
    for (const auto& n : r.notes()) std::cout << "    note: " << n << "\n";
  }
  std::cout << (ncsf::kCriterionCount - failed) << "/" << ncsf::kCriterionCount << " criteria pass\n";
  return failed ? 1 : 0;
}
