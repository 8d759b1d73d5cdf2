#pragma once

// Verification suites, one per module, and the ten acceptance criteria.
// Literal claims that fail while a corrected form verifies are recorded as
// discrepancies; everything else is a pass/fail check.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncsf/comsym.hpp"
#include "ncsf/composition.hpp"
#include "ncsf/report.hpp"
#include "ncsf/sampling.hpp"

namespace ncsf {

struct SuiteOptions {
  int max_n = 4;
  std::uint64_t seed = kDefaultSeed;
};

/// compositions, polyring, grassmann, parambases, nabla, quasidet, comsym.
const std::vector<std::string>& suite_names();

/// One module suite, or "all" for every suite merged.  Throws
/// InvalidArgument for an unknown name.
Report run_suite(const std::string& name, const SuiteOptions& opts);

inline constexpr int kCriterionCount = 10;

std::string criterion_title(int k);
/// Criterion k at its stated bounds.  Criterion status is fail whenever the
/// literal statement fails, even if a corrected form is verified alongside.
Report acceptance_criterion(int k, std::uint64_t seed = kDefaultSeed);

/// nabla Lambda_n (ribbon empty) or nabla R_I.  nablaRI selects the
/// packed-word theorem; otherwise the closed forms.
Report nabla_report(int n, const std::optional<Composition>& ribbon, bool nablaRI);

/// Commutative image of H'_{n-k,1^k} against its reference, n <= 5.
Report hook_report(int n, int k, HookMode mode);

}  // namespace ncsf
