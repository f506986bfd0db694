#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hypercurv/hypersurface.hpp"
#include "hypercurv/sl_theorem.hpp"

namespace hypercurv::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

inline constexpr double kDefaultTolerance = 1e-8;
inline constexpr std::uint64_t kDefaultSeed = 42;

struct Check {
  std::string name;
  double residual;
  bool passed;
};

struct VerifyResult {
  std::size_t n;
  double tolerance;
  std::uint64_t seed;
  std::vector<Check> checks;
  SLCurvatureSummary summary;
  CurvatureReport identity_report;

  bool passed() const;
};

/// Cross-checks the numeric engine against the closed forms for SL(n) at
/// the identity, at random points and at special-orthogonal points.
/// Requires 2 ≤ n ≤ 5 and tolerance > 0.
VerifyResult verify_sl(std::size_t n, double tolerance, std::uint64_t seed);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypercurv::cli
