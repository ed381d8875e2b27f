#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zf/calibration.hpp"
#include "zf/config.hpp"
#include "zf/zeros.hpp"

namespace zf {

struct Check {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double tol = 0.0;
  bool pass = false;
  bool informational = false;  // recorded, never fails the suite
  std::string note;
};

struct VerifyReport {
  std::vector<Check> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass && !c.informational) return false;
    return true;
  }
};

// Shared lazily-built state for the suites.
struct VerifyContext {
  RunConfig cfg;
  std::optional<ZeroTable> zeros;
  std::optional<CalibrationResult> calib;

  const ZeroTable& need_zeros();
  const CalibrationResult& need_calib();
};

// suite: orthonormality | theorem11 | theorem12 | theorem31 | parseval |
//        fejer | all
VerifyReport verify_suite(const std::string& suite, VerifyContext& ctx);

}  // namespace zf
