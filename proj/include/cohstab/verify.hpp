#pragma once

// The genus-4 verification suite behind `cohstab verify`: every closed-form
// value of the degeneration at (3, 2), checked exactly, plus randomized
// property sweeps.

#include <cstdint>
#include <string>
#include <vector>

#include "cohstab/walls.hpp"

namespace cohstab {

struct VerifyOptions {
  std::int64_t moduli_r_max = 1000;
  SearchBounds scan{3, 3, Rational(2), Rational(10)};
  std::size_t property_cases = 10000;
  std::uint64_t seed = 0x5eed'c0de;
};

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;  // exact values that were compared
};

std::vector<CheckResult> run_verification_suite(const VerifyOptions& opts = {});

}  // namespace cohstab
