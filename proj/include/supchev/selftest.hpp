#pragma once

#include "supchev/textio.hpp"

namespace supchev {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SelftestOptions {
  std::uint64_t seed = 1;
  int ngens = 6; // SUPCHEV_NGENS
};

/// The acceptance suite: each criterion runs at its stated tolerance and
/// time limit and reports one line.
std::vector<CriterionResult> run_acceptance(const SelftestOptions& opts);

} // namespace supchev
