#pragma once

#include "klb/engine.hpp"
#include "klb/report.hpp"

namespace klb {

struct ConjectureOptions {
  // exhaustive quadruple sweep for P15 up to this group size, else sampling
  std::size_t p15_exhaustive_limit = 10;
  std::size_t p15_samples = 100000;
  std::uint64_t seed = 20260810;
};

// id in 1..15; exhaustive verification at the engine's rank (P15 sampled per
// the options once the group is too large for the quartic sweep)
CheckReport conjecture_check(const Engine& E, int id, const ConjectureOptions& opts = {});

std::vector<CheckReport> conjecture_check_all(const Engine& E,
                                              const ConjectureOptions& opts = {});

}  // namespace klb
