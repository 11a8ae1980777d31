#pragma once

#include <cstdint>

#include "unavoidable/graph.hpp"
#include "unavoidable/thresholds.hpp"

namespace unavoidable {

/// Deterministic work limits for the exponential searches, plus the
/// threshold configuration used to decide whether a guarantee applies.
struct Budgets {
  std::uint64_t induced_path = 200'000;  // vertices pushed by longest_induced_path
  std::uint64_t subladder_windows = 1'000'000;
  ThresholdConfig thresholds;
};

}  // namespace unavoidable
