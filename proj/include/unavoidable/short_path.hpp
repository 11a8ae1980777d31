#pragma once

#include <cstddef>
#include <variant>

#include "unavoidable/certificates.hpp"
#include "unavoidable/error.hpp"
#include "unavoidable/graph.hpp"

namespace unavoidable {

/// Either a (not necessarily induced) path of order at least q + 1, a theta
/// with at least r paths, or a failure when neither was found.
struct ShortPathOutcome {
  std::variant<Path, ThetaPayload, StageFailure> result;
  bool guarantee_met = false;

  [[nodiscard]] bool has_path() const { return std::holds_alternative<Path>(result); }
  [[nodiscard]] bool has_theta() const { return std::holds_alternative<ThetaPayload>(result); }
};

/// Throws PreconditionError if `g` is not 2-connected, std::invalid_argument
/// if q < 2 or r < 2. The spanning tree is rooted at `root`.
[[nodiscard]] ShortPathOutcome extract_short_path_structure(const Graph& g, std::size_t q, int r, Vertex root = 0);

}  // namespace unavoidable
