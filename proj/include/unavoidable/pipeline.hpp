#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "unavoidable/budgets.hpp"
#include "unavoidable/certificates.hpp"
#include "unavoidable/graph.hpp"

namespace unavoidable {

struct TraceEntry {
  std::string stage;
  std::string outcome;
  std::size_t input_size = 0;
  std::size_t output_size = 0;
};

struct ExtractionReport {
  /// Kind is clique, theta, theta_plus or clean_ladder; always verified.
  std::optional<Certificate> certificate;
  std::vector<TraceEntry> trace;
  /// The input order reached the composed threshold f_main(r).
  bool guarantee_met = false;
  /// For clean ladders: cycle, fan, degenerate_rungs or general.
  std::optional<std::string> ladder_subtype;
};

/// Throws PreconditionError if `g` is not 2-connected and
/// std::invalid_argument if r < 3. Certificates that fail verification
/// raise std::logic_error; they are never returned.
[[nodiscard]] ExtractionReport extract_unavoidable(const Graph& g, int r, const Budgets& budgets = {});

[[nodiscard]] nlohmann::json to_json(const ExtractionReport& report);

}  // namespace unavoidable
