#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "unavoidable/budgets.hpp"
#include "unavoidable/certificates.hpp"
#include "unavoidable/graph.hpp"
#include "unavoidable/messy_ladder.hpp"
#include "unavoidable/pipeline.hpp"

namespace unavoidable {

struct FamilyResult {
  bool present = false;
  std::optional<Certificate> witness;
};

/// Exhaustive answers for K_r, thetas with r paths (u, v non-adjacent), the
/// same with u, v adjacent, and clean ladders of order >= r. Witnesses have
/// the smallest possible number of vertices.
struct OracleResult {
  int r = 0;
  FamilyResult clique, theta, theta_plus, clean_ladder;

  [[nodiscard]] bool any() const {
    return clique.present || theta.present || theta_plus.present || clean_ladder.present;
  }
  /// Throws std::invalid_argument for kinds outside the four families.
  [[nodiscard]] const FamilyResult& family(CertificateKind kind) const;
};

inline constexpr std::size_t kDefaultOracleCap = 10;
inline constexpr std::size_t kMaxOracleCap = 20;

/// Throws std::invalid_argument if the order exceeds `cap` or cap exceeds
/// kMaxOracleCap, or if r < 1.
[[nodiscard]] OracleResult brute_force_structures(const Graph& g, int r, std::size_t cap = kDefaultOracleCap);

[[nodiscard]] nlohmann::json to_json(const OracleResult& result);

/// A cycle of random length with random ears, plus random chords, then a
/// random relabelling. Throws std::invalid_argument if n < 3.
[[nodiscard]] Graph gen_two_connected(std::size_t n, std::uint64_t seed);

enum class LadderPattern {
  random,               // every non-sigma/tau position pair independently
  strip,                // triangulated zigzag with a few local extra rungs
  one_degenerate_cross,
  independent_crosses,  // `crosses` non-degenerate crosses in disjoint blocks
};

struct LadderParams {
  std::size_t len_x = 6;
  std::size_t len_y = 6;
  double rung_density = 0.2;
  LadderPattern pattern = LadderPattern::random;
  std::size_t crosses = 1;
  bool relabel = false;
};

/// The ladder's host is the ladder graph itself. For independent_crosses the
/// rail lengths are chosen by the generator. Throws std::invalid_argument on
/// inconsistent parameters.
[[nodiscard]] MessyLadder gen_messy_ladder(const LadderParams& params, std::uint64_t seed);

struct CorpusOptions {
  int r = 3;
  std::size_t cap = kDefaultOracleCap;
  unsigned workers = 1;
  bool run_pipeline = true;
  Budgets budgets;
};

struct CorpusRecord {
  std::size_t line = 0;
  std::string graph6;
  std::size_t order = 0;
  bool skipped = false;
  std::string note;
  OracleResult oracle;
  std::optional<ExtractionReport> pipeline;
  /// The oracle found none of the four structures, or the pipeline found one.
  bool agreement = true;
  /// The pipeline's certificate verified and its family is one the oracle
  /// reports present.
  bool contained = true;
};

struct CorpusSummary {
  std::size_t graphs = 0;
  std::size_t skipped = 0;
  std::size_t with_structure = 0;
  std::size_t pipeline_found = 0;
  std::size_t agreements = 0;
  std::size_t containment_failures = 0;
  /// Per order: (graphs, graphs with a structure).
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> by_order;
  /// Smallest m such that every graph of order >= m has a structure.
  std::optional<std::size_t> minimal_order;
};

[[nodiscard]] nlohmann::json to_json(const CorpusRecord& record);
[[nodiscard]] nlohmann::json to_json(const CorpusSummary& summary);

/// Streams the graph6 corpus in blocks processed by `workers` threads;
/// `sink` sees the records in input order. Graphs that are not 2-connected
/// are skipped with a note. Throws FormatError on malformed lines.
CorpusSummary verify_theorem_on_corpus(std::istream& corpus, const CorpusOptions& options,
                                       const std::function<void(const CorpusRecord&)>& sink = {});

}  // namespace unavoidable
