#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "unavoidable/budgets.hpp"
#include "unavoidable/certificates.hpp"
#include "unavoidable/error.hpp"
#include "unavoidable/graph.hpp"
#include "unavoidable/messy_ladder.hpp"

namespace unavoidable {

enum class BridgeKind { degenerate, proper };

/// A bridge of an induced path P. Attachments are positions on P, sorted.
struct Bridge {
  BridgeKind kind = BridgeKind::proper;
  VertexList interior;
  std::vector<int> attachments;

  [[nodiscard]] bool has_span() const { return !attachments.empty(); }
  [[nodiscard]] int first() const { return attachments.front(); }
  [[nodiscard]] int last() const { return attachments.back(); }
  /// Number of P-vertices from first() to last(); 0 without attachments.
  [[nodiscard]] std::size_t span_order() const {
    return attachments.empty() ? 0 : static_cast<std::size_t>(last() - first() + 1);
  }
};

/// Bridges of `path`, one per component of G - V(P), ordered by smallest
/// interior vertex. Throws std::invalid_argument if `path` is not an induced
/// path of `g`.
[[nodiscard]] std::vector<Bridge> compute_bridges(const Graph& g, const Path& path);

/// Indices into the bridge list; rank = bridges.size().
struct BridgeChain {
  std::vector<std::size_t> bridges;

  [[nodiscard]] std::size_t rank() const { return bridges.size(); }
};

struct WideBridge {
  std::size_t bridge = 0;
};

/// Positional chain condition: u_1 = 0, u_i < u_{i+1} < v_i, v_i <= u_{i+2}
/// and v_{k-1} < v_k <= last position.
[[nodiscard]] bool is_valid_chain(const std::vector<Bridge>& bridges, const BridgeChain& chain,
                                  std::size_t path_order);

struct BridgeSearchFailure {
  std::string reason;
  std::optional<std::size_t> widest;
  BridgeChain best_chain;
};

struct BridgeSearch {
  std::vector<Bridge> bridges;
  std::variant<WideBridge, BridgeChain, BridgeSearchFailure> outcome;
  bool guarantee_met = false;
};

/// A bridge whose span has order >= r - 1, or a chain of rank >= r - 2.
/// Throws std::invalid_argument if r < 4 or `path` is not induced.
[[nodiscard]] BridgeSearch find_chain_or_wide_bridge(const Graph& g, const Path& path, int r);

/// Throws std::invalid_argument when the outcome does not fit g and P (for
/// example a chain that violates the positional condition).
[[nodiscard]] MessyLadder build_messy_ladder(const Graph& g, const Path& path, const std::vector<Bridge>& bridges,
                                             const WideBridge& wide);
[[nodiscard]] MessyLadder build_messy_ladder(const Graph& g, const Path& path, const std::vector<Bridge>& bridges,
                                             const BridgeChain& chain);
[[nodiscard]] MessyLadder build_messy_ladder(const Graph& g, const Path& path, const BridgeSearch& search);

struct RamseyWitness {
  enum class Kind { clique, independent_set };
  Kind kind = Kind::clique;
  VertexList vertices;
};

/// Clique or independent set of size q among `candidates`, by the pivot
/// recursion. Guaranteed when |candidates| >= binom(2q-2, q-1).
[[nodiscard]] std::optional<RamseyWitness> ramsey_extract(const Graph& g, const VertexList& candidates, int q);
[[nodiscard]] std::optional<RamseyWitness> ramsey_extract(const Graph& g, int q);

struct CliqueWitness {
  VertexList vertices;
};

struct GrsOutcome {
  std::variant<CliqueWitness, ThetaPayload, Path, StageFailure> result;
  /// Longest induced path of G[V(P)] found, in host ids.
  Path best_path;
  bool guarantee_met = false;
};

/// Works in H = G[V(P)]: an induced path of order >= r, else a pair with
/// many common neighbors whose neighborhood holds K_p or an independent
/// p-set (giving K_{2,p}, or K_{2,p}^+ when the pair is adjacent).
[[nodiscard]] GrsOutcome grs_split(const Graph& g, const Path& path, int p, std::size_t r, const Budgets& budgets);

/// The pair-plus-Ramsey step of grs_split applied to the whole graph.
[[nodiscard]] std::optional<std::variant<CliqueWitness, ThetaPayload>> common_neighbor_split(const Graph& g, int p);

struct LongPathOutcome {
  /// Certificate kinds: clique, theta or theta_plus with parameter p.
  std::variant<Certificate, MessyLadder, StageFailure> result;
  bool guarantee_met = false;
  /// True when a returned ladder has order >= q.
  bool order_met = false;
  Path induced_path;
};

/// Default path: the deepest branch of the normal spanning tree rooted at 0.
[[nodiscard]] LongPathOutcome long_path_to_messy(const Graph& g, int p, std::size_t q,
                                                 const std::optional<Path>& path, const Budgets& budgets);

}  // namespace unavoidable
