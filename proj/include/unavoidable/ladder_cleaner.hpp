#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "unavoidable/budgets.hpp"
#include "unavoidable/certificates.hpp"
#include "unavoidable/error.hpp"
#include "unavoidable/messy_ladder.hpp"

namespace unavoidable {

/// Rungs e, f with e_X < f_X and f_Y < e_Y. The X-span is X[e_X, f_X] and
/// the Y-span is Y[f_Y, e_Y].
struct Cross {
  Rung e;
  Rung f;

  [[nodiscard]] int x_lo() const { return e.x_pos; }
  [[nodiscard]] int x_hi() const { return f.x_pos; }
  [[nodiscard]] int y_lo() const { return f.y_pos; }
  [[nodiscard]] int y_hi() const { return e.y_pos; }
  [[nodiscard]] std::size_t x_span_order() const { return static_cast<std::size_t>(x_hi() - x_lo() + 1); }
  [[nodiscard]] std::size_t y_span_order() const { return static_cast<std::size_t>(y_hi() - y_lo() + 1); }
  [[nodiscard]] bool degenerate() const { return x_span_order() == 2 && y_span_order() == 2; }
  /// Span vertices other than the four rung ends.
  [[nodiscard]] std::size_t interior_count() const { return x_span_order() + y_span_order() - 4; }

  friend bool operator==(const Cross&, const Cross&) = default;
};

/// Ordered by (e_X, f_X, f_Y, e_Y).
[[nodiscard]] std::vector<Cross> find_crosses(const MessyLadder& ladder);
/// No other cross has spans containing both spans of `c`.
[[nodiscard]] bool is_full(const Cross& c, const std::vector<Cross>& all_crosses);
[[nodiscard]] bool is_full(const MessyLadder& ladder, const Cross& c);
[[nodiscard]] std::vector<Cross> full_crosses(const MessyLadder& ladder);
/// X-spans share at most one vertex and so do the Y-spans.
[[nodiscard]] bool are_independent(const Cross& a, const Cross& b);

struct CrossSequence {
  std::vector<Cross> crosses;
};

/// Greedy over full crosses sorted by (f_X, e_Y). Resolving a maximal
/// sequence does not always leave a clean ladder, so when the greedy one
/// fails, maximal sequences are enumerated in the same order (at most
/// `search_budget` nodes) and the first whose resolution is clean wins.
/// Falls back to the greedy sequence. Maximality is re-checked before
/// returning.
[[nodiscard]] CrossSequence maximal_cross_sequence(const MessyLadder& ladder, std::uint64_t search_budget = 1u << 16);
/// The plain greedy sequence, without the search.
[[nodiscard]] CrossSequence greedy_cross_sequence(const MessyLadder& ladder);
/// Every cross is degenerate.
[[nodiscard]] bool is_clean(const MessyLadder& ladder);
/// Pairwise independent, all full, and no full cross can be added.
[[nodiscard]] bool is_maximal_cross_sequence(const MessyLadder& ladder, const CrossSequence& seq);

/// Throws std::invalid_argument unless `c` is a full cross of `ladder`.
[[nodiscard]] MessyLadder resolve_cross(const MessyLadder& ladder, const Cross& c);
/// Resolves the crosses in sequence order. Each cross is found again in the
/// current ladder by its pair of rungs; throws std::invalid_argument if one
/// is no longer a full cross there.
[[nodiscard]] MessyLadder resolve_all(const MessyLadder& ladder, const CrossSequence& seq);

/// Greedy maximal non-crossing matching in (x_pos, y_pos) order, with sigma
/// and tau added. Sorted by (x_pos, y_pos).
[[nodiscard]] std::vector<Rung> augmented_matching(const MessyLadder& ladder);
/// Largest number of rail vertices between consecutive rungs of a sorted
/// matching, ends included, over both rails.
[[nodiscard]] std::size_t max_matching_gap(const std::vector<Rung>& matching);

/// Largest clean cycle of order >= r, rails in ladder labels.
[[nodiscard]] std::optional<Certificate> find_clean_cycle(const MessyLadder& ladder, int r);
/// Clean fan: an apex with at least s - 1 rung partners, rim running from
/// its first to its (s-1)-th partner. Labels as above.
[[nodiscard]] std::optional<Certificate> find_clean_fan(const MessyLadder& ladder, int s);

struct SubladderSearch {
  std::optional<MessyLadder> ladder;
  bool exhaustive = false;
  std::uint64_t windows = 0;
};

/// Sub-ladders cut out by two non-crossing rungs, examined by decreasing
/// order; the first cross-free one is returned. One window costs one unit.
[[nodiscard]] SubladderSearch largest_crossfree_subladder(const MessyLadder& ladder, std::uint64_t budget);

struct CleanLadderOutcome {
  enum class Route { cross_free_subladder, resolved };
  Route route = Route::resolved;
  MessyLadder ladder;
  std::size_t sequence_length = 0;
};

struct CleanResult {
  std::variant<StageFailure, CleanLadderOutcome> result;
  bool guarantee_met = false;
};

/// Throws std::invalid_argument if t < 3.
[[nodiscard]] CleanResult clean_messy_ladder(const MessyLadder& ladder, int t, const Budgets& budgets);

/// "cycle", "fan", "degenerate_rungs" or "general" for a clean ladder.
[[nodiscard]] std::string ladder_subtype(const MessyLadder& clean_ladder);

}  // namespace unavoidable
