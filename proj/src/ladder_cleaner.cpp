#include "unavoidable/ladder_cleaner.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "unavoidable/thresholds.hpp"

namespace unavoidable {

std::vector<Cross> find_crosses(const MessyLadder& ladder) {
  std::vector<Cross> out;
  const auto& rungs = ladder.rungs();
  for (const Rung& e : rungs) {
    for (const Rung& f : rungs) {
      if (e.x_pos < f.x_pos && f.y_pos < e.y_pos) out.push_back({e, f});
    }
  }
  return out;
}

bool is_full(const Cross& c, const std::vector<Cross>& all_crosses) {
  for (const Cross& d : all_crosses) {
    if (d == c) continue;
    if (d.x_lo() <= c.x_lo() && c.x_hi() <= d.x_hi() && d.y_lo() <= c.y_lo() && c.y_hi() <= d.y_hi()) return false;
  }
  return true;
}

bool is_full(const MessyLadder& ladder, const Cross& c) {
  const auto all = find_crosses(ladder);
  if (std::find(all.begin(), all.end(), c) == all.end()) return false;
  return is_full(c, all);
}

std::vector<Cross> full_crosses(const MessyLadder& ladder) {
  const auto all = find_crosses(ladder);
  std::vector<Cross> out;
  for (const Cross& c : all) {
    if (is_full(c, all)) out.push_back(c);
  }
  return out;
}

bool are_independent(const Cross& a, const Cross& b) {
  return std::max(a.x_lo(), b.x_lo()) >= std::min(a.x_hi(), b.x_hi()) &&
         std::max(a.y_lo(), b.y_lo()) >= std::min(a.y_hi(), b.y_hi());
}

namespace {

std::vector<Cross> sorted_full_crosses(const MessyLadder& ladder) {
  auto full = full_crosses(ladder);
  std::stable_sort(full.begin(), full.end(), [](const Cross& a, const Cross& b) {
    return std::make_tuple(a.x_hi(), a.y_hi(), a.x_lo(), a.y_lo()) <
           std::make_tuple(b.x_hi(), b.y_hi(), b.x_lo(), b.y_lo());
  });
  return full;
}

}  // namespace

CrossSequence greedy_cross_sequence(const MessyLadder& ladder) {
  CrossSequence seq;
  for (const Cross& c : sorted_full_crosses(ladder)) {
    bool ok = std::all_of(seq.crosses.begin(), seq.crosses.end(),
                          [&](const Cross& d) { return are_independent(c, d); });
    if (ok) seq.crosses.push_back(c);
  }
  return seq;
}

bool is_clean(const MessyLadder& ladder) {
  const auto all = find_crosses(ladder);
  return std::all_of(all.begin(), all.end(), [](const Cross& c) { return c.degenerate(); });
}

namespace {

bool resolves_clean(const MessyLadder& ladder, const CrossSequence& seq) {
  try {
    return is_clean(resolve_all(ladder, seq));
  } catch (const std::invalid_argument&) {
    return false;
  }
}

class SequenceSearch {
 public:
  SequenceSearch(const MessyLadder& ladder, std::uint64_t budget)
      : ladder_(ladder), full_(sorted_full_crosses(ladder)), budget_(budget) {}

  std::optional<CrossSequence> run() {
    std::vector<std::size_t> chosen;
    if (walk(0, chosen)) return found_;
    return std::nullopt;
  }

 private:
  bool independent_of(std::size_t i, const std::vector<std::size_t>& chosen) const {
    return std::all_of(chosen.begin(), chosen.end(),
                       [&](std::size_t j) { return are_independent(full_[i], full_[j]); });
  }

  bool walk(std::size_t i, std::vector<std::size_t>& chosen) {
    if (budget_ == 0) return false;
    --budget_;
    if (i == full_.size()) {
      for (std::size_t k = 0; k < full_.size(); ++k) {
        if (std::find(chosen.begin(), chosen.end(), k) == chosen.end() && independent_of(k, chosen)) return false;
      }
      CrossSequence seq;
      for (std::size_t k : chosen) seq.crosses.push_back(full_[k]);
      if (!resolves_clean(ladder_, seq)) return false;
      found_ = std::move(seq);
      return true;
    }
    if (independent_of(i, chosen)) {
      chosen.push_back(i);
      if (walk(i + 1, chosen)) return true;
      chosen.pop_back();
      // Leaving full_[i] out only pays off if a later pick blocks it.
      bool blockable = false;
      for (std::size_t k = i + 1; k < full_.size() && !blockable; ++k) {
        blockable = !are_independent(full_[i], full_[k]) && independent_of(k, chosen);
      }
      if (!blockable) return false;
    }
    return walk(i + 1, chosen);
  }

  const MessyLadder& ladder_;
  std::vector<Cross> full_;
  std::uint64_t budget_;
  CrossSequence found_;
};

}  // namespace

CrossSequence maximal_cross_sequence(const MessyLadder& ladder, std::uint64_t search_budget) {
  CrossSequence seq = greedy_cross_sequence(ladder);
  if (!resolves_clean(ladder, seq)) {
    if (auto better = SequenceSearch(ladder, search_budget).run()) seq = std::move(*better);
  }
  if (!is_maximal_cross_sequence(ladder, seq)) throw std::logic_error("cross sequence is not maximal");
  return seq;
}

bool is_maximal_cross_sequence(const MessyLadder& ladder, const CrossSequence& seq) {
  const auto all = find_crosses(ladder);
  for (std::size_t i = 0; i < seq.crosses.size(); ++i) {
    const Cross& c = seq.crosses[i];
    if (std::find(all.begin(), all.end(), c) == all.end() || !is_full(c, all)) return false;
    for (std::size_t j = i + 1; j < seq.crosses.size(); ++j) {
      if (!are_independent(c, seq.crosses[j]) || c == seq.crosses[j]) return false;
    }
  }
  for (const Cross& c : all) {
    if (!is_full(c, all)) continue;
    if (std::find(seq.crosses.begin(), seq.crosses.end(), c) != seq.crosses.end()) continue;
    bool addable = std::all_of(seq.crosses.begin(), seq.crosses.end(),
                               [&](const Cross& d) { return are_independent(c, d); });
    if (addable) return false;
  }
  return true;
}

MessyLadder resolve_cross(const MessyLadder& ladder, const Cross& c) {
  if (!is_full(ladder, c)) throw std::invalid_argument("cross is not a full cross of the ladder");
  const auto& x = ladder.rail_x();
  const auto& y = ladder.rail_y();
  VertexList new_x(x.begin(), x.begin() + c.e.x_pos + 1);
  new_x.insert(new_x.end(), y.begin() + c.e.y_pos, y.end());
  VertexList new_y(y.begin(), y.begin() + c.f.y_pos + 1);
  new_y.insert(new_y.end(), x.begin() + c.f.x_pos, x.end());
  return ladder.sub_ladder(new_x, new_y);
}

namespace {

struct RungLabels {
  Vertex a, b;  // labels of the two ends, unordered
};

// Finds the rung of `ladder` joining the two labelled vertices.
std::optional<Rung> rung_by_labels(const MessyLadder& ladder, const RungLabels& r) {
  auto la = ladder.local_of(r.a);
  auto lb = ladder.local_of(r.b);
  if (!la || !lb) return std::nullopt;
  Vertex xv = *la, yv = *lb;
  if (ladder.pos_x(xv) < 0) std::swap(xv, yv);
  if (ladder.pos_x(xv) < 0 || ladder.pos_y(yv) < 0 || !ladder.graph().adjacent(xv, yv)) return std::nullopt;
  return Rung{xv, yv, ladder.pos_x(xv), ladder.pos_y(yv)};
}

}  // namespace

MessyLadder resolve_all(const MessyLadder& ladder, const CrossSequence& seq) {
  std::vector<std::pair<RungLabels, RungLabels>> ids;
  for (const Cross& c : seq.crosses) {
    ids.push_back({{ladder.label(c.e.x_end), ladder.label(c.e.y_end)},
                   {ladder.label(c.f.x_end), ladder.label(c.f.y_end)}});
  }
  MessyLadder current = ladder;
  for (const auto& [first, second] : ids) {
    auto a = rung_by_labels(current, first);
    auto b = rung_by_labels(current, second);
    if (!a || !b) throw std::invalid_argument("stale cross sequence: rung missing after earlier resolutions");
    Cross c{*a, *b};
    if (!(c.e.x_pos < c.f.x_pos && c.f.y_pos < c.e.y_pos)) c = Cross{*b, *a};
    if (!(c.e.x_pos < c.f.x_pos && c.f.y_pos < c.e.y_pos)) {
      throw std::invalid_argument("stale cross sequence: rungs no longer cross");
    }
    if (!is_full(current, c)) throw std::invalid_argument("stale cross sequence: cross no longer full");
    current = resolve_cross(current, c);
  }
  return current;
}

std::vector<Rung> augmented_matching(const MessyLadder& ladder) {
  std::vector<Rung> chosen;
  std::vector<char> used(ladder.order(), 0);
  for (const Rung& r : ladder.rungs()) {
    if (r == ladder.sigma() || r == ladder.tau() || used[r.x_end] || used[r.y_end]) continue;
    bool crosses = std::any_of(chosen.begin(), chosen.end(), [&](const Rung& m) {
      return (m.x_pos < r.x_pos && r.y_pos < m.y_pos) || (r.x_pos < m.x_pos && m.y_pos < r.y_pos);
    });
    if (crosses) continue;
    chosen.push_back(r);
    used[r.x_end] = used[r.y_end] = 1;
  }
  for (const Rung& extra : {ladder.sigma(), ladder.tau()}) {
    if (std::find(chosen.begin(), chosen.end(), extra) == chosen.end()) chosen.push_back(extra);
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const Rung& a, const Rung& b) { return std::tie(a.x_pos, a.y_pos) < std::tie(b.x_pos, b.y_pos); });
  return chosen;
}

std::size_t max_matching_gap(const std::vector<Rung>& matching) {
  std::size_t gap = 0;
  for (std::size_t i = 0; i + 1 < matching.size(); ++i) {
    const Rung& a = matching[i];
    const Rung& b = matching[i + 1];
    gap = std::max<std::size_t>(gap, static_cast<std::size_t>(std::abs(b.x_pos - a.x_pos) + 1));
    gap = std::max<std::size_t>(gap, static_cast<std::size_t>(std::abs(b.y_pos - a.y_pos) + 1));
  }
  return gap;
}

namespace {

// Prefix sums over the rung grid: count of rungs with x <= i and y <= j.
class RungGrid {
 public:
  explicit RungGrid(const MessyLadder& ladder)
      : w_(ladder.rail_x().size()), h_(ladder.rail_y().size()), sum_((w_ + 1) * (h_ + 1), 0) {
    for (const Rung& r : ladder.rungs()) ++at(r.x_pos + 1, r.y_pos + 1);
    for (std::size_t i = 1; i <= w_; ++i) {
      for (std::size_t j = 1; j <= h_; ++j) at(i, j) += at(i - 1, j) + at(i, j - 1) - at(i - 1, j - 1);
    }
  }
  // Rungs with x in [x0, x1] and y in [y0, y1].
  [[nodiscard]] int count(int x0, int x1, int y0, int y1) const {
    return get(x1 + 1, y1 + 1) - get(x0, y1 + 1) - get(x1 + 1, y0) + get(x0, y0);
  }

 private:
  int& at(std::size_t i, std::size_t j) { return sum_[i * (h_ + 1) + j]; }
  [[nodiscard]] int get(std::size_t i, std::size_t j) const { return sum_[i * (h_ + 1) + j]; }
  std::size_t w_, h_;
  std::vector<int> sum_;
};

VertexList labelled_segment(const MessyLadder& ladder, const VertexList& rail, int from, int to) {
  VertexList out;
  for (int i = from; i <= to; ++i) out.push_back(ladder.label(rail[i]));
  return out;
}

}  // namespace

std::optional<Certificate> find_clean_cycle(const MessyLadder& ladder, int r) {
  const RungGrid grid(ladder);
  const auto& rungs = ladder.rungs();
  std::optional<std::pair<Rung, Rung>> best;
  int best_order = 0;
  for (std::size_t i = 0; i < rungs.size(); ++i) {
    for (std::size_t j = i + 1; j < rungs.size(); ++j) {
      const Rung& e = rungs[i];
      const Rung& f = rungs[j];
      if (!(e.x_pos <= f.x_pos && e.y_pos <= f.y_pos)) continue;
      const int order = (f.x_pos - e.x_pos + 1) + (f.y_pos - e.y_pos + 1);
      if (order < std::max(r, 3) || order <= best_order) continue;
      if (grid.count(e.x_pos, f.x_pos, e.y_pos, f.y_pos) != 2) continue;
      best = {e, f};
      best_order = order;
    }
  }
  if (!best) return std::nullopt;
  const auto& [e, f] = *best;
  return make_ladder_certificate(CertificateKind::clean_cycle, labelled_segment(ladder, ladder.rail_x(), e.x_pos, f.x_pos),
                                 labelled_segment(ladder, ladder.rail_y(), e.y_pos, f.y_pos), r);
}

std::optional<Certificate> find_clean_fan(const MessyLadder& ladder, int s) {
  if (s < 3) return std::nullopt;
  const std::size_t need = static_cast<std::size_t>(s - 1);
  for (int side = 0; side < 2; ++side) {
    const VertexList& apex_rail = side == 0 ? ladder.rail_x() : ladder.rail_y();
    const VertexList& rim_rail = side == 0 ? ladder.rail_y() : ladder.rail_x();
    auto rim_pos = [&](Vertex v) { return side == 0 ? ladder.pos_y(v) : ladder.pos_x(v); };
    for (Vertex apex : apex_rail) {
      std::vector<int> partners;
      for (Vertex w : ladder.graph().neighbors(apex)) {
        if (rim_pos(w) >= 0) partners.push_back(rim_pos(w));
      }
      if (partners.size() < need) continue;
      std::sort(partners.begin(), partners.end());
      return make_fan_certificate(ladder.label(apex), labelled_segment(ladder, rim_rail, partners[0], partners[need - 1]),
                                  s);
    }
  }
  return std::nullopt;
}

SubladderSearch largest_crossfree_subladder(const MessyLadder& ladder, std::uint64_t budget) {
  SubladderSearch out;
  const auto& rungs = ladder.rungs();
  const auto crosses = find_crosses(ladder);
  struct Window {
    int order;
    std::size_t a, b;
  };
  std::vector<Window> windows;
  for (std::size_t i = 0; i < rungs.size(); ++i) {
    for (std::size_t j = i + 1; j < rungs.size(); ++j) {
      const Rung& a = rungs[i];
      const Rung& b = rungs[j];
      if (a.x_pos <= b.x_pos && a.y_pos <= b.y_pos) {
        windows.push_back({(b.x_pos - a.x_pos + 1) + (b.y_pos - a.y_pos + 1), i, j});
      }
    }
  }
  std::stable_sort(windows.begin(), windows.end(), [](const Window& p, const Window& q) { return p.order > q.order; });
  for (const Window& w : windows) {
    if (out.windows >= budget) return out;
    ++out.windows;
    const Rung& a = rungs[w.a];
    const Rung& b = rungs[w.b];
    bool clean = std::none_of(crosses.begin(), crosses.end(), [&](const Cross& c) {
      return a.x_pos <= c.x_lo() && c.x_hi() <= b.x_pos && a.y_pos <= c.y_lo() && c.y_hi() <= b.y_pos;
    });
    if (!clean) continue;
    const auto& x = ladder.rail_x();
    const auto& y = ladder.rail_y();
    VertexList sx(x.begin() + a.x_pos, x.begin() + b.x_pos + 1);
    VertexList sy(y.begin() + a.y_pos, y.begin() + b.y_pos + 1);
    out.ladder = ladder.sub_ladder(sx, sy);
    out.exhaustive = true;
    return out;
  }
  out.exhaustive = true;
  return out;
}

CleanResult clean_messy_ladder(const MessyLadder& ladder, int t, const Budgets& budgets) {
  if (t < 3) throw std::invalid_argument("clean_messy_ladder needs t >= 3");
  CleanResult out;
  out.guarantee_met = BigInt(ladder.order()) >= f_messyfinite(BigInt(t));
  const auto target = static_cast<std::size_t>(t);

  SubladderSearch sub = largest_crossfree_subladder(ladder, budgets.subladder_windows);
  if (sub.ladder && sub.ladder->order() >= target) {
    out.result = CleanLadderOutcome{CleanLadderOutcome::Route::cross_free_subladder, std::move(*sub.ladder), 0};
    return out;
  }
  const CrossSequence seq = maximal_cross_sequence(ladder);
  MessyLadder resolved = resolve_all(ladder, seq);
  if (!verify_clean_ladder(resolved)) throw std::logic_error("resolution produced a ladder that is not clean");
  if (resolved.order() >= target) {
    out.result = CleanLadderOutcome{CleanLadderOutcome::Route::resolved, std::move(resolved), seq.crosses.size()};
    return out;
  }
  out.result = StageFailure{"clean_messy_ladder", "no clean ladder of order " + std::to_string(t) + " found"};
  return out;
}

std::string ladder_subtype(const MessyLadder& clean_ladder) {
  if (clean_ladder.rungs().size() == 2) return "cycle";
  if (clean_ladder.rail_x().size() == 1 || clean_ladder.rail_y().size() == 1) return "fan";
  if (!find_crosses(clean_ladder).empty()) return "degenerate_rungs";
  return "general";
}

}  // namespace unavoidable
