#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "unavoidable/oracle.hpp"
#include "unavoidable/rng.hpp"

namespace unavoidable {

Graph gen_two_connected(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("gen_two_connected needs n >= 3");
  SplitMix64 rng(seed);
  std::set<Edge> edges;
  auto add = [&](Vertex a, Vertex b) { edges.insert({std::min(a, b), std::max(a, b)}); };
  const auto cycle = static_cast<Vertex>(3 + rng.below(n - 2));
  for (Vertex i = 0; i < cycle; ++i) add(i, (i + 1) % cycle);
  auto next = cycle;
  while (static_cast<std::size_t>(next) < n) {
    const auto k = static_cast<Vertex>(1 + rng.below(std::min<std::size_t>(3, n - next)));
    const auto a = static_cast<Vertex>(rng.below(next));
    auto b = static_cast<Vertex>(rng.below(next - 1));
    if (b >= a) ++b;
    Vertex prev = a;
    for (Vertex i = 0; i < k; ++i) {
      add(prev, next + i);
      prev = next + i;
    }
    add(prev, b);
    next += k;
  }
  const std::uint64_t chords = rng.below(n);
  for (std::uint64_t c = 0; c < chords; ++c) {
    const auto a = static_cast<Vertex>(rng.below(n));
    auto b = static_cast<Vertex>(rng.below(n - 1));
    if (b >= a) ++b;
    add(a, b);
  }
  VertexList perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
  rng.shuffle(perm);
  std::vector<Edge> out;
  for (const auto& [a, b] : edges) out.emplace_back(perm[a], perm[b]);
  return Graph(n, out);
}

MessyLadder gen_messy_ladder(const LadderParams& params, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::size_t a = params.len_x, b = params.len_y;
  if (params.rung_density < 0.0 || params.rung_density > 1.0) throw std::invalid_argument("rung density must be in [0, 1]");
  std::set<std::pair<int, int>> rungs;

  if (params.pattern == LadderPattern::independent_crosses) {
    if (params.crosses == 0) throw std::invalid_argument("independent_crosses needs at least one cross");
    int xs = 0, ys = 0;
    for (std::size_t c = 0; c < params.crosses; ++c) {
      const int wx = 2 + static_cast<int>(rng.below(2));
      const int wy = 2 + static_cast<int>(rng.below(2));
      rungs.insert({xs, ys + wy});
      rungs.insert({xs + wx, ys});
      xs += wx + 1;
      ys += wy + 1;
    }
    a = static_cast<std::size_t>(xs);
    b = static_cast<std::size_t>(ys);
  }
  if (a == 0 || b == 0) throw std::invalid_argument("rails must be non-empty");
  if (a == 1 && b == 1) throw std::invalid_argument("at most one rail may be trivial");
  const int last_x = static_cast<int>(a) - 1, last_y = static_cast<int>(b) - 1;
  rungs.insert({0, 0});
  rungs.insert({last_x, last_y});

  switch (params.pattern) {
    case LadderPattern::random:
      for (int i = 0; i <= last_x; ++i) {
        for (int j = 0; j <= last_y; ++j) {
          if (rng.chance(params.rung_density)) rungs.insert({i, j});
        }
      }
      break;
    case LadderPattern::one_degenerate_cross: {
      if (a < 2 || b < 2) throw std::invalid_argument("a degenerate cross needs two vertices on each rail");
      const int i = static_cast<int>(rng.below(a - 1));
      const int j = static_cast<int>(rng.below(b - 1));
      rungs.insert({i, j + 1});
      rungs.insert({i + 1, j});
      for (int x = 0; x <= last_x; ++x) {
        for (int y = 0; y <= last_y; ++y) {
          if (!rng.chance(params.rung_density)) continue;
          const bool crosses = std::any_of(rungs.begin(), rungs.end(), [&](const auto& r) {
            return (r.first < x && y < r.second) || (x < r.first && r.second < y);
          });
          if (!crosses) rungs.insert({x, y});
        }
      }
      break;
    }
    case LadderPattern::strip: {
      int i = 0, j = 0, run = 0, last_move = -1;
      std::vector<std::pair<int, int>> stair{{0, 0}};
      while (i != last_x || j != last_y) {
        int move;
        if (i == last_x) {
          move = 1;
        } else if (j == last_y) {
          move = 0;
        } else if (run >= 2) {
          move = 1 - last_move;
        } else if (const long lag = static_cast<long>(i) * last_y - static_cast<long>(j) * last_x;
                   std::abs(lag) > std::max(last_x, last_y)) {
          move = lag < 0 ? 0 : 1;
        } else {
          move = static_cast<int>(rng.below(2));
        }
        run = move == last_move ? run + 1 : 1;
        last_move = move;
        (move == 0 ? i : j) += 1;
        stair.emplace_back(i, j);
      }
      for (std::size_t k = 0; k < stair.size(); ++k) {
        const auto [x, y] = stair[k];
        rungs.insert({x, y});
        const bool steps_right = k + 1 < stair.size() && stair[k + 1].first == x + 1;
        if (steps_right && y >= 1 && rng.chance(params.rung_density)) rungs.insert({x + 1, y - 1});
      }
      break;
    }
    case LadderPattern::independent_crosses:
      break;
  }

  const std::size_t n = a + b;
  VertexList label(n);
  for (std::size_t v = 0; v < n; ++v) label[v] = static_cast<Vertex>(v);
  if (params.relabel) rng.shuffle(label);
  auto xv = [&](int i) { return label[static_cast<std::size_t>(i)]; };
  auto yv = [&](int j) { return label[a + static_cast<std::size_t>(j)]; };
  std::vector<Edge> edges;
  VertexList rail_x, rail_y;
  for (int i = 0; i <= last_x; ++i) {
    rail_x.push_back(xv(i));
    if (i > 0) edges.emplace_back(xv(i - 1), xv(i));
  }
  for (int j = 0; j <= last_y; ++j) {
    rail_y.push_back(yv(j));
    if (j > 0) edges.emplace_back(yv(j - 1), yv(j));
  }
  for (const auto& [i, j] : rungs) edges.emplace_back(xv(i), yv(j));
  return MessyLadder::from_host(Graph(n, edges), rail_x, rail_y);
}

}  // namespace unavoidable
