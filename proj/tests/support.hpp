#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "unavoidable/certificates.hpp"
#include "unavoidable/graph.hpp"
#include "unavoidable/graph_io.hpp"
#include "unavoidable/messy_ladder.hpp"

namespace testing_support {

using unavoidable::Edge;
using unavoidable::Graph;
using unavoidable::Vertex;
using unavoidable::VertexList;

inline Graph from_edges(std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

/// Branch vertices 0 and 1, leaves 2..s+1.
inline Graph k2s(std::size_t s, bool plus = false) {
  std::vector<Edge> e;
  if (plus) e.emplace_back(0, 1);
  for (std::size_t i = 0; i < s; ++i) {
    e.emplace_back(0, i + 2);
    e.emplace_back(1, i + 2);
  }
  return Graph(s + 2, e);
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  for (auto& [a, b] : e)
    if (a > b) std::swap(a, b);
  return Graph(10, e);
}

/// Ladder with X = 0..nx-1 and Y = nx..nx+ny-1; `rungs` are (x position,
/// y position) and must include sigma and tau.
inline Graph ladder_graph(std::size_t nx, std::size_t ny, const std::vector<std::pair<int, int>>& rungs) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < nx; ++i) e.emplace_back(i, i + 1);
  for (std::size_t i = 0; i + 1 < ny; ++i) e.emplace_back(nx + i, nx + i + 1);
  for (auto [x, y] : rungs) e.emplace_back(x, static_cast<Vertex>(nx) + y);
  return Graph(nx + ny, e);
}

inline VertexList iota_list(int from, int count) {
  VertexList v(count);
  for (int i = 0; i < count; ++i) v[i] = from + i;
  return v;
}

inline unavoidable::MessyLadder ladder(std::size_t nx, std::size_t ny, const std::vector<std::pair<int, int>>& rungs) {
  const Graph g = ladder_graph(nx, ny, rungs);
  return unavoidable::MessyLadder::from_host(g, iota_list(0, static_cast<int>(nx)),
                                             iota_list(static_cast<int>(nx), static_cast<int>(ny)));
}

inline std::string data_path(const std::string& name) { return std::string(UNAVOIDABLE_DATA_DIR) + "/" + name; }

inline std::vector<Graph> corpus(int n) {
  std::ifstream in(data_path("biconnected_n" + std::to_string(n) + ".g6"));
  return unavoidable::read_graph6_all(in);
}

// Brute-force oracles on bitmasks, independent of the library's searches.

inline std::uint32_t nbr_mask(const Graph& g, Vertex v) {
  std::uint32_t m = 0;
  for (Vertex w : g.neighbors(v)) m |= 1u << w;
  return m;
}

inline bool mask_connected(const Graph& g, std::uint32_t s) {
  if (s == 0) return true;
  std::uint32_t seen = s & (~s + 1), frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= nbr_mask(g, std::countr_zero(f));
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

/// The subgraph induced by `s` is a path.
inline bool mask_is_induced_path(const Graph& g, std::uint32_t s) {
  const int k = std::popcount(s);
  if (k == 0) return false;
  int edges = 0;
  for (std::uint32_t f = s; f; f &= f - 1) {
    const int d = std::popcount(nbr_mask(g, std::countr_zero(f)) & s);
    if (d > 2) return false;
    edges += d;
  }
  return edges / 2 == k - 1 && mask_connected(g, s);
}

inline std::size_t brute_longest_induced_path(const Graph& g) {
  std::size_t best = 0;
  const std::uint32_t all = (1u << g.order()) - 1;
  for (std::uint32_t s = 1; s <= all; ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) > best && mask_is_induced_path(g, s)) best = std::popcount(s);
  }
  return best;
}

inline bool brute_two_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return false;
  const std::uint32_t all = (1u << n) - 1;
  if (!mask_connected(g, all)) return false;
  for (std::size_t v = 0; v < n; ++v)
    if (!mask_connected(g, all & ~(1u << v))) return false;
  return true;
}

}  // namespace testing_support
