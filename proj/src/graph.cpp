#include "unavoidable/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace unavoidable {

Graph::Graph(std::size_t n) : adj_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  for (const auto& [u, v] : edges) {
    if (!contains(u) || !contains(v)) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw std::invalid_argument("repeated edge");
    }
  }
  edge_count_ = edges.size();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& a = adj_[u];
  const auto& b = adj_[v];
  return a.size() <= b.size() ? std::binary_search(a.begin(), a.end(), v)
                              : std::binary_search(b.begin(), b.end(), u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < static_cast<Vertex>(adj_.size()); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool is_path(const Graph& g, std::span<const Vertex> seq) {
  if (seq.empty()) return false;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Vertex v = seq[i];
    if (!g.contains(v) || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.adjacent(seq[i - 1], v)) return false;
  }
  return true;
}

bool is_induced_path(const Graph& g, std::span<const Vertex> seq) {
  if (!is_path(g, seq)) return false;
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (Vertex w : g.neighbors(seq[i])) {
      int j = pos[w];
      if (j >= 0 && j != static_cast<int>(i) - 1 && j != static_cast<int>(i) + 1) return false;
    }
  }
  return true;
}

Path make_path(const Graph& g, VertexList seq) {
  if (!is_path(g, seq)) throw std::invalid_argument("sequence is not a path");
  bool induced = is_induced_path(g, seq);
  return Path{std::move(seq), induced};
}

std::optional<Vertex> InducedSubgraph::local(Vertex host_vertex) const {
  auto it = std::lower_bound(to_host.begin(), to_host.end(), host_vertex);
  if (it == to_host.end() || *it != host_vertex) return std::nullopt;
  return static_cast<Vertex>(it - to_host.begin());
}

VertexList InducedSubgraph::lift(std::span<const Vertex> local_vertices) const {
  VertexList out;
  out.reserve(local_vertices.size());
  for (Vertex v : local_vertices) out.push_back(to_host.at(v));
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  VertexList keep(subset.begin(), subset.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Vertex> index(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!g.contains(keep[i])) throw std::invalid_argument("vertex not in graph: " + std::to_string(keep[i]));
    index[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : g.neighbors(keep[i])) {
      if (index[w] > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), index[w]);
    }
  }
  return InducedSubgraph{Graph(keep.size(), edges), std::move(keep)};
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.order();
}

// Iterative Hopcroft-Tarjan low-point computation.
VertexList cut_vertices(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<char> is_cut(n, 0);
  int timer = 0;
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  for (Vertex root = 0; root < static_cast<Vertex>(n); ++root) {
    if (disc[root] >= 0) continue;
    int root_children = 0;
    std::vector<Frame> stack{{root, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (disc[w] < 0) {
          parent[w] = f.v;
          disc[w] = low[w] = timer++;
          if (f.v == root) ++root_children;
          stack.push_back({w, 0});
        } else if (w != parent[f.v]) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Vertex v = f.v;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= disc[p]) is_cut[p] = 1;
        }
      }
    }
    if (root_children > 1) is_cut[root] = 1;
  }
  VertexList out;
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

Path shortest_path(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(u) || !g.contains(v)) throw std::invalid_argument("vertex out of range");
  if (u == v) return Path{{u}, true};
  std::vector<Vertex> parent(g.order(), -1);
  std::deque<Vertex> queue{u};
  parent[u] = u;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(x)) {
      if (parent[w] >= 0) continue;
      parent[w] = x;
      if (w == v) {
        VertexList seq{v};
        while (seq.back() != u) seq.push_back(parent[seq.back()]);
        std::reverse(seq.begin(), seq.end());
        return Path{std::move(seq), true};
      }
      queue.push_back(w);
    }
  }
  throw std::invalid_argument("vertices are disconnected");
}

std::optional<VertexList> shortest_path_through(const Graph& g, Vertex u, Vertex v,
                                                const std::vector<char>& interior) {
  std::vector<Vertex> parent(g.order(), -1);
  std::deque<Vertex> queue;
  for (Vertex w : g.neighbors(u)) {
    if (w != v && interior[w]) {
      parent[w] = u;
      queue.push_back(w);
    }
  }
  parent[u] = u;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (g.adjacent(x, v)) {
      VertexList seq{v, x};
      while (seq.back() != u) seq.push_back(parent[seq.back()]);
      std::reverse(seq.begin(), seq.end());
      return seq;
    }
    for (Vertex w : g.neighbors(x)) {
      if (parent[w] >= 0 || w == v || !interior[w]) continue;
      parent[w] = x;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

// The search keeps, for every vertex, how many path vertices it is adjacent
// to. A vertex may extend the path exactly when that count is one (the last
// vertex). `free_count` is the number of off-path vertices with count zero and
// gives the pruning bound.
InducedPathSearch longest_induced_path(const Graph& g, std::uint64_t budget) {
  if (budget == 0) throw std::invalid_argument("search budget must be positive");
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("graph has no vertices");

  InducedPathSearch result;
  result.path = Path{{0}, true};
  std::vector<int> nb(n, 0);
  std::vector<char> on_path(n, 0);
  std::size_t free_count = n;
  VertexList path;
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack;

  auto push = [&](Vertex v) {
    if (nb[v] == 0) --free_count;
    on_path[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (!on_path[w] && nb[w] == 0) --free_count;
      ++nb[w];
    }
    path.push_back(v);
    stack.push_back({v, 0});
    ++result.expansions;
  };
  auto pop = [&]() {
    Vertex v = path.back();
    path.pop_back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      --nb[w];
      if (!on_path[w] && nb[w] == 0) ++free_count;
    }
    on_path[v] = 0;
    if (nb[v] == 0) ++free_count;
  };

  bool out_of_budget = false;
  for (Vertex s = 0; s < static_cast<Vertex>(n) && !out_of_budget; ++s) {
    if (result.path.order() == n) break;
    if (result.expansions >= budget) {
      out_of_budget = true;
      break;
    }
    push(s);
    while (!stack.empty()) {
      if (path.size() > result.path.order()) result.path.vertices = path;
      Frame& f = stack.back();
      const auto& nbrs = g.neighbors(f.v);
      bool advanced = false;
      if (path.size() + 1 + free_count > result.path.order()) {
        while (f.next < nbrs.size()) {
          Vertex w = nbrs[f.next++];
          if (on_path[w] || nb[w] != 1) continue;
          if (result.expansions >= budget) {
            out_of_budget = true;
            break;
          }
          push(w);
          advanced = true;
          break;
        }
      }
      if (out_of_budget) break;
      if (!advanced) pop();
    }
    while (!stack.empty()) pop();
  }
  result.exhaustive = !out_of_budget || result.path.order() == n;
  result.path.induced = true;
  return result;
}

std::vector<K2sWitness> k2s_pairs(const Graph& g, std::size_t min_common) {
  std::vector<K2sWitness> out;
  const std::size_t n = g.order();
  std::vector<std::size_t> count(n, 0);
  std::vector<Vertex> touched;
  for (Vertex a = 0; a < static_cast<Vertex>(n); ++a) {
    for (Vertex w : g.neighbors(a)) {
      for (Vertex b : g.neighbors(w)) {
        if (b <= a) continue;
        if (count[b]++ == 0) touched.push_back(b);
      }
    }
    std::sort(touched.begin(), touched.end());
    for (Vertex b : touched) {
      if (count[b] >= min_common && count[b] > 0) {
        K2sWitness wit{a, b, {}};
        std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(), g.neighbors(b).begin(),
                              g.neighbors(b).end(), std::back_inserter(wit.common));
        out.push_back(std::move(wit));
      }
      count[b] = 0;
    }
    touched.clear();
  }
  return out;
}

std::optional<K2sWitness> find_k2s_subgraph(const Graph& g, std::size_t s) {
  const std::size_t n = g.order();
  std::vector<std::size_t> count(n, 0);
  std::vector<Vertex> touched;
  for (Vertex a = 0; a < static_cast<Vertex>(n); ++a) {
    for (Vertex w : g.neighbors(a)) {
      for (Vertex b : g.neighbors(w)) {
        if (b <= a) continue;
        if (count[b]++ == 0) touched.push_back(b);
      }
    }
    std::optional<Vertex> best;
    for (Vertex b : touched) {
      if (count[b] >= s && (!best || b < *best)) best = b;
      count[b] = 0;
    }
    touched.clear();
    if (best || (s == 0 && a + 1 < static_cast<Vertex>(n))) {
      Vertex b = best ? *best : a + 1;
      K2sWitness wit{a, b, {}};
      std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(), g.neighbors(b).begin(),
                            g.neighbors(b).end(), std::back_inserter(wit.common));
      wit.common.resize(s);
      return wit;
    }
  }
  return std::nullopt;
}

}  // namespace unavoidable
