#include "unavoidable/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace unavoidable {
namespace {

using Mask = std::uint32_t;

Mask bit(int v) { return Mask{1} << v; }

struct MaskGraph {
  explicit MaskGraph(const Graph& g) : n(static_cast<int>(g.order())), adj(g.order(), 0) {
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : g.neighbors(v)) adj[v] |= bit(w);
    }
  }
  [[nodiscard]] bool adjacent(int a, int b) const { return (adj[a] >> b) & 1U; }
  [[nodiscard]] Mask neighborhood(Mask set) const {
    Mask out = 0;
    for (Mask s = set; s; s &= s - 1) out |= adj[std::countr_zero(s)];
    return out;
  }
  int n;
  std::vector<Mask> adj;
};

bool find_clique(const MaskGraph& g, Mask candidates, int need, VertexList& acc) {
  if (need == 0) return true;
  if (std::popcount(candidates) < need) return false;
  for (Mask c = candidates; c; c &= c - 1) {
    const int v = std::countr_zero(c);
    acc.push_back(v);
    // Only later vertices, so each clique is built in increasing order.
    const Mask later = ~((bit(v) << 1) - 1);
    if (find_clique(g, candidates & g.adj[v] & later, need - 1, acc)) return true;
    acc.pop_back();
  }
  return false;
}

struct InternalPath {
  Mask mask;
  VertexList seq;
};

void induced_paths_between(const MaskGraph& g, int u, int v, int x, Mask on_path, VertexList& seq,
                           std::vector<InternalPath>& out) {
  for (Mask c = g.adj[x] & ~on_path & ~bit(v); c; c &= c - 1) {
    const int w = std::countr_zero(c);
    if (g.adj[w] & on_path & ~bit(x)) continue;
    seq.push_back(w);
    if (g.adjacent(w, v)) {
      out.push_back({(on_path & ~bit(u)) | bit(w), seq});
    } else {
      induced_paths_between(g, u, v, w, on_path | bit(w), seq, out);
    }
    seq.pop_back();
  }
}

struct Packing {
  const MaskGraph& g;
  const std::vector<InternalPath>& paths;
  std::vector<Mask> closed;  // internal set plus its neighbors
  int r;
  int best_total = std::numeric_limits<int>::max();
  std::vector<std::size_t> best, chosen;

  void search(std::size_t start, int total, Mask blocked) {
    if (static_cast<int>(chosen.size()) == r) {
      if (total < best_total) {
        best_total = total;
        best = chosen;
      }
      return;
    }
    const int remaining = r - static_cast<int>(chosen.size());
    for (std::size_t i = start; i < paths.size(); ++i) {
      const int pc = std::popcount(paths[i].mask);
      if (total + pc * remaining >= best_total) return;  // paths sorted by size
      if (paths[i].mask & blocked) continue;
      chosen.push_back(i);
      search(i + 1, total + pc, blocked | closed[i]);
      chosen.pop_back();
    }
  }
};

void search_thetas(const MaskGraph& g, int r, OracleResult& out) {
  struct Best {
    int total = std::numeric_limits<int>::max();
    std::optional<ThetaPayload> theta;
  } best[2];
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      const int plus = g.adjacent(u, v) ? 1 : 0;
      std::vector<InternalPath> paths;
      VertexList seq;
      induced_paths_between(g, u, v, u, bit(u), seq, paths);
      std::stable_sort(paths.begin(), paths.end(), [](const InternalPath& a, const InternalPath& b) {
        return std::popcount(a.mask) < std::popcount(b.mask) ||
               (std::popcount(a.mask) == std::popcount(b.mask) && a.mask < b.mask);
      });
      paths.erase(std::unique(paths.begin(), paths.end(),
                              [](const InternalPath& a, const InternalPath& b) { return a.mask == b.mask; }),
                  paths.end());
      if (static_cast<int>(paths.size()) < r) continue;
      Packing pack{g, paths, {}, r};
      pack.best_total = best[plus].total;
      for (const auto& p : paths) pack.closed.push_back(p.mask | (g.neighborhood(p.mask) & ~bit(u) & ~bit(v)));
      pack.search(0, 0, 0);
      if (pack.best.empty()) continue;
      ThetaPayload theta{u, v, {}, plus == 1};
      for (std::size_t i : pack.best) {
        VertexList full{u};
        full.insert(full.end(), paths[i].seq.begin(), paths[i].seq.end());
        full.push_back(v);
        theta.paths.push_back(std::move(full));
      }
      best[plus].total = pack.best_total;
      best[plus].theta = std::move(theta);
    }
  }
  for (int plus = 0; plus < 2; ++plus) {
    FamilyResult& fam = plus ? out.theta_plus : out.theta;
    if (best[plus].theta) {
      fam.present = true;
      fam.witness = make_theta_certificate(*best[plus].theta, r);
    }
  }
}

// Y = `rest` must induce a path; returns it in order from one end, or empty.
VertexList as_induced_path(const MaskGraph& g, Mask rest) {
  const int k = std::popcount(rest);
  int edges = 0;
  int end = -1;
  for (Mask c = rest; c; c &= c - 1) {
    const int v = std::countr_zero(c);
    const int d = std::popcount(g.adj[v] & rest);
    if (d > 2) return {};
    if (d <= 1 && end < 0) end = v;
    edges += d;
  }
  if (edges / 2 != k - 1 || end < 0) return {};
  VertexList seq{end};
  Mask seen = bit(end);
  while (static_cast<int>(seq.size()) < k) {
    const Mask nxt = g.adj[seq.back()] & rest & ~seen;
    if (!nxt) return {};
    const int w = std::countr_zero(nxt);
    seq.push_back(w);
    seen |= bit(w);
  }
  return seq;
}

bool all_crosses_degenerate(const MaskGraph& g, const VertexList& x, const VertexList& y) {
  std::vector<std::pair<int, int>> rungs;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (g.adjacent(x[i], y[j])) rungs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  for (const auto& [ex, ey] : rungs) {
    for (const auto& [fx, fy] : rungs) {
      if (ex < fx && fy < ey && !(fx == ex + 1 && ey == fy + 1)) return false;
    }
  }
  return true;
}

bool clean_split(const MaskGraph& g, Mask set, VertexList& x, Mask on_x, VertexList& rx, VertexList& ry) {
  const Mask rest = set & ~on_x;
  if (rest && !(x.size() == 1 && std::popcount(rest) == 1)) {
    VertexList y = as_induced_path(g, rest);
    if (!y.empty()) {
      for (int flip = 0; flip < 2; ++flip) {
        if (flip) std::reverse(y.begin(), y.end());
        if (g.adjacent(x.front(), y.front()) && g.adjacent(x.back(), y.back()) && all_crosses_degenerate(g, x, y)) {
          rx = x;
          ry = y;
          return true;
        }
        if (y.size() == 1) break;
      }
    }
  }
  for (Mask c = g.adj[x.back()] & rest; c; c &= c - 1) {
    const int w = std::countr_zero(c);
    if (g.adj[w] & on_x & ~bit(x.back())) continue;
    x.push_back(w);
    if (clean_split(g, set, x, on_x | bit(w), rx, ry)) return true;
    x.pop_back();
  }
  return false;
}

void search_clean_ladders(const MaskGraph& g, int r, OracleResult& out) {
  const int n = g.n;
  for (int k = std::max(r, 3); k <= n; ++k) {
    // Gosper's hack over k-subsets.
    for (Mask set = (Mask{1} << k) - 1; set < (Mask{1} << n); ) {
      int edges = 0;
      for (Mask c = set; c; c &= c - 1) edges += std::popcount(g.adj[std::countr_zero(c)] & set);
      if (edges / 2 >= k) {
        for (Mask c = set; c; c &= c - 1) {
          VertexList x{std::countr_zero(c)}, rx, ry;
          if (clean_split(g, set, x, bit(x[0]), rx, ry)) {
            out.clean_ladder.present = true;
            out.clean_ladder.witness = make_ladder_certificate(CertificateKind::clean_ladder, rx, ry, r);
            return;
          }
        }
      }
      const Mask low = set & (0 - set);
      const Mask ripple = set + low;
      set = (((ripple ^ set) >> 2) / low) | ripple;
    }
  }
}

}  // namespace

const FamilyResult& OracleResult::family(CertificateKind kind) const {
  switch (kind) {
    case CertificateKind::clique:
      return clique;
    case CertificateKind::theta:
      return theta;
    case CertificateKind::theta_plus:
      return theta_plus;
    case CertificateKind::clean_ladder:
      return clean_ladder;
    default:
      throw std::invalid_argument("kind is not one of the four families");
  }
}

OracleResult brute_force_structures(const Graph& g, int r, std::size_t cap) {
  if (cap > kMaxOracleCap) throw std::invalid_argument("oracle cap above the supported maximum");
  if (g.order() > cap) throw std::invalid_argument("graph exceeds the oracle cap");
  if (r < 1) throw std::invalid_argument("oracle needs r >= 1");
  const MaskGraph mg(g);
  OracleResult out;
  out.r = r;
  VertexList acc;
  if (find_clique(mg, (Mask{1} << mg.n) - 1, r, acc)) {
    out.clique.present = true;
    out.clique.witness = make_clique_certificate(acc, r);
  }
  search_thetas(mg, r, out);
  search_clean_ladders(mg, r, out);
  return out;
}

nlohmann::json to_json(const OracleResult& result) {
  nlohmann::json doc;
  doc["r"] = result.r;
  auto fam = [](const FamilyResult& f) {
    nlohmann::json j;
    j["present"] = f.present;
    j["witness"] = f.witness ? to_json(*f.witness) : nlohmann::json(nullptr);
    return j;
  };
  doc["clique"] = fam(result.clique);
  doc["theta"] = fam(result.theta);
  doc["theta_plus"] = fam(result.theta_plus);
  doc["clean_ladder"] = fam(result.clean_ladder);
  return doc;
}

}  // namespace unavoidable
