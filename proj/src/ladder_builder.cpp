#include "unavoidable/ladder_builder.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "unavoidable/spanning_tree.hpp"
#include "unavoidable/thresholds.hpp"

namespace unavoidable {

std::vector<Bridge> compute_bridges(const Graph& g, const Path& path) {
  if (!is_induced_path(g, path.vertices)) throw std::invalid_argument("bridges need an induced path");
  const std::size_t n = g.order();
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < path.vertices.size(); ++i) pos[path.vertices[i]] = static_cast<int>(i);
  std::vector<char> seen(n, 0);
  std::vector<Bridge> out;
  for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
    if (pos[s] >= 0 || seen[s]) continue;
    Bridge b;
    std::vector<char> hit(path.vertices.size(), 0);
    std::deque<Vertex> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      b.interior.push_back(x);
      for (Vertex w : g.neighbors(x)) {
        if (pos[w] >= 0) {
          hit[pos[w]] = 1;
        } else if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(b.interior.begin(), b.interior.end());
    for (std::size_t i = 0; i < hit.size(); ++i) {
      if (hit[i]) b.attachments.push_back(static_cast<int>(i));
    }
    out.push_back(std::move(b));
  }
  return out;
}

bool is_valid_chain(const std::vector<Bridge>& bridges, const BridgeChain& chain, std::size_t path_order) {
  const std::size_t k = chain.rank();
  if (k == 0) return false;
  std::vector<int> u(k), v(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (chain.bridges[i] >= bridges.size()) return false;
    const Bridge& b = bridges[chain.bridges[i]];
    if (b.attachments.size() < 2) return false;
    u[i] = b.first();
    v[i] = b.last();
  }
  if (u[0] != 0 || v[k - 1] >= static_cast<int>(path_order)) return false;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (!(u[i] < u[i + 1] && u[i + 1] < v[i])) return false;
    if (i + 2 < k && !(v[i] <= u[i + 2])) return false;
  }
  return k < 2 || v[k - 2] < v[k - 1];
}

BridgeSearch find_chain_or_wide_bridge(const Graph& g, const Path& path, int r) {
  if (r < 4) throw std::invalid_argument("find_chain_or_wide_bridge needs r >= 4");
  BridgeSearch search;
  search.bridges = compute_bridges(g, path);
  search.guarantee_met = BigInt(path.order()) >= f_bridges(BigInt(r));
  const auto& bridges = search.bridges;
  const int last_pos = static_cast<int>(path.order()) - 1;

  std::optional<std::size_t> widest;
  for (std::size_t i = 0; i < bridges.size(); ++i) {
    if (bridges[i].attachments.size() < 2) continue;
    if (!widest || bridges[i].span_order() > bridges[*widest].span_order()) widest = i;
  }
  if (widest && bridges[*widest].span_order() >= static_cast<std::size_t>(r - 1)) {
    search.outcome = WideBridge{*widest};
    return search;
  }

  const std::size_t target = static_cast<std::size_t>(r - 2);
  BridgeSearchFailure failure{"", widest, {}};
  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < bridges.size(); ++i) {
    const Bridge& b = bridges[i];
    if (b.attachments.size() < 2 || b.first() != 0) continue;
    if (!start || b.last() > bridges[*start].last()) start = i;
  }
  if (!start) {
    failure.reason = "no bridge attaches at the first vertex of the path";
    search.outcome = failure;
    return search;
  }
  BridgeChain chain{{*start}};
  failure.best_chain = chain;
  while (chain.rank() < target) {
    const int vk = bridges[chain.bridges.back()].last();
    if (vk == last_pos) break;
    std::optional<std::size_t> next;
    for (std::size_t i = 0; i < bridges.size(); ++i) {
      const Bridge& b = bridges[i];
      if (b.attachments.size() < 2 || !(b.first() < vk && vk < b.last())) continue;
      if (!next || b.last() > bridges[*next].last() ||
          (b.last() == bridges[*next].last() && b.first() < bridges[*next].first())) {
        next = i;
      }
    }
    if (!next) break;
    const int ub = bridges[*next].first();
    std::size_t ell = 0;
    while (ell < chain.rank() && !(ub < bridges[chain.bridges[ell]].last())) ++ell;
    // ell is now the 0-based index of the first chain bridge ending after u_B.
    BridgeChain grown;
    if (ub != bridges[chain.bridges.front()].first()) {
      grown.bridges.assign(chain.bridges.begin(), chain.bridges.begin() + static_cast<long>(ell) + 1);
    }
    grown.bridges.push_back(*next);
    chain = std::move(grown);
    if (chain.rank() > failure.best_chain.rank()) failure.best_chain = chain;
  }
  if (chain.rank() >= target && is_valid_chain(bridges, chain, path.order())) {
    search.outcome = chain;
    return search;
  }
  failure.reason = "no bridge with a long span and no chain of sufficient rank";
  search.outcome = failure;
  return search;
}

namespace {

// Shortest u-v path through the interior of bridge b, in host ids.
VertexList bridge_path(const Graph& g, const Path& path, const Bridge& b) {
  std::vector<char> interior(g.order(), 0);
  for (Vertex w : b.interior) interior[w] = 1;
  auto q = shortest_path_through(g, path.vertices[b.first()], path.vertices[b.last()], interior);
  if (!q) throw std::invalid_argument("bridge does not connect its span ends");
  return *q;
}

void append_segment(VertexList& rail, const Path& path, int from_exclusive, int to_exclusive) {
  for (int i = from_exclusive + 1; i < to_exclusive; ++i) rail.push_back(path.vertices[i]);
}

void append_joined(VertexList& rail, const VertexList& piece) {
  auto first = piece.begin();
  if (!rail.empty() && !piece.empty() && rail.back() == piece.front()) ++first;
  rail.insert(rail.end(), first, piece.end());
}

}  // namespace

MessyLadder build_messy_ladder(const Graph& g, const Path& path, const std::vector<Bridge>& bridges,
                               const WideBridge& wide) {
  if (wide.bridge >= bridges.size()) throw std::invalid_argument("bridge index out of range");
  const Bridge& b = bridges[wide.bridge];
  if (b.span_order() < 3) throw std::invalid_argument("bridge span too short for a ladder");
  VertexList rail_x;
  append_segment(rail_x, path, b.first(), b.last());
  VertexList rail_y = bridge_path(g, path, b);
  return MessyLadder::from_host(g, rail_x, rail_y);
}

MessyLadder build_messy_ladder(const Graph& g, const Path& path, const std::vector<Bridge>& bridges,
                               const BridgeChain& chain) {
  if (!is_valid_chain(bridges, chain, path.order())) throw std::invalid_argument("invalid bridge chain");
  const std::size_t k = chain.rank();
  std::vector<const Bridge*> bs;
  for (std::size_t idx : chain.bridges) bs.push_back(&bridges[idx]);
  if (k == 1) return build_messy_ladder(g, path, bridges, WideBridge{chain.bridges[0]});

  auto u = [&](std::size_t i) { return bs[i]->first(); };
  auto v = [&](std::size_t i) { return bs[i]->last(); };
  // rails[0] starts with Q_1 at u_1, rails[1] with the path vertex after u_1.
  VertexList rails[2];
  rails[0] = bridge_path(g, path, *bs[0]);
  append_segment(rails[1], path, u(0), u(1));
  for (std::size_t i = 1; i < k; ++i) {
    VertexList& own = rails[i % 2];
    VertexList& other = rails[(i + 1) % 2];
    append_joined(own, bridge_path(g, path, *bs[i]));
    if (i + 1 < k) {
      append_segment(other, path, v(i - 1), u(i + 1));
    } else {
      append_segment(other, path, v(i - 1), v(i));
    }
  }
  return MessyLadder::from_host(g, rails[0], rails[1]);
}

MessyLadder build_messy_ladder(const Graph& g, const Path& path, const BridgeSearch& search) {
  if (const auto* w = std::get_if<WideBridge>(&search.outcome)) return build_messy_ladder(g, path, search.bridges, *w);
  if (const auto* c = std::get_if<BridgeChain>(&search.outcome)) return build_messy_ladder(g, path, search.bridges, *c);
  throw std::invalid_argument("bridge search failed; nothing to build");
}

namespace {

// binom(s + t - 2, s - 1), the classical bound for a clique of size s or an
// independent set of size t.
std::size_t binom_bound(int s, int t) {
  if (s <= 0 || t <= 0) return 0;
  BigInt value = 1;
  for (int i = 1; i <= s - 1; ++i) value = value * (t - 1 + i) / i;
  return saturate(value);
}

// Clique of size s or independent set of size t inside `set`.
std::optional<RamseyWitness> ramsey_rec(const Graph& g, const VertexList& set, int s, int t) {
  if (s == 0) return RamseyWitness{RamseyWitness::Kind::clique, {}};
  if (t == 0) return RamseyWitness{RamseyWitness::Kind::independent_set, {}};
  if (set.empty()) return std::nullopt;
  const Vertex pivot = set.front();
  VertexList nbrs, non_nbrs;
  for (std::size_t i = 1; i < set.size(); ++i) {
    (g.adjacent(pivot, set[i]) ? nbrs : non_nbrs).push_back(set[i]);
  }
  auto via_nbrs = [&]() -> std::optional<RamseyWitness> {
    auto w = ramsey_rec(g, nbrs, s - 1, t);
    if (w && w->kind == RamseyWitness::Kind::clique) w->vertices.insert(w->vertices.begin(), pivot);
    return w;
  };
  auto via_non_nbrs = [&]() -> std::optional<RamseyWitness> {
    auto w = ramsey_rec(g, non_nbrs, s, t - 1);
    if (w && w->kind == RamseyWitness::Kind::independent_set) w->vertices.insert(w->vertices.begin(), pivot);
    return w;
  };
  const bool nbrs_first = nbrs.size() >= binom_bound(s - 1, t) || non_nbrs.size() < binom_bound(s, t - 1);
  auto w = nbrs_first ? via_nbrs() : via_non_nbrs();
  if (!w) w = nbrs_first ? via_non_nbrs() : via_nbrs();
  return w;
}

}  // namespace

std::optional<RamseyWitness> ramsey_extract(const Graph& g, const VertexList& candidates, int q) {
  if (q < 1) throw std::invalid_argument("ramsey_extract needs q >= 1");
  VertexList set(candidates);
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  auto w = ramsey_rec(g, set, q, q);
  if (w) std::sort(w->vertices.begin(), w->vertices.end());
  return w;
}

std::optional<RamseyWitness> ramsey_extract(const Graph& g, int q) {
  VertexList all(g.order());
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) all[v] = v;
  return ramsey_extract(g, all, q);
}

std::optional<std::variant<CliqueWitness, ThetaPayload>> common_neighbor_split(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("common_neighbor_split needs p >= 1");
  for (const K2sWitness& pair : k2s_pairs(g, static_cast<std::size_t>(p))) {
    auto w = ramsey_extract(g, pair.common, p);
    if (!w) continue;
    if (w->kind == RamseyWitness::Kind::clique) return CliqueWitness{w->vertices};
    ThetaPayload theta{pair.a, pair.b, {}, g.adjacent(pair.a, pair.b)};
    for (Vertex c : w->vertices) theta.paths.push_back({pair.a, c, pair.b});
    return theta;
  }
  return std::nullopt;
}

GrsOutcome grs_split(const Graph& g, const Path& path, int p, std::size_t r, const Budgets& budgets) {
  if (p < 1) throw std::invalid_argument("grs_split needs p >= 1");
  if (!is_path(g, path.vertices)) throw std::invalid_argument("grs_split needs a path of the graph");
  GrsOutcome out;
  out.guarantee_met = at_least(path.order(), f_longP(BigInt(p), BigInt(r), budgets.thresholds));
  const InducedSubgraph h = induced_subgraph(g, path.vertices);
  const InducedPathSearch search = longest_induced_path(h.graph, budgets.induced_path);
  out.best_path = Path{h.lift(search.path.vertices), true};
  if (out.best_path.order() >= r) {
    out.result = out.best_path;
    return out;
  }
  if (auto split = common_neighbor_split(h.graph, p)) {
    if (auto* c = std::get_if<CliqueWitness>(&*split)) {
      out.result = CliqueWitness{h.lift(c->vertices)};
    } else {
      ThetaPayload t = std::get<ThetaPayload>(*split);
      t.u = h.host(t.u);
      t.v = h.host(t.v);
      for (auto& q : t.paths) q = h.lift(q);
      out.result = std::move(t);
    }
    return out;
  }
  out.result = StageFailure{"grs_split", "no long induced path and no large common neighborhood within the path"};
  return out;
}

namespace {

Certificate split_certificate(const std::variant<CliqueWitness, ThetaPayload>& split, int p) {
  if (const auto* c = std::get_if<CliqueWitness>(&split)) return make_clique_certificate(c->vertices, p);
  return make_theta_certificate(std::get<ThetaPayload>(split), p);
}

std::optional<MessyLadder> try_build(const Graph& g, const Path& path, const std::vector<Bridge>& bridges,
                                     const std::variant<WideBridge, BridgeChain>& what) {
  try {
    return std::visit([&](const auto& w) { return build_messy_ladder(g, path, bridges, w); }, what);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace

LongPathOutcome long_path_to_messy(const Graph& g, int p, std::size_t q, const std::optional<Path>& path,
                                   const Budgets& budgets) {
  if (p < 3 || q < 3) throw std::invalid_argument("long_path_to_messy needs p > 2 and q > 2");
  LongPathOutcome out;
  Path work = path ? *path : make_path(g, NormalSpanningTree::build(g, 0).deepest_branch());
  out.guarantee_met = at_least(work.order(), f_longp(BigInt(p), BigInt(std::max<std::size_t>(q, 4)), budgets.thresholds));

  const std::size_t bridge_r = std::max<std::size_t>(q, 4);
  const std::size_t path_target = saturate(f_bridges(BigInt(bridge_r)));
  GrsOutcome grs = grs_split(g, work, p, path_target, budgets);
  if (auto* c = std::get_if<CliqueWitness>(&grs.result)) {
    out.result = make_clique_certificate(c->vertices, p);
    return out;
  }
  if (auto* t = std::get_if<ThetaPayload>(&grs.result)) {
    out.result = make_theta_certificate(*t, p);
    return out;
  }
  const bool have_long_path = std::holds_alternative<Path>(grs.result);
  if (!have_long_path) {
    if (auto split = common_neighbor_split(g, p)) {
      out.result = split_certificate(*split, p);
      return out;
    }
  }
  out.induced_path = grs.best_path;
  if (out.induced_path.order() < 3) {
    out.result = StageFailure{"long_path_to_messy", "induced path too short to carry bridges"};
    return out;
  }

  const int r = static_cast<int>(std::min<std::size_t>(bridge_r, std::numeric_limits<int>::max()));
  const BridgeSearch search = find_chain_or_wide_bridge(g, out.induced_path, r);
  std::optional<MessyLadder> ladder;
  if (const auto* w = std::get_if<WideBridge>(&search.outcome)) {
    ladder = try_build(g, out.induced_path, search.bridges, *w);
  } else if (const auto* c = std::get_if<BridgeChain>(&search.outcome)) {
    ladder = try_build(g, out.induced_path, search.bridges, *c);
  } else {
    const auto& f = std::get<BridgeSearchFailure>(search.outcome);
    std::optional<MessyLadder> from_wide, from_chain;
    if (f.widest) from_wide = try_build(g, out.induced_path, search.bridges, WideBridge{*f.widest});
    if (f.best_chain.rank() > 0) from_chain = try_build(g, out.induced_path, search.bridges, f.best_chain);
    if (from_wide && (!from_chain || from_wide->order() >= from_chain->order())) {
      ladder = std::move(from_wide);
    } else {
      ladder = std::move(from_chain);
    }
  }
  if (!ladder) {
    out.result = StageFailure{"long_path_to_messy", "no bridge structure yields a messy ladder"};
    return out;
  }
  out.order_met = ladder->order() >= q;
  out.result = std::move(*ladder);
  return out;
}

}  // namespace unavoidable
