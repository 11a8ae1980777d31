#include "unavoidable/certificates.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "unavoidable/error.hpp"

namespace unavoidable {
namespace {

constexpr std::array<std::pair<CertificateKind, std::string_view>, 9> kKindNames{{
    {CertificateKind::clique, "clique"},
    {CertificateKind::theta, "theta"},
    {CertificateKind::theta_plus, "theta_plus"},
    {CertificateKind::clean_ladder, "clean_ladder"},
    {CertificateKind::path, "path"},
    {CertificateKind::messy_ladder, "messy_ladder"},
    {CertificateKind::clean_cycle, "clean_cycle"},
    {CertificateKind::clean_fan, "clean_fan"},
    {CertificateKind::independent_set, "independent_set"},
}};

VertexList sorted_unique(VertexList v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool all_in_graph(const Graph& g, std::span<const Vertex> vs) {
  return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return g.contains(v); });
}

bool distinct(std::span<const Vertex> vs) {
  VertexList copy(vs.begin(), vs.end());
  std::sort(copy.begin(), copy.end());
  return std::adjacent_find(copy.begin(), copy.end()) == copy.end();
}

VertexList payload_union(const Certificate& cert) {
  VertexList all;
  if (const auto* t = std::get_if<ThetaPayload>(&cert.payload)) {
    all.push_back(t->u);
    all.push_back(t->v);
    for (const auto& p : t->paths) all.insert(all.end(), p.begin(), p.end());
  } else if (const auto* l = std::get_if<LadderPayload>(&cert.payload)) {
    all = l->rail_x;
    all.insert(all.end(), l->rail_y.begin(), l->rail_y.end());
  } else if (const auto* f = std::get_if<FanPayload>(&cert.payload)) {
    all = f->rim;
    all.push_back(f->apex);
  }
  return sorted_unique(std::move(all));
}

// Rungs as (x position, y position).
std::vector<std::pair<int, int>> rung_positions(const Graph& g, const VertexList& x,
                                                               const VertexList& y) {
  std::vector<int> py(g.order(), -1);
  for (std::size_t j = 0; j < y.size(); ++j) py[y[j]] = static_cast<int>(j);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (Vertex w : g.neighbors(x[i])) {
      if (py[w] >= 0) out.emplace_back(static_cast<int>(i), py[w]);
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(CertificateKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

CertificateKind certificate_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw FormatError("unknown certificate kind: " + std::string(name));
}

Certificate make_clique_certificate(VertexList clique, int r) {
  return {CertificateKind::clique, r, sorted_unique(std::move(clique)), std::monostate{}};
}

Certificate make_independent_set_certificate(VertexList set, int r) {
  return {CertificateKind::independent_set, r, sorted_unique(std::move(set)), std::monostate{}};
}

Certificate make_path_certificate(VertexList path, int r) {
  return {CertificateKind::path, r, std::move(path), std::monostate{}};
}

Certificate make_theta_certificate(ThetaPayload theta, int r) {
  Certificate c{theta.plus_edge ? CertificateKind::theta_plus : CertificateKind::theta, r, {}, std::move(theta)};
  c.vertices = payload_union(c);
  return c;
}

Certificate make_ladder_certificate(CertificateKind kind, VertexList rail_x, VertexList rail_y, int r) {
  if (kind != CertificateKind::clean_ladder && kind != CertificateKind::messy_ladder &&
      kind != CertificateKind::clean_cycle) {
    throw std::invalid_argument("not a ladder certificate kind");
  }
  Certificate c{kind, r, {}, LadderPayload{std::move(rail_x), std::move(rail_y)}};
  c.vertices = payload_union(c);
  return c;
}

Certificate make_fan_certificate(Vertex apex, VertexList rim, int s) {
  Certificate c{CertificateKind::clean_fan, s, {}, FanPayload{apex, std::move(rim)}};
  c.vertices = payload_union(c);
  return c;
}

bool verify_clique(const Graph& g, std::span<const Vertex> set, int r) {
  if (static_cast<long long>(set.size()) < r || !all_in_graph(g, set) || !distinct(set)) return false;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (!g.adjacent(set[i], set[j])) return false;
    }
  }
  return true;
}

bool verify_independent_set(const Graph& g, std::span<const Vertex> set, int r) {
  if (static_cast<long long>(set.size()) < r || !all_in_graph(g, set) || !distinct(set)) return false;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (g.adjacent(set[i], set[j])) return false;
    }
  }
  return true;
}

bool verify_induced_path(const Graph& g, std::span<const Vertex> path, int r) {
  return static_cast<long long>(path.size()) >= r && is_induced_path(g, path);
}

bool verify_theta(const Graph& g, const ThetaPayload& theta, int r) {
  const Vertex u = theta.u, v = theta.v;
  if (!g.contains(u) || !g.contains(v) || u == v) return false;
  if (static_cast<long long>(theta.paths.size()) < r || theta.paths.empty()) return false;
  if (theta.plus_edge != g.adjacent(u, v)) return false;
  // owner[w] = (path index, position) for internal vertices.
  std::vector<std::pair<int, int>> owner(g.order(), {-1, -1});
  for (std::size_t i = 0; i < theta.paths.size(); ++i) {
    const auto& p = theta.paths[i];
    if (p.size() < 3 || p.front() != u || p.back() != v || !is_path(g, p)) return false;
    for (std::size_t k = 1; k + 1 < p.size(); ++k) {
      if (owner[p[k]].first >= 0) return false;
      owner[p[k]] = {static_cast<int>(i), static_cast<int>(k)};
    }
  }
  auto ok_end_edge = [&](Vertex end, Vertex w) {
    const auto [i, k] = owner[w];
    const int last = static_cast<int>(theta.paths[i].size()) - 2;
    return end == u ? k == 1 : k == last;
  };
  for (std::size_t i = 0; i < theta.paths.size(); ++i) {
    const auto& p = theta.paths[i];
    for (std::size_t k = 1; k + 1 < p.size(); ++k) {
      for (Vertex w : g.neighbors(p[k])) {
        if (w == u || w == v) {
          if (!ok_end_edge(w, p[k])) return false;
        } else if (owner[w].first >= 0) {
          if (owner[w].first != static_cast<int>(i) || std::abs(owner[w].second - static_cast<int>(k)) != 1) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool verify_messy_ladder(const Graph& g, const VertexList& rail_x, const VertexList& rail_y) {
  if (rail_x.empty() || rail_y.empty()) return false;
  if (rail_x.size() == 1 && rail_y.size() == 1) return false;
  if (!is_induced_path(g, rail_x) || !is_induced_path(g, rail_y)) return false;
  std::vector<char> on_x(g.order(), 0);
  for (Vertex v : rail_x) on_x[v] = 1;
  for (Vertex v : rail_y) {
    if (on_x[v]) return false;
  }
  return g.adjacent(rail_x.front(), rail_y.front()) && g.adjacent(rail_x.back(), rail_y.back());
}

bool verify_clean_ladder(const Graph& g, const VertexList& rail_x, const VertexList& rail_y) {
  if (!verify_messy_ladder(g, rail_x, rail_y)) return false;
  const auto rungs = rung_positions(g, rail_x, rail_y);
  for (const auto& [ex, ey] : rungs) {
    for (const auto& [fx, fy] : rungs) {
      if (ex < fx && fy < ey && !(fx == ex + 1 && ey == fy + 1)) return false;
    }
  }
  return true;
}

bool verify_clean_ladder(const MessyLadder& ladder) {
  return verify_clean_ladder(ladder.graph(), ladder.rail_x(), ladder.rail_y());
}

bool verify_clean_cycle(const Graph& g, const VertexList& rail_x, const VertexList& rail_y, int r) {
  if (static_cast<long long>(rail_x.size() + rail_y.size()) < std::max(r, 3)) return false;
  if (!verify_messy_ladder(g, rail_x, rail_y)) return false;
  const auto rungs = rung_positions(g, rail_x, rail_y);
  return rungs.size() == 2;
}

bool verify_clean_fan(const Graph& g, Vertex apex, const VertexList& rim, int s) {
  if (s < 3 || !g.contains(apex) || rim.size() < 2) return false;
  if (std::find(rim.begin(), rim.end(), apex) != rim.end()) return false;
  if (!is_induced_path(g, rim)) return false;
  if (!g.adjacent(apex, rim.front()) || !g.adjacent(apex, rim.back())) return false;
  long long seen = std::count_if(rim.begin(), rim.end(), [&](Vertex w) { return g.adjacent(apex, w); });
  return seen >= s - 1;
}

Verdict check_certificate(const Graph& g, const Certificate& cert) {
  auto fail = [](std::string why) { return Verdict{false, std::move(why)}; };
  if (!all_in_graph(g, cert.vertices)) return fail("vertex outside the graph");
  const int r = cert.parameter;
  switch (cert.kind) {
    case CertificateKind::clique:
      return verify_clique(g, cert.vertices, r) ? Verdict{true, ""} : fail("not a clique of the stated order");
    case CertificateKind::independent_set:
      return verify_independent_set(g, cert.vertices, r) ? Verdict{true, ""}
                                                         : fail("not an independent set of the stated order");
    case CertificateKind::path:
      return verify_induced_path(g, cert.vertices, r) ? Verdict{true, ""}
                                                      : fail("not an induced path of the stated order");
    default:
      break;
  }
  if (cert.vertices != payload_union(cert)) return fail("vertex list differs from the payload");
  switch (cert.kind) {
    case CertificateKind::theta:
    case CertificateKind::theta_plus: {
      const auto* t = std::get_if<ThetaPayload>(&cert.payload);
      if (!t) return fail("missing theta payload");
      if (t->plus_edge != (cert.kind == CertificateKind::theta_plus)) return fail("kind disagrees with plus_edge");
      return verify_theta(g, *t, r) ? Verdict{true, ""} : fail("paths do not induce the stated theta");
    }
    case CertificateKind::messy_ladder:
    case CertificateKind::clean_ladder:
    case CertificateKind::clean_cycle: {
      const auto* l = std::get_if<LadderPayload>(&cert.payload);
      if (!l) return fail("missing rails");
      const auto order = static_cast<long long>(l->rail_x.size() + l->rail_y.size());
      if (cert.kind == CertificateKind::clean_cycle) {
        return verify_clean_cycle(g, l->rail_x, l->rail_y, r) ? Verdict{true, ""} : fail("not an induced cycle");
      }
      if (order < r) return fail("ladder order below the parameter");
      if (cert.kind == CertificateKind::messy_ladder) {
        return verify_messy_ladder(g, l->rail_x, l->rail_y) ? Verdict{true, ""} : fail("not a messy ladder");
      }
      return verify_clean_ladder(g, l->rail_x, l->rail_y) ? Verdict{true, ""} : fail("not a clean ladder");
    }
    case CertificateKind::clean_fan: {
      const auto* f = std::get_if<FanPayload>(&cert.payload);
      if (!f) return fail("missing fan payload");
      return verify_clean_fan(g, f->apex, f->rim, r) ? Verdict{true, ""} : fail("not a fan of the stated order");
    }
    default:
      return fail("unsupported kind");
  }
}

nlohmann::json to_json(const Certificate& cert) {
  nlohmann::json doc;
  doc["kind"] = std::string(to_string(cert.kind));
  doc["parameter"] = cert.parameter;
  doc["vertices"] = cert.vertices;
  if (const auto* t = std::get_if<ThetaPayload>(&cert.payload)) {
    doc["branch_u"] = t->u;
    doc["branch_v"] = t->v;
    doc["paths"] = t->paths;
    doc["plus_edge"] = t->plus_edge;
  } else if (const auto* l = std::get_if<LadderPayload>(&cert.payload)) {
    doc["rail_x"] = l->rail_x;
    doc["rail_y"] = l->rail_y;
  } else if (const auto* f = std::get_if<FanPayload>(&cert.payload)) {
    doc["apex"] = f->apex;
    doc["rim"] = f->rim;
  }
  return doc;
}

Certificate certificate_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw FormatError("certificate must be a JSON object");
    Certificate c;
    c.kind = certificate_kind_from_string(doc.at("kind").get<std::string>());
    c.parameter = doc.at("parameter").get<int>();
    c.vertices = doc.at("vertices").get<VertexList>();
    switch (c.kind) {
      case CertificateKind::theta:
      case CertificateKind::theta_plus: {
        ThetaPayload t;
        t.u = doc.at("branch_u").get<Vertex>();
        t.v = doc.at("branch_v").get<Vertex>();
        t.paths = doc.at("paths").get<std::vector<VertexList>>();
        t.plus_edge = doc.at("plus_edge").get<bool>();
        c.payload = std::move(t);
        break;
      }
      case CertificateKind::clean_ladder:
      case CertificateKind::messy_ladder:
      case CertificateKind::clean_cycle:
        c.payload = LadderPayload{doc.at("rail_x").get<VertexList>(), doc.at("rail_y").get<VertexList>()};
        break;
      case CertificateKind::clean_fan:
        c.payload = FanPayload{doc.at("apex").get<Vertex>(), doc.at("rim").get<VertexList>()};
        break;
      default:
        break;
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace unavoidable
