#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"
#include "unavoidable/certificates.hpp"
#include "unavoidable/error.hpp"
#include "unavoidable/ladder_cleaner.hpp"
#include "unavoidable/oracle.hpp"
#include "unavoidable/rng.hpp"

using namespace unavoidable;
using namespace testing_support;

namespace {

ThetaPayload canonical_theta(std::size_t s, bool plus) {
  ThetaPayload t{0, 1, {}, plus};
  for (std::size_t i = 0; i < s; ++i) t.paths.push_back({0, static_cast<Vertex>(i + 2), 1});
  return t;
}

}  // namespace

TEST(VerifyClique, Examples) {
  EXPECT_TRUE(verify_clique(complete_graph(4), iota_list(0, 4), 4));
  EXPECT_FALSE(verify_clique(cycle_graph(4), iota_list(0, 3), 3));
  const Graph k5e = from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  EXPECT_FALSE(verify_clique(k5e, iota_list(0, 5), 5));
  EXPECT_FALSE(verify_clique(complete_graph(4), VertexList{0, 0, 1}, 3));
}

TEST(VerifyTheta, Examples) {
  EXPECT_TRUE(verify_theta(k2s(3), canonical_theta(3, false), 3));
  EXPECT_TRUE(verify_theta(k2s(3, true), canonical_theta(3, true), 3));
  EXPECT_FALSE(verify_theta(k2s(3, true), canonical_theta(3, false), 3));
  EXPECT_FALSE(verify_theta(k2s(3), canonical_theta(3, true), 3));
  EXPECT_FALSE(verify_theta(k2s(3), canonical_theta(3, false), 4));
  ThetaPayload direct = canonical_theta(2, true);
  direct.paths.push_back({0, 1});
  EXPECT_FALSE(verify_theta(k2s(2, true), direct, 3));
}

TEST(VerifyTheta, K4RejectedUnderEveryLabelling) {
  const Graph k4 = complete_graph(4);
  // Every choice of branch pair, path split and plus flag.
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = 0; v < 4; ++v) {
      if (u == v) continue;
      VertexList rest;
      for (Vertex w = 0; w < 4; ++w)
        if (w != u && w != v) rest.push_back(w);
      for (int split = 0; split < 3; ++split) {
        for (bool plus : {false, true}) {
          ThetaPayload t{u, v, {}, plus};
          if (split == 0) t.paths = {{u, rest[0], v}, {u, rest[1], v}};
          if (split == 1) t.paths = {{u, rest[0], rest[1], v}, {u, rest[1], v}};
          if (split == 2) t.paths = {{u, rest[0], rest[1], v}, {u, rest[1], rest[0], v}};
          EXPECT_FALSE(verify_theta(k4, t, 2));
          EXPECT_FALSE(verify_theta(k4, t, 3));
        }
      }
    }
  }
}

TEST(VerifyTheta, SharedInternalVertexFuzz) {
  // Subdivided thetas: branch 0 and 1, paths of random length.
  SplitMix64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t s = 3 + rng.below(3);
    std::vector<Edge> e;
    ThetaPayload t{0, 1, {}, false};
    Vertex next = 2;
    for (std::size_t i = 0; i < s; ++i) {
      VertexList p{0};
      const std::size_t len = 1 + rng.below(3);
      for (std::size_t k = 0; k < len; ++k) p.push_back(next++);
      p.push_back(1);
      for (std::size_t k = 0; k + 1 < p.size(); ++k) e.emplace_back(std::min(p[k], p[k + 1]), std::max(p[k], p[k + 1]));
      t.paths.push_back(p);
    }
    const Graph g(next, e);
    ASSERT_TRUE(verify_theta(g, t, static_cast<int>(s)));
    ThetaPayload bad = t;
    const std::size_t a = rng.below(s), b = (a + 1 + rng.below(s - 1)) % s;
    bad.paths[b][1] = bad.paths[a][1];
    ASSERT_FALSE(verify_theta(g, bad, 2));
  }
}

TEST(VerifyMessyLadder, Examples) {
  const Graph c4 = cycle_graph(4);
  EXPECT_TRUE(verify_messy_ladder(c4, {0, 1}, {3, 2}));
  EXPECT_FALSE(verify_messy_ladder(c4, {0, 1}, {1, 2}));
  const Graph chord = from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {0, 3}, {2, 5}});
  EXPECT_FALSE(verify_messy_ladder(chord, {0, 1, 2}, {3, 4, 5}));
  // Missing tau.
  EXPECT_FALSE(verify_messy_ladder(path_graph(4), {0, 1}, {3, 2}));
  // Trivial rail allowed once.
  const Graph fan = from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
  EXPECT_TRUE(verify_messy_ladder(fan, {0}, {1, 2, 3}));
  EXPECT_FALSE(verify_messy_ladder(complete_graph(2), {0}, {1}));
}

TEST(VerifyCleanLadder, Examples) {
  const Graph c6 = cycle_graph(6);
  EXPECT_TRUE(verify_clean_ladder(c6, {0, 1, 2}, {5, 4, 3}));
  // Degenerate cross: e = (x0, y2), f = (x1, y1).
  const Graph deg = ladder_graph(3, 3, {{0, 0}, {0, 2}, {1, 1}, {2, 2}});
  EXPECT_TRUE(verify_clean_ladder(deg, {0, 1, 2}, {3, 4, 5}));
  // e = (x0, y3), f = (x2, y1): X-span has two edges.
  const Graph wide = ladder_graph(4, 4, {{0, 0}, {0, 3}, {2, 1}, {3, 3}});
  EXPECT_TRUE(verify_messy_ladder(wide, {0, 1, 2, 3}, {4, 5, 6, 7}));
  EXPECT_FALSE(verify_clean_ladder(wide, {0, 1, 2, 3}, {4, 5, 6, 7}));
}

TEST(VerifyCleanLadder, AgreesWithCrossEnumeration) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    LadderParams p;
    p.len_x = 2 + seed % 7;
    p.len_y = 2 + (seed / 7) % 7;
    p.rung_density = 0.05 + 0.05 * (seed % 6);
    p.relabel = seed % 2;
    const MessyLadder l = gen_messy_ladder(p, seed);
    const auto crosses = find_crosses(l);
    const bool clean = std::all_of(crosses.begin(), crosses.end(), [](const Cross& c) { return c.degenerate(); });
    ASSERT_TRUE(verify_messy_ladder(l.graph(), l.rail_x(), l.rail_y()));
    ASSERT_EQ(verify_clean_ladder(l.graph(), l.rail_x(), l.rail_y()), clean) << seed;
    ASSERT_EQ(verify_clean_ladder(l), clean);
  }
}

TEST(VerifyCertificate, DispatchExamples) {
  EXPECT_TRUE(verify_certificate(complete_graph(4), make_clique_certificate(iota_list(0, 4), 4)));
  EXPECT_FALSE(verify_certificate(path_graph(4), make_path_certificate({0, 2, 3}, 3)));
  EXPECT_TRUE(verify_certificate(path_graph(4), make_path_certificate({0, 1, 2, 3}, 4)));
  EXPECT_TRUE(verify_certificate(cycle_graph(6), make_independent_set_certificate({0, 2, 4}, 3)));
  EXPECT_FALSE(verify_certificate(cycle_graph(6), make_independent_set_certificate({0, 1, 3}, 3)));
  // C_4 as X = (x0, x1), Y = (y0, y1): the apex x0 sees only y0.
  const Graph c4 = ladder_graph(2, 2, {{0, 0}, {1, 1}});
  EXPECT_FALSE(verify_certificate(c4, make_fan_certificate(0, {2, 3}, 3)));
  const Graph fan = ladder_graph(1, 3, {{0, 0}, {0, 1}, {0, 2}});
  EXPECT_TRUE(verify_certificate(fan, make_fan_certificate(0, {1, 2, 3}, 3)));
  EXPECT_TRUE(verify_certificate(cycle_graph(5),
                                 make_ladder_certificate(CertificateKind::clean_cycle, {0, 1, 2}, {4, 3}, 5)));
  EXPECT_FALSE(verify_certificate(cycle_graph(5),
                                  make_ladder_certificate(CertificateKind::clean_cycle, {0, 1, 2}, {4, 3}, 6)));
}

TEST(VerifyCertificate, TamperedVertexListRejected) {
  Certificate c = make_theta_certificate(canonical_theta(3, false), 3);
  ASSERT_TRUE(verify_certificate(k2s(3), c));
  c.vertices.pop_back();
  const Verdict v = check_certificate(k2s(3), c);
  EXPECT_FALSE(v.ok);
  EXPECT_FALSE(v.reason.empty());
}

TEST(CertificateJson, RoundTripsEveryKind) {
  const std::vector<Certificate> certs{
      make_clique_certificate({0, 1, 2}, 3),
      make_independent_set_certificate({0, 2}, 2),
      make_path_certificate({3, 1, 2}, 3),
      make_theta_certificate(canonical_theta(3, false), 3),
      make_theta_certificate(canonical_theta(3, true), 3),
      make_ladder_certificate(CertificateKind::clean_ladder, {0, 1}, {3, 2}, 4),
      make_ladder_certificate(CertificateKind::messy_ladder, {0, 1}, {3, 2}, 4),
      make_ladder_certificate(CertificateKind::clean_cycle, {0, 1}, {3, 2}, 4),
      make_fan_certificate(0, {1, 2, 3}, 3),
  };
  for (const auto& c : certs) {
    const auto doc = to_json(c);
    const Certificate back = certificate_from_json(doc);
    EXPECT_EQ(to_json(back), doc);
    EXPECT_EQ(back.kind, c.kind);
    EXPECT_EQ(back.vertices, c.vertices);
  }
  const auto doc = to_json(make_theta_certificate(canonical_theta(3, false), 3));
  EXPECT_EQ(doc.at("kind"), "theta");
  EXPECT_EQ(doc.at("branch_u"), 0);
  EXPECT_EQ(doc.at("branch_v"), 1);
}

TEST(CertificateJson, MalformedDocumentsRejected) {
  EXPECT_THROW((void)certificate_from_json(nlohmann::json::array()), FormatError);
  EXPECT_THROW((void)certificate_from_json({{"kind", "dragon"}, {"parameter", 3}, {"vertices", {0}}}), FormatError);
  EXPECT_THROW((void)certificate_from_json({{"kind", "theta"}, {"parameter", 3}, {"vertices", {0}}}), FormatError);
  EXPECT_THROW((void)certificate_kind_from_string("tree"), FormatError);
}
