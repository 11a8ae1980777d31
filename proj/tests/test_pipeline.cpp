#include <gtest/gtest.h>

#include "support.hpp"
#include "unavoidable/oracle.hpp"
#include "unavoidable/pipeline.hpp"

using namespace unavoidable;
using namespace testing_support;

namespace {

bool admissible(CertificateKind k) {
  return k == CertificateKind::clique || k == CertificateKind::theta || k == CertificateKind::theta_plus ||
         k == CertificateKind::clean_ladder;
}

}  // namespace

TEST(Pipeline, K2_5GivesTheta) {
  const Graph g = k2s(5);
  const auto rep = extract_unavoidable(g, 4);
  ASSERT_TRUE(rep.certificate);
  EXPECT_EQ(rep.certificate->kind, CertificateKind::theta);
  EXPECT_TRUE(verify_certificate(g, *rep.certificate));
  EXPECT_TRUE(brute_force_structures(g, 4).theta.present);
}

TEST(Pipeline, K9GivesClique) {
  const Graph g = complete_graph(9);
  const auto rep = extract_unavoidable(g, 5);
  ASSERT_TRUE(rep.certificate);
  EXPECT_EQ(rep.certificate->kind, CertificateKind::clique);
  EXPECT_GE(rep.certificate->vertices.size(), 5u);
  EXPECT_TRUE(verify_certificate(g, *rep.certificate));
}

TEST(Pipeline, LongCycleGivesCleanLadder) {
  const Graph g = cycle_graph(30);
  const auto rep = extract_unavoidable(g, 6);
  ASSERT_TRUE(rep.certificate);
  EXPECT_EQ(rep.certificate->kind, CertificateKind::clean_ladder);
  EXPECT_TRUE(verify_certificate(g, *rep.certificate));
  EXPECT_EQ(rep.ladder_subtype, "cycle");
  EXPECT_FALSE(rep.guarantee_met);
}

TEST(Pipeline, PreconditionsAndDeterminism) {
  EXPECT_THROW((void)extract_unavoidable(path_graph(5), 3), std::invalid_argument);
  EXPECT_THROW((void)extract_unavoidable(cycle_graph(5), 2), std::invalid_argument);
  const Graph g = gen_two_connected(25, 3);
  EXPECT_EQ(to_json(extract_unavoidable(g, 4)), to_json(extract_unavoidable(g, 4)));
}

TEST(Pipeline, TraceAndJsonShape) {
  const auto rep = extract_unavoidable(cycle_graph(12), 4);
  ASSERT_FALSE(rep.trace.empty());
  EXPECT_EQ(rep.trace.front().stage, "short_path");
  const auto doc = to_json(rep);
  EXPECT_TRUE(doc.contains("certificate"));
  EXPECT_TRUE(doc.contains("trace"));
  EXPECT_TRUE(doc.contains("guarantee_met"));
  for (const auto& t : doc.at("trace")) {
    for (const char* key : {"stage", "outcome", "input_size", "output_size"}) EXPECT_TRUE(t.contains(key));
  }
}

TEST(Pipeline, SoundAndClosedOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    const Graph g = gen_two_connected(3 + seed % 40, seed);
    const int r = 3 + static_cast<int>(seed % 4);
    const auto rep = extract_unavoidable(g, r);
    if (!rep.certificate) continue;
    ASSERT_TRUE(admissible(rep.certificate->kind));
    ASSERT_TRUE(verify_certificate(g, *rep.certificate)) << seed;
    ASSERT_GE(rep.certificate->parameter, r);
  }
}

TEST(Pipeline, ContainedInOracleOnSmallCorpus) {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : corpus(n)) {
      for (int r = 3; r <= 4; ++r) {
        const auto rep = extract_unavoidable(g, r);
        const auto oracle = brute_force_structures(g, r);
        if (rep.certificate) {
          ASSERT_TRUE(verify_certificate(g, *rep.certificate));
          ASSERT_TRUE(oracle.family(rep.certificate->kind).present) << encode_graph6(g);
        }
        const bool complete = g.size() * 2 == g.order() * (g.order() - 1);
        if (r == 3 && !complete) ASSERT_TRUE(rep.certificate) << encode_graph6(g);
        if (oracle.any() && !rep.certificate) ASSERT_TRUE(complete) << encode_graph6(g);
      }
    }
  }
}
