#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"
#include "unavoidable/ladder_cleaner.hpp"
#include "unavoidable/oracle.hpp"

using namespace unavoidable;
using namespace testing_support;

namespace {

void expect_witnesses_verify(const Graph& g, const OracleResult& r) {
  for (const FamilyResult* f : {&r.clique, &r.theta, &r.theta_plus, &r.clean_ladder}) {
    EXPECT_EQ(f->present, f->witness.has_value());
    if (f->witness) EXPECT_TRUE(verify_certificate(g, *f->witness));
  }
}

}  // namespace

TEST(Oracle, Examples) {
  const auto c5 = brute_force_structures(cycle_graph(5), 3);
  EXPECT_TRUE(c5.clean_ladder.present);
  EXPECT_FALSE(c5.clique.present);
  EXPECT_FALSE(c5.theta.present);
  EXPECT_FALSE(c5.theta_plus.present);
  EXPECT_TRUE(brute_force_structures(complete_graph(4), 4).clique.present);
  const auto t = brute_force_structures(k2s(3), 3);
  EXPECT_TRUE(t.theta.present);
  EXPECT_FALSE(t.theta_plus.present);
  const auto tp = brute_force_structures(k2s(3, true), 3);
  EXPECT_TRUE(tp.theta_plus.present);
  EXPECT_FALSE(tp.theta.present);
  EXPECT_THROW((void)brute_force_structures(cycle_graph(11), 3), std::invalid_argument);
  EXPECT_NO_THROW((void)brute_force_structures(cycle_graph(11), 3, 12));
}

TEST(Oracle, MinimalWitnesses) {
  // Proper induced subgraphs of a cycle are linear forests, never ladders.
  const auto c = brute_force_structures(cycle_graph(7), 3);
  ASSERT_TRUE(c.clean_ladder.present);
  EXPECT_EQ(c.clean_ladder.witness->vertices.size(), 7u);
  // Subdivided theta with paths of 2, 3 and 4 internal vertices.
  const Graph g = from_edges(11, {{0, 2}, {2, 3}, {1, 3}, {0, 4}, {4, 5}, {5, 6}, {1, 6},
                                  {0, 7}, {7, 8}, {8, 9}, {9, 10}, {1, 10}});
  const auto th = brute_force_structures(g, 3, 11);
  ASSERT_TRUE(th.theta.present);
  EXPECT_EQ(th.theta.witness->vertices.size(), 11u);
  expect_witnesses_verify(g, th);
}

TEST(Oracle, WitnessesVerifyOnCorpus) {
  for (int n = 3; n <= 7; ++n)
    for (const Graph& g : corpus(n))
      for (int r = 3; r <= 5; ++r) expect_witnesses_verify(g, brute_force_structures(g, r));
}

TEST(Oracle, CleanLadderAgreesWithDefinitionOnTinyGraphs) {
  // A graph on exactly k vertices is itself a clean ladder of order k iff
  // some split into rails verifies; compare against the oracle's answer.
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : corpus(n)) {
      bool whole = false;
      std::vector<Vertex> perm = iota_list(0, n);
      do {
        for (int cut = 1; cut < n && !whole; ++cut) {
          VertexList x(perm.begin(), perm.begin() + cut), y(perm.begin() + cut, perm.end());
          whole |= verify_clean_ladder(g, x, y);
        }
      } while (!whole && std::next_permutation(perm.begin(), perm.end()));
      const auto r = brute_force_structures(g, n);
      EXPECT_EQ(r.clean_ladder.present, whole) << encode_graph6(g);
    }
  }
}

TEST(Generators, TwoConnectedByConstruction) {
  const Graph t = gen_two_connected(3, 5);
  EXPECT_EQ(t, complete_graph(3));
  EXPECT_TRUE(is_two_connected(gen_two_connected(8, 1)));
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Graph g = gen_two_connected(12, seed);
    ASSERT_EQ(g.order(), 12u);
    ASSERT_TRUE(is_two_connected(g));
  }
  EXPECT_EQ(gen_two_connected(20, 42), gen_two_connected(20, 42));
  EXPECT_NE(gen_two_connected(20, 42), gen_two_connected(20, 43));
  EXPECT_THROW((void)gen_two_connected(2, 1), std::invalid_argument);
}

TEST(Generators, PinnedOutputs) {
  // Fixed generator algorithm: these encodings must never change.
  EXPECT_EQ(encode_graph6(gen_two_connected(8, 1)), "G_wpRg");
  EXPECT_EQ(encode_graph6(gen_two_connected(10, 2024)), "IAc@@QTX_");
  EXPECT_TRUE(is_two_connected(decode_graph6("IAc@@QTX_")));
}

TEST(Generators, MessyLadders) {
  LadderParams zero;
  zero.rung_density = 0;
  EXPECT_TRUE(find_crosses(gen_messy_ladder(zero, 3)).empty());
  LadderParams one;
  one.pattern = LadderPattern::one_degenerate_cross;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const MessyLadder l = gen_messy_ladder(one, seed);
    const auto crosses = find_crosses(l);
    ASSERT_EQ(crosses.size(), 1u);
    ASSERT_TRUE(crosses[0].degenerate());
    ASSERT_TRUE(verify_clean_ladder(l));
  }
  LadderParams fan;
  fan.len_x = 1;
  fan.len_y = 7;
  fan.rung_density = 0.5;
  const MessyLadder f = gen_messy_ladder(fan, 9);
  EXPECT_EQ(f.rail_x().size(), 1u);
  EXPECT_TRUE(verify_messy_ladder(f.graph(), f.rail_x(), f.rail_y()));
  LadderParams bad;
  bad.len_x = 1;
  bad.len_y = 1;
  EXPECT_THROW((void)gen_messy_ladder(bad, 1), std::invalid_argument);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    LadderParams p;
    p.len_x = 1 + seed % 9;
    p.len_y = 2 + seed % 7;
    p.pattern = static_cast<LadderPattern>(seed % 4);
    p.crosses = 1 + seed % 3;
    p.relabel = true;
    if (p.pattern == LadderPattern::one_degenerate_cross) p.len_x = std::max<std::size_t>(p.len_x, 2);
    const MessyLadder l = gen_messy_ladder(p, seed);
    ASSERT_TRUE(verify_messy_ladder(l.graph(), l.rail_x(), l.rail_y()));
  }
}

TEST(Corpus, AllFiveVertexGraphsContainAStructure) {
  std::ifstream in(data_path("biconnected_n5.g6"));
  std::vector<CorpusRecord> records;
  const auto summary = verify_theorem_on_corpus(in, {}, [&](const CorpusRecord& r) { records.push_back(r); });
  EXPECT_EQ(summary.graphs, 10u);
  EXPECT_EQ(summary.with_structure, 10u);
  EXPECT_EQ(summary.agreements, 10u);
  EXPECT_EQ(summary.containment_failures, 0u);
  ASSERT_EQ(records.size(), 10u);
  for (std::size_t i = 0; i < records.size(); ++i) EXPECT_EQ(records[i].line, i + 1);
}

TEST(Corpus, SkipsNonTwoConnectedAndEmpty) {
  std::istringstream mixed(encode_graph6(path_graph(4)) + "\n" + encode_graph6(cycle_graph(5)) + "\n");
  std::vector<CorpusRecord> records;
  const auto summary = verify_theorem_on_corpus(mixed, {}, [&](const CorpusRecord& r) { records.push_back(r); });
  EXPECT_EQ(summary.skipped, 1u);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_TRUE(records[0].skipped);
  EXPECT_FALSE(records[0].note.empty());
  std::istringstream empty;
  const auto none = verify_theorem_on_corpus(empty, {});
  EXPECT_EQ(none.graphs, 0u);
  EXPECT_FALSE(none.minimal_order);
  std::istringstream broken("Bww\n");
  EXPECT_THROW((void)verify_theorem_on_corpus(broken, {}), FormatError);
}

TEST(Corpus, WorkersDoNotChangeResults) {
  std::ifstream a(data_path("biconnected_n6.g6")), b(data_path("biconnected_n6.g6"));
  CorpusOptions one{4, kDefaultOracleCap, 1, true, {}};
  CorpusOptions four{4, kDefaultOracleCap, 4, true, {}};
  std::vector<std::string> ra, rb;
  (void)verify_theorem_on_corpus(a, one, [&](const CorpusRecord& r) { ra.push_back(to_json(r).dump()); });
  (void)verify_theorem_on_corpus(b, four, [&](const CorpusRecord& r) { rb.push_back(to_json(r).dump()); });
  EXPECT_EQ(ra, rb);
}
