#include <gtest/gtest.h>

#include "unavoidable/thresholds.hpp"

using namespace unavoidable;

namespace {

// Term-by-term sum, independent of the closed form used by the library.
BigInt shortp_by_sum(const BigInt& q, const BigInt& r) {
  const BigInt d = 1 + (q - 2) * (r - 1);
  BigInt total = 2, term = 1;
  for (BigInt i = 1; i < q; ++i) {
    term *= d - 1;
    total += term;
  }
  return total;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt b = 1;
  for (unsigned i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

BigInt value(const Threshold& t) { return std::get<BigInt>(t); }

ThresholdConfig identity_grs() { return parse_grs_config("identity"); }

}  // namespace

TEST(Thresholds, PublishedArithmetic) {
  EXPECT_EQ(f_bridges(5), 5);
  EXPECT_EQ(f_bridges(6), 9);
  EXPECT_EQ(f_bridges(7), 15);
  EXPECT_EQ(f_shortp(3, 3), 8);
  EXPECT_EQ(f_shortp(3, 4), 14);
  EXPECT_EQ(f_dist(5, 5), 10);
  EXPECT_EQ(f_crossrungs(5, 5), 54);
  EXPECT_EQ(f_spans(5, 5), 144);
}

TEST(Thresholds, SmallParameterValues) {
  for (int r = 2; r < 10; ++r) EXPECT_EQ(f_shortp(2, r), 2);
  EXPECT_EQ(f_dist(4, 4), 3);
  EXPECT_EQ(f_crossrungs(4, 4), 3);
  EXPECT_EQ(f_spans(4, 4), 14);
  EXPECT_EQ(f_manycross(4, 1), 40);
  EXPECT_EQ(f_messyfinite(3), 40);
  EXPECT_EQ(f_messyfinite(4), 40);
  EXPECT_EQ(f_bridges(40), 1335);
  EXPECT_EQ(f_longPmessyL(9), f_bridges(9));
  for (unsigned q = 1; q < 12; ++q) EXPECT_EQ(ramsey_upper(q), binomial(2 * q - 2, q - 1));
}

TEST(Thresholds, ShortpMatchesTermwiseSum) {
  for (int q = 2; q < 30; ++q)
    for (int r = 2; r < 30; ++r) ASSERT_EQ(f_shortp(q, r), shortp_by_sum(q, r)) << q << "," << r;
}

TEST(Thresholds, DistFormulaAgainstDirectExpansion) {
  for (int r = 4; r < 20; ++r) {
    for (int s = 3; s < 20; ++s) {
      EXPECT_EQ(f_dist(r, s), 2 * ((s - 3) * (r - 4) + (s - 2)) + r - 5);
      EXPECT_EQ(f_spans(r, s), 2 * (f_crossrungs(r, s) + 2 * f_dist(r, s) - 2));
    }
  }
}

TEST(Thresholds, RangeErrors) {
  EXPECT_THROW((void)f_shortp(1, 3), std::invalid_argument);
  EXPECT_THROW((void)f_bridges(3), std::invalid_argument);
  EXPECT_THROW((void)f_dist(3, 5), std::invalid_argument);
  EXPECT_THROW((void)f_messyfinite(2), std::invalid_argument);
  EXPECT_THROW((void)f_main(2, identity_grs()), std::invalid_argument);
  EXPECT_THROW((void)evaluate_threshold("f_nothing", {}, {}), std::invalid_argument);
  EXPECT_THROW((void)parse_grs_config("bogus"), std::invalid_argument);
}

TEST(Thresholds, UnconfiguredGrsIsUnbounded) {
  const ThresholdConfig none;
  EXPECT_TRUE(std::holds_alternative<Unbounded>(f_longP(3, 5, none)));
  EXPECT_TRUE(std::holds_alternative<Unbounded>(f_main(3, none)));
  EXPECT_EQ(to_string(f_main(4, none)), "unbounded");
  EXPECT_EQ(saturate(f_main(4, none)), std::numeric_limits<std::size_t>::max());
  EXPECT_FALSE(at_least(1000000, f_main(4, none)));
}

TEST(Thresholds, CompositionWithIdentityGrs) {
  const auto cfg = identity_grs();
  // The identity hook returns its last argument.
  EXPECT_EQ(value(f_longP(3, 15, cfg)), 15);
  EXPECT_EQ(value(f_longp(3, 7, cfg)), value(f_longP(3, f_bridges(7), cfg)));
  EXPECT_EQ(value(f_messy_to_clean(3, cfg)), f_bridges(40));
  const BigInt main3 = value(f_main(3, cfg));
  EXPECT_EQ(main3, shortp_by_sum(1335, 3));
  EXPECT_GT(to_string(f_main(3, cfg)).size(), 4000u);
}

TEST(Thresholds, ConstantGrsHook) {
  const auto cfg = parse_grs_config("const:77");
  EXPECT_EQ(value(f_longP(3, 5, cfg)), 77);
}

TEST(Thresholds, RegistryEvaluatesByName) {
  const std::vector<BigInt> a{7};
  EXPECT_EQ(to_string(evaluate_threshold("f_bridges", a, {})), "15");
  const std::vector<BigInt> b{5, 5};
  EXPECT_EQ(to_string(evaluate_threshold("f_spans", b, {})), "144");
  EXPECT_THROW((void)evaluate_threshold("f_spans", a, {}), std::invalid_argument);
  auto names = threshold_names();
  EXPECT_NE(std::find(names.begin(), names.end(), "f_main"), names.end());
}
