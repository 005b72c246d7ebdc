#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "straightknot/planarity.hpp"
#include "straightknot/realize.hpp"

using namespace straightknot;

namespace {

StraightWord W(std::vector<int> v) { return StraightWord(std::move(v)); }

std::vector<StraightWord> all_words(int n) {
  std::vector<StraightWord> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Interval I(Coord a, Coord b, Side s = Side::Top) { return {a, b, s}; }

}  // namespace

namespace straightknot {
void PrintTo(const Interval& iv, std::ostream* os) {
  *os << '[' << iv.a << ',' << iv.b << (iv.side == Side::Top ? "]T" : "]B");
}
}  // namespace straightknot

namespace {

}  // namespace

TEST(Semicircles, FigureEight) {
  const auto s = semicircles(W({2, 1, 4, 3}));
  // five intervals alternate T,B,T,B,T, so the closing [3,0] is on top
  EXPECT_EQ(s.top, (std::vector<Interval>{I(5, 2), I(1, 4), I(3, 0)}));
  EXPECT_EQ(s.bottom, (std::vector<Interval>{I(2, 1, Side::Bottom), I(4, 3, Side::Bottom)}));
  EXPECT_EQ(s.in_order.size(), 5u);
}

TEST(Semicircles, Augmented) {
  const auto s = semicircles(parse_augmented_word("(2,1,-1,4,3)"));
  EXPECT_EQ(s.top, (std::vector<Interval>{I(5, 2), I(1, -1), I(4, 3)}));
  EXPECT_EQ(s.bottom, (std::vector<Interval>{I(2, 1, Side::Bottom), I(-1, 4, Side::Bottom), I(3, 0, Side::Bottom)}));
}

TEST(Semicircles, Trefoil) {
  const auto s = semicircles(W({1, 2, 3}));
  EXPECT_EQ(s.top, (std::vector<Interval>{I(4, 1), I(2, 3)}));
  EXPECT_EQ(s.bottom, (std::vector<Interval>{I(1, 2, Side::Bottom), I(3, 0, Side::Bottom)}));
}

TEST(CrossRatio, Values) {
  EXPECT_EQ(cross_ratio(I(5, 2), I(1, 4)), (Rational{-8, 1}));
  EXPECT_EQ(cross_ratio(I(1, 4), I(2, 3)), (Rational{1, 4}));
  EXPECT_EQ(cross_ratio(I(1, 2), I(3, 4)), (Rational{4, 3}));
  EXPECT_EQ(cross_ratio(I(3, 1), I(2, 0)), (Rational{-1, 3}));
  EXPECT_THROW(cross_ratio(I(1, 2), I(2, 3)), DegenerateInputError);
  EXPECT_THROW(interleaved(I(1, 2), I(1, 3)), DegenerateInputError);
}

TEST(CrossRatio, SignMatchesInterleaving) {
  for (Coord a = -3; a <= 3; ++a)
    for (Coord b = -3; b <= 3; ++b)
      for (Coord c = -3; c <= 3; ++c)
        for (Coord d = -3; d <= 3; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          const Coord lo1 = std::min(a, b), hi1 = std::max(a, b), lo2 = std::min(c, d), hi2 = std::max(c, d);
          const bool crosses = (lo1 < lo2 && lo2 < hi1 && hi1 < hi2) || (lo2 < lo1 && lo1 < hi2 && hi2 < hi1);
          ASSERT_EQ(cross_ratio(I(a, b), I(c, d)).sign() < 0, crosses);
          ASSERT_EQ(interleaved(I(a, b), I(c, d)), crosses);
        }
}

TEST(ContainedCheck, Examples) {
  const auto t = contained_check(semicircles(W({1, 2, 3})), CheckMode::Full);
  EXPECT_TRUE(t.contained);
  EXPECT_EQ(t.evaluations, 2u);
  EXPECT_FALSE(contained_check(semicircles(W({2, 1, 4, 3}))).contained);
  const auto c = contained_check(semicircles(W({3, 1, 2})));
  EXPECT_FALSE(c.contained);
  ASSERT_TRUE(c.first_conflict.has_value());
  EXPECT_EQ(c.first_conflict->first, I(3, 1, Side::Bottom));
  EXPECT_EQ(c.first_conflict->second, I(2, 0, Side::Bottom));
}

TEST(ContainedCheck, FullModeCountsFloorSquareOverFour) {
  for (int n = 3; n <= 12; ++n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    const auto identity = W(p);
    std::reverse(p.begin(), p.end());
    for (const auto& w : {identity, W(p)})
      EXPECT_EQ(contained_check(semicircles(w), CheckMode::Full).evaluations, static_cast<std::size_t>(n * n / 4)) << n;
  }
}

TEST(ContainedCheck, TorusWordsAreContained) {
  for (int q : {3, 5, 7, 9}) EXPECT_TRUE(is_contained_realizable(torus_word(q))) << q;
}

TEST(IsRealizable, PaperExample) {
  const auto a = is_realizable(W({2, 1, 4, 3}));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(format_word(*a), "(2,1,-1,4,3)");
}

TEST(IsRealizable, ContainedWordsNeedNoMarkers) {
  const auto a = is_realizable(W({1, 2, 3}));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->marker_count(), 0);
  for (int n = 3; n <= 6; ++n)
    for (const auto& w : all_words(n))
      if (is_contained_realizable(w)) {
        ASSERT_EQ(is_realizable(w)->marker_count(), 0);
      }
}

TEST(IsRealizable, TwoCrossingWordFollowsOracle) {
  // (1,2,2,1) is two curls; (1,2,1,2) is the virtual two-crossing word.
  EXPECT_TRUE(oracle_realizable(W({2, 1})));
  const auto a = is_realizable(W({2, 1}));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(format_word(*a), "(2,1)");
  EXPECT_FALSE(oracle_realizable(W({1, 2})));
  EXPECT_FALSE(is_realizable(W({1, 2})).has_value());
}

TEST(Oracle, Examples) {
  EXPECT_TRUE(oracle_realizable(W({1, 2, 3})));
  EXPECT_TRUE(oracle_realizable(W({2, 1, 4, 3})));
  EXPECT_EQ(oracle_realizable(W({1, 3, 2, 4})), is_realizable(W({1, 3, 2, 4})).has_value());
  // a classic virtual Gauss word
  EXPECT_FALSE(gauss_word_planar({1, 2, 1, 2}));
  EXPECT_TRUE(gauss_word_planar({1, 2, 3, 1, 2, 3}));
}

TEST(Oracle, AgreesOnAllWordsUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_words(n)) ASSERT_EQ(is_realizable(w).has_value(), oracle_realizable(w)) << format_word(w);
}

TEST(IsRealizable, FirstEntryPruning) {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& w : all_words(n)) {
      if (w[0] == n - 1) {
        ASSERT_FALSE(is_realizable(w).has_value()) << format_word(w);
      }
    }
  }
}

TEST(IsRealizable, MarkerBoundIsSharp) {
  int best4 = -1, best7 = -1;
  for (const auto& w : all_words(4))
    if (auto a = is_realizable(w)) best4 = std::max(best4, a->marker_count());
  for (const auto& w : all_words(7))
    if (auto a = is_realizable(w)) best7 = std::max(best7, a->marker_count());
  EXPECT_EQ(best4, 1);
  EXPECT_EQ(best7, 4);
}
