#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hyperind/downset.hpp"
#include "hyperind/named_graph.hpp"

using namespace hyperind;

namespace {

std::uint64_t summed_cost(const Downset& d) {
  std::uint64_t c = 0;
  for (Cell x : d.cells()) c += cell_cost(x, d.n());
  return c;
}

std::uint64_t summed_space(const Downset& d) {
  std::uint64_t s = 0;
  for (Cell x : d.cells()) s += cell_space(x);
  return s;
}

Downset random_downset(std::mt19937_64& rng, int n) {
  std::vector<int> h;
  int cap = n - 1;
  for (int c = 1; c <= n - 2 && cap >= c + 1; ++c) {
    if (rng() % 5 == 0) break;
    cap = c + 1 + static_cast<int>(rng() % (cap - c));
    h.push_back(cap);
  }
  return Downset(n, h);
}

}  // namespace

TEST(Cell, CostAndSpaceExamples) {
  EXPECT_EQ(cell_cost({1, 2}, 7), 64u);
  EXPECT_EQ(cell_cost({2, 3}, 7), 8u);
  EXPECT_EQ(cell_cost({4, 6}, 7), 1u);
  EXPECT_EQ(cell_space({3, 5}), 3u);
  EXPECT_EQ(cell_space({1, 6}), 1u);
  EXPECT_EQ(cell_space({5, 6}), 5u);
  EXPECT_THROW(cell_cost({3, 3}, 7), std::invalid_argument);
  EXPECT_THROW(cell_cost({2, 7}, 7), std::invalid_argument);
}

// The cost of {k,i,j} is the number of 2-independent sets it destroys when
// added to a shifted hypergraph; check against brute force on a chain of
// shifted hypergraphs built cell by cell in lex order.
TEST(Cell, CostIsMarginalLoss) {
  for (int n = 4; n <= 9; ++n) {
    Hypergraph h(n, 3);
    BigCount before = count_s_independent_enumerate(h, 2);
    for (Cell c : Downset::full(n).cells()) {
      h.add({0, c.i, c.j});
      BigCount after = count_s_independent_enumerate(h, 2);
      EXPECT_EQ(before - after, BigCount(cell_cost(c, n))) << to_string(c);
      before = after;
    }
  }
}

TEST(Downset, Examples) {
  EXPECT_EQ(downset_cost(Downset::full(7)), 120u);
  EXPECT_EQ(downset_cost(Downset(7, {})), 0u);
  EXPECT_EQ(downset_space(Downset(7, {})), 0u);
  Downset d(7, {4, 4, 4});
  EXPECT_EQ(downset_cost(d), 104u);
  EXPECT_EQ(downset_space(d), 10u);
  EXPECT_EQ(i2_of_downset(d), BigCount(24));
  EXPECT_EQ(i2_of_downset(Downset(5, {})), BigCount(32));
  for (int n = 4; n <= 40; ++n) EXPECT_EQ(i2_of_downset(Downset::full(n)), BigCount(n + 1));
}

TEST(Downset, Validation) {
  EXPECT_THROW(Downset(7, {4, 5}), std::invalid_argument);
  EXPECT_THROW(Downset(7, {7}), std::invalid_argument);
  EXPECT_THROW(Downset(7, {6, 2}), std::invalid_argument);
  EXPECT_THROW(Downset(64, {}), std::invalid_argument);
  EXPECT_THROW(Downset::from_cells(7, {{1, 2}, {1, 4}}), std::invalid_argument);
  EXPECT_THROW(Downset::from_cells(7, {{2, 3}}), std::invalid_argument);
  EXPECT_EQ(Downset::from_cells(7, {{1, 2}, {1, 3}, {2, 3}}), Downset(7, {3, 3}));
}

TEST(Downset, ClosedFormsMatchCellSums) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 2000; ++t) {
    Downset d = random_downset(rng, 3 + static_cast<int>(rng() % 61));
    EXPECT_EQ(downset_cost(d), summed_cost(d));
    EXPECT_EQ(downset_space(d), summed_space(d));
  }
  for (int n = 3; n <= 63; ++n) EXPECT_EQ(downset_space(Downset::full(n)), total_space(n));
}

TEST(DownsetOf, Examples) {
  Hypergraph h(6, 3, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}});
  EXPECT_EQ(downset_of(h), Downset(6, {4, 3}));
  h.add({1, 2, 3});
  EXPECT_EQ(downset_of(h), Downset(6, {4, 3}));
  EXPECT_EQ(downset_of(complete_hypergraph(8, 3)), Downset::full(8));
  EXPECT_THROW(downset_of(Hypergraph(6, 3, {{0, 2, 3}})), std::invalid_argument);
}

TEST(Corners, Examples) {
  Downset a(7, {4, 4, 4});
  EXPECT_EQ(corners(a), (std::vector<Cell>{{3, 4}}));
  EXPECT_TRUE(horizontal_distance_vector(a).empty());
  Downset b(8, {6, 4, 4});
  EXPECT_EQ(corners(b), (std::vector<Cell>{{1, 6}, {3, 4}}));
  EXPECT_EQ(horizontal_distance_vector(b), (std::vector<int>{2}));
  EXPECT_TRUE(corners(Downset(8, {})).empty());
}

TEST(LexOrder, Examples) {
  Downset a(7, {4, 4, 4}), b(7, {6, 5});
  EXPECT_EQ(downset_lex_compare(a, a), std::strong_ordering::equal);
  EXPECT_EQ(downset_lex_compare(b, a), std::strong_ordering::less);
  EXPECT_TRUE(lex_earlier(b, a));
}

// Independent check: the earlier downset holds the lex-least cell of the
// symmetric difference, computed here over explicit cell sets.
TEST(LexOrder, AgreesWithSymmetricDifference) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 3000; ++t) {
    int n = 4 + static_cast<int>(rng() % 10);
    Downset a = random_downset(rng, n), b = random_downset(rng, n);
    auto ca = a.cells(), cb = b.cells();
    std::set<Cell> sa(ca.begin(), ca.end()), sb(cb.begin(), cb.end());
    std::optional<Cell> least;
    for (Cell c : sa)
      if (!sb.count(c) && (!least || c < *least)) least = c;
    for (Cell c : sb)
      if (!sa.count(c) && (!least || c < *least)) least = c;
    auto want = !least ? std::strong_ordering::equal : sa.count(*least) ? std::strong_ordering::less : std::strong_ordering::greater;
    EXPECT_EQ(downset_lex_compare(a, b), want);
  }
}

TEST(LexStyle, Examples) {
  EXPECT_EQ(is_231_lex_style(Downset(7, {6, 3})), LexStyle::full_initial);
  EXPECT_EQ(is_231_lex_style(Downset(7, {5, 4})), LexStyle::missing_one);
  EXPECT_EQ(is_231_lex_style(Downset(7, {4, 4, 4})), LexStyle::no);
  EXPECT_EQ(is_231_lex_style(Downset(7, {})), LexStyle::full_initial);
  EXPECT_EQ(is_231_lex_style(Downset::full(7)), LexStyle::full_initial);
}

TEST(Persistent, Members) {
  for (int n = 10; n <= 40; ++n) {
    auto ps = persistent_exception_downsets(n);
    EXPECT_EQ(ps.size(), 5u);
    bool has21 = false;
    for (const auto& p : ps) {
      EXPECT_LE(p.downset.columns(), 4);
      EXPECT_TRUE(matches_expression(downset_shadow(p.downset), p.expression)) << n << " " << p.expression;
      EXPECT_TRUE(is_persistent_exception(p.downset));
      EXPECT_EQ(is_231_lex_style(p.downset), LexStyle::no);
      has21 = has21 || p.downset == Downset(n, {3, 3});
    }
    EXPECT_TRUE(has21);
  }
  EXPECT_THROW(persistent_exception_downsets(6), std::invalid_argument);
}

TEST(Realize, Examples) {
  EXPECT_EQ(realize(Downset(5, {2}), 1), Hypergraph(5, 3, {{0, 1, 2}}));
  EXPECT_EQ(realize(Downset(5, {3, 3}), 4), Hypergraph(5, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
  EXPECT_EQ(realize(Downset(6, {4, 4}), 5).size(), 5u);
  EXPECT_THROW(realize(Downset(6, {4, 4}), 4), std::out_of_range);
  EXPECT_THROW(realize(Downset(6, {4, 4}), 8), std::out_of_range);
}

// Every realization is shifted, has the given downset, and its brute-force
// i_2 equals 2^n - C(D).
TEST(Realize, ShiftedWithMatchingCount) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 300; ++t) {
    int n = 4 + static_cast<int>(rng() % 9);
    Downset d = random_downset(rng, n);
    std::uint64_t lo = d.size(), hi = downset_space(d);
    std::uint64_t e = lo + (hi > lo ? rng() % (hi - lo + 1) : 0);
    Hypergraph h = realize(d, e);
    EXPECT_EQ(h.size(), e);
    EXPECT_TRUE(is_shifted(h));
    EXPECT_EQ(downset_of(h), d);
    EXPECT_EQ(count_s_independent_enumerate(h, 2), i2_of_downset(d));
  }
}

TEST(Extend, CostDoublesSpaceStays) {
  Downset d(9, {6, 5, 4});
  EXPECT_EQ(extend(d, 9), d);
  for (int m = 9; m <= 20; ++m) {
    Downset x = extend(d, m);
    EXPECT_EQ(downset_space(x), downset_space(d));
    EXPECT_EQ(downset_cost(x), downset_cost(d) << (m - 9));
  }
  EXPECT_THROW(extend(d, 8), std::invalid_argument);
}

TEST(Format, RoundTrip) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 200; ++t) {
    Downset d = random_downset(rng, 3 + static_cast<int>(rng() % 30));
    EXPECT_EQ(parse_downset(format_downset(d)), d);
  }
  EXPECT_EQ(format_downset(Downset(7, {4, 4, 4})), "n=7 heights=4,4,4");
  EXPECT_EQ(parse_downset("n=5 heights="), Downset(5, {}));
  EXPECT_THROW(parse_downset("n=7 heights=4,x"), std::invalid_argument);
  EXPECT_THROW(parse_downset("heights=4"), std::invalid_argument);
  EXPECT_THROW(parse_downset("n=7 heights=4,5"), std::invalid_argument);
}
