#include <gtest/gtest.h>

#include <random>

#include "hyperind/shifting.hpp"

using namespace hyperind;

namespace {

Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int r) {
  Hypergraph h(n, r);
  int keep = static_cast<int>(rng() % 100);
  Hypergraph all = complete_hypergraph(n, r);
  for (const auto& e : all.edges())
    if (static_cast<int>(rng() % 100) < keep) h.add(e);
  return h;
}

}  // namespace

TEST(Shift, Examples) {
  EXPECT_EQ(shift(Hypergraph(4, 3, {{1, 2, 3}}), {1, 0}), Hypergraph(4, 3, {{0, 2, 3}}));
  Hypergraph both(4, 3, {{1, 2, 3}, {0, 2, 3}});
  EXPECT_EQ(shift(both, {1, 0}), both);
  Hypergraph kept(4, 3, {{0, 1, 2}, {1, 2, 3}});
  EXPECT_EQ(shift(kept, {3, 0}), kept);
  EXPECT_THROW(shift(kept, {0, 3}), std::invalid_argument);
}

TEST(Shift, PreservesSizeAndNeverLowersCounts) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 150; ++t) {
    int r = 2 + t % 3;
    int n = r + 1 + static_cast<int>(rng() % (9 - r));
    Hypergraph h = random_hypergraph(rng, n, r);
    int i = 1 + static_cast<int>(rng() % (n - 1));
    int j = static_cast<int>(rng() % i);
    Hypergraph g = shift(h, {i, j});
    EXPECT_EQ(g.size(), h.size());
    for (int s = 1; s <= r; ++s) EXPECT_GE(count_s_independent_enumerate(g, s), count_s_independent_enumerate(h, s));
  }
}

TEST(CompoundShift, Examples) {
  auto h = compound_shift(Hypergraph(6, 3, {{2, 3, 4}}), {2, 3, 4}, {0, 1, 2});
  EXPECT_TRUE(h.contains({0, 1, 2}));
  Hypergraph g(6, 3, {{1, 3, 5}, {0, 3, 5}});
  EXPECT_EQ(compound_shift(g, {1, 3, 5}, {1, 3, 5}), g);
  EXPECT_TRUE(compound_shift(g, {1, 3, 5}, {1, 2, 4}).contains({1, 2, 4}));
  EXPECT_THROW(compound_shift(g, {0, 3, 5}, {1, 2, 4}), std::invalid_argument);
}

TEST(CompoundShift, TargetAlwaysPresent) {
  std::mt19937_64 rng(5);
  auto all = complete_hypergraph(7, 3);
  std::vector<Edge> edges(all.edges().begin(), all.edges().end());
  for (int t = 0; t < 300; ++t) {
    Hypergraph h = random_hypergraph(rng, 7, 3);
    if (h.size() == 0) continue;
    std::vector<Edge> present(h.edges().begin(), h.edges().end());
    Edge b = present[rng() % present.size()];
    Edge a = edges[rng() % edges.size()];
    if (!compression_le(a, b)) continue;
    EXPECT_TRUE(compound_shift(h, b, a).contains(a));
  }
}

TEST(IsShifted, Examples) {
  EXPECT_TRUE(is_shifted(colex_initial(6, 3, 4)));
  EXPECT_FALSE(is_shifted(Hypergraph(5, 3, {{0, 2, 3}})));
  EXPECT_TRUE(is_shifted(Hypergraph(5, 3)));
  EXPECT_TRUE(is_shifted(complete_hypergraph(6, 3)));
}

TEST(FullyShift, Examples) {
  auto c = colex_initial(6, 3, 7);
  EXPECT_EQ(fully_shift(c), c);
  EXPECT_EQ(fully_shift(Hypergraph(5, 3, {{2, 3, 4}})), Hypergraph(5, 3, {{0, 1, 2}}));
}

TEST(FullyShift, ResultIsShiftedAndNoWorse) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    int r = 2 + t % 3;
    Hypergraph h = random_hypergraph(rng, 8, r);
    Hypergraph g = fully_shift(h);
    EXPECT_TRUE(is_shifted(g));
    EXPECT_EQ(g.size(), h.size());
    for (int s = 1; s <= r; ++s) EXPECT_GE(count_s_independent_enumerate(g, s), count_s_independent_enumerate(h, s));
  }
}

TEST(MinimalEdge, Examples) {
  EXPECT_EQ(minimal_edge({3, 5}, 7, 3, 2), (Edge{0, 3, 5}));
  EXPECT_EQ(minimal_edge({0, 1}, 7, 3, 2), (Edge{0, 1, 2}));
  EXPECT_EQ(minimal_edge({2, 5}, 7, 4, 2), (Edge{0, 1, 2, 5}));
  EXPECT_THROW(minimal_edge({2}, 7, 3, 2), std::invalid_argument);
}

TEST(ShiftedIndependence, Examples) {
  Hypergraph h(5, 3, {{0, 1, 2}});
  EXPECT_FALSE(is_s_independent_shifted(h, {0, 1}, 2));
  EXPECT_FALSE(is_s_independent_shifted(h, {1, 2}, 2));
  EXPECT_TRUE(is_s_independent_shifted(h, {2, 3}, 2));
  EXPECT_THROW(is_s_independent_shifted(Hypergraph(5, 3, {{1, 2, 3}}), {0}, 2, true), std::invalid_argument);
}

TEST(ShiftedIndependence, AgreesWithDefinition) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 60; ++t) {
    int r = 2 + t % 3;
    Hypergraph h = fully_shift(random_hypergraph(rng, 7, r));
    for (int s = 1; s <= r; ++s)
      for (std::uint32_t m = 0; m < 128; ++m) {
        std::vector<int> I;
        for (int v = 0; v < 7; ++v)
          if (m >> v & 1) I.push_back(v);
        EXPECT_EQ(is_s_independent_shifted(h, I, s), is_s_independent(h, I, s));
      }
  }
}
