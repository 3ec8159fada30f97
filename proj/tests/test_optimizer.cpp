#include <gtest/gtest.h>

#include <set>

#include "hyperind/optimizer.hpp"

using namespace hyperind;

TEST(Enumerate, Counts) {
  EXPECT_EQ(all_downsets(3).size(), 2u);
  EXPECT_EQ(all_downsets(4).size(), 4u);
  EXPECT_EQ(all_downsets(5).size(), 8u);
  for (int n = 3; n <= 14; ++n) EXPECT_EQ(all_downsets(n).size(), std::size_t{1} << (n - 2));
  EXPECT_THROW(all_downsets(17), std::domain_error);
}

TEST(Enumerate, DistinctAndInLexOrder) {
  auto ds = all_downsets(9);
  std::set<std::vector<int>> seen;
  for (std::size_t k = 0; k < ds.size(); ++k) {
    EXPECT_TRUE(seen.insert(ds[k].heights()).second);
    if (k) {
      EXPECT_TRUE(lex_earlier(ds[k - 1], ds[k]));
    }
  }
}

TEST(Optimize, Examples) {
  auto r = optimize(7, 10);
  EXPECT_EQ(r.min_cost, 104u);
  EXPECT_EQ(r.witness, Downset(7, {4, 4, 4}));
  EXPECT_EQ(r.tag, Tag::transient_exception);
  EXPECT_EQ(r.shadow, "K_5");
  for (int n = 3; n <= 20; ++n) {
    auto z = optimize(n, 0);
    EXPECT_EQ(z.min_cost, 0u);
    EXPECT_EQ(z.witness.columns(), 0);
  }
  auto one = optimize(7, 1);
  EXPECT_EQ(one.witness, Downset(7, {2}));
  EXPECT_EQ(one.min_cost, 64u);
}

TEST(Optimize, Infeasible) {
  try {
    optimize(7, 36);
    FAIL() << "expected infeasible";
  } catch (const InfeasibleError& e) {
    EXPECT_EQ(e.full_record().witness, Downset::full(7));
    EXPECT_EQ(e.full_record().e, 35u);
    EXPECT_EQ(e.full_record().min_cost, 120u);
  }
  EXPECT_THROW(optimize(2, 0), std::invalid_argument);
  EXPECT_THROW(optimize(64, 0), std::invalid_argument);
}

TEST(Optimize, MatchesExhaustiveScan) {
  for (int n = 3; n <= 11; ++n)
    for (std::uint64_t e = 0; e <= total_space(n); ++e) {
      auto a = optimize(n, e);
      auto b = optimize_by_enumeration(n, e);
      EXPECT_EQ(a.min_cost, b.min_cost) << n << " " << e;
      EXPECT_EQ(a.witness, b.witness) << n << " " << e;
      EXPECT_EQ(a.optima, b.optima) << n << " " << e;
    }
}

TEST(Pareto, Frontier) {
  auto f = pareto(7);
  ASSERT_EQ(f.entries.size(), 36u);
  EXPECT_EQ(f.entries.front().min_cost, 0u);
  EXPECT_EQ(f.entries.back().min_cost, 120u);
  EXPECT_EQ(f.entries.back().witness, Downset::full(7));
  for (std::size_t k = 1; k < f.entries.size(); ++k) EXPECT_LE(f.entries[k - 1].min_cost, f.entries[k].min_cost);
  EXPECT_EQ(f.entries[10].min_cost, 104u);
  for (const auto& r : f.entries) {
    auto o = optimize(7, r.e);
    EXPECT_EQ(o.min_cost, r.min_cost);
    EXPECT_EQ(o.witness, r.witness);
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(Downset::lex_initial(9, 11)).tag, Tag::lex_style_full);
  EXPECT_EQ(classify(Downset(7, {5, 4})).tag, Tag::lex_style_missing_one);
  auto k5 = classify(Downset(7, {4, 4, 4}));
  EXPECT_EQ(k5.tag, Tag::transient_exception);
  EXPECT_EQ(k5.shadow, "K_5");
  for (int n = 10; n <= 40; ++n) EXPECT_EQ(classify(Downset(n, {3, 3})).tag, Tag::persistent_exception);
  EXPECT_EQ(classify(Downset(13, {9, 9, 5})).tag, Tag::other);
}

TEST(Table, RowsThatMatch) {
  auto r7 = table_row(7);
  EXPECT_TRUE(r7.match());
  ASSERT_EQ(r7.observed.size(), 1u);
  EXPECT_EQ(r7.observed.begin()->first, "K_5");
  EXPECT_TRUE(table_row(10).match());
  auto r13 = table_row(13);
  EXPECT_TRUE(r13.match());
  EXPECT_TRUE(r13.observed.empty());
  for (int n : {8, 9, 14, 16}) EXPECT_TRUE(table_row(n).match()) << n;
  for (int n = 17; n <= 31; ++n) EXPECT_TRUE(table_row(n).observed.empty()) << n;
}

// The two rows where the exhaustive optimum disagrees with the printed catalogue.
TEST(Table, KnownDivergences) {
  auto r11 = table_row(11);
  EXPECT_EQ(r11.missing, std::vector<std::string>{"K_{11}-K_{1,9}"});
  EXPECT_EQ(r11.unexpected, std::vector<std::string>{"K_{11}-K_{1,8}"});
  auto r12 = table_row(12);
  EXPECT_EQ(r12.missing, std::vector<std::string>{"K_{11}"});
  EXPECT_EQ(r12.unexpected, std::vector<std::string>{"K_{11}-e"});
  auto x = optimize(11, 121);
  EXPECT_EQ(x.witness, Downset(11, {10, 9, 9, 9, 9, 9, 9, 9}));
  EXPECT_TRUE(matches_expression(downset_shadow(x.witness), "K_11-K_{1,8}"));
  EXPECT_FALSE(matches_expression(downset_shadow(x.witness), "K_11-K_{1,9}"));
  auto r = optimize(12, 156);
  EXPECT_EQ(r.witness, Downset(12, std::vector<int>(8, 10)));
  EXPECT_EQ(r.min_cost, 4070u);
}

TEST(Theorem, Boundary) {
  EXPECT_TRUE(verify_main_theorem(32).pass());
  EXPECT_TRUE(verify_main_theorem(33).pass());
  EXPECT_THROW(verify_main_theorem(31), std::domain_error);
}

TEST(Shifted, FamilyCounts) {
  auto count = [](int n, int r) {
    long c = 0;
    enumerate_shifted(n, r, std::nullopt, [&](const std::vector<Edge>&) { ++c; });
    return c;
  };
  EXPECT_EQ(count(4, 3), 5);
  EXPECT_EQ(count(5, 3), 16);
  EXPECT_EQ(count(6, 3), 66);
  // every visited family really is shifted
  enumerate_shifted(6, 3, std::nullopt, [](const std::vector<Edge>& f) { EXPECT_TRUE(is_shifted(Hypergraph(6, 3, f))); });
}

TEST(Conjecture, SmallInstances) {
  auto rep = conjecture_check(3, 2, 6, 5);
  EXPECT_EQ(rep.pi.str(), "2,3,1");
  EXPECT_GT(rep.families, 0u);
  EXPECT_GE(rep.best, rep.initial_segment);
  // r = s: the lex segment is optimal; s = 1: the colex segment is optimal
  for (std::uint64_t e = 0; e <= 20; ++e) {
    EXPECT_EQ(conjecture_check(3, 3, 6, e).best, count_s_independent_enumerate(lex_initial(6, 3, e), 3)) << e;
    EXPECT_EQ(conjecture_check(3, 1, 6, e).best, count_s_independent_enumerate(colex_initial(6, 3, e), 1)) << e;
  }
  EXPECT_THROW(conjecture_check(5, 2, 8, 3), std::domain_error);
  EXPECT_THROW(conjecture_check(3, 2, 10, 3), std::domain_error);
  EXPECT_THROW(conjecture_check(3, 2, 6, 21), std::out_of_range);
}
