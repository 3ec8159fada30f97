#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "downset.hpp"
#include "independence.hpp"
#include "moves.hpp"
#include "named_graph.hpp"
#include "orders.hpp"
#include "shifting.hpp"

namespace hyperind {

inline constexpr int kEnumerateDownsetsGuard = 16;

// Every height profile of B_n exactly once, lex-earliest first: column
// heights are tried from tallest down, and stopping (an empty column) comes last.
inline void enumerate_downsets(int n, const std::function<void(const Downset&)>& visit) {
  if (n > kEnumerateDownsetsGuard) throw std::domain_error("enumerate_downsets: n above guard " + std::to_string(kEnumerateDownsetsGuard));
  if (n < 2) throw std::invalid_argument("enumerate_downsets: n must be >= 2");
  std::vector<int> h;
  auto rec = [&](auto&& self, int col, int cap) -> void {
    for (int x = cap; x >= col + 1; --x) {
      h.push_back(x);
      self(self, col + 1, x);
      h.pop_back();
    }
    visit(Downset(n, h));
  };
  rec(rec, 1, n - 1);
}

inline std::vector<Downset> all_downsets(int n) {
  std::vector<Downset> out;
  enumerate_downsets(n, [&](const Downset& d) { out.push_back(d); });
  return out;
}

enum class Tag { lex_style_full, lex_style_missing_one, persistent_exception, transient_exception, other };

inline std::string to_string(Tag t) {
  switch (t) {
    case Tag::lex_style_full: return "lex-style-full";
    case Tag::lex_style_missing_one: return "lex-style-missing-one";
    case Tag::persistent_exception: return "persistent-exception";
    case Tag::transient_exception: return "transient-exception";
    default: return "other";
  }
}

// Exceptional shadows for n < 32, catalogued verbatim (isolated vertices implied).
inline const std::map<int, std::vector<std::string>>& exception_catalogue() {
  static const std::map<int, std::vector<std::string>> table = {
      {7, {"K_5"}},
      {8, {"K_5", "K_6", "K_7"}},
      {9, {"K_5", "K_6", "K_7", "K_8", "K_9-K_{1,6}"}},
      {10, {"K_9"}},
      {11, {"K_{10}", "K_{11}-K_{1,9}"}},
      {12, {"K_{11}"}},
      {14, {"K_{13}", "K_{13}-e"}},
      {16, {"K_{15}"}},
  };
  return table;
}

inline std::vector<std::string> catalogue_entries(int n) {
  auto& t = exception_catalogue();
  auto it = t.find(n);
  return it == t.end() ? std::vector<std::string>{} : it->second;
}

struct Classification {
  Tag tag;
  std::optional<std::string> shadow;  // for tags other than lex style
};

inline Classification classify(const Downset& d) {
  switch (is_231_lex_style(d)) {
    case LexStyle::full_initial: return {Tag::lex_style_full, std::nullopt};
    case LexStyle::missing_one: return {Tag::lex_style_missing_one, std::nullopt};
    default: break;
  }
  if (is_persistent_exception(d)) {
    for (const auto& p : persistent_exception_downsets(d.n()))
      if (p.downset == d) return {Tag::persistent_exception, p.expression};
  }
  Graph g = downset_shadow(d);
  if (d.n() < 32)
    for (const auto& name : catalogue_entries(d.n()))
      if (matches_expression(g, name)) return {Tag::transient_exception, name};
  return {Tag::other, describe_graph(g)};
}

struct OptimalRecord {
  int n = 0;
  std::uint64_t e = 0;
  std::uint64_t min_cost = 0;
  Downset witness;
  Tag tag = Tag::other;
  std::optional<std::string> shadow;
  std::uint64_t optima = 1;  // number of minimum-cost downsets with space >= e
};

class InfeasibleError : public std::out_of_range {
 public:
  InfeasibleError(const std::string& what, OptimalRecord full) : std::out_of_range(what), full_(std::move(full)) {}
  const OptimalRecord& full_record() const { return full_; }

 private:
  OptimalRecord full_;
};

// Suffix table: best(i, cap, s) = least cost of columns i..n-2 with h(i) <= cap
// and total space >= s. Heights are non-increasing, so the cap of column i+1 is h(i).
class CostTable {
 public:
  static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

  CostTable(int n, std::uint64_t max_space) : n_(n), smax_(max_space) {
    if (n < 3 || n > kMaxGrid) throw std::invalid_argument("optimizer: n must lie in [3, 63]");
    table_.resize(n_);  // index by column 1..n-2, plus sentinel n-1
    const std::size_t width = smax_ + 1;
    for (int i = n_ - 1; i >= 1; --i) {
      int caps = n_ - i;  // cap in [i, n-1]
      auto& cur = table_[i];
      cur.assign(static_cast<std::size_t>(caps) * width, kInf);
      for (std::size_t s = 0; s < width; ++s) at(i, i, s) = s == 0 ? 0 : kInf;
      if (i == n_ - 1) {
        continue;
      }
      for (int cap = i + 1; cap <= n_ - 1; ++cap) {
        std::uint64_t cc = column_cost(i, cap, n_);
        std::uint64_t cs = column_space(i, cap);
        for (std::size_t s = 0; s < width; ++s) {
          std::uint64_t best = at(i, cap - 1, s);
          std::uint64_t rest = next(i + 1, cap, s > cs ? s - cs : 0);
          if (rest != kInf && cc + rest < best) best = cc + rest;
          at(i, cap, s) = best;
        }
      }
    }
  }

  int n() const { return n_; }
  std::uint64_t max_space() const { return smax_; }

  std::uint64_t min_cost(std::uint64_t e) const { return at(1, n_ - 1, check(e)); }

  // Lex-earliest minimizer: each column takes the tallest height that still
  // admits an optimal completion.
  Downset witness(std::uint64_t e) const {
    check(e);
    std::vector<int> h;
    int cap = n_ - 1;
    std::uint64_t rem = e;
    for (int i = 1; i <= n_ - 2; ++i) {
      std::uint64_t target = at(i, cap, rem);
      int pick = 0;
      for (int x = cap; x >= i + 1; --x) {
        std::uint64_t cs = column_space(i, x);
        std::uint64_t rest = next(i + 1, x, rem > cs ? rem - cs : 0);
        if (rest != kInf && column_cost(i, x, n_) + rest == target) {
          pick = x;
          break;
        }
      }
      if (!pick) break;
      h.push_back(pick);
      std::uint64_t cs = column_space(i, pick);
      rem = rem > cs ? rem - cs : 0;
      cap = pick;
    }
    return Downset(n_, h);
  }

  // Number of distinct minimizers.
  std::uint64_t count_optima(std::uint64_t e) const {
    std::map<std::tuple<int, int, std::uint64_t>, std::uint64_t> memo;
    auto rec = [&](auto&& self, int i, int cap, std::uint64_t rem) -> std::uint64_t {
      if (i > n_ - 2) return rem == 0 ? 1 : 0;
      auto key = std::make_tuple(i, cap, rem);
      if (auto it = memo.find(key); it != memo.end()) return it->second;
      std::uint64_t target = at(i, cap, rem), ways = 0;
      if (rem == 0 && target == 0) ways = 1;  // stop here with an empty column
      for (int x = cap; x >= i + 1; --x) {
        std::uint64_t cs = column_space(i, x);
        std::uint64_t nr = rem > cs ? rem - cs : 0;
        std::uint64_t rest = next(i + 1, x, nr);
        if (rest != kInf && column_cost(i, x, n_) + rest == target) ways += self(self, i + 1, x, nr);
      }
      memo.emplace(key, ways);
      return ways;
    };
    return rec(rec, 1, n_ - 1, check(e));
  }

 private:
  std::uint64_t check(std::uint64_t e) const {
    if (e > smax_) throw std::out_of_range("optimizer: e above table capacity");
    return e;
  }
  std::uint64_t& at(int i, int cap, std::size_t s) { return table_[i][static_cast<std::size_t>(cap - i) * (smax_ + 1) + s]; }
  std::uint64_t at(int i, int cap, std::size_t s) const {
    return table_[i][static_cast<std::size_t>(cap - i) * (smax_ + 1) + s];
  }
  // column i may use heights up to cap; a cap at or below i means empty
  std::uint64_t next(int i, int cap, std::size_t s) const {
    if (i > n_ - 2) return s == 0 ? 0 : kInf;
    return at(i, std::max(cap, i), s);
  }

  int n_;
  std::uint64_t smax_;
  std::vector<std::vector<std::uint64_t>> table_;
};

inline OptimalRecord make_record(const CostTable& t, std::uint64_t e) {
  OptimalRecord r;
  r.n = t.n();
  r.e = e;
  r.min_cost = t.min_cost(e);
  r.witness = t.witness(e);
  auto c = classify(r.witness);
  r.tag = c.tag;
  r.shadow = c.shadow;
  r.optima = t.count_optima(e);
  return r;
}

inline OptimalRecord full_record(int n) {
  OptimalRecord r;
  r.n = n;
  r.e = total_space(n);
  r.witness = Downset::full(n);
  r.min_cost = downset_cost(r.witness);
  auto c = classify(r.witness);
  r.tag = c.tag;
  r.shadow = c.shadow;
  return r;
}

inline OptimalRecord optimize(int n, std::uint64_t e) {
  if (n < 3 || n > kMaxGrid) throw std::invalid_argument("optimize: n must lie in [3, 63]");
  if (e > total_space(n))
    throw InfeasibleError("optimize: e=" + std::to_string(e) + " exceeds total space C(n,3)=" + std::to_string(total_space(n)),
                          full_record(n));
  return make_record(CostTable(n, e), e);
}

struct ParetoFrontier {
  int n;
  std::vector<OptimalRecord> entries;  // e = 0 .. C(n,3)
};

inline ParetoFrontier pareto(int n) {
  if (n < 4) throw std::invalid_argument("pareto: n must be >= 4");
  CostTable t(n, total_space(n));
  ParetoFrontier f{n, {}};
  for (std::uint64_t e = 0; e <= t.max_space(); ++e) f.entries.push_back(make_record(t, e));
  return f;
}

// Exhaustive scan; with `prune`, downsets admitting any move are skipped.
inline OptimalRecord optimize_by_enumeration(int n, std::uint64_t e, bool prune = false) {
  if (e > total_space(n)) throw std::out_of_range("optimize_by_enumeration: infeasible e");
  std::optional<Downset> best;
  std::uint64_t best_cost = 0, ties = 0;
  enumerate_downsets(n, [&](const Downset& d) {
    if (downset_space(d) < e) return;
    std::uint64_t c = downset_cost(d);
    if (best && c > best_cost) return;
    if (prune && !all_applicable_moves(d).empty()) return;
    if (!best || c < best_cost) {
      best = d, best_cost = c, ties = 1;
    } else {
      ++ties;
      if (lex_earlier(d, *best)) best = d;
    }
  });
  OptimalRecord r;
  r.n = n;
  r.e = e;
  r.min_cost = best_cost;
  r.witness = *best;
  auto c = classify(r.witness);
  r.tag = c.tag;
  r.shadow = c.shadow;
  r.optima = prune ? 0 : ties;
  return r;
}

struct TableRow {
  int n;
  std::map<std::string, std::vector<std::uint64_t>> observed;  // shadow name -> attaining e values
  std::vector<std::string> expected;
  std::vector<std::string> missing;     // expected but not observed
  std::vector<std::string> unexpected;  // observed but not expected
  std::uint64_t lex_style_ties = 0;     // lex-style optima that are not the unique minimizer
  bool match() const { return missing.empty() && unexpected.empty(); }
};

struct TableReport {
  std::vector<TableRow> rows;
  std::vector<OptimalRecord> exceptions;  // every non-lex-style, non-persistent optimum
  bool match() const {
    return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.match(); });
  }
};

inline TableRow table_row(int n, std::vector<OptimalRecord>* exceptions = nullptr) {
  CostTable t(n, total_space(n));
  TableRow row{n, {}, catalogue_entries(n), {}, {}, 0};
  std::vector<Graph> shadows;
  std::vector<std::string> names;
  for (std::uint64_t e = 0; e <= t.max_space(); ++e) {
    Downset w = t.witness(e);
    auto style = is_231_lex_style(w);
    if (style != LexStyle::no) {
      if (t.count_optima(e) > 1) ++row.lex_style_ties;
      continue;
    }
    if (is_persistent_exception(w)) continue;
    auto rec = make_record(t, e);
    Graph g = downset_shadow(w);
    std::string name = rec.shadow.value_or(describe_graph(g));
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      names.push_back(name);
      shadows.push_back(g);
    }
    row.observed[name].push_back(e);
    if (exceptions) exceptions->push_back(rec);
  }
  for (const auto& want : row.expected) {
    bool seen = std::any_of(shadows.begin(), shadows.end(), [&](const Graph& g) { return matches_expression(g, want); });
    if (!seen) row.missing.push_back(want);
  }
  for (std::size_t k = 0; k < shadows.size(); ++k) {
    bool listed = std::any_of(row.expected.begin(), row.expected.end(),
                              [&](const std::string& want) { return matches_expression(shadows[k], want); });
    if (!listed) row.unexpected.push_back(names[k]);
  }
  return row;
}

inline TableReport reproduce_table(int n_lo, int n_hi) {
  if (n_lo < 7 || n_hi < n_lo) throw std::invalid_argument("reproduce_table: need 7 <= from <= to");
  if (n_hi > kMaxGrid) throw std::invalid_argument("reproduce_table: n too large");
  TableReport rep;
  for (int n = n_lo; n <= n_hi; ++n) rep.rows.push_back(table_row(n, &rep.exceptions));
  return rep;
}

// Which persistent shadows match the printed expressions, read literally and padded to n.
struct PersistentMatch {
  Downset downset;
  std::string computed;
  std::vector<std::string> literal_matches;
  std::vector<std::string> padded_matches;
};

inline std::vector<PersistentMatch> persistent_expression_report(int n) {
  std::vector<PersistentMatch> out;
  for (const auto& p : persistent_exception_downsets(n)) {
    PersistentMatch m{p.downset, p.expression, {}, {}};
    Graph g = downset_shadow(p.downset);
    for (const auto& lit : persistent_expressions_literal(n)) {
      if (matches_expression(g, lit, false)) m.literal_matches.push_back(lit);
      if (matches_expression(g, lit, true)) m.padded_matches.push_back(lit);
    }
    out.push_back(std::move(m));
  }
  return out;
}

struct TheoremReport {
  int n;
  std::uint64_t checked = 0;
  std::uint64_t persistent = 0;
  std::vector<OptimalRecord> counterexamples;
  bool pass() const { return counterexamples.empty(); }
};

inline constexpr int kTheoremMinN = 32;

inline TheoremReport verify_main_theorem(int n) {
  if (n < kTheoremMinN) throw std::domain_error("verify_main_theorem: n must be >= " + std::to_string(kTheoremMinN));
  CostTable t(n, total_space(n));
  TheoremReport rep{n, 0, 0, {}};
  for (std::uint64_t e = 0; e <= t.max_space(); ++e) {
    Downset w = t.witness(e);
    ++rep.checked;
    if (is_231_lex_style(w) != LexStyle::no) continue;
    if (is_persistent_exception(w)) {
      ++rep.persistent;
      continue;
    }
    rep.counterexamples.push_back(make_record(t, e));
  }
  return rep;
}

// All compression-downward-closed families of r-sets of [n] (the shifted
// r-graphs). `size` restricts to exactly that many edges when given.
inline void enumerate_shifted(int n, int r, std::optional<std::uint64_t> size,
                              const std::function<void(const std::vector<Edge>&)>& visit) {
  Hypergraph all = complete_hypergraph(n, r);
  std::vector<Edge> order(all.edges().begin(), all.edges().end());
  std::stable_sort(order.begin(), order.end(), [](const Edge& a, const Edge& b) {
    int sa = 0, sb = 0;
    for (int v : a) sa += v;
    for (int v : b) sb += v;
    return sa < sb;
  });
  std::map<Edge, std::size_t> index;
  for (std::size_t t = 0; t < order.size(); ++t) index[order[t]] = t;
  std::vector<std::vector<std::size_t>> preds(order.size());
  for (std::size_t t = 0; t < order.size(); ++t)
    for (const auto& p : compression_predecessors(order[t])) preds[t].push_back(index.at(p));

  std::vector<char> in(order.size(), 0);
  std::vector<Edge> chosen;
  const std::size_t total = order.size();
  auto rec = [&](auto&& self, std::size_t t) -> void {
    if (size && chosen.size() == *size) {
      visit(chosen);
      return;
    }
    if (t == total) {
      if (!size) visit(chosen);
      return;
    }
    if (size && chosen.size() + (total - t) < *size) return;
    bool ok = std::all_of(preds[t].begin(), preds[t].end(), [&](std::size_t p) { return in[p]; });
    if (ok) {
      in[t] = 1;
      chosen.push_back(order[t]);
      self(self, t + 1);
      chosen.pop_back();
      in[t] = 0;
    }
    self(self, t + 1);
  };
  rec(rec, 0);
}

struct ConjectureReport {
  int r, s, n;
  std::uint64_t e;
  Permutation pi;
  BigCount best;             // max i_s over shifted r-graphs with e edges
  std::vector<Edge> best_family;
  BigCount initial_segment;  // i_s of the pi-lex initial segment
  std::uint64_t families = 0;
};

inline constexpr int kConjectureMaxR = 4;
inline constexpr int kConjectureMaxN = 9;

inline ConjectureReport conjecture_check(int r, int s, int n, std::uint64_t e) {
  if (r < 1 || r > kConjectureMaxR || n > kConjectureMaxN)
    throw std::domain_error("conjecture_check: instance above guard (r <= 4, n <= 9)");
  if (s < 1 || s > r) throw std::invalid_argument("conjecture_check: need 1 <= s <= r");
  if (n < r) throw std::invalid_argument("conjecture_check: need n >= r");
  if (e > binomial(n, r)) throw std::out_of_range("conjecture_check: e exceeds C(n,r)");
  ConjectureReport rep{r, s, n, e, Permutation::rotated(r, s), -1, {}, 0, 0};
  enumerate_shifted(n, r, e, [&](const std::vector<Edge>& fam) {
    ++rep.families;
    std::vector<std::uint64_t> masks;
    for (const auto& x : fam) masks.push_back(edge_mask(x));
    BigCount c = count_s_independent_enumerate(n, masks, s);
    if (c > rep.best) rep.best = c, rep.best_family = fam;
  });
  Hypergraph seg = initial_segment(rep.pi, n, r, e);
  rep.initial_segment = count_s_independent_enumerate(seg, s);
  return rep;
}

}  // namespace hyperind
