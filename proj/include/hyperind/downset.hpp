#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hypergraph.hpp"
#include "independence.hpp"
#include "named_graph.hpp"
#include "shifting.hpp"

namespace hyperind {

// Cell (i,j) of B_n stands for the edge {0,i,j}. Ordering is the cell lex
// order: by column i, then by height j.
struct Cell {
  int i;
  int j;
  auto operator<=>(const Cell&) const = default;
};

inline std::string to_string(Cell c) { return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")"; }

inline constexpr int kMaxGrid = 63;  // costs are kept in 64 bits

inline void check_cell(Cell c, int n) {
  if (c.i < 1 || c.i >= c.j || c.j > n - 1) throw std::invalid_argument("invalid cell " + to_string(c) + " for n=" + std::to_string(n));
}

inline std::uint64_t cell_cost(Cell c, int n) {
  check_cell(c, n);
  if (n > kMaxGrid) throw std::domain_error("cell_cost: n too large");
  if (c.i == 1) return c.j == 2 ? std::uint64_t{1} << (n - 1) : std::uint64_t{1} << (n - c.j);
  return std::uint64_t{1} << (n - c.j - 1);
}

inline std::uint64_t cell_space(Cell c) {
  if (c.i < 1 || c.i >= c.j) throw std::invalid_argument("invalid cell " + to_string(c));
  return static_cast<std::uint64_t>(c.i);
}

// Cost and space of column i filled up to height h (h <= i means empty).
inline std::uint64_t column_cost(int i, int h, int n) {
  if (h <= i) return 0;
  if (i == 1) return (std::uint64_t{1} << (n - 1)) + (std::uint64_t{1} << (n - 2)) - (std::uint64_t{1} << (n - h));
  return (std::uint64_t{1} << (n - i - 1)) - (std::uint64_t{1} << (n - h - 1));
}
inline std::uint64_t column_space(int i, int h) { return h <= i ? 0 : static_cast<std::uint64_t>(i) * (h - i); }

inline std::uint64_t total_space(int n) { return binomial(n, 3); }

class Downset {
 public:
  Downset() = default;
  Downset(int n, std::vector<int> heights) : n_(n), h_(std::move(heights)) {
    if (n < 2 || n > kMaxGrid) throw std::invalid_argument("downset: n must lie in [2, 63]");
    for (std::size_t t = 0; t < h_.size(); ++t) {
      int col = static_cast<int>(t) + 1;
      if (h_[t] < col + 1 || h_[t] > n - 1)
        throw std::invalid_argument("downset: height " + std::to_string(h_[t]) + " invalid for column " + std::to_string(col));
      if (t && h_[t] > h_[t - 1]) throw std::invalid_argument("downset: heights must be non-increasing");
    }
  }

  static Downset from_cells(int n, const std::vector<Cell>& cells) {
    std::set<Cell> s(cells.begin(), cells.end());
    std::vector<int> h;
    for (Cell c : s) {
      check_cell(c, n);
      if (c.i > static_cast<int>(h.size())) h.resize(c.i, 0);
      h[c.i - 1] = std::max(h[c.i - 1], c.j);
    }
    for (std::size_t t = 0; t < h.size(); ++t) {
      int col = static_cast<int>(t) + 1;
      if (h[t] == 0) throw std::invalid_argument("downset: cell set is not downward closed (empty column " + std::to_string(col) + ")");
      for (int j = col + 1; j <= h[t]; ++j)
        if (!s.count({col, j})) throw std::invalid_argument("downset: cell set is not downward closed at " + to_string(Cell{col, j}));
    }
    return Downset(n, h);
  }

  static Downset full(int n) {
    std::vector<int> h(std::max(0, n - 2), n - 1);
    return Downset(n, h);
  }

  // first m cells of B_n in cell lex order
  static Downset lex_initial(int n, std::uint64_t m) {
    std::vector<int> h;
    for (int i = 1; i <= n - 2 && m > 0; ++i) {
      std::uint64_t take = std::min<std::uint64_t>(m, static_cast<std::uint64_t>(n - 1 - i));
      h.push_back(i + static_cast<int>(take));
      m -= take;
    }
    if (m > 0) throw std::out_of_range("lex_initial: more cells than B_n holds");
    return Downset(n, h);
  }

  int n() const { return n_; }
  const std::vector<int>& heights() const { return h_; }
  int columns() const { return static_cast<int>(h_.size()); }
  // height of column c, 0 when empty
  int height(int c) const { return c >= 1 && c <= columns() ? h_[c - 1] : 0; }
  bool contains(Cell c) const { return c.i >= 1 && c.i <= columns() && c.j > c.i && c.j <= h_[c.i - 1]; }

  std::size_t size() const {
    std::size_t s = 0;
    for (int c = 1; c <= columns(); ++c) s += static_cast<std::size_t>(h_[c - 1] - c);
    return s;
  }

  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    for (int c = 1; c <= columns(); ++c)
      for (int j = c + 1; j <= h_[c - 1]; ++j) out.push_back({c, j});
    return out;
  }

  friend bool operator==(const Downset&, const Downset&) = default;

 private:
  int n_ = 2;
  std::vector<int> h_;
};

inline std::uint64_t downset_cost(const Downset& d) {
  std::uint64_t c = 0;
  for (int i = 1; i <= d.columns(); ++i) c += column_cost(i, d.height(i), d.n());
  return c;
}

inline std::uint64_t downset_space(const Downset& d) {
  std::uint64_t s = 0;
  for (int i = 1; i <= d.columns(); ++i) s += column_space(i, d.height(i));
  return s;
}

inline BigCount i2_of_downset(const Downset& d) { return pow2(d.n()) - BigCount(downset_cost(d)); }

inline Downset downset_of(const Hypergraph& h) {
  if (h.r() != 3) throw std::invalid_argument("downset_of: hypergraph must be 3-uniform");
  if (!is_shifted(h)) throw std::invalid_argument("downset_of: hypergraph is not shifted");
  std::vector<Cell> cells;
  for (const auto& e : h.edges())
    if (e[0] == 0) cells.push_back({e[1], e[2]});
  return Downset::from_cells(h.n(), cells);
}

// Corners: columns c with c last or h(c+1) < h(c); cell (c, h(c)).
inline std::vector<Cell> corners(const Downset& d) {
  std::vector<Cell> out;
  for (int c = 1; c <= d.columns(); ++c)
    if (c == d.columns() || d.height(c + 1) < d.height(c)) out.push_back({c, d.height(c)});
  return out;
}

inline std::vector<int> horizontal_distance_vector(const Downset& d) {
  auto cs = corners(d);
  std::vector<int> out;
  for (std::size_t t = 1; t < cs.size(); ++t) out.push_back(cs[t].i - cs[t - 1].i);
  return out;
}

// D < E iff the lex-least cell of the symmetric difference lies in D.
inline std::strong_ordering downset_lex_compare(const Downset& d, const Downset& e) {
  if (d.n() != e.n()) throw std::invalid_argument("downset_lex_compare: grids differ");
  for (int i = 1; i <= d.n() - 2; ++i)
    for (int j = i + 1; j <= d.n() - 1; ++j) {
      bool a = d.contains({i, j}), b = e.contains({i, j});
      if (a != b) return a ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  return std::strong_ordering::equal;
}

inline bool lex_earlier(const Downset& d, const Downset& e) { return downset_lex_compare(d, e) == std::strong_ordering::less; }

enum class LexStyle { full_initial, missing_one, no };

inline std::string to_string(LexStyle s) {
  switch (s) {
    case LexStyle::full_initial: return "full-initial";
    case LexStyle::missing_one: return "missing-one";
    default: return "no";
  }
}

inline bool subset_of(const Downset& a, const Downset& b) {
  for (int c = 1; c <= a.columns(); ++c)
    if (a.height(c) > b.height(c)) return false;
  return true;
}

inline LexStyle is_231_lex_style(const Downset& d) {
  std::uint64_t m = d.size();
  if (d == Downset::lex_initial(d.n(), m)) return LexStyle::full_initial;
  if (m < binomial(d.n() - 1, 2) && subset_of(d, Downset::lex_initial(d.n(), m + 1)))
    return LexStyle::missing_one;
  return LexStyle::no;
}

// Columns given by cell counts, e.g. {2,1}: column 1 holds 2 cells, column 2 holds 1.
inline Downset downset_from_counts(int n, const std::vector<int>& counts) {
  std::vector<int> h;
  for (std::size_t t = 0; t < counts.size(); ++t) {
    if (counts[t] <= 0) break;
    h.push_back(static_cast<int>(t) + 1 + counts[t]);
  }
  return Downset(n, h);
}

struct PersistentException {
  std::vector<int> counts;  // column cell counts
  Downset downset;
  std::string expression;   // shadow of the full realization, n vertices
};

inline constexpr int kPersistentMinN = 7;

inline std::vector<PersistentException> persistent_exception_downsets(int n) {
  if (n < kPersistentMinN) throw std::invalid_argument("persistent exceptions need n >= " + std::to_string(kPersistentMinN));
  auto E = [](int k) { return "E_{" + std::to_string(k) + "}"; };
  std::vector<std::pair<std::vector<int>, std::string>> profiles = {
      {{2, 1}, "(K_3 v E_1) u " + E(n - 4)},
      {{n - 5, n - 6}, "(K_3 v " + E(n - 6) + ") u E_3"},
      {{n - 4, n - 5}, "(K_3 v " + E(n - 5) + ") u E_2"},
      {{n - 3, n - 4, n - 5}, "(K_4 v " + E(n - 5) + ") u E_1"},
      {{n - 3, n - 4, n - 5, n - 6}, "(K_5 v " + E(n - 6) + ") u E_1"},
  };
  std::vector<PersistentException> out;
  for (auto& [counts, expr] : profiles) {
    Downset d = downset_from_counts(n, counts);
    bool dup = std::any_of(out.begin(), out.end(), [&](const auto& p) { return p.downset == d; });
    if (!dup) out.push_back({counts, d, expr});
  }
  return out;
}

// The persistent family as the graph expressions are printed in the
// literature, before any vertex-count adjustment.
inline std::vector<std::string> persistent_expressions_literal(int n) {
  auto E = [](int k) { return "E_{" + std::to_string(k) + "}"; };
  return {"(K_3 v E_1) u " + E(n - 5), "(K_2 v " + E(n - 5) + ") u E_2", "(K_2 v " + E(n - 4) + ") u E_1",
          "K_3 v " + E(n - 4), "K_4 v " + E(n - 5)};
}

inline bool is_persistent_exception(const Downset& d) {
  if (d.n() < kPersistentMinN) return false;
  for (const auto& p : persistent_exception_downsets(d.n()))
    if (p.downset == d) return true;
  return false;
}

// Base edges {0,i,j} for every cell, then {k,i,j} (k >= 1) in colex order.
inline Hypergraph realize(const Downset& d, std::uint64_t e) {
  auto cells = d.cells();
  if (e < cells.size() || e > downset_space(d)) throw std::out_of_range("realize: need |D| <= e <= S(D)");
  Hypergraph h(d.n(), 3);
  for (Cell c : cells) h.add({0, c.i, c.j});
  std::uint64_t left = e - cells.size();
  if (left == 0) return h;
  std::vector<Edge> upper;
  for (Cell c : cells)
    for (int k = 1; k < c.i; ++k) upper.push_back({k, c.i, c.j});
  std::sort(upper.begin(), upper.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a[2], a[1], a[0]) < std::tie(b[2], b[1], b[0]);
  });
  for (std::uint64_t t = 0; t < left; ++t) h.add(upper[t]);
  return h;
}

inline Graph downset_shadow(const Downset& d) { return shadow2(realize(d, downset_space(d))); }

inline Downset extend(const Downset& d, int m) {
  if (m < d.n()) throw std::invalid_argument("extend: target grid smaller than source");
  return Downset(m, d.heights());
}

// "n=7 heights=4,4,4"
inline std::string format_downset(const Downset& d) {
  std::string s = "n=" + std::to_string(d.n()) + " heights=";
  for (std::size_t t = 0; t < d.heights().size(); ++t) s += (t ? "," : "") + std::to_string(d.heights()[t]);
  return s;
}

inline Downset parse_downset(const std::string& text) {
  auto fail = [&]() -> Downset { throw std::invalid_argument("downset: cannot parse \"" + text + "\""); };
  std::istringstream in(text);
  std::string tok;
  int n = -1;
  bool have_heights = false;
  std::vector<int> h;
  while (in >> tok) {
    if (tok.rfind("n=", 0) == 0) {
      try {
        std::size_t used = 0;
        n = std::stoi(tok.substr(2), &used);
        if (used != tok.size() - 2) return fail();
      } catch (const std::logic_error&) {
        return fail();
      }
    } else if (tok.rfind("heights=", 0) == 0) {
      have_heights = true;
      std::stringstream list(tok.substr(8));
      std::string item;
      while (std::getline(list, item, ',')) {
        if (item.empty()) return fail();
        try {
          std::size_t used = 0;
          h.push_back(std::stoi(item, &used));
          if (used != item.size()) return fail();
        } catch (const std::logic_error&) {
          return fail();
        }
      }
    } else {
      return fail();
    }
  }
  if (n < 0 || !have_heights) return fail();
  return Downset(n, h);
}

}  // namespace hyperind
