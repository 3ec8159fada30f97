#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "downset.hpp"

namespace hyperind {

enum class MoveLemma {
  distance_vector,
  stairs_111,
  stairs_22,
  stairs_21,
  stairs_12,
  drop_sizes_three_corners,
  drop_sizes_long_stair,
  ends_with_stairs_earlier_corner,
  ends_with_stairs_no_earlier_corner,
  column_single_corner,
  column_earlier_corner,
  tall_stairs,
  tall_stairs_earlier_corner,
  trapezoid_two_rows,
  trapezoid_two_rows_stairs,
  trapezoid_one_row,
  trapezoid_one_row_stairs,
  narrow_last_corner,
  narrow_one_short_stair,
  four_empty_rows,
};

inline std::string to_string(MoveLemma m) {
  switch (m) {
    case MoveLemma::distance_vector: return "distance-vector";
    case MoveLemma::stairs_111: return "stairs-1-1-1";
    case MoveLemma::stairs_22: return "stairs-2-2";
    case MoveLemma::stairs_21: return "stairs-2-1";
    case MoveLemma::stairs_12: return "stairs-1-2";
    case MoveLemma::drop_sizes_three_corners: return "drop-sizes-three-corners";
    case MoveLemma::drop_sizes_long_stair: return "drop-sizes-long-stair";
    case MoveLemma::ends_with_stairs_earlier_corner: return "ends-with-stairs-earlier-corner";
    case MoveLemma::ends_with_stairs_no_earlier_corner: return "ends-with-stairs-no-earlier-corner";
    case MoveLemma::column_single_corner: return "column-single-corner";
    case MoveLemma::column_earlier_corner: return "column-earlier-corner";
    case MoveLemma::tall_stairs: return "tall-stairs";
    case MoveLemma::tall_stairs_earlier_corner: return "tall-stairs-earlier-corner";
    case MoveLemma::trapezoid_two_rows: return "trapezoid-two-rows";
    case MoveLemma::trapezoid_two_rows_stairs: return "trapezoid-two-rows-stairs";
    case MoveLemma::trapezoid_one_row: return "trapezoid-one-row";
    case MoveLemma::trapezoid_one_row_stairs: return "trapezoid-one-row-stairs";
    case MoveLemma::narrow_last_corner: return "narrow-last-corner";
    case MoveLemma::narrow_one_short_stair: return "narrow-one-short-stair";
    case MoveLemma::four_empty_rows: return "four-empty-rows";
  }
  return "unknown";
}

// Which of the witness inequalities each lemma claims strictly.
struct Strictness {
  bool cost;
  bool space;
};

inline Strictness strictness(MoveLemma m) {
  switch (m) {
    case MoveLemma::stairs_111:
    case MoveLemma::stairs_21:
    case MoveLemma::stairs_12:
    case MoveLemma::drop_sizes_three_corners:
    case MoveLemma::drop_sizes_long_stair: return {true, true};
    case MoveLemma::stairs_22:
    case MoveLemma::ends_with_stairs_earlier_corner:
    case MoveLemma::column_earlier_corner: return {true, false};
    default: return {false, false};
  }
}

struct MoveOutcome {
  MoveLemma lemma;
  std::vector<Cell> removed;
  std::vector<Cell> added;
  Downset result;
};

namespace detail {

inline int floor_log2(int i) { return std::bit_width(static_cast<unsigned>(i)) - 1; }

// D - removed + added, re-checked for closure. A failure here means a guard
// let through a configuration the construction does not cover.
inline MoveOutcome make_move(const Downset& d, MoveLemma lemma, std::vector<Cell> removed, std::vector<Cell> added) {
  std::set<Cell> cells;
  for (Cell c : d.cells()) cells.insert(c);
  for (Cell c : removed)
    if (!cells.erase(c)) throw std::logic_error(to_string(lemma) + ": removed cell " + to_string(c) + " not in downset " + format_downset(d));
  for (Cell c : added) {
    check_cell(c, d.n());
    if (d.contains(c)) throw std::logic_error(to_string(lemma) + ": added cell " + to_string(c) + " already in downset " + format_downset(d));
    if (!cells.insert(c).second) throw std::logic_error(to_string(lemma) + ": added cell " + to_string(c) + " twice");
  }
  Downset out;
  try {
    out = Downset::from_cells(d.n(), std::vector<Cell>(cells.begin(), cells.end()));
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(to_string(lemma) + " on " + format_downset(d) + ": " + e.what());
  }
  std::sort(removed.begin(), removed.end());
  std::sort(added.begin(), added.end());
  return {lemma, std::move(removed), std::move(added), std::move(out)};
}

// The k lex-greatest cells: the last column from the top down, then the one before.
inline std::vector<Cell> lex_greatest(const Downset& d, int k) {
  std::vector<Cell> out;
  for (int c = d.columns(); c >= 1 && static_cast<int>(out.size()) < k; --c)
    for (int j = d.height(c); j > c && static_cast<int>(out.size()) < k; --j) out.push_back({c, j});
  return out;
}

inline bool is_lex_style(const Downset& d) { return is_231_lex_style(d) != LexStyle::no; }

// last entry of H(D) is 1 or 2
inline bool ends_in_stairs(const std::vector<int>& hdv) { return !hdv.empty() && hdv.back() <= 2; }

inline bool ends_in_one_short_stair(const std::vector<int>& hdv) {
  return !hdv.empty() && hdv.back() == 1 && (hdv.size() == 1 || hdv[hdv.size() - 2] >= 3);
}

// column k of an earlier corner is far enough left that the distance-vector move does not apply
inline bool far_left(int k, int i) { return 2 * k < i - 3; }

// top cells h in [lo, hi] taken from the rightmost column holding height h
inline std::vector<Cell> rightmost_in_rows(const Downset& d, int lo, int hi) {
  std::vector<Cell> out;
  for (int h = lo; h <= hi; ++h) {
    int col = 0;
    for (int c = 1; c <= d.columns(); ++c)
      if (d.height(c) >= h && c < h) col = c;
    if (col) out.push_back({col, h});
  }
  return out;
}

}  // namespace detail

// Consecutive corners (a,b),(c,d) with 3 <= c-a <= (c+3)/2.
inline std::optional<MoveOutcome> move_distance_vector(const Downset& d) {
  auto cs = corners(d);
  for (std::size_t t = 1; t < cs.size(); ++t) {
    int a = cs[t - 1].i, c = cs[t].i, h = cs[t].j;
    if (c - a >= 3 && 2 * (c - a) <= c + 3)
      return detail::make_move(d, MoveLemma::distance_vector, {{c, h}}, {{a + 1, h + 1}, {a + 2, h + 1}});
  }
  return std::nullopt;
}

inline std::optional<MoveOutcome> move_stairs(const Downset& d) {
  auto cs = corners(d);
  auto hv = horizontal_distance_vector(d);
  for (std::size_t t = 0; t + 1 < hv.size(); ++t) {
    int i = cs[t].i;
    if (t + 2 < hv.size() && hv[t] == 1 && hv[t + 1] == 1 && hv[t + 2] == 1) {
      int b = cs[t + 1].j, c = cs[t + 2].j;
      return detail::make_move(d, MoveLemma::stairs_111, {cs[t + 3]}, {{i + 1, b + 1}, {i + 2, c + 1}});
    }
    if (hv[t] == 2 && hv[t + 1] == 2) {
      int b = cs[t + 1].j;
      return detail::make_move(d, MoveLemma::stairs_22, {cs[t + 2]}, {{i + 1, b + 1}, {i + 2, b + 1}});
    }
    if (hv[t] == 2 && hv[t + 1] == 1) {
      int b = cs[t + 1].j;
      return detail::make_move(d, MoveLemma::stairs_21, {cs[t + 2]}, {{i + 1, b + 1}, {i + 2, b + 1}});
    }
    if (hv[t] == 1 && hv[t + 1] == 2) {
      int b = cs[t + 1].j, c = cs[t + 2].j;
      return detail::make_move(d, MoveLemma::stairs_12, {cs[t + 2]}, {{i + 1, b + 1}, {i + 2, c + 1}});
    }
  }
  return std::nullopt;
}

inline std::optional<MoveOutcome> move_drop_sizes(const Downset& d) {
  auto cs = corners(d);
  auto hv = horizontal_distance_vector(d);
  for (std::size_t t = 0; t < hv.size(); ++t) {
    int a = cs[t].i, b = cs[t].j;
    if (hv[t] == 1 && t + 1 < hv.size() && hv[t + 1] == 1) {
      int c = cs[t + 1].j;
      if (b - c > 1)
        return detail::make_move(d, MoveLemma::drop_sizes_three_corners, {cs[t + 2]}, {{a + 1, c + 1}, {a + 1, c + 2}});
    }
    if (hv[t] == 2) {
      int c = cs[t + 1].j;
      if (b - c > 1)
        return detail::make_move(d, MoveLemma::drop_sizes_long_stair, {cs[t + 1]}, {{a + 1, c + 1}, {a + 1, c + 2}});
    }
  }
  return std::nullopt;
}

// D not lex style, ending in two short stairs or one long stair.
inline std::optional<MoveOutcome> move_ends_with_stairs(const Downset& d) {
  auto cs = corners(d);
  auto hv = horizontal_distance_vector(d);
  if (hv.empty() || detail::is_lex_style(d)) return std::nullopt;
  std::size_t top;  // index of the top stair corner (i,a)
  if (hv.back() == 2)
    top = cs.size() - 2;
  else if (hv.size() >= 2 && hv.back() == 1 && hv[hv.size() - 2] == 1)
    top = cs.size() - 3;
  else
    return std::nullopt;
  int i = cs[top].i, a = cs[top].j;
  int b = cs[top + 1].j;  // second stair from the top; for a long stair this is the last corner
  Cell last = cs.back();
  Cell middle = hv.back() == 2 ? Cell{i + 1, b + 1} : Cell{cs[top + 1].i, b + 1};
  if (top > 0) {
    int p = cs[top - 1].i;
    return detail::make_move(d, MoveLemma::ends_with_stairs_earlier_corner, {last}, {{p + 1, a + 1}, middle});
  }
  if (a >= d.n() - 1) return std::nullopt;
  return detail::make_move(d, MoveLemma::ends_with_stairs_no_earlier_corner, {last}, {{1, a + 1}, middle});
}

inline std::optional<MoveOutcome> move_column(const Downset& d) {
  auto cs = corners(d);
  auto hv = horizontal_distance_vector(d);
  if (cs.empty()) return std::nullopt;
  const int n = d.n();
  std::vector<Cell> L, R;

  if (cs.size() == 1) {
    auto [i, j] = cs.back();
    int t = detail::floor_log2(i);
    if (i >= 5 && j - i >= t && j < n - 1) {
      for (int h = j - t + 1; h <= j; ++h) L.push_back({i, h});
      int last = (i == 5 || i == 6 || i == 8) ? i - 1 : i - 2;
      for (int h = 1; h <= last; ++h) R.push_back({h, j + 1});
      return detail::make_move(d, MoveLemma::column_single_corner, L, R);
    }
  }
  if (cs.size() >= 2 && !detail::ends_in_stairs(hv)) {
    auto [i, j] = cs.back();
    int k = cs[cs.size() - 2].i;
    int t = detail::floor_log2(i);
    if (i >= 6 && j - i >= t && detail::far_left(k, i)) {
      for (int h = j - t + 1; h <= j; ++h) L.push_back({i, h});
      for (int h = k + 1; h <= i - 1; ++h) R.push_back({h, j + 1});
      return detail::make_move(d, MoveLemma::column_earlier_corner, L, R);
    }
  }
  if (detail::ends_in_one_short_stair(hv)) {
    auto [i, j] = cs[cs.size() - 2];
    int t = detail::floor_log2(i);
    if (cs.size() == 2 && i >= 6 && j - i >= t + 1 && j <= n - 2) {
      L = detail::rightmost_in_rows(d, j - t + 1, j);
      int last = (i == 6 || i == 8 || i == 9) ? i - 1 : i - 2;
      for (int h = 1; h <= last; ++h) R.push_back({h, j + 1});
      return detail::make_move(d, MoveLemma::tall_stairs, L, R);
    }
    if (cs.size() >= 3 && i >= 6 && j - i >= t + 1 && detail::far_left(cs[cs.size() - 3].i, i)) {
      int take = i == 8 ? t - 1 : t;
      L = detail::rightmost_in_rows(d, j - take + 1, j);
      for (int h = 1; h <= i - 1; ++h)
        if (!d.contains({h, j + 1})) R.push_back({h, j + 1});
      return detail::make_move(d, MoveLemma::tall_stairs_earlier_corner, L, R);
    }
  }
  return std::nullopt;
}

namespace detail {

// Trade the `take` lex-greatest cells for the free cells in `rows` at columns <= cap.
inline std::optional<MoveOutcome> trapezoid(const Downset& d, MoveLemma lemma, int take, std::vector<int> rows, int cap_limit) {
  auto T = lex_greatest(d, take);
  if (static_cast<int>(T.size()) < take) return std::nullopt;
  int leftmost = T.back().i;
  int cap = std::min(leftmost - 1, cap_limit);
  std::vector<Cell> R;
  for (int row : rows)
    for (int h = 1; h <= cap; ++h)
      if (h < row && !d.contains({h, row})) R.push_back({h, row});
  if (R.empty()) return std::nullopt;
  return make_move(d, lemma, T, R);
}

}  // namespace detail

// The one-row trade only beats the removed cost once T has at least 9 cells;
// for 23 <= i < 36 it can cost more (e.g. n=26, i=23), so those columns are
// left to the exhaustive optimizer.
inline constexpr int kOneRowMinColumn = 36;

inline std::optional<MoveOutcome> move_trapezoid(const Downset& d) {
  auto cs = corners(d);
  auto hv = horizontal_distance_vector(d);
  if (cs.empty()) return std::nullopt;
  const int n = d.n();

  if (!detail::ends_in_stairs(hv)) {
    auto [i, j] = cs.back();
    int t = detail::floor_log2(i);
    bool left_ok = cs.size() == 1 || detail::far_left(cs[cs.size() - 2].i, i);
    if (left_ok && j - i < t) {
      if (i >= 16 && j <= n - 3) {
        int take = j - i == 1 ? i / 2 - 1 : i / 2;
        return detail::trapezoid(d, MoveLemma::trapezoid_two_rows, take, {j + 1, j + 2}, i);
      }
      if (i >= kOneRowMinColumn && j == n - 2) return detail::trapezoid(d, MoveLemma::trapezoid_one_row, i / 4, {n - 1}, i - 4);
    }
  }
  if (detail::ends_in_one_short_stair(hv) && !detail::is_lex_style(d)) {
    auto [i, j] = cs[cs.size() - 2];
    int t = detail::floor_log2(i);
    bool left_ok = cs.size() == 2 || detail::far_left(cs[cs.size() - 3].i, i);
    if (left_ok && j - i < t + 1) {
      if (i >= 16 && j <= n - 3)
        return detail::trapezoid(d, MoveLemma::trapezoid_two_rows_stairs, i / 2, {j + 1, j + 2}, i);
      if (i >= kOneRowMinColumn && j == n - 2) return detail::trapezoid(d, MoveLemma::trapezoid_one_row_stairs, i / 4, {n - 1}, i - 4);
    }
  }
  return std::nullopt;
}

inline std::optional<MoveOutcome> move_narrow(const Downset& d) {
  auto cs = corners(d);
  auto hv = horizontal_distance_vector(d);
  const int n = d.n();
  if (cs.empty() || detail::is_lex_style(d) || is_persistent_exception(d)) return std::nullopt;

  if (cs.size() == 1 && n >= 10) {
    auto [i, j] = cs[0];
    auto mv = [&](std::vector<Cell> rem, std::vector<Cell> add) {
      return detail::make_move(d, MoveLemma::narrow_last_corner, std::move(rem), std::move(add));
    };
    if (i == 2 && 4 <= j && j <= n - 5) return mv({{2, j}, {2, j - 1}}, {{1, j + 1}, {1, j + 2}, {1, j + 3}, {1, j + 4}});
    if (i == 3 && 5 <= j && j <= n - 3) return mv({{3, j}, {3, j - 1}}, {{1, j + 1}, {1, j + 2}, {2, j + 1}, {2, j + 2}});
    if (i == 3 && j == 4) return mv({{2, 4}, {3, 4}}, {{1, 5}, {1, 6}, {1, 7}, {1, 8}, {1, 9}});
    if (i == 4 && 6 <= j && j <= n - 3)
      return mv({{4, j}, {4, j - 1}}, {{1, j + 1}, {1, j + 2}, {2, j + 1}, {2, j + 2}, {3, j + 1}, {3, j + 2}});
    if (i == 4 && j == 5)
      return mv({{4, 5}, {3, 5}, {3, 4}}, {{1, 6}, {1, 7}, {1, 8}, {1, 9}, {2, 6}, {2, 7}, {2, 8}, {2, 9}});
  }
  if (cs.size() == 2 && hv.back() == 1) {
    auto [i, j] = cs[0];
    Cell last = cs[1];
    auto mv = [&](std::vector<Cell> add) { return detail::make_move(d, MoveLemma::narrow_one_short_stair, {last}, std::move(add)); };
    if (i == 1 && j < n - 2) return mv({{1, j + 1}, {1, j + 2}});
    if (i == 2 && j < n - 1) return mv({{1, j + 1}, {2, j + 1}});
    if (3 <= i && i <= 5 && j < n - 1) return mv({{1, j + 1}, {2, j + 1}, {3, j + 1}});
  }
  return std::nullopt;
}

// First corner (a,b) with n-1-b >= 4 and last corner column i >= 6.
inline std::optional<MoveOutcome> move_four_empty_rows(const Downset& d) {
  auto cs = corners(d);
  if (cs.empty()) return std::nullopt;
  int b = cs.front().j, i = cs.back().i;
  if (d.n() - 1 - b < 4 || i < 6) return std::nullopt;
  auto T = detail::lex_greatest(d, i / 2);
  std::vector<Cell> S;
  for (int c = 1; c <= i / 2; ++c)
    for (int up = 1; up <= 4; ++up) S.push_back({c, d.height(c) + up});
  return detail::make_move(d, MoveLemma::four_empty_rows, T, S);
}

inline std::vector<MoveOutcome> all_applicable_moves(const Downset& d) {
  std::vector<MoveOutcome> out;
  for (auto f : {move_distance_vector, move_stairs, move_drop_sizes, move_ends_with_stairs, move_column, move_trapezoid,
                 move_narrow, move_four_empty_rows})
    if (auto m = f(d)) out.push_back(std::move(*m));
  return out;
}

}  // namespace hyperind
