#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "hypergraph.hpp"
#include "orders.hpp"

namespace hyperind {

struct ShiftPair {
  int from;  // i
  int to;    // j <= i
};

inline Edge shifted_edge(const Edge& e, int from, int to) {
  Edge out = e;
  *std::find(out.begin(), out.end(), from) = to;
  std::sort(out.begin(), out.end());
  return out;
}

// S_{i->j}: each edge containing i but not j moves to E - i + j, unless that
// edge is already present.
inline Hypergraph shift(const Hypergraph& h, ShiftPair p) {
  if (p.to < 0 || p.to > p.from || p.from >= h.n()) throw std::invalid_argument("shift: need 0 <= j <= i < n");
  if (p.to == p.from) return h;
  Hypergraph out(h.n(), h.r());
  for (const auto& e : h.edges()) {
    bool has_i = std::binary_search(e.begin(), e.end(), p.from);
    bool has_j = std::binary_search(e.begin(), e.end(), p.to);
    if (has_i && !has_j) {
      Edge moved = shifted_edge(e, p.from, p.to);
      if (!h.contains(moved)) {
        out.add(moved);
        continue;
      }
    }
    out.add(e);
  }
  return out;
}

// H_{B->A}: apply b_t -> a_t for t = 1..r in turn.
inline Hypergraph compound_shift(const Hypergraph& h, const Edge& b, const Edge& a) {
  if (!compression_le(a, b)) throw std::invalid_argument("compound_shift: need A below B in the compression order");
  Hypergraph out = h;
  for (std::size_t t = 0; t < a.size(); ++t) out = shift(out, {b[t], a[t]});
  return out;
}

// Edges obtained by lowering one coordinate of e by one; these generate
// everything below e in the compression order.
inline std::vector<Edge> compression_predecessors(const Edge& e) {
  std::vector<Edge> out;
  for (std::size_t t = 0; t < e.size(); ++t) {
    int floor = t ? e[t - 1] + 1 : 0;
    if (e[t] > floor) {
      Edge p = e;
      --p[t];
      out.push_back(p);
    }
  }
  return out;
}

inline bool is_shifted(const Hypergraph& h) {
  for (const auto& e : h.edges())
    for (const auto& p : compression_predecessors(e))
      if (!h.contains(p)) return false;
  return true;
}

inline std::uint64_t shift_potential(const Hypergraph& h) {
  std::uint64_t t = 0;
  for (const auto& e : h.edges())
    for (int v : e) t += static_cast<std::uint64_t>(v);
  return t;
}

// Sweeps (i,j), j ascending then i ascending, until a full sweep changes nothing.
inline Hypergraph fully_shift(const Hypergraph& h) {
  Hypergraph cur = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < cur.n(); ++j)
      for (int i = j + 1; i < cur.n(); ++i) {
        Hypergraph next = shift(cur, {i, j});
        if (!(next == cur)) {
          cur = std::move(next);
          changed = true;
        }
      }
  }
  return cur;
}

// E_0(I): the s smallest elements of I together with the r-s smallest other vertices.
inline Edge minimal_edge(const std::vector<int>& independent, int n, int r, int s) {
  std::vector<int> I = independent;
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  if (static_cast<int>(I.size()) < s) throw std::invalid_argument("minimal_edge: |I| < s");
  if (n < r) throw std::invalid_argument("minimal_edge: n < r");
  Edge e(I.begin(), I.begin() + s);
  for (int v = 0; static_cast<int>(e.size()) < r; ++v)
    if (!std::binary_search(I.begin(), I.begin() + s, v)) e.push_back(v);
  std::sort(e.begin(), e.end());
  return e;
}

inline bool is_s_independent_shifted(const Hypergraph& h, const std::vector<int>& I, int s, bool check_shifted = false) {
  if (check_shifted && !is_shifted(h)) throw std::invalid_argument("is_s_independent_shifted: hypergraph is not shifted");
  std::vector<int> u = I;
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  if (static_cast<int>(u.size()) < s) return true;
  return !h.contains(minimal_edge(u, h.n(), h.r(), s));
}

// Definitional test, for comparison.
inline bool is_s_independent(const Hypergraph& h, const std::vector<int>& I, int s) {
  std::uint64_t m = 0;
  for (int v : I) m |= std::uint64_t{1} << v;
  for (const auto& e : h.edges())
    if (std::popcount(m & edge_mask(e)) >= s) return false;
  return true;
}

}  // namespace hyperind
