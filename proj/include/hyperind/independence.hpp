#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hypergraph.hpp"

namespace hyperind {

inline constexpr int kEnumerationGuard = 30;

namespace detail {

inline BigCount from_u128(unsigned __int128 x) {
  BigCount hi = static_cast<std::uint64_t>(x >> 64);
  hi <<= 64;
  return hi + static_cast<std::uint64_t>(x);
}

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Depth-first walk over s-independent sets, adding vertices in increasing order.
// Every subset of an s-independent set is s-independent, so each valid set is
// reached exactly once from its prefix, and only edges through the newly
// added vertex need to be re-checked.
struct SubsetWalker {
  int n;
  int s;
  std::vector<std::vector<std::uint64_t>> through;  // edges containing each vertex

  std::uint64_t walk(int next, std::uint64_t chosen) const {
    std::uint64_t total = 1;
    for (int v = next; v < n; ++v) {
      std::uint64_t with = chosen | bit(v);
      bool ok = true;
      for (std::uint64_t e : through[v])
        if (std::popcount(with & e) >= s) {
          ok = false;
          break;
        }
      if (ok) total += walk(v + 1, with);
    }
    return total;
  }
};

}  // namespace detail

inline int isolated_vertex_count(const Hypergraph& h) {
  std::vector<bool> seen(h.n(), false);
  for (const auto& e : h.edges())
    for (int v : e) seen[v] = true;
  int c = 0;
  for (bool b : seen) c += !b;
  return c;
}

// Reference oracle: subset enumeration. Edges may be any subsets of [n].
inline BigCount count_s_independent_enumerate(int n, const std::vector<std::uint64_t>& edges, int s) {
  if (n > kEnumerationGuard)
    throw std::domain_error("subset enumeration needs n <= " + std::to_string(kEnumerationGuard));
  detail::SubsetWalker w{n, s, std::vector<std::vector<std::uint64_t>>(n)};
  for (auto e : edges) {
    if (e >> n) throw std::invalid_argument("edge mask has a vertex outside [n]");
    for (std::uint64_t m = e; m; m &= m - 1) w.through[std::countr_zero(m)].push_back(e);
  }
  return BigCount(w.walk(0, 0));
}

inline BigCount count_s_independent_enumerate(const Hypergraph& h, int s) {
  if (s < 1 || s > h.r()) throw std::invalid_argument("s must satisfy 1 <= s <= r");
  std::vector<std::uint64_t> masks;
  masks.reserve(h.size());
  if (h.n() > kEnumerationGuard)
    throw std::domain_error("subset enumeration needs n <= " + std::to_string(kEnumerationGuard));
  for (const auto& e : h.edges()) masks.push_back(edge_mask(e));
  return count_s_independent_enumerate(h.n(), masks, s);
}

inline Graph shadow2(const Hypergraph& h) {
  if (h.r() < 2) throw std::invalid_argument("shadow2 needs r >= 2");
  Graph g(h.n());
  for (const auto& e : h.edges())
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b) g.add(e[a], e[b]);
  return g;
}

namespace detail {

class GraphCounter {
 public:
  explicit GraphCounter(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

  unsigned __int128 count(std::uint64_t mask) {
    if (mask == 0) return 1;
    // split into connected components
    unsigned __int128 product = 1;
    std::uint64_t rest = mask;
    while (rest) {
      std::uint64_t comp = component(rest, std::countr_zero(rest));
      rest &= ~comp;
      product *= connected(comp);
    }
    return product;
  }

 private:
  std::uint64_t component(std::uint64_t within, int start) const {
    std::uint64_t seen = bit(start), frontier = seen;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint64_t nb = adj_[v] & within & ~seen;
      seen |= nb;
      frontier |= nb;
    }
    return seen;
  }

  unsigned __int128 connected(std::uint64_t comp) {
    int size = std::popcount(comp);
    if (size == 1) return 2;
    if (size == 2) return 3;
    if (auto it = memo_.find(comp); it != memo_.end()) return it->second;
    int best = -1, best_deg = -1;
    bool clique = true;
    for (std::uint64_t m = comp; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int d = std::popcount(adj_[v] & comp);
      if (d != size - 1) clique = false;
      if (d > best_deg) best_deg = d, best = v;
    }
    unsigned __int128 r;
    if (clique) {
      r = static_cast<unsigned>(size) + 1;
    } else {
      std::uint64_t without = comp & ~bit(best);
      std::uint64_t closed = comp & ~(adj_[best] | bit(best));
      r = count(without) + count(closed);
    }
    memo_.emplace(comp, r);
    return r;
  }

  std::vector<std::uint64_t> adj_;
  std::unordered_map<std::uint64_t, unsigned __int128> memo_;
};

}  // namespace detail

// Branch on a maximum-degree vertex, with memoization on connected components.
inline BigCount count_graph_independent(const Graph& g) {
  if (g.n() == 0) return 1;
  detail::GraphCounter c(g.adjacency());
  std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
  return detail::from_u128(c.count(all));
}

// Uses the shadow for s = 2 and the isolated-vertex formula for s = 1;
// everything else falls back to enumeration.
inline BigCount count_s_independent(const Hypergraph& h, int s) {
  if (s < 1 || s > h.r()) throw std::invalid_argument("s must satisfy 1 <= s <= r");
  if (s == 1) return pow2(isolated_vertex_count(h));
  if (s == 2 && h.n() <= 64) return count_graph_independent(shadow2(h));
  return count_s_independent_enumerate(h, s);
}

inline BigCount triangle_count(const Graph& g) {
  BigCount total = 0;
  if (g.n() <= 64) {
    auto adj = g.adjacency();
    for (auto [a, b] : g.edges()) {
      std::uint64_t above = b == 63 ? 0 : ~((std::uint64_t{1} << (b + 1)) - 1);
      total += std::popcount(adj[a] & adj[b] & above);
    }
    return total;
  }
  for (auto [a, b] : g.edges())
    for (int c = b + 1; c < g.n(); ++c)
      if (g.adjacent(a, c) && g.adjacent(b, c)) ++total;
  return total;
}

inline Hypergraph triangle_hypergraph(const Graph& g) {
  Hypergraph h(g.n(), 3);
  for (auto [a, b] : g.edges())
    for (int c = b + 1; c < g.n(); ++c)
      if (g.adjacent(a, c) && g.adjacent(b, c)) h.add({a, b, c});
  return h;
}

}  // namespace hyperind
