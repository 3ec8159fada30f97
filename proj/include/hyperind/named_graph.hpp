#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypergraph.hpp"

namespace hyperind {

// Graph expressions, e.g. "(K_3 v E_1) u E_5", "K_{9}-K_{1,6}", "K_13 - e".
//   K_m       complete graph          E_m     edgeless graph
//   K_{a,b}   complete bipartite      e       a single edge (K_2)
//   A v B     join                    A u B   disjoint union
//   A - B     delete the edges of B, with B's vertex t placed on A's vertex |A|-1-t
// Unicode ∨, ∪ and − are accepted for v, u and -. Precedence: '-' binds
// tightest, then 'v', then 'u'. Vertices of A come first in joins and unions.

inline Graph complete_graph(int m) {
  Graph g(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) g.add(a, b);
  return g;
}

inline Graph empty_graph(int m) { return Graph(m); }

inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y) g.add(x, a + y);
  return g;
}

inline Graph graph_union(const Graph& a, const Graph& b) {
  Graph g(a.n() + b.n());
  for (auto [x, y] : a.edges()) g.add(x, y);
  for (auto [x, y] : b.edges()) g.add(a.n() + x, a.n() + y);
  return g;
}

inline Graph graph_join(const Graph& a, const Graph& b) {
  Graph g = graph_union(a, b);
  for (int x = 0; x < a.n(); ++x)
    for (int y = 0; y < b.n(); ++y) g.add(x, a.n() + y);
  return g;
}

inline Graph graph_delete(const Graph& a, const Graph& b) {
  if (b.n() > a.n()) throw std::invalid_argument("graph expression: deleted graph is larger than its host");
  Graph g = a;
  int top = a.n() - 1;
  for (auto [x, y] : b.edges())
    if (!g.remove(top - x, top - y)) throw std::invalid_argument("graph expression: deleted edge not present");
  return g;
}

inline Graph pad_isolated(const Graph& g, int n) {
  if (g.n() > n) throw std::invalid_argument("cannot pad a graph to fewer vertices");
  return graph_union(g, empty_graph(n - g.n()));
}

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string text) : s_(normalize(std::move(text))) {}

  Graph parse() {
    Graph g = parse_union();
    skip();
    if (p_ != s_.size()) fail("unexpected '" + s_.substr(p_) + "'");
    return g;
  }

 private:
  static std::string normalize(std::string t) {
    auto replace = [&](const std::string& from, const std::string& to) {
      for (std::size_t at; (at = t.find(from)) != std::string::npos;) t.replace(at, from.size(), to);
    };
    replace("∨", "v");
    replace("∪", "u");
    replace("−", "-");
    return t;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("malformed graph expression \"" + s_ + "\": " + why);
  }

  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool eat(char c) {
    skip();
    if (p_ < s_.size() && s_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }

  Graph parse_union() {
    Graph g = parse_join();
    while (eat('u')) g = graph_union(g, parse_join());
    return g;
  }
  Graph parse_join() {
    Graph g = parse_diff();
    while (eat('v')) g = graph_join(g, parse_diff());
    return g;
  }
  Graph parse_diff() {
    Graph g = parse_atom();
    while (eat('-')) g = graph_delete(g, parse_atom());
    return g;
  }

  int number() {
    skip();
    std::size_t start = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (start == p_) fail("expected a number");
    return std::stoi(s_.substr(start, p_ - start));
  }

  std::vector<int> subscript() {
    if (!eat('_')) fail("expected '_'");
    std::vector<int> xs;
    if (eat('{')) {
      xs.push_back(number());
      while (eat(',')) xs.push_back(number());
      if (!eat('}')) fail("expected '}'");
    } else {
      xs.push_back(number());
    }
    return xs;
  }

  Graph parse_atom() {
    skip();
    if (eat('(')) {
      Graph g = parse_union();
      if (!eat(')')) fail("expected ')'");
      return g;
    }
    if (eat('K')) {
      auto xs = subscript();
      if (xs.size() == 1) return complete_graph(xs[0]);
      if (xs.size() == 2) return complete_bipartite(xs[0], xs[1]);
      fail("K takes one or two sizes");
    }
    if (eat('E')) {
      auto xs = subscript();
      if (xs.size() != 1) fail("E takes one size");
      return empty_graph(xs[0]);
    }
    if (eat('e')) return complete_graph(2);
    fail(p_ < s_.size() ? "unexpected '" + s_.substr(p_, 1) + "'" : "unexpected end");
  }

  std::string s_;
  std::size_t p_ = 0;
};

}  // namespace detail

inline Graph build_named_graph(const std::string& expression) { return detail::ExprParser(expression).parse(); }

// Relabel by degree (descending, ties by label) and return the edge set.
// Threshold graphs, which include every named family used here, have twin
// vertices within each degree class, so this is a canonical form for them.
inline Graph canonical_form(const Graph& g) {
  auto deg = g.degrees();
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
  std::vector<int> label(g.n());
  for (int t = 0; t < g.n(); ++t) label[order[t]] = t;
  Graph c(g.n());
  for (auto [a, b] : g.edges()) c.add(label[a], label[b]);
  return c;
}

inline bool same_named_graph(const Graph& a, const Graph& b) {
  return a.n() == b.n() && canonical_form(a) == canonical_form(b);
}

// True when the expression, padded with isolated vertices up to g.n(), matches g.
inline bool matches_expression(const Graph& g, const std::string& expression, bool pad = true) {
  Graph h = build_named_graph(expression);
  if (h.n() > g.n()) return false;
  if (h.n() < g.n()) {
    if (!pad) return false;
    h = pad_isolated(h, g.n());
  }
  return same_named_graph(g, h);
}

// Short name for the shapes that shadows of optimal downsets take; isolated
// vertices are dropped, so the name is read "padded to n".
inline std::string describe_graph(const Graph& g) {
  auto deg = g.degrees();
  std::vector<int> live;
  for (int v = 0; v < g.n(); ++v)
    if (deg[v] > 0) live.push_back(v);
  int m = static_cast<int>(live.size());
  if (m == 0) return "E_" + std::to_string(g.n());
  auto km = "K_{" + std::to_string(m) + "}";
  std::size_t full = static_cast<std::size_t>(m) * (m - 1) / 2;
  std::size_t missing = full - g.size();
  if (missing == 0) return km;
  if (missing == 1) return km + "-e";

  // complement restricted to the non-isolated vertices
  std::vector<std::pair<int, int>> gaps;
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      if (!g.adjacent(live[x], live[y])) gaps.emplace_back(live[x], live[y]);
  // star: all missing edges share one vertex
  for (int c : {gaps[0].first, gaps[0].second}) {
    bool star = std::all_of(gaps.begin(), gaps.end(), [&](auto p) { return p.first == c || p.second == c; });
    if (star) return km + "-K_{1," + std::to_string(missing) + "}";
  }
  // clique joined to an independent set: the complement is a clique on the independent part
  std::vector<int> indep;
  for (int v : live)
    if (deg[v] < m - 1) indep.push_back(v);
  int b = static_cast<int>(indep.size());
  if (static_cast<std::size_t>(b) * (b - 1) / 2 == missing) {
    bool ok = true;
    for (std::size_t x = 0; x < indep.size() && ok; ++x)
      for (std::size_t y = x + 1; y < indep.size() && ok; ++y) ok = !g.adjacent(indep[x], indep[y]);
    if (ok) return "K_{" + std::to_string(m - b) + "} v E_{" + std::to_string(b) + "}";
  }
  return "graph(" + std::to_string(m) + " vertices, " + std::to_string(g.size()) + " edges)";
}

}  // namespace hyperind
