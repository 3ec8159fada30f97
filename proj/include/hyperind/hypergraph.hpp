#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperind {

// Exact, unbounded counts. Independent-set counts reach 2^n.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount pow2(int k) {
  BigCount x = 1;
  x <<= k;
  return x;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int t = 1; t <= k; ++t) r = r * static_cast<std::uint64_t>(n - k + t) / static_cast<std::uint64_t>(t);
  return r;
}

// A strictly increasing tuple of vertices.
using Edge = std::vector<int>;

inline std::string to_string(const Edge& e) {
  std::string s = "{";
  for (std::size_t t = 0; t < e.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(e[t]);
  }
  return s + "}";
}

inline std::uint64_t edge_mask(const Edge& e) {
  std::uint64_t m = 0;
  for (int v : e) m |= std::uint64_t{1} << v;
  return m;
}

class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int n, int r) : n_(n), r_(r) {
    if (n < 0) throw std::invalid_argument("hypergraph: negative n");
    if (r < 1) throw std::invalid_argument("hypergraph: uniformity must be >= 1");
  }
  Hypergraph(int n, int r, const std::vector<Edge>& edges) : Hypergraph(n, r) {
    for (const auto& e : edges) add(e);
  }

  int n() const { return n_; }
  int r() const { return r_; }
  std::size_t size() const { return edges_.size(); }
  const std::set<Edge>& edges() const { return edges_; }

  bool contains(const Edge& e) const { return edges_.count(e) != 0; }

  void validate(const Edge& e) const {
    if (static_cast<int>(e.size()) != r_)
      throw std::invalid_argument("edge " + to_string(e) + " has wrong size for r=" + std::to_string(r_));
    for (std::size_t t = 0; t < e.size(); ++t) {
      if (e[t] < 0 || e[t] >= n_) throw std::invalid_argument("edge " + to_string(e) + " has vertex outside [n]");
      if (t && e[t - 1] >= e[t]) throw std::invalid_argument("edge " + to_string(e) + " is not strictly increasing");
    }
  }

  // Returns false when the edge was already present.
  bool add(const Edge& e) {
    validate(e);
    return edges_.insert(e).second;
  }
  bool remove(const Edge& e) { return edges_.erase(e) != 0; }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  int r_ = 1;
  std::set<Edge> edges_;
};

// Simple graph on [n], stored as a set of ordered pairs (a < b).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative n");
  }
  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [a, b] : edges) add(a, b);
  }

  int n() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::set<std::pair<int, int>>& edges() const { return edges_; }

  bool add(int a, int b) {
    if (a == b) throw std::invalid_argument("graph: loop at " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n_) throw std::invalid_argument("graph: endpoint outside [n]");
    return edges_.emplace(a, b).second;
  }
  bool remove(int a, int b) {
    if (a > b) std::swap(a, b);
    return edges_.erase({a, b}) != 0;
  }
  bool adjacent(int a, int b) const {
    if (a > b) std::swap(a, b);
    return edges_.count({a, b}) != 0;
  }

  std::vector<int> degrees() const {
    std::vector<int> d(n_, 0);
    for (auto [a, b] : edges_) ++d[a], ++d[b];
    return d;
  }

  // Adjacency bitsets; requires n <= 64.
  std::vector<std::uint64_t> adjacency() const {
    if (n_ > 64) throw std::domain_error("graph: bitset adjacency needs n <= 64");
    std::vector<std::uint64_t> adj(n_, 0);
    for (auto [a, b] : edges_) {
      adj[a] |= std::uint64_t{1} << b;
      adj[b] |= std::uint64_t{1} << a;
    }
    return adj;
  }

  Hypergraph as_hypergraph() const {
    Hypergraph h(n_, 2);
    for (auto [a, b] : edges_) h.add({a, b});
    return h;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::set<std::pair<int, int>> edges_;
};

inline Graph graph_of(const Hypergraph& h) {
  if (h.r() != 2) throw std::invalid_argument("graph_of: hypergraph is not 2-uniform");
  Graph g(h.n());
  for (const auto& e : h.edges()) g.add(e[0], e[1]);
  return g;
}

// Edge-list text format: "n r" then one edge per line. Blank lines and '#' comments are skipped.
inline Hypergraph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      auto hash = out.find('#');
      if (hash != std::string::npos) out.erase(hash);
      if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line(line)) throw std::invalid_argument("edge list: missing header line \"n r\"");
  std::istringstream hdr(line);
  int n = -1, r = -1;
  std::string extra;
  if (!(hdr >> n >> r) || (hdr >> extra)) throw std::invalid_argument("edge list: malformed header \"" + line + "\"");
  Hypergraph h(n, r);
  while (next_line(line)) {
    std::istringstream row(line);
    Edge e;
    int v;
    while (row >> v) e.push_back(v);
    if (!row.eof()) throw std::invalid_argument("edge list: malformed edge line \"" + line + "\"");
    if (!h.add(e)) throw std::invalid_argument("edge list: duplicate edge " + to_string(e));
  }
  return h;
}

inline Hypergraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Hypergraph& h) {
  out << h.n() << ' ' << h.r() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t t = 0; t < e.size(); ++t) out << (t ? " " : "") << e[t];
    out << '\n';
  }
}

inline std::string format_edge_list(const Hypergraph& h) {
  std::ostringstream out;
  write_edge_list(out, h);
  return out.str();
}

inline Hypergraph complete_hypergraph(int n, int r) {
  Hypergraph h(n, r);
  if (r > n) return h;
  Edge e(r);
  for (int t = 0; t < r; ++t) e[t] = t;
  while (true) {
    h.add(e);
    int t = r - 1;
    while (t >= 0 && e[t] == n - r + t) --t;
    if (t < 0) break;
    ++e[t];
    for (int u = t + 1; u < r; ++u) e[u] = e[u - 1] + 1;
  }
  return h;
}

}  // namespace hyperind
