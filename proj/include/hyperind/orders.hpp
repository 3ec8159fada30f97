#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypergraph.hpp"
#include "independence.hpp"

namespace hyperind {

// A permutation of {1..r}; entry t says which coordinate is compared t-th.
class Permutation {
 public:
  explicit Permutation(std::vector<int> p) : p_(std::move(p)) {
    std::vector<bool> seen(p_.size() + 1, false);
    for (int x : p_) {
      if (x < 1 || x > static_cast<int>(p_.size()) || seen[x])
        throw std::invalid_argument("permutation: not a bijection on 1..r");
      seen[x] = true;
    }
    if (p_.empty()) throw std::invalid_argument("permutation: empty");
  }

  static Permutation lex(int r) {
    std::vector<int> p(r);
    for (int t = 0; t < r; ++t) p[t] = t + 1;
    return Permutation(p);
  }
  static Permutation colex(int r) {
    std::vector<int> p(r);
    for (int t = 0; t < r; ++t) p[t] = r - t;
    return Permutation(p);
  }
  // (r-s+1, ..., r, 1, ..., r-s)
  static Permutation rotated(int r, int s) {
    if (s < 1 || s > r) throw std::invalid_argument("permutation: need 1 <= s <= r");
    std::vector<int> p;
    for (int t = r - s + 1; t <= r; ++t) p.push_back(t);
    for (int t = 1; t <= r - s; ++t) p.push_back(t);
    return Permutation(p);
  }

  static Permutation parse(const std::string& text) {
    std::vector<int> p;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        p.push_back(std::stoi(item, &used));
        if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw std::invalid_argument("permutation: cannot parse \"" + text + "\"");
      }
    }
    return Permutation(p);
  }

  int r() const { return static_cast<int>(p_.size()); }
  // 0-based coordinate compared at step t
  int coord(int t) const { return p_[t] - 1; }
  const std::vector<int>& entries() const { return p_; }

  std::string str() const {
    std::string s;
    for (std::size_t t = 0; t < p_.size(); ++t) s += (t ? "," : "") + std::to_string(p_[t]);
    return s;
  }

 private:
  std::vector<int> p_;
};

inline std::strong_ordering pi_lex_compare(const Permutation& pi, const Edge& a, const Edge& b) {
  if (a.size() != b.size() || static_cast<int>(a.size()) != pi.r())
    throw std::invalid_argument("pi_lex_compare: size mismatch");
  for (int t = 0; t < pi.r(); ++t) {
    int c = pi.coord(t);
    if (a[c] != b[c]) return a[c] <=> b[c];
  }
  return std::strong_ordering::equal;
}

enum class Compression { below_or_equal, above, incomparable };

// A below_or_equal B iff a_t <= b_t for every t. "above" means B strictly below A.
inline Compression compression_leq(const Edge& a, const Edge& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compression_leq: size mismatch");
  bool le = true, ge = true;
  for (std::size_t t = 0; t < a.size(); ++t) {
    le = le && a[t] <= b[t];
    ge = ge && a[t] >= b[t];
  }
  if (le) return Compression::below_or_equal;
  if (ge) return Compression::above;
  return Compression::incomparable;
}

inline bool compression_le(const Edge& a, const Edge& b) { return compression_leq(a, b) == Compression::below_or_equal; }

// Walks the r-sets of [n] in pi-lex order. Coordinates are fixed in the order
// pi prescribes; each one ranges over the values compatible with the ones
// already fixed, which always leaves room for the rest.
class PiLexWalker {
 public:
  PiLexWalker(Permutation pi, int n) : pi_(std::move(pi)), n_(n), r_(pi_.r()), cur_(r_, -1) {
    if (n < r_) {
      done_ = true;
      return;
    }
    fill_from(0);
  }

  bool done() const { return done_; }
  const Edge& current() const { return cur_; }

  void next() {
    for (int t = r_ - 1; t >= 0; --t) {
      int c = pi_.coord(t);
      for (int u = t + 1; u < r_; ++u) cur_[pi_.coord(u)] = -1;
      if (cur_[c] < hi(c)) {
        ++cur_[c];
        fill_from(t + 1);
        return;
      }
      cur_[c] = -1;
    }
    done_ = true;
  }

 private:
  // bounds for coordinate c given the coordinates currently set
  int lo(int c) const {
    int b = c;
    for (int q = c - 1; q >= 0; --q)
      if (cur_[q] >= 0) {
        b = cur_[q] + (c - q);
        break;
      }
    return b;
  }
  int hi(int c) const {
    int b = n_ - r_ + c;
    for (int q = c + 1; q < r_; ++q)
      if (cur_[q] >= 0) {
        b = cur_[q] - (q - c);
        break;
      }
    return b;
  }
  void fill_from(int t) {
    for (; t < r_; ++t) {
      int c = pi_.coord(t);
      cur_[c] = lo(c);
    }
  }

  Permutation pi_;
  int n_, r_;
  Edge cur_;
  bool done_ = false;
};

inline Hypergraph initial_segment(const Permutation& pi, int n, int r, std::uint64_t e) {
  if (pi.r() != r) throw std::invalid_argument("initial_segment: permutation length differs from r");
  if (e > binomial(n, r)) throw std::out_of_range("initial_segment: e exceeds C(n,r)");
  Hypergraph h(n, r);
  PiLexWalker w(pi, n);
  for (std::uint64_t k = 0; k < e; ++k, w.next()) h.add(w.current());
  return h;
}

inline Hypergraph lex_initial(int n, int r, std::uint64_t e) { return initial_segment(Permutation::lex(r), n, r, e); }
inline Hypergraph colex_initial(int n, int r, std::uint64_t e) {
  return initial_segment(Permutation::colex(r), n, r, e);
}

inline Graph lex_graph(int n, std::uint64_t e) { return graph_of(lex_initial(n, 2, e)); }

namespace detail {

// all maximum cliques, as bitmasks (n <= 64)
inline std::vector<std::uint64_t> maximum_cliques(const Graph& g) {
  auto adj = g.adjacency();
  std::vector<std::uint64_t> best;
  int best_size = 0;
  auto rec = [&](auto&& self, std::uint64_t clique, int size, std::uint64_t cand) -> void {
    if (size + std::popcount(cand) < best_size) return;
    if (cand == 0) {
      if (size > best_size) best.clear(), best_size = size;
      best.push_back(clique);
      return;
    }
    int v = std::countr_zero(cand);
    std::uint64_t rest = cand & (cand - 1);
    self(self, clique | bit(v), size + 1, rest & adj[v]);
    self(self, clique, size, rest);
  };
  rec(rec, 0, 0, g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1);
  // the walk above also reports non-maximal sets of maximum size only once each
  std::sort(best.begin(), best.end());
  best.erase(std::unique(best.begin(), best.end()), best.end());
  return best;
}

}  // namespace detail

// Both lexish variants: L(n,e) and, when defined, L(n,e) minus (i-2, n-1)
// where {0..i} is the unique largest clique of L(n,e). The removed edge is
// the last one of the final complete row, so it always lies outside the clique.
inline std::pair<Graph, std::optional<Graph>> lexish_graph(int n, std::uint64_t e) {
  if (e < 1) throw std::invalid_argument("lexish_graph: e must be >= 1");
  Graph full = lex_graph(n, e);
  auto cliques = detail::maximum_cliques(full);
  if (cliques.size() != 1) throw std::domain_error("lexish_graph: largest clique of L(n,e) is not unique");
  std::uint64_t c = cliques.front();
  int i = std::popcount(c) - 1;
  if (c != (std::uint64_t{1} << (i + 1)) - 1) throw std::domain_error("lexish_graph: largest clique is not {0..i}");
  std::optional<Graph> minus;
  if (i >= 2 && n - 1 > i && full.adjacent(i - 2, n - 1)) {
    Graph g = full;
    g.remove(i - 2, n - 1);
    minus = g;
  }
  return {full, minus};
}

}  // namespace hyperind
