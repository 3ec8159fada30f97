// hyperind: command-line front end.
// Exit status: 0 ok, 1 comparison failed, 2 bad input, 3 guard violated, 4 infeasible.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperind/optimizer.hpp"

using namespace hyperind;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kBadInput = 2, kGuard = 3, kInfeasible = 4 };

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty()) throw ParseError("--input is required");
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

Hypergraph load_hypergraph(const std::string& path) {
  try {
    return parse_edge_list(read_input(path));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

// A downset record, or the edge list of a shifted 3-graph.
Downset load_downset(const std::string& path) {
  std::string text = trim(read_input(path));
  try {
    if (text.rfind("n=", 0) == 0) return parse_downset(text);
    return downset_of(parse_edge_list(text));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string heights_text(const Downset& d) {
  std::string s;
  for (std::size_t c = 0; c < d.heights().size(); ++c) s += (c ? "," : "") + std::to_string(d.heights()[c]);
  return s.empty() ? "-" : s;
}

std::string cells_text(const std::vector<Cell>& cells) {
  std::string s;
  for (auto c : cells) s += to_string(c);
  return s;
}

json record_json(const OptimalRecord& r) {
  json j;
  j["n"] = r.n;
  j["e"] = r.e;
  j["min_cost"] = r.min_cost;
  j["heights"] = r.witness.heights();
  j["tag"] = to_string(r.tag);
  j["shadow"] = r.shadow ? json(*r.shadow) : json(nullptr);
  j["optima"] = r.optima;
  return j;
}

std::string record_text(const OptimalRecord& r) {
  std::ostringstream o;
  o << "n=" << r.n << " e=" << r.e << " min_cost=" << r.min_cost << " heights=" << heights_text(r.witness)
    << " tag=" << to_string(r.tag);
  if (r.shadow) o << " shadow=" << *r.shadow;
  if (r.optima > 1) o << " optima=" << r.optima;
  return o.str();
}

struct Options {
  int n = 0, s = 2, r = 3, from = -1, to = -1;
  std::uint64_t e = 0;
  std::string pi, format = "text", input;
};

void emit(const Options& o, const json& structured, const std::string& text) {
  if (o.format == "structured")
    std::cout << structured.dump() << "\n";
  else
    std::cout << text << "\n";
}

int cmd_count(const Options& o) {
  Hypergraph h = load_hypergraph(o.input);
  if (o.s < 1 || o.s > h.r()) throw std::invalid_argument("--s must lie in 1..r");
  BigCount c = count_s_independent(h, o.s);
  emit(o, json{{"n", h.n()}, {"r", h.r()}, {"s", o.s}, {"count", c.str()}}, c.str());
  return kOk;
}

int cmd_shift(const Options& o) {
  Hypergraph h = load_hypergraph(o.input);
  Hypergraph out;
  if (o.from >= 0 || o.to >= 0) {
    if (o.from < 0 || o.to < 0) throw std::invalid_argument("--from and --to go together");
    out = shift(h, {o.from, o.to});
  } else {
    out = fully_shift(h);
  }
  if (o.format == "structured") {
    json edges = json::array();
    for (const auto& e : out.edges()) edges.push_back(e);
    emit(o, json{{"n", out.n()}, {"r", out.r()}, {"edges", edges}, {"shifted", is_shifted(out)}}, "");
  } else {
    std::cout << format_edge_list(out);
  }
  return kOk;
}

int cmd_orders(const Options& o) {
  Permutation pi = o.pi.empty() ? Permutation::lex(o.r) : Permutation::parse(o.pi);
  initial_segment(pi, o.n, o.r, o.e);  // argument checks
  if (o.format == "structured") {
    json edges = json::array();
    PiLexWalker w(pi, o.n);
    for (std::uint64_t k = 0; k < o.e; ++k, w.next()) edges.push_back(w.current());
    emit(o, json{{"n", o.n}, {"r", o.r}, {"pi", pi.entries()}, {"e", o.e}, {"edges", edges}}, "");
  } else {
    // listed in pi-lex order rather than the sorted order of format_edge_list
    std::cout << o.n << " " << o.r << "\n";
    PiLexWalker w(pi, o.n);
    for (std::uint64_t k = 0; k < o.e; ++k, w.next()) {
      const auto& e = w.current();
      for (std::size_t t = 0; t < e.size(); ++t) std::cout << (t ? " " : "") << e[t];
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_downset(const Options& o) {
  Downset d = load_downset(o.input);
  auto cls = classify(d);
  json cs = json::array();
  for (auto c : corners(d)) cs.push_back({c.i, c.j});
  json j{{"n", d.n()},
         {"heights", d.heights()},
         {"cells", d.size()},
         {"cost", downset_cost(d)},
         {"space", downset_space(d)},
         {"i2", i2_of_downset(d).str()},
         {"corners", cs},
         {"hdv", horizontal_distance_vector(d)},
         {"lex_style", to_string(is_231_lex_style(d))},
         {"tag", to_string(cls.tag)},
         {"shadow", describe_graph(downset_shadow(d))}};
  std::ostringstream t;
  t << format_downset(d) << "\ncost=" << downset_cost(d) << " space=" << downset_space(d) << " i2=" << i2_of_downset(d)
    << "\ncorners=" << cells_text(corners(d)) << "\nlex_style=" << to_string(is_231_lex_style(d))
    << " tag=" << to_string(cls.tag) << "\nshadow=" << describe_graph(downset_shadow(d));
  emit(o, j, t.str());
  return kOk;
}

int cmd_moves(const Options& o) {
  Downset d = load_downset(o.input);
  for (const auto& m : all_applicable_moves(d)) {
    json j{{"lemma", to_string(m.lemma)},
           {"heights", m.result.heights()},
           {"cost", downset_cost(m.result)},
           {"space", downset_space(m.result)}};
    std::ostringstream t;
    t << to_string(m.lemma) << " remove=" << cells_text(m.removed) << " add=" << cells_text(m.added)
      << " -> heights=" << heights_text(m.result) << " cost=" << downset_cost(d) << "->" << downset_cost(m.result)
      << " space=" << downset_space(d) << "->" << downset_space(m.result);
    emit(o, j, t.str());
  }
  return kOk;
}

int cmd_optimize(const Options& o) {
  auto r = optimize(o.n, o.e);
  emit(o, record_json(r), record_text(r));
  return kOk;
}

int cmd_pareto(const Options& o) {
  for (const auto& r : pareto(o.n).entries) emit(o, record_json(r), record_text(r));
  return kOk;
}

int cmd_reproduce(const Options& o) {
  int lo = o.from < 0 ? 7 : o.from, hi = o.to < 0 ? 31 : o.to;
  auto rep = reproduce_table(lo, hi);
  for (const auto& rec : rep.exceptions) emit(o, record_json(rec), record_text(rec));
  for (const auto& row : rep.rows) {
    json observed = json::object();
    for (const auto& [name, es] : row.observed) observed[name] = es;
    json j{{"n", row.n},
           {"observed", observed},
           {"expected", row.expected},
           {"missing", row.missing},
           {"unexpected", row.unexpected},
           {"lex_style_ties", row.lex_style_ties},
           {"match", row.match()}};
    std::ostringstream t;
    t << "n=" << row.n << " " << (row.match() ? "match" : "MISMATCH") << " observed={";
    bool first = true;
    for (const auto& [name, es] : row.observed) {
      t << (first ? "" : ", ") << name << "@e=";
      for (std::size_t k = 0; k < es.size(); ++k) t << (k ? "," : "") << es[k];
      first = false;
    }
    t << "} expected={";
    for (std::size_t k = 0; k < row.expected.size(); ++k) t << (k ? ", " : "") << row.expected[k];
    t << "} lex_style_ties=" << row.lex_style_ties;
    emit(o, j, t.str());
  }
  return rep.match() ? kOk : kMismatch;
}

int cmd_verify(const Options& o) {
  int lo = o.from < 0 ? (o.n ? o.n : kTheoremMinN) : o.from;
  int hi = o.to < 0 ? (o.n ? o.n : 40) : o.to;
  bool ok = true;
  for (int n = lo; n <= hi; ++n) {
    auto rep = verify_main_theorem(n);
    ok = ok && rep.pass();
    emit(o,
         json{{"n", n}, {"checked", rep.checked}, {"persistent", rep.persistent},
              {"counterexamples", rep.counterexamples.size()}, {"pass", rep.pass()}},
         "n=" + std::to_string(n) + " checked=" + std::to_string(rep.checked) + " persistent=" +
             std::to_string(rep.persistent) + " " + (rep.pass() ? "pass" : "FAIL"));
    for (const auto& c : rep.counterexamples) emit(o, record_json(c), "  " + record_text(c));
  }
  return ok ? kOk : kMismatch;
}

int cmd_conjecture(const Options& o) {
  auto rep = conjecture_check(o.r, o.s, o.n, o.e);
  std::string ratio = rep.best.is_zero() ? "undefined" : rep.initial_segment.str() + "/" + rep.best.str();
  json fam = json::array();
  for (const auto& e : rep.best_family) fam.push_back(e);
  emit(o,
       json{{"r", o.r}, {"s", o.s}, {"n", o.n}, {"e", o.e}, {"pi", rep.pi.entries()}, {"families", rep.families},
            {"max", rep.best.str()}, {"initial_segment", rep.initial_segment.str()}, {"ratio", ratio},
            {"best_family", fam}},
       "r=" + std::to_string(o.r) + " s=" + std::to_string(o.s) + " n=" + std::to_string(o.n) + " e=" +
           std::to_string(o.e) + " pi=" + rep.pi.str() + " families=" + std::to_string(rep.families) +
           " max=" + rep.best.str() + " initial_segment=" + rep.initial_segment.str() + " ratio=" + ratio);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independent sets in hypergraphs with a fixed number of edges"};
  app.require_subcommand(1);
  Options o;

  auto fmt = [&](CLI::App* c) {
    c->add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  };
  auto count = app.add_subcommand("count", "count s-independent sets of an edge list");
  count->add_option("--input", o.input, "edge-list file, - for stdin")->required();
  count->add_option("--s", o.s, "independence parameter");
  auto shift_cmd = app.add_subcommand("shift", "apply one shift (--from i --to j) or shift fully");
  shift_cmd->add_option("--input", o.input, "edge-list file, - for stdin")->required();
  shift_cmd->add_option("--from", o.from, "vertex i to move from");
  shift_cmd->add_option("--to", o.to, "vertex j < i to move to");
  auto orders = app.add_subcommand("orders", "initial segment of a pi-lex order");
  orders->add_option("--n", o.n, "number of vertices")->required();
  orders->add_option("--r", o.r, "edge size (default 3)");
  orders->add_option("--e", o.e, "number of edges")->required();
  orders->add_option("--pi", o.pi, "comma-separated permutation of 1..r (default identity)");
  auto downset = app.add_subcommand("downset", "describe a downset record or shifted 3-graph");
  downset->add_option("--input", o.input, "downset record or 3-graph edge list, - for stdin")->required();
  auto moves = app.add_subcommand("moves", "list the applicable improving moves");
  moves->add_option("--input", o.input, "downset record or 3-graph edge list, - for stdin")->required();
  auto optimize_cmd = app.add_subcommand("optimize", "least-cost downset with space at least e");
  optimize_cmd->add_option("--n", o.n, "number of vertices, 3..63")->required();
  optimize_cmd->add_option("--e", o.e, "minimum space (edge count)")->required();
  auto pareto_cmd = app.add_subcommand("pareto", "optimum for every e");
  pareto_cmd->add_option("--n", o.n, "number of vertices, 3..63")->required();
  auto table = app.add_subcommand("reproduce-table", "exceptional optima against the catalogue");
  table->add_option("--from", o.from, "first n (default 7)");
  table->add_option("--to", o.to, "last n (default 31)");
  auto verify = app.add_subcommand("verify-theorem", "every optimum is lex style or persistent (n >= 32)");
  verify->add_option("--n", o.n, "single n");
  verify->add_option("--from", o.from, "first n (default 32)");
  verify->add_option("--to", o.to, "last n (default 40)");
  auto conj = app.add_subcommand("conjecture-check", "exhaustive probe on tiny instances");
  conj->add_option("--r", o.r, "edge size, at most 4")->required();
  conj->add_option("--s", o.s, "independence parameter, 1..r")->required();
  conj->add_option("--n", o.n, "number of vertices, at most 9")->required();
  conj->add_option("--e", o.e, "number of edges")->required();
  for (auto* c : {count, shift_cmd, orders, downset, moves, optimize_cmd, pareto_cmd, table, verify, conj}) fmt(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*count) return cmd_count(o);
    if (*shift_cmd) return cmd_shift(o);
    if (*orders) return cmd_orders(o);
    if (*downset) return cmd_downset(o);
    if (*moves) return cmd_moves(o);
    if (*optimize_cmd) return cmd_optimize(o);
    if (*pareto_cmd) return cmd_pareto(o);
    if (*table) return cmd_reproduce(o);
    if (*verify) return cmd_verify(o);
    if (*conj) return cmd_conjecture(o);
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    emit(o, record_json(e.full_record()), "full: " + record_text(e.full_record()));
    return kInfeasible;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kGuard;
  } catch (const std::out_of_range& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kBadInput;
  }
  return kOk;
}
