#include "zforce/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "zforce/catalog.hpp"
#include "zforce/families.hpp"
#include "zforce/forcing.hpp"
#include "zforce/recognizer.hpp"
#include "zforce/spanning_tree.hpp"
#include "zforce/spectral.hpp"

namespace zforce::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int to_int(std::string_view s, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad " + std::string(what) + ": '" + std::string(s) + "'");
  return value;
}

std::vector<int> to_ints(std::string_view s, std::string_view what) {
  std::vector<int> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    out.push_back(to_int(s.substr(0, comma), what));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

VertexSet to_vertex_set(std::string_view s) {
  if (s.starts_with('{') && s.ends_with('}')) s = s.substr(1, s.size() - 2);
  VertexSet out;
  for (int v : to_ints(s, "vertex")) {
    if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    out.insert(v);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> split_keys(const std::vector<std::string>& words,
                                                            std::vector<std::string>& plain) {
  std::vector<std::pair<std::string, std::string>> keyed;
  for (const auto& w : words) {
    const auto eq = w.find('=');
    if (eq == std::string::npos) plain.push_back(w);
    else keyed.emplace_back(w.substr(0, eq), w.substr(eq + 1));
  }
  return keyed;
}

std::vector<Graph> generate_family(const std::vector<std::string>& args, int order) {
  if (order > 0) {
    if (!args.empty()) throw std::invalid_argument("family --order takes no block list");
    std::vector<Graph> out;
    for (auto& m : enumerate_family(order)) out.push_back(std::move(m.graph));
    return out;
  }
  std::vector<std::string> plain;
  std::optional<int> t, m;
  for (auto& [key, value] : split_keys(args, plain)) {
    if (key == "t") t = to_int(value, "t");
    else if (key == "m") m = to_int(value, "m");
    else throw std::invalid_argument("unknown family key '" + key + "'");
  }
  if (!m) throw std::invalid_argument("family needs m=<T index> or --order");
  std::vector<Block> blocks;
  for (const auto& word : plain)
    for (int n : to_ints(word, "M index")) blocks.push_back({BlockKind::M, n});
  if (t && *t != static_cast<int>(blocks.size()))
    throw std::invalid_argument("family t=" + std::to_string(*t) + " but " +
                                std::to_string(blocks.size()) + " M indices given");
  for (const Block& b : blocks)
    if (b.index < 0) throw std::invalid_argument("M index must be non-negative");
  if (*m < 0) throw std::invalid_argument("T index must be non-negative");
  blocks.push_back({BlockKind::T, *m});
  std::vector<Graph> out;
  for (auto& member : family_members(blocks)) out.push_back(std::move(member.graph));
  return out;
}

}  // namespace

std::vector<Graph> generate(const std::vector<std::string>& words, int order) {
  if (words.empty()) throw std::invalid_argument("missing generator name");
  const std::string& name = words[0];
  const std::vector<std::string> args(words.begin() + 1, words.end());
  auto one_int = [&](std::string_view what) {
    if (args.size() != 1) throw std::invalid_argument(name + " takes exactly one argument");
    return to_int(args[0], what);
  };
  if (name != "family" && order > 0) throw std::invalid_argument("--order applies to family only");

  if (name == "family") return generate_family(args, order);
  if (name == "heawood" && args.empty()) return {heawood()};
  if (name == "cex16" && args.empty()) return {counterexample16()};
  if (name == "petersen" && args.empty()) return {petersen()};
  if (name == "necklace") return {necklace(one_int("bead count"))};
  if (name == "complete") return {complete_graph(one_int("order"))};
  if (name == "cycle") return {cycle_graph(one_int("order"))};
  if (name == "path") return {path_graph(one_int("order"))};
  if (name == "cubic") return connected_cubic_graphs(one_int("order"));
  if (name == "prism") {
    std::vector<std::string> plain;
    std::optional<std::pair<int, int>> sigma;
    for (auto& [key, value] : split_keys(args, plain)) {
      if (key != "sigma") throw std::invalid_argument("unknown prism key '" + key + "'");
      auto ij = to_ints(value, "sigma");
      if (ij.size() != 2) throw std::invalid_argument("sigma needs two indices i,j");
      sigma = std::pair(ij[0], ij[1]);
    }
    if (plain.size() != 1) throw std::invalid_argument("prism takes one order argument");
    return {permutation_prism(to_int(plain[0], "order"), sigma)};
  }
  throw std::invalid_argument("unknown generator '" + name + "'");
}

namespace {

enum class Format { Text, Graph6, Tsv };

struct Settings {
  std::string input;
  std::string output;
  std::string format = "text";
  std::optional<int> budget;
  int root = 0;
  double tol = 1e-6;
  std::string set;
  int threads = 1;
  int order = 0;
  std::vector<std::string> words;
};

struct Record {
  std::size_t line;
  std::string text;
};

// Computes one output record per graph; throws on a per-record failure.
class Runner {
 public:
  Runner(std::string command, const Settings& s, Format f) : command_(std::move(command)), s_(s), fmt_(f) {}

  bool budget_exhausted = false;

  std::string header() const {
    if (command_ == "census")
      return "# graph6\tn\tcubic\tkappa\tZ\tL_eig\tL_twin\tL_minor\tverdict\n";
    return {};
  }

  std::string record(const Graph& g) {
    if (command_ == "zf") return zf(g);
    if (command_ == "closure") return closure_record(g);
    if (command_ == "bounds") return bounds(g);
    if (command_ == "recognize") return recognize(g);
    if (command_ == "spantree") return spantree(g);
    if (command_ == "census") return census(g);
    throw std::logic_error("unhandled command " + command_);
  }

 private:
  ZeroForcingOptions zopt() const {
    ZeroForcingOptions o;
    o.budget = s_.budget;
    o.threads = s_.threads;
    return o;
  }

  std::string zf(const Graph& g) {
    const auto r = zero_forcing_number(g, zopt());
    const std::string g6 = write_graph6(g);
    if (!r.complete) budget_exhausted = true;
    if (fmt_ == Format::Tsv) {
      return g6 + '\t' + std::to_string(g.order()) + '\t' +
             (r.complete ? std::to_string(r.value) : ">=" + std::to_string(r.lower_bound)) + '\t' +
             (r.complete ? r.witness.to_string() : "-") + '\n';
    }
    if (!r.complete) return g6 + "  Z>=" + std::to_string(r.lower_bound) + "  exceeds budget\n";
    return g6 + "  Z=" + std::to_string(r.value) + "  witness=" + r.witness.to_string() + '\n';
  }

  std::string closure_record(const Graph& g) {
    const VertexSet initial = to_vertex_set(s_.set);
    const Closure c = closure(g, initial);
    std::string forces;
    for (const Force& f : c.trace) {
      if (!forces.empty()) forces += ',';
      forces += std::to_string(f.forcer) + '>' + std::to_string(f.forced);
    }
    const bool all = c.black == g.vertices();
    const std::string g6 = write_graph6(g);
    if (fmt_ == Format::Tsv)
      return g6 + '\t' + c.black.to_string() + '\t' + (all ? "yes" : "no") + '\t' + forces + '\n';
    return g6 + "  final=" + c.black.to_string() + "  forcing=" + (all ? "yes" : "no") +
           "  trace=" + (forces.empty() ? "-" : forces) + '\n';
  }

  BoundsReport bounds_of(const Graph& g) {
    BoundsOptions o;
    o.budget = s_.budget;
    o.cluster_gap = s_.tol;
    o.threads = s_.threads;
    auto r = bounds_report(g, {}, o);
    if (!r.upper.complete) budget_exhausted = true;
    return r;
  }

  std::string bounds(const Graph& g) {
    const BoundsReport r = bounds_of(g);
    if (fmt_ == Format::Tsv) {
      return r.graph6 + '\t' + std::to_string(r.order) + '\t' + std::to_string(r.eigenvalue_bound) +
             '\t' + std::to_string(r.twin_bound) + '\t' +
             (r.minor_bound ? std::to_string(*r.minor_bound) : "-") + '\t' + std::to_string(r.lower) +
             '\t' + (r.upper.complete ? std::to_string(r.upper.value) : "-") + '\t' + r.verdict() + '\n';
    }
    return r.to_text();
  }

  std::string recognize(const Graph& g) {
    RecognizeOptions o;
    const RecognitionResult r = recognize_z3(g, o);
    const std::string verdict = r.member ? "member" : "non-member";
    const std::string detail = r.member ? "spec=" + r.summary() : r.summary();
    if (fmt_ == Format::Tsv) return write_graph6(g) + '\t' + verdict + '\t' + detail + '\n';
    return verdict + "  " + detail + '\n';
  }

  std::string spantree(const Graph& g) {
    const SpanningTree t = spanning_tree(g, s_.root);
    const DegreeCensus c = degree_census(t);
    const std::string tree6 = write_graph6(t.tree);
    if (fmt_ == Format::Graph6) return tree6 + '\n';
    const std::string counts = std::to_string(c.n1()) + (fmt_ == Format::Tsv ? "\t" : "  n2=") +
                               std::to_string(c.n2()) + (fmt_ == Format::Tsv ? "\t" : "  n3=") +
                               std::to_string(c.n3());
    if (fmt_ == Format::Tsv)
      return write_graph6(g) + '\t' + std::to_string(t.root) + '\t' + tree6 + '\t' + counts + '\n';
    std::string deleted;
    for (const auto* list : {&t.deleted_in_layer, &t.deleted_parent})
      for (const Edge& e : *list) deleted += (deleted.empty() ? "" : ",") + std::to_string(e.u) + '-' + std::to_string(e.v);
    return write_graph6(g) + "  root=" + std::to_string(t.root) + "  tree=" + tree6 +
           "  deleted=" + (deleted.empty() ? "-" : deleted) + "  n1=" + counts + '\n';
  }

  std::string census(const Graph& g) {
    const BoundsReport r = bounds_of(g);
    return r.graph6 + '\t' + std::to_string(g.order()) + '\t' + (g.is_cubic() ? "yes" : "no") + '\t' +
           std::to_string(edge_connectivity(g)) + '\t' +
           (r.upper.complete ? std::to_string(r.upper.value) : ">=" + std::to_string(r.upper.lower_bound)) +
           '\t' + std::to_string(r.eigenvalue_bound) + '\t' + std::to_string(r.twin_bound) + '\t' +
           (r.minor_bound ? std::to_string(*r.minor_bound) : "-") + '\t' + r.verdict() + '\n';
  }

  std::string command_;
  const Settings& s_;
  Format fmt_;
};

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "graph6") return Format::Graph6;
  if (name == "tsv") return Format::Tsv;
  throw UsageError("unknown format '" + name + "'");
}

int execute(const std::string& command, const Settings& s, std::istream& in, std::ostream& out,
            std::ostream& err) {
  const Format fmt = parse_format(s.format);
  if (s.threads < 1) throw UsageError("--threads must be at least 1");
  if (s.budget && *s.budget < 1) throw UsageError("--budget must be at least 1");
  if (s.tol <= 0) throw UsageError("--tol must be positive");

  std::ofstream file_out;
  std::ostream* sink = &out;
  if (!s.output.empty()) {
    file_out.open(s.output);
    if (!file_out) {
      err << "zforce: cannot write " << s.output << '\n';
      return kExitComputation;
    }
    sink = &file_out;
  }

  if (command == "gen") {
    if (!s.input.empty()) throw UsageError("gen takes a generator spec, not --in");
    if (fmt == Format::Tsv) throw UsageError("gen emits graph6 records only");
    std::vector<Graph> graphs;
    try {
      graphs = generate(s.words, s.order);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    for (const Graph& g : graphs) *sink << write_graph6(g) << '\n';
    return kExitOk;
  }

  if (!s.words.empty()) throw UsageError(command + " takes no positional arguments");
  if (fmt == Format::Graph6 && command != "spantree")
    throw UsageError("--format graph6 applies to gen and spantree only");
  if (command == "closure" && s.set.empty()) throw UsageError("closure needs --set");
  if (command == "closure") to_vertex_set(s.set);

  std::ifstream file_in;
  std::istream* source = &in;
  if (!s.input.empty()) {
    file_in.open(s.input);
    if (!file_in) {
      err << "zforce: cannot read " << s.input << '\n';
      return kExitComputation;
    }
    source = &file_in;
  }

  Runner runner(command, s, fmt);
  *sink << runner.header();
  bool failed = false;
  std::string line;
  for (std::size_t lineno = 1; std::getline(*source, line); ++lineno) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      const Graph g = parse_graph6(line);
      *sink << runner.record(g);
    } catch (const std::exception& e) {
      err << "zforce: line " << lineno << ": " << e.what() << '\n';
      failed = true;
    }
    sink->flush();
  }
  if (runner.budget_exhausted) {
    err << "zforce: budget exhausted on at least one record\n";
    failed = true;
  }
  return failed ? kExitComputation : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Zero forcing numbers and maximum nullity bounds for small graphs", "zforce"};
  app.require_subcommand(1);
  Settings s;

  auto add_common = [&s](CLI::App* sub) {
    sub->add_option("--in", s.input, "graph6 input file (default: stdin)");
    sub->add_option("--out", s.output, "output file (default: stdout)");
    sub->add_option("--format", s.format, "text | graph6 | tsv");
    sub->add_option("--budget", s.budget, "largest zero forcing set size to try");
    sub->add_option("--threads", s.threads, "solver worker threads");
  };

  CLI::App* closure_cmd = app.add_subcommand("closure", "derived colouring of an initial set");
  add_common(closure_cmd);
  closure_cmd->add_option("--set", s.set, "initial black vertices, e.g. 0,1,2");
  add_common(app.add_subcommand("zf", "exact zero forcing number with witness"));
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "maximum nullity lower/upper bounds");
  add_common(bounds_cmd);
  bounds_cmd->add_option("--tol", s.tol, "eigenvalue clustering gap");
  CLI::App* gen_cmd = app.add_subcommand("gen", "emit named graphs and families as graph6");
  add_common(gen_cmd);
  gen_cmd->add_option("--order", s.order, "family order (gen family --order N)");
  gen_cmd->add_option("spec", s.words, "generator spec");
  add_common(app.add_subcommand("recognize", "decide Z = 3 for connected cubic graphs"));
  CLI::App* span_cmd = app.add_subcommand("spantree", "layered spanning tree and degree census");
  add_common(span_cmd);
  span_cmd->add_option("--root", s.root, "root vertex");
  CLI::App* census_cmd = app.add_subcommand("census", "one TSV row of invariants per graph");
  add_common(census_cmd);
  census_cmd->add_option("--tol", s.tol, "eigenvalue clustering gap");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "zforce: " << e.what() << '\n' << "run 'zforce --help' for usage\n";
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return execute(command, s, in, out, err);
  } catch (const UsageError& e) {
    err << "zforce: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "zforce: " << e.what() << '\n';
    return kExitComputation;
  }
}

}  // namespace zforce::cli
