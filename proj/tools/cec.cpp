// cec: command-line front end for the cycle finders, pipeline, oracle and generators.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "cec/consecutive.hpp"
#include "cec/error.hpp"
#include "cec/generators.hpp"
#include "cec/oracle.hpp"
#include "cec/pipeline.hpp"
#include "cec/report.hpp"

namespace {

using namespace cec;

enum Exit { kOk = 0, kNotFound = 1, kUsage = 2, kBudget = 3 };

struct Options {
  std::string input = "-";
  std::string output;
  std::string cert;
  int k = 2;
  std::string eps = "1";
  std::string mode = "exact";
  std::uint64_t seed = 0;
  std::int64_t budget = 100'000'000;
  int jobs = 1;
  // gen
  std::string family;
  int a = 0, b = 0, n = 0, depth = 1;
  std::string degree = "0";
  std::vector<int> arcs;
};

double parse_rational(const std::string& s) {
  try {
    std::size_t used = 0;
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      double v = std::stod(s, &used);
      if (used == s.size()) return v;
    } else {
      double num = std::stod(s.substr(0, slash), &used);
      if (used == slash) {
        std::string den_s = s.substr(slash + 1);
        double den = std::stod(den_s, &used);
        if (used == den_s.size() && den != 0) return num / den;
      }
    }
  } catch (const std::exception&) {
  }
  throw Error(Errc::InvalidInput, "not a rational number: '" + s + "'");
}

Graph read_graph(const std::string& path) {
  if (path == "-") return parse_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot open '" + path + "'");
  return parse_edge_list(in);
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw Error(Errc::InvalidInput, "cannot write '" + o.output + "'");
  out << text;
}

void emit_json(const Options& o, const Json& j) { emit(o, j.dump() + "\n"); }

Params make_params(const Options& o) {
  Params p;
  p.k = o.k;
  p.eps = parse_rational(o.eps);
  auto mode = parse_mode(o.mode);
  if (!mode) throw Error(Errc::InvalidInput, "unknown mode '" + o.mode + "'");
  p.mode = *mode;
  p.budget = o.budget;
  p.validate();
  return p;
}

int cmd_find(const Options& o) {
  Graph g = read_graph(o.input);
  const double eps = parse_rational(o.eps);
  if (o.k < 2) throw Error(Errc::InvalidInput, "k must be at least 2");
  std::cerr << "cec find: n=" << g.vertex_count() << " m=" << g.edge_count() << " avg=" << g.average_degree()
            << " k=" << o.k << "\n";
  EngineTrace tr;
  try {
    CycleFamily f = find_consecutive_even_cycles(g, o.k, {eps, 8}, &tr);
    emit_json(o, engine_report_json(f, tr, o.k, eps, ""));
    return kOk;
  } catch (const Error& e) {
    if (e.code() != Errc::BelowThreshold && e.code() != Errc::ProofCaseExhausted) throw;
    emit_json(o, engine_report_json(std::nullopt, tr, o.k, eps, e.what()));
    return kNotFound;
  }
}

int cmd_disjoint(const Options& o) {
  Graph g = read_graph(o.input);
  Params p = make_params(o);
  if (o.jobs > 1) std::cerr << "cec disjoint: --jobs " << o.jobs << " accepted; stages run sequentially\n";
  std::cerr << "cec disjoint: n=" << g.vertex_count() << " m=" << g.edge_count() << " k=" << p.k
            << " mode=" << mode_name(p.mode) << "\n";
  SearchReport r = p.mode == Mode::K2 ? k2_pipeline(g, p) : run_pipeline(g, p);
  for (const auto& s : r.stages) std::cerr << "  [" << (s.ok ? "ok" : "--") << "] " << s.name << ": " << s.detail << "\n";
  emit_json(o, to_json(r));
  if (r.success) return kOk;
  return r.budget_exhausted ? kBudget : kNotFound;
}

int cmd_verify(const Options& o) {
  Graph g = read_graph(o.input);
  std::ifstream in(o.cert);
  if (!in) throw Error(Errc::InvalidInput, "cannot open certificate '" + o.cert + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::Parse, std::string("certificate is not JSON: ") + e.what());
  }
  Verdict v = verify_json_certificate(g, doc);
  Json out{{"schema", kReportSchema}, {"outcome", v.ok ? "success" : "failure"}, {"valid", v.ok}};
  if (!v.ok) out["violation"] = v.reason;
  emit_json(o, out);
  return v.ok ? kOk : kNotFound;
}

int cmd_oracle(const Options& o) {
  Graph g = read_graph(o.input);
  if (o.k < 1) throw Error(Errc::InvalidInput, "k must be positive");
  OracleResult r = oracle_find_family(g, o.k, o.budget);
  emit_json(o, to_json(r, o.k));
  return r.exists ? kOk : kNotFound;
}

std::string with_metadata(const Graph& g, const std::vector<std::pair<std::string, std::string>>& meta) {
  std::string out;
  for (const auto& [key, value] : meta) out += "# " + key + ": " + value + "\n";
  return out + serialize_edge_list(g);
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

int cmd_gen(const Options& o) {
  if (o.family == "complete-bipartite") {
    auto inst = gen_complete_bipartite(o.a, o.b);
    emit(o, with_metadata(inst.graph, {{"generator", "complete-bipartite"},
                                       {"sides", std::to_string(o.a) + " " + std::to_string(o.b)},
                                       {"average_degree", std::to_string(inst.expected_average_degree.num) + "/" +
                                                              std::to_string(inst.expected_average_degree.den)}}));
    return kOk;
  }
  if (o.family == "random") {
    auto inst = gen_random_avg_degree(o.n, parse_rational(o.degree), o.seed);
    emit(o, with_metadata(inst.graph, {{"generator", "random"},
                                       {"seed", std::to_string(o.seed)},
                                       {"requested_average_degree", o.degree},
                                       {"average_degree", fmt_double(inst.realized_average_degree)},
                                       {"attempts", std::to_string(inst.attempts)}}));
    return kOk;
  }
  if (o.family == "theta") {
    if (o.arcs.size() != 3) throw Error(Errc::InvalidInput, "--arcs takes three lengths");
    auto inst = gen_theta({o.arcs[0], o.arcs[1], o.arcs[2]});
    std::vector<std::pair<std::string, std::string>> meta{
        {"generator", "theta"},
        {"arcs", std::to_string(o.arcs[0]) + " " + std::to_string(o.arcs[1]) + " " + std::to_string(o.arcs[2])}};
    if (inst.cert) {
      Json cert{{"kind", "theta"}, {"cycle", inst.cert->cycle.vertices}, {"chord", {inst.cert->chord_x, inst.cert->chord_y}}};
      meta.push_back({"certificate", cert.dump()});
    }
    emit(o, with_metadata(inst.graph, meta));
    return kOk;
  }
  if (o.family == "layered") {
    auto inst = gen_layered_overflow(o.k, o.depth, o.seed);
    emit(o, with_metadata(inst.graph, {{"generator", "layered"},
                                       {"seed", std::to_string(o.seed)},
                                       {"root", std::to_string(inst.root)},
                                       {"overflow_level", std::to_string(inst.overflow_level)},
                                       {"expected_anchor_depth", std::to_string(inst.expected_anchor_depth)}}));
    return kOk;
  }
  throw Error(Errc::InvalidInput, "unknown generator '" + o.family + "'");
}

int cmd_stats(const Options& o) {
  Graph g = read_graph(o.input);
  Params p = make_params(o);
  std::map<int, int> hist;
  int max_deg = 0, min_deg = g.vertex_count() ? g.degree(0) : 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    ++hist[g.degree(v)];
    max_deg = std::max(max_deg, g.degree(v));
    min_deg = std::min(min_deg, g.degree(v));
  }
  Json degrees = Json::array();
  for (auto [d, c] : hist) degrees.push_back({d, c});
  // Preview with an empty deletion trace: V1' is the whole vertex set.
  DeletionTrace trace;
  for (Vertex v = 0; v < g.vertex_count(); ++v) trace.terminal_vertices.push_back(v);
  Partition part = partition_vertices(g, trace, p);
  Json out{{"schema", kReportSchema},
           {"outcome", "success"},
           {"vertices", g.vertex_count()},
           {"edges", g.edge_count()},
           {"average_degree", g.average_degree()},
           {"min_degree", min_deg},
           {"max_degree", max_deg},
           {"degree_histogram", degrees},
           {"partition_preview",
            Json{{"v1", part.v1.size()},
                 {"v2", part.v2.size()},
                 {"u", part.u_set.size()},
                 {"m", part.m},
                 {"e_v1", part.e_v1},
                 {"e_v1_v2", part.e_v1_v2},
                 {"e_v2", part.e_v2},
                 {"degree_cap", part.degree_cap}}},
           {"params", to_json(p)}};
  emit_json(o, out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Cycles of consecutive even lengths: finders, disjoint pipeline, oracle, generators"};
  app.require_subcommand(1);

  auto graph_opts = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "edge-list file or - for stdin");
    sub->add_option("-o,--output", o.output, "write the output here instead of stdout");
  };
  auto search_opts = [&](CLI::App* sub) {
    sub->add_option("-k", o.k, "number of cycles")->check(CLI::Range(1, 1 << 20));
    sub->add_option("--eps", o.eps, "epsilon (decimal or p/q)");
    sub->add_option("--mode", o.mode, "exact | asymptotic | k2");
    sub->add_option("--seed", o.seed, "seed");
    sub->add_option("--budget", o.budget, "search node budget")->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 62));
    sub->add_option("--jobs", o.jobs, "worker count")->check(CLI::Range(1, 4096));
  };

  auto* find = app.add_subcommand("find", "k cycles of consecutive even lengths (not disjoint)");
  graph_opts(find);
  search_opts(find);
  auto* disjoint = app.add_subcommand("disjoint", "k vertex-disjoint cycles of consecutive even lengths");
  graph_opts(disjoint);
  search_opts(disjoint);
  auto* verify = app.add_subcommand("verify", "check a JSON certificate against a graph");
  graph_opts(verify);
  verify->add_option("-c,--cert", o.cert, "certificate or report JSON")->required();
  auto* oracle = app.add_subcommand("oracle", "exhaustive existence check for small graphs");
  graph_opts(oracle);
  search_opts(oracle);
  auto* gen = app.add_subcommand("gen", "generate an instance as an edge list");
  gen->add_option("family", o.family, "complete-bipartite | random | theta | layered")->required();
  gen->add_option("-o,--output", o.output, "write the output here instead of stdout");
  gen->add_option("-a", o.a, "first side size");
  gen->add_option("-b", o.b, "second side size");
  gen->add_option("-n", o.n, "vertex count");
  gen->add_option("-d,--degree", o.degree, "target average degree");
  gen->add_option("--arcs", o.arcs, "three arc lengths")->expected(3);
  gen->add_option("--depth", o.depth, "depth of the overflowing level");
  gen->add_option("-k", o.k, "number of cycles");
  gen->add_option("--seed", o.seed, "seed");
  auto* stats = app.add_subcommand("stats", "densities, degrees and a partition preview");
  graph_opts(stats);
  search_opts(stats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cout << error_json("Usage", e.what()).dump() << "\n";
    return kUsage;
  }

  try {
    if (*find) return cmd_find(o);
    if (*disjoint) return cmd_disjoint(o);
    if (*verify) return cmd_verify(o);
    if (*oracle) return cmd_oracle(o);
    if (*gen) return cmd_gen(o);
    if (*stats) return cmd_stats(o);
  } catch (const Error& e) {
    std::cerr << "cec: " << e.what() << "\n";
    std::cout << error_json(std::string(errc_name(e.code())), e.what()).dump() << "\n";
    return e.code() == Errc::BudgetExceeded ? kBudget : kUsage;
  }
  return kUsage;
}
