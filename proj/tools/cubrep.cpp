// cubrep: command-line front end. Exit codes: 0 ok, 1 verification failure,
// 2 usage or parse error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cubrep/cubrep.hpp"

namespace {

using namespace cubrep;
using io::Json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

io::GraphFormat format_from(const std::string& s) {
  if (s == "edge-list") return io::GraphFormat::edge_list;
  if (s == "dimacs") return io::GraphFormat::dimacs;
  return io::GraphFormat::automatic;
}

Graph load_graph(const std::string& path, const std::string& format) {
  auto parsed = io::parse_graph(path, format_from(format));
  for (const auto& w : parsed.warnings) std::cerr << path << ": warning: " << w << '\n';
  return std::move(parsed.graph);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    io::write_file(out_path, text);
}

std::uint64_t seed_override(std::uint64_t seed) {
  const char* env = std::getenv("CUBREP_SEED");
  if (!env || !*env) return seed;
  const std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidArgument("CUBREP_SEED must be a non-negative integer");
  return std::stoull(s);
}

void print_report(const VerificationReport& r) {
  for (auto [u, v] : r.missing_edges)
    std::cerr << "missing edge " << u + 1 << ' ' << v + 1 << ": disjoint in some dimension\n";
  for (auto [u, v] : r.phantom_edges)
    std::cerr << "phantom edge " << u + 1 << ' ' << v + 1 << ": overlapping in every dimension\n";
  for (const auto& l : r.length_violations)
    std::cerr << "dimension " << l.dimension << " vertex " << l.vertex + 1 << ": length " << l.length
              << ", expected " << l.expected << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cube and box representations of graphs"};
  app.require_subcommand(1);
  std::string format = "auto";
  app.add_option("--format", format, "Graph file format")
      ->check(CLI::IsMember({"auto", "edge-list", "dimacs"}));

  // build
  auto* build = app.add_subcommand("build", "Construct a cube representation");
  std::string build_graph, build_out, mode = "det";
  std::uint64_t seed = 0;
  bool normalize = false, prune = false;
  build->add_option("graph", build_graph, "Graph file")->required();
  build->add_option("--mode", mode, "det or rand")->check(CLI::IsMember({"det", "rand"}));
  build->add_option("--seed", seed, "Seed for rand mode (CUBREP_SEED overrides)");
  build->add_flag("--normalize", normalize, "Write endpoints as fractions of the common length");
  build->add_flag("--prune", prune, "Drop redundant dimensions afterwards");
  build->add_option("-o,--output", build_out, "Output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a representation against a graph");
  std::string verify_graph, verify_rep;
  verify->add_option("graph", verify_graph, "Graph file")->required();
  verify->add_option("representation", verify_rep, "Representation JSON")->required();

  // degeneracy
  auto* degen = app.add_subcommand("degeneracy", "Degeneracy and degeneracy order");
  std::string degen_graph;
  degen->add_option("graph", degen_graph, "Graph file")->required();

  // oracle
  auto* orc = app.add_subcommand("oracle", "Exact cubicity or boxicity of a tiny graph");
  std::string oracle_graph;
  bool exact_cub = false, exact_box = false;
  orc->add_option("graph", oracle_graph, "Graph file")->required();
  auto* cub_flag = orc->add_flag("--exact-cubicity", exact_cub, "Exact cubicity");
  auto* box_flag = orc->add_flag("--exact-boxicity", exact_box, "Exact boxicity");
  cub_flag->excludes(box_flag);
  box_flag->excludes(cub_flag);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Crossing-number bound formulas");
  std::uint64_t bn = 0, bm = 0, bt = 0;
  bounds->add_option("--n", bn, "Vertex count")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--m", bm, "Edge count")->required();
  bounds->add_option("--crossings", bt, "Crossing count t")->required();

  // crossing-pipeline
  auto* pipe = app.add_subcommand("crossing-pipeline", "Box decomposition from a crossing list");
  std::string pipe_graph, pipe_cross, pipe_out;
  bool pipe_normalize = false;
  pipe->add_option("graph", pipe_graph, "Graph file")->required();
  pipe->add_option("crossings", pipe_cross, "Crossing list file")->required();
  pipe->add_flag("--normalize", pipe_normalize, "Write cube dimensions as fractions");
  pipe->add_option("-o,--output", pipe_out, "Output file (default stdout)");

  // experiment
  auto* exp = app.add_subcommand("experiment", "Run a random-graph experiment");
  std::string exp_spec, exp_out;
  std::optional<unsigned> exp_threads;
  exp->add_option("spec", exp_spec, "Experiment spec JSON")->required();
  exp->add_option("-o,--output", exp_out, "Result file (default stdout)");
  exp->add_option("--threads", exp_threads, "Worker threads (result does not depend on it)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) {
      const Graph g = load_graph(build_graph, format);
      BuildOptions opt;
      opt.mode = mode == "rand" ? BuildMode::randomized : BuildMode::deterministic;
      opt.seed = seed_override(seed);
      opt.prune = prune;
      const auto rep = construct_cub_rep(g, opt);
      const auto report = verify_representation(g, rep);
      if (!report.ok()) {
        print_report(report);
        return kVerifyFailed;
      }
      emit(build_out, io::emit_representation(rep, normalize));
      return kOk;
    }
    if (*verify) {
      const Graph g = load_graph(verify_graph, format);
      const auto rep = io::parse_representation(io::read_file(verify_rep));
      if (rep.vertex_count() != g.vertex_count()) {
        std::cerr << "representation has " << rep.vertex_count() << " vertices, graph has " << g.vertex_count()
                  << '\n';
        return kVerifyFailed;
      }
      if (rep.source_graph_hash != graph_digest(g))
        std::cerr << "warning: representation was built from a different graph\n";
      const auto report = verify_representation(g, rep);
      print_report(report);
      std::cout << (report.ok() ? "verified" : "NOT verified") << ": " << rep.dimension() << " dimensions, "
                << report.missing_edges.size() << " missing, " << report.phantom_edges.size() << " phantom, "
                << report.length_violations.size() << " length violations\n";
      return report.ok() ? kOk : kVerifyFailed;
    }
    if (*degen) {
      const Graph g = load_graph(degen_graph, format);
      const auto d = degeneracy_order(g);
      Json order = Json::array();
      for (Vertex v : d.order) order.push_back(v + 1);
      std::cout << io::dump(Json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"k", d.k}, {"order", order}});
      return kOk;
    }
    if (*orc) {
      if (!exact_cub && !exact_box) {
        std::cerr << "oracle: pass --exact-cubicity or --exact-boxicity\n";
        return kUsage;
      }
      const Graph g = load_graph(oracle_graph, format);
      const oracle::OracleLimits limits;
      if (g.vertex_count() > limits.max_vertices) {
        std::cerr << "oracle: graph has " << g.vertex_count() << " vertices; exact search is capped at "
                  << limits.max_vertices << '\n';
        return kUsage;
      }
      Json j{{"n", g.vertex_count()}, {"m", g.edge_count()}};
      if (exact_cub)
        j["cubicity"] = oracle::exact_cubicity(g, limits);
      else
        j["boxicity"] = oracle::exact_boxicity(g, limits);
      std::cout << io::dump(j);
      return kOk;
    }
    if (*bounds) {
      std::cout << io::dump(io::bound_report_json(bound_report(bn, bm, bt)));
      return kOk;
    }
    if (*pipe) {
      const Graph g = load_graph(pipe_graph, format);
      const auto cd = io::parse_crossings_text(io::read_file(pipe_cross), g.vertex_count());
      const auto res = crossing_pipeline(g, cd);
      for (const auto& w : res.warnings) std::cerr << pipe_cross << ": warning: " << w << '\n';
      const auto report = verify_representation(g, res.dims);
      if (!report.ok()) {
        print_report(report);
        return kVerifyFailed;
      }
      emit(pipe_out, io::dump(io::crossing_pipeline_json(g, res, pipe_normalize)));
      return kOk;
    }
    if (*exp) {
      auto spec = io::parse_experiment_spec(io::read_file(exp_spec));
      if (exp_threads) spec.threads = *exp_threads;
      emit(exp_out, io::dump(io::experiment_result_json(run_experiment(spec))));
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SearchExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}
