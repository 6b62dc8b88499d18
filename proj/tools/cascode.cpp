#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cascode/benchgen.hpp"
#include "cascode/detect.hpp"
#include "cascode/graph.hpp"
#include "cascode/greedy.hpp"
#include "cascode/harness.hpp"
#include "cascode/metrics.hpp"
#include "cascode/text.hpp"
#include "cascode/version.hpp"

namespace {

using namespace cascode;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    out += argv[i];
  }
  return out;
}

std::string file_header(const std::string& command_line, std::uint64_t seed) {
  return "# cascode " + std::string(kVersionString) +
         " | command: " + command_line + " | seed: " + std::to_string(seed) +
         "\n";
}

Graph load_graph(const std::string& input, bool karate) {
  if (karate == !input.empty())
    throw std::invalid_argument("exactly one of --input or --karate is required");
  if (karate) return karate_club();
  std::ifstream in(input);
  if (!in) throw IoError("cannot open input file: " + input);
  try {
    return parse_edge_list(in);
  } catch (const ParseError& e) {
    throw ParseError(0, input + ": " + e.what());
  }
}

// Writes through to the named file, or to fallback when no name was given.
class Report {
 public:
  Report(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw IoError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

struct DetectArgs {
  std::string input;
  bool karate = false;
  std::string output;
  std::uint64_t seed = 0;
};

int cmd_detect(const DetectArgs& a, const std::string& command_line) {
  const Graph g = load_graph(a.input, a.karate);
  const DetectResult result = detect(g, a.seed);

  Report report(a.output, std::cout);
  report.stream() << file_header(command_line, a.seed) << "node,community\n";
  for (NodeId v = 0; v < g.node_count(); ++v)
    report.stream() << g.display_name(v) << ',' << result.partition[v] << '\n';

  std::ostream& summary = report.to_file() ? std::cout : std::cerr;
  summary << "nodes=" << g.node_count() << " edges=" << g.edge_count()
          << " communities=" << result.partition.label_count() << " modularity=";
  if (g.edge_count() == 0)
    summary << "n/a";
  else
    summary << format_double(modularity(g, result.partition));
  summary << '\n';
  return 0;
}

struct CompareArgs {
  std::string input;
  bool karate = false;
  std::string output;
  std::string format = "text";
  std::uint64_t seed = 0;
};

int cmd_compare(const CompareArgs& a, const std::string& command_line) {
  const Graph g = load_graph(a.input, a.karate);
  if (g.edge_count() == 0)
    throw IoError(
        "modularity undefined for edgeless graph; comparison needs at least "
        "one edge (detect still works on such input)");

  const DetectResult dr = detect(g, a.seed);
  const Partition greedy = greedy_modularity_partition(g);
  const double q_cascode = modularity(g, dr.partition);
  const double q_greedy = modularity(g, greedy);
  const double agreement = nmi(dr.partition, greedy);

  Report report(a.output, std::cout);
  std::ostream& out = report.stream();
  out << file_header(command_line, a.seed);
  if (a.format == "csv") {
    out << "q_cascode,q_greedy,q_delta,communities_cascode,communities_greedy,"
           "nmi_between_methods\n"
        << format_double(q_cascode) << ',' << format_double(q_greedy) << ','
        << format_double(q_cascode - q_greedy) << ','
        << dr.partition.label_count() << ',' << greedy.label_count() << ','
        << format_double(agreement) << '\n';
  } else {
    out << "q_cascode: " << format_double(q_cascode) << '\n'
        << "q_greedy: " << format_double(q_greedy) << '\n'
        << "q_delta: " << format_double(q_cascode - q_greedy) << '\n'
        << "communities_cascode: " << dr.partition.label_count() << '\n'
        << "communities_greedy: " << greedy.label_count() << '\n'
        << "nmi_between_methods: " << format_double(agreement) << '\n';
  }
  return 0;
}

struct BenchArgs {
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  double p_in = kDefaultGnPIn;
  double p_out = -1.0;  // sentinel, filled from default_gn_p_out
  std::uint32_t seeds = 20;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_bench(const BenchArgs& a, const std::string& command_line) {
  const BenchResult result =
      run_gn_bench(a.k, a.n, a.p_in, a.p_out, a.seeds, a.seed);

  Report report(a.output, std::cout);
  std::ostream& out = report.stream();
  out << file_header(command_line, a.seed) << "# " << result.params << '\n';
  for (const BenchRunRecord& r : result.runs) {
    out << "run: seed=" << r.seed
        << " communities_cascode=" << r.communities_cascode
        << " communities_greedy=" << r.communities_greedy
        << " q_cascode=" << format_double(r.q_cascode)
        << " q_greedy=" << format_double(r.q_greedy)
        << " nmi_cascode=" << format_double(r.nmi_cascode)
        << " nmi_greedy=" << format_double(r.nmi_greedy) << '\n';
    out << "time: seed=" << r.seed << " gen_ms=" << format_double(r.gen_ms)
        << " detect_ms=" << format_double(r.detect_ms)
        << " greedy_ms=" << format_double(r.greedy_ms) << '\n';
  }
  out << "aggregate: mean_q_cascode=" << format_double(result.mean_q_cascode)
      << " sd_q_cascode=" << format_double(result.sd_q_cascode)
      << " mean_q_greedy=" << format_double(result.mean_q_greedy)
      << " sd_q_greedy=" << format_double(result.sd_q_greedy)
      << " mean_nmi_cascode=" << format_double(result.mean_nmi_cascode)
      << " sd_nmi_cascode=" << format_double(result.sd_nmi_cascode)
      << " mean_nmi_greedy=" << format_double(result.mean_nmi_greedy)
      << " sd_nmi_greedy=" << format_double(result.sd_nmi_greedy)
      << " mean_abs_nmi_delta=" << format_double(result.mean_abs_nmi_delta)
      << '\n';
  return 0;
}

struct GenerateArgs {
  std::string generator;
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  double p_in = kDefaultGnPIn;
  double p_out = -1.0;
  std::string wiring = "ring";
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_generate(const GenerateArgs& a, const std::string& command_line) {
  PlantedNetwork net =
      a.generator == "gn"
          ? gn_benchmark(a.k, a.n, a.p_in, a.p_out, a.seed)
          : clique_constellation(
                a.k, a.n, a.wiring == "ring" ? Wiring::kRing : Wiring::kComplete,
                a.seed);

  std::ofstream edges(a.output);
  if (!edges) throw IoError("cannot open output file: " + a.output);
  edges << file_header(command_line, a.seed) << "# " << net.params << '\n'
        << to_edge_list(net.graph);

  const std::string truth_path = a.output + ".truth";
  std::ofstream truth(truth_path);
  if (!truth) throw IoError("cannot open output file: " + truth_path);
  truth << file_header(command_line, a.seed) << "# " << net.params << '\n';
  for (NodeId v = 0; v < net.graph.node_count(); ++v)
    truth << v << ' ' << net.truth[v] << '\n';

  std::cout << "nodes=" << net.graph.node_count()
            << " edges=" << net.graph.edge_count() << '\n';
  return 0;
}

struct ScalingArgs {
  std::vector<std::uint32_t> sizes;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_scaling(const ScalingArgs& a, const std::string& command_line) {
  const ScalingReport result = run_scaling(a.sizes, a.seed);

  Report report(a.output, std::cout);
  std::ostream& out = report.stream();
  out << file_header(command_line, a.seed);
  for (const ScalingPoint& p : result.points) {
    out << "net: nodes=" << p.nodes << " edges=" << p.edges
        << " reps=" << p.reps << '\n';
    out << "time: nodes=" << p.nodes << " best_ms=" << format_double(p.best_ms)
        << '\n';
  }
  out << "time_slope: " << format_double(result.slope) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string command_line = join_args(argc, argv);

  CLI::App app{"cascaded leader-follower community detection toolkit"};
  app.set_version_flag("--version", kVersionString);
  app.require_subcommand(1);

  DetectArgs detect_args;
  auto* detect_cmd =
      app.add_subcommand("detect", "detect communities and write node labels");
  detect_cmd->add_option("--input", detect_args.input, "edge-list file");
  detect_cmd->add_flag("--karate", detect_args.karate,
                       "use the embedded karate club network");
  detect_cmd->add_option("--output", detect_args.output,
                         "label CSV path (default: stdout)");
  detect_cmd->add_option("--seed", detect_args.seed, "tie-break seed");

  CompareArgs compare_args;
  auto* compare_cmd = app.add_subcommand(
      "compare", "compare cascade detection against greedy modularity");
  compare_cmd->add_option("--input", compare_args.input, "edge-list file");
  compare_cmd->add_flag("--karate", compare_args.karate,
                        "use the embedded karate club network");
  compare_cmd->add_option("--output", compare_args.output,
                          "report path (default: stdout)");
  compare_cmd->add_option("--format", compare_args.format, "csv or text")
      ->check(CLI::IsMember({"csv", "text"}));
  compare_cmd->add_option("--seed", compare_args.seed, "tie-break seed");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand(
      "bench", "planted-partition sweep over seeds, both detectors");
  bench_cmd->add_option("--k", bench_args.k, "community count")->required();
  bench_cmd->add_option("--n", bench_args.n, "nodes per community")->required();
  bench_cmd->add_option("--p-in", bench_args.p_in,
                        "intra-community edge probability (default 0.9)");
  auto* bench_pout = bench_cmd->add_option(
      "--p-out", bench_args.p_out,
      "inter-community edge probability (default: external degree 2)");
  bench_cmd->add_option("--seeds", bench_args.seeds, "number of seeded runs");
  bench_cmd->add_option("--seed", bench_args.seed, "base seed");
  bench_cmd->add_option("--output", bench_args.output,
                        "report path (default: stdout)");

  GenerateArgs gen_args;
  auto* gen_cmd =
      app.add_subcommand("generate", "write a benchmark network and its truth");
  gen_cmd->add_option("--generator", gen_args.generator, "gn or cliques")
      ->required()
      ->check(CLI::IsMember({"gn", "cliques"}));
  gen_cmd->add_option("--k", gen_args.k, "community/clique count")->required();
  gen_cmd->add_option("--n", gen_args.n, "nodes per community / clique size")
      ->required();
  gen_cmd->add_option("--p-in", gen_args.p_in,
                      "gn only: intra-community edge probability");
  auto* gen_pout = gen_cmd->add_option(
      "--p-out", gen_args.p_out,
      "gn only: inter-community edge probability (default: external degree 2)");
  gen_cmd->add_option("--wiring", gen_args.wiring, "cliques only: ring or complete")
      ->check(CLI::IsMember({"ring", "complete"}));
  gen_cmd->add_option("--seed", gen_args.seed, "generator seed");
  gen_cmd->add_option("--output", gen_args.output,
                      "edge-list path; truth goes to <output>.truth")
      ->required();

  ScalingArgs scaling_args;
  auto* scaling_cmd = app.add_subcommand(
      "scaling", "time detection across sizes and fit the log-log slope");
  scaling_cmd
      ->add_option("--sizes", scaling_args.sizes,
                   "node counts, e.g. --sizes 200,400,800,1600,3200")
      ->required()
      ->delimiter(',');
  scaling_cmd->add_option("--seed", scaling_args.seed, "generator seed");
  scaling_cmd->add_option("--output", scaling_args.output,
                          "report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*detect_cmd) return cmd_detect(detect_args, command_line);
    if (*compare_cmd) return cmd_compare(compare_args, command_line);
    if (*bench_cmd) {
      if (bench_pout->count() == 0)
        bench_args.p_out = default_gn_p_out(bench_args.k, bench_args.n);
      return cmd_bench(bench_args, command_line);
    }
    if (*gen_cmd) {
      if (gen_pout->count() == 0)
        gen_args.p_out = default_gn_p_out(gen_args.k, gen_args.n);
      return cmd_generate(gen_args, command_line);
    }
    if (*scaling_cmd) return cmd_scaling(scaling_args, command_line);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
