// idcycle: classify vertex sequences, certify id-cycles, and run the
// verification and io-cycle hunting harnesses.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "idcycle/error.hpp"
#include "idcycle/graph_io.hpp"
#include "idcycle/oracle.hpp"
#include "idcycle/report.hpp"
#include "idcycle/transform.hpp"
#include "idcycle/workbench.hpp"

#ifndef IDCYCLE_DEFAULT_CATALOG
#define IDCYCLE_DEFAULT_CATALOG "data/connected_n3_7.g6"
#endif

using namespace idcycle;

namespace {

struct GraphInput {
  std::string file;
  std::string graph6;

  void add_to(CLI::App* cmd) {
    auto* f = cmd->add_option("-g,--graph", file, "graph file (.g6 graph6, otherwise edge list)");
    auto* s = cmd->add_option("--graph6", graph6, "graph6 string");
    f->excludes(s);
    s->excludes(f);
  }

  Graph load() const {
    if (!graph6.empty()) return parse_graph6(graph6);
    if (file.empty()) throw InvalidParams("no graph given; use -g FILE or --graph6 STRING");
    return load_graph_file(file, format_from_path(file));
  }
};

void emit(const Json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidParams("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"implicit-degree cycle toolkit"};
  app.require_subcommand(1);

  GraphInput input;
  std::string seq_text, out_path, trace_path;
  bool explain = false, strict = false, serial = false;

  auto* classify_cmd = app.add_subcommand("classify", "classify a vertex sequence");
  input.add_to(classify_cmd);
  classify_cmd->add_option("-s,--sequence", seq_text, "comma-separated vertex ids")->required();
  classify_cmd->add_flag("--explain", explain, "include implicit-degree worksheets");
  classify_cmd->add_option("-o,--output", out_path);

  auto* certify_cmd = app.add_subcommand("certify", "transform an id-cycle into a cycle");
  input.add_to(certify_cmd);
  certify_cmd->add_option("-s,--sequence", seq_text, "comma-separated vertex ids")->required();
  certify_cmd->add_option("--trace", trace_path, "write the move trace as JSON");
  certify_cmd->add_flag("--strict", strict, "reject inputs that are not id-cycles");
  certify_cmd->add_option("-o,--output", out_path);

  VerifyOptions vopts;
  vopts.seed = 42;
  std::string catalog = IDCYCLE_DEFAULT_CATALOG;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive check over a graph6 catalog");
  verify_cmd->add_option("--nmax", vopts.n_max)->capture_default_str();
  verify_cmd->add_option("--sample", vopts.per_graph_sample, "id-cycles per graph")
      ->capture_default_str();
  verify_cmd->add_option("--seed", vopts.seed)->capture_default_str();
  verify_cmd->add_option("--oracle-budget", vopts.oracle_budget)->capture_default_str();
  verify_cmd->add_option("--catalog", catalog, "graph6 catalog, '-' for stdin")
      ->capture_default_str();
  verify_cmd->add_flag("--serial", serial, "use the serial reference driver");
  verify_cmd->add_option("-o,--output", out_path);

  HuntOptions hopts;
  hopts.seed = 7;
  auto* hunt_cmd = app.add_subcommand("hunt", "search for stuck io-cycles");
  hunt_cmd->add_option("--budget", hopts.budget, "instances")->capture_default_str();
  hunt_cmd->add_option("--nmin", hopts.n_min)->capture_default_str();
  hunt_cmd->add_option("--nmax", hopts.n_max)->capture_default_str();
  hunt_cmd->add_option("--seed", hopts.seed)->capture_default_str();
  hunt_cmd->add_option("--attempts", hopts.sample_attempts, "sequence draws per instance")
      ->capture_default_str();
  hunt_cmd->add_option("--oracle-budget", hopts.oracle_budget)->capture_default_str();
  hunt_cmd->add_flag("--serial", serial, "use the serial reference driver");
  hunt_cmd->add_option("-o,--output", out_path);

  GraphSpec spec;
  std::uint64_t gen_seed = 0;
  std::string model = "gnp";
  auto* gen_cmd = app.add_subcommand("gen", "generate a random graph");
  gen_cmd->add_option("--model", model)
      ->check(CLI::IsMember({"gnp", "dirac", "ore"}))
      ->capture_default_str();
  gen_cmd->add_option("--n", spec.n)->required();
  gen_cmd->add_option("--p", spec.p)->capture_default_str();
  gen_cmd->add_option("--seed", gen_seed)->capture_default_str();
  gen_cmd->add_option("-o,--output", out_path, "output file; format from extension");

  std::string fact;
  auto* witness_cmd = app.add_subcommand("witness", "build a cyclability witness sequence");
  input.add_to(witness_cmd);
  witness_cmd->add_option("--fact", fact)->required()->check(CLI::IsMember({"zhu", "shi"}));
  witness_cmd->add_option("-o,--output", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify_cmd->parsed()) {
      Graph g = input.load();
      GraphContext ctx(g);
      emit(envelope("classification", classification_json(ctx, parse_sequence(seq_text), explain)),
           out_path);
      return 0;
    }

    if (certify_cmd->parsed()) {
      Graph g = input.load();
      GraphContext ctx(g);
      VertexSequence seq = parse_sequence(seq_text);
      MovePolicy policy = MovePolicy::from_environment();
      policy.strict = strict;
      CertificationResult result = [&] {
        try {
          return certify_cyclable(ctx, seq, policy);
        } catch (const StuckOnIdCycle& e) {
          std::cerr << "fatal: " << e.what() << '\n'
                    << to_json(e.report()).dump(2) << '\n';
          throw;
        }
      }();
      if (!trace_path.empty()) emit(envelope("trace", {{"moves", to_json(result.trace())}}), trace_path);
      emit(envelope("certification", certification_json(ctx, seq, result)), out_path);
      return result.certified() ? 0 : 2;
    }

    if (verify_cmd->parsed()) {
      std::vector<Graph> graphs;
      if (catalog == "-") {
        graphs = read_graph6_catalog(std::cin);
      } else {
        std::ifstream in(catalog);
        if (!in) throw InvalidParams("cannot open catalog " + catalog);
        graphs = read_graph6_catalog(in);
      }
      VerifyReport report = serial ? verify_theorem_small_serial(graphs, vopts)
                                   : verify_theorem_small_parallel(graphs, vopts);
      emit(envelope("verify", to_json(report)), out_path);
      return report.failures.empty() ? 0 : 1;
    }

    if (hunt_cmd->parsed()) {
      HuntReport report = serial ? hunt_io_counterexamples_serial(hopts)
                                 : hunt_io_counterexamples_parallel(hopts);
      emit(envelope("hunt", to_json(report)), out_path);
      return report.engine_errors == 0 ? 0 : 1;
    }

    if (gen_cmd->parsed()) {
      spec.model = model == "dirac" ? GraphModel::Dirac
                   : model == "ore" ? GraphModel::Ore
                                    : GraphModel::Gnp;
      Graph g = gen_random_graph(spec, gen_seed);
      if (out_path.empty() || out_path == "-") {
        std::cout << to_graph6(g) << '\n';
      } else {
        std::ofstream out(out_path);
        if (!out) throw InvalidParams("cannot write " + out_path);
        if (format_from_path(out_path) == GraphFormat::Graph6)
          out << to_graph6(g) << '\n';
        else
          out << to_edge_list(g);
      }
      return 0;
    }

    if (witness_cmd->parsed()) {
      Graph g = input.load();
      VertexSequence w = fact == "zhu" ? build_zhu_witness(g) : build_shi_witness(g);
      GraphContext ctx(g);
      SequenceClass cls = classify(ctx, w);
      emit(envelope("witness", {{"fact", fact},
                                {"sequence", format_sequence(w)},
                                {"id_cycle", cls.is_id_cycle},
                                {"cycle", cls.is_cycle}}),
           out_path);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
