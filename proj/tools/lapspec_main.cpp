// lapspec: search for graphs whose Laplacian spectral radius beats a
// conjectured upper bound, and certify candidate counterexamples.
//
// Exit codes
//   search:  0 certified counterexample found, 10 generation budget
//            exhausted, 2 bad configuration
//   verify:  0 every requested conjecture certified violated, 1 otherwise,
//            2 parse/config failure
//   others:  0 success, 2 failure

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lapspec/conjectures.hpp"
#include "lapspec/run_io.hpp"
#include "lapspec/version.hpp"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitExhausted = 10;
constexpr int kExitNotViolated = 1;
constexpr int kExitError = 2;

std::string default_out_root() {
  if (const char* env = std::getenv("LAPSPEC_OUT_ROOT")) return env;
  return "runs";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lapspec::parse_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Accepts adjacency text, a single graph6 line, or a counterexample export
// block (whose embedded conjecture id becomes the default).
lapspec::Graph load_graph_file(const std::string& path,
                               std::optional<int>& embedded_conjecture) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line.compare(first, 11, "conjecture:") == 0) {
      const lapspec::CounterexampleRecord rec = lapspec::parse_counterexample(text);
      embedded_conjecture = rec.conjecture_id;
      return rec.graph;
    }
    if (line[first] == '[') return lapspec::from_adjacency_text(text);
    return lapspec::from_graph6(line.substr(first));
  }
  throw lapspec::parse_error(path + ": empty file");
}

int run_search(const std::string& config_path, lapspec::SearchConfig cfg,
               const std::string& resume_path, const CLI::App& cmd,
               const std::string& out_root, bool quiet) {
  if (!resume_path.empty()) {
    std::optional<int> ignored;
    cfg.resume_graph6 = lapspec::to_graph6(load_graph_file(resume_path, ignored));
  }
  if (!config_path.empty()) {
    lapspec::SearchConfig from_file = lapspec::load_search_config(config_path);
    // flags override file values
    if (cmd.count("--n")) from_file.n = cfg.n;
    if (cmd.count("--conjecture")) from_file.conjecture_id = cfg.conjecture_id;
    if (cmd.count("--batch")) from_file.total_batch = cfg.total_batch;
    if (cmd.count("--instances")) from_file.instances = cfg.instances;
    if (cmd.count("--generations")) from_file.max_generations = cfg.max_generations;
    if (cmd.count("--seed")) from_file.master_seed = cfg.master_seed;
    if (cmd.count("--halt")) from_file.halt_on_counterexample = cfg.halt_on_counterexample;
    if (cmd.count("--seed-fraction")) from_file.gen.seed_fraction = cfg.gen.seed_fraction;
    if (cmd.count("--epsilon"))
      from_file.gen.epsilon_random_frac = cfg.gen.epsilon_random_frac;
    if (cmd.count("--elite-learn")) from_file.gen.elite_learn_frac = cfg.gen.elite_learn_frac;
    if (cmd.count("--elite-survive"))
      from_file.gen.elite_survive_frac = cfg.gen.elite_survive_frac;
    if (cmd.count("--lr")) from_file.gen.learning_rate = cfg.gen.learning_rate;
    if (cmd.count("--hidden")) from_file.gen.hidden_sizes = cfg.gen.hidden_sizes;
    if (cmd.count("--resume-from")) from_file.resume_graph6 = cfg.resume_graph6;
    cfg = from_file;
  }
  lapspec::validate(cfg);

  const lapspec::RunOutput out = lapspec::execute_search_run(cfg, out_root);
  if (!quiet) {
    std::printf("run directory: %s\n", out.run_dir.c_str());
    std::printf("best reward: %.12g\n", out.result.best_reward);
    for (const auto& rec : out.result.counterexamples)
      std::printf("counterexample: conjecture %d, n=%d, margin %.12g (%s)\n",
                  rec.conjecture_id, rec.graph.n, rec.margin,
                  lapspec::to_graph6(rec.graph).c_str());
    for (const auto& inst : out.result.instances)
      if (!inst.error.empty())
        std::fprintf(stderr, "instance %d failed: %s\n", inst.index, inst.error.c_str());
    std::printf("%s\n", out.result.halted_on_counterexample
                            ? "outcome: counterexample found"
                            : "outcome: generation budget exhausted");
  }
  return out.result.counterexamples.empty() ? kExitExhausted : kExitFound;
}

int run_verify(const std::string& graph_path, std::vector<int> ids, bool all,
               double strict_tol) {
  std::optional<int> embedded;
  const lapspec::Graph g = load_graph_file(graph_path, embedded);

  if (all) {
    ids.clear();
    for (const auto& info : lapspec::conjecture_catalog()) ids.push_back(info.id);
  } else if (ids.empty()) {
    if (!embedded)
      throw lapspec::config_error(
          "conjecture: pass --conjecture (or --all), or a counterexample file "
          "with an embedded id");
    ids.push_back(*embedded);
  }
  for (int id : ids) lapspec::conjecture_info(id);  // validate before work

  bool all_certified = true;
  for (int id : ids) {
    const lapspec::VerifyOutcome outcome = lapspec::verify_counterexample(g, id, strict_tol);
    const auto& rep = outcome.report;
    if (outcome.certified) {
      std::printf(
          "conjecture %d: certified mu=%.12f bound=%.12f margin=%.9g residual=%.3g\n",
          id, rep.mu, rep.bound, rep.margin, rep.residual);
    } else {
      all_certified = false;
      std::printf("conjecture %d: not violated (%s)\n", id, outcome.reason.c_str());
    }
  }
  return all_certified ? 0 : kExitNotViolated;
}

int run_plotdata(const std::vector<std::string>& csv_paths, const std::string& out_path) {
  std::vector<lapspec::RunSeries> runs;
  runs.reserve(csv_paths.size());
  for (const std::string& path : csv_paths) runs.push_back(lapspec::read_run_csv(path));
  const std::string csv = lapspec::plotdata_csv(runs);
  if (out_path.empty() || out_path == "-") {
    std::fputs(csv.c_str(), stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw lapspec::parse_error("cannot open '" + out_path + "' for writing");
    out << csv;
  }
  return 0;
}

int run_list() {
  for (const auto& info : lapspec::conjecture_catalog())
    std::printf("%2d  %-10s  %s\n", info.id,
                info.form == lapspec::BoundForm::vertex_max ? "vertex_max" : "edge_max",
                info.formula);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"counterexample search for conjectured Laplacian spectral radius bounds"};
  app.set_version_flag("--version", lapspec::kVersion);
  app.require_subcommand(1);

  // search
  auto* search = app.add_subcommand("search", "run the parallel cross-entropy search");
  lapspec::SearchConfig cfg;
  std::string config_path, out_root = default_out_root();
  bool quiet = false;
  search->add_option("--config", config_path, "JSON config file (flags override it)");
  search->add_option("--n", cfg.n, "vertex count");
  search->add_option("--conjecture", cfg.conjecture_id, "conjecture id to attack");
  search->add_option("--batch", cfg.total_batch, "total batch size across instances");
  search->add_option("--instances", cfg.instances, "number of parallel instances");
  search->add_option("--generations", cfg.max_generations, "generation budget");
  search->add_option("--seed", cfg.master_seed, "master seed");
  search->add_option("--out", out_root, "output root (default $LAPSPEC_OUT_ROOT or ./runs)");
  search->add_flag("--halt,!--no-halt", cfg.halt_on_counterexample,
                   "stop all instances once a counterexample is certified");
  search->add_option("--seed-fraction", cfg.gen.seed_fraction,
                     "share of each batch started from the incumbent best");
  search->add_option("--epsilon", cfg.gen.epsilon_random_frac,
                     "share of each batch rolled out with uniform-random actions");
  search->add_option("--elite-learn", cfg.gen.elite_learn_frac, "learning elite share");
  search->add_option("--elite-survive", cfg.gen.elite_survive_frac, "surviving elite share");
  search->add_option("--lr", cfg.gen.learning_rate, "ADAM learning rate");
  search->add_option("--hidden", cfg.gen.hidden_sizes, "hidden layer sizes");
  search->add_flag("--quiet", quiet, "suppress the result summary");
  std::string resume_path;
  search->add_option("--resume-from", resume_path,
                     "graph file to plant as the starting incumbent in every instance");

  // verify
  auto* verify = app.add_subcommand("verify", "certify a graph against conjectured bounds");
  std::string graph_path;
  std::vector<int> verify_ids;
  bool verify_all = false;
  double strict_tol = 1e-6;
  verify->add_option("file", graph_path,
                     "graph file: adjacency text, graph6, or counterexample block")
      ->required();
  verify->add_option("--conjecture", verify_ids, "conjecture id(s) to check");
  verify->add_flag("--all", verify_all, "check the whole catalog");
  verify->add_option("--tol", strict_tol, "certification margin threshold");

  // plotdata
  auto* plotdata =
      app.add_subcommand("plotdata", "aggregate run CSVs into plot-ready series");
  std::vector<std::string> csv_paths;
  std::string plot_out;
  plotdata->add_option("csv", csv_paths, "run CSV file(s)")->required();
  plotdata->add_option("--out", plot_out, "output file (default stdout)");

  auto* list = app.add_subcommand("list-conjectures", "print the bound catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    if (search->parsed())
      return run_search(config_path, cfg, resume_path, *search, out_root, quiet);
    if (verify->parsed()) return run_verify(graph_path, verify_ids, verify_all, strict_tol);
    if (plotdata->parsed()) return run_plotdata(csv_paths, plot_out);
    if (list->parsed()) return run_list();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
  return kExitError;
}
