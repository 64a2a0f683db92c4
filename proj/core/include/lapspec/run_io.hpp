#pragma once

#include <string>
#include <vector>

#include "lapspec/parallel_search.hpp"

namespace lapspec {

// ---- configuration files (JSON; schema documented in the README) ----------
SearchConfig search_config_from_json(const std::string& text);
SearchConfig load_search_config(const std::string& path);
std::string search_config_to_json(const SearchConfig& cfg);

// ---- run persistence -------------------------------------------------------
// Creates a fresh timestamped subdirectory under out_root; never reuses one.
std::string make_run_directory(const std::string& out_root);

// CSV schema: generation,instance_id,best_reward,mean_reward,
//             global_best_reward,edges_in_best,wall_ms
std::string run_csv(const SearchResult& result);
void write_run_csv(const std::string& path, const SearchResult& result);

struct RunOutput {
  std::string run_dir;
  std::string csv_path;
  std::string manifest_path;
  std::string summary_path;
  std::vector<std::string> counterexample_paths;
  SearchResult result;
};

// Execute run_parallel and persist CSV, counterexample exports, summary and
// manifest (manifest written atomically, last).
RunOutput execute_search_run(const SearchConfig& cfg, const std::string& out_root);

// ---- plot-data aggregation --------------------------------------------------
struct InstanceSeries {
  int instance_id = 0;
  std::vector<double> global_best;  // by generation
};
struct RunSeries {
  std::string path;
  std::vector<InstanceSeries> instances;
};

// Parses a run CSV; schema mismatches raise parse_error naming the column.
RunSeries read_run_csv(const std::string& path);

// Per-generation mean-over-runs of each run's best reward (max across its
// instances' global bests), plus per-run and per-instance columns. Runs that
// halted early are extended by carrying their final value forward.
std::string plotdata_csv(const std::vector<RunSeries>& runs);

}  // namespace lapspec
