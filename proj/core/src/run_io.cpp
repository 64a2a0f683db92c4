#include "lapspec/run_io.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lapspec/errors.hpp"
#include "lapspec/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace lapspec {

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& context) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const bool ok = std::any_of(known.begin(), known.end(),
                                [&](const char* k) { return it.key() == k; });
    if (!ok)
      throw config_error(context + it.key() + ": unknown field");
  }
}

template <typename T>
void read_field(const json& obj, const char* key, T& out, const std::string& context) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw config_error(context + key + ": wrong type");
  }
}

GenerationConfig generation_from_json(const json& obj, const std::string& context) {
  GenerationConfig gen;
  reject_unknown_keys(obj,
                      {"elite_learn_frac", "elite_survive_frac", "seed_fraction",
                       "epsilon_random_frac", "learning_rate", "hidden_sizes",
                       "strict_tol", "eig_tol"},
                      context);
  read_field(obj, "elite_learn_frac", gen.elite_learn_frac, context);
  read_field(obj, "elite_survive_frac", gen.elite_survive_frac, context);
  read_field(obj, "seed_fraction", gen.seed_fraction, context);
  read_field(obj, "epsilon_random_frac", gen.epsilon_random_frac, context);
  read_field(obj, "learning_rate", gen.learning_rate, context);
  read_field(obj, "hidden_sizes", gen.hidden_sizes, context);
  read_field(obj, "strict_tol", gen.strict_tol, context);
  read_field(obj, "eig_tol", gen.eig_tol, context);
  return gen;
}

json generation_to_json(const GenerationConfig& gen) {
  return json{{"elite_learn_frac", gen.elite_learn_frac},
              {"elite_survive_frac", gen.elite_survive_frac},
              {"seed_fraction", gen.seed_fraction},
              {"epsilon_random_frac", gen.epsilon_random_frac},
              {"learning_rate", gen.learning_rate},
              {"hidden_sizes", gen.hidden_sizes},
              {"strict_tol", gen.strict_tol},
              {"eig_tol", gen.eig_tol}};
}

std::string iso8601_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

void write_text_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw parse_error("cannot open '" + tmp + "' for writing");
    out << text;
  }
  fs::rename(tmp, path);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

SearchConfig search_config_from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw config_error(std::string("config: not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw config_error("config: top level must be an object");
  reject_unknown_keys(root,
                      {"n", "conjecture", "total_batch", "instances", "generations",
                       "seed", "halt_on_counterexample", "resume_graph6", "generation",
                       "overrides"},
                      "config: ");
  SearchConfig cfg;
  read_field(root, "n", cfg.n, "config: ");
  read_field(root, "conjecture", cfg.conjecture_id, "config: ");
  read_field(root, "total_batch", cfg.total_batch, "config: ");
  read_field(root, "instances", cfg.instances, "config: ");
  read_field(root, "generations", cfg.max_generations, "config: ");
  read_field(root, "seed", cfg.master_seed, "config: ");
  read_field(root, "halt_on_counterexample", cfg.halt_on_counterexample, "config: ");
  read_field(root, "resume_graph6", cfg.resume_graph6, "config: ");
  if (root.contains("generation"))
    cfg.gen = generation_from_json(root.at("generation"), "config: generation: ");
  if (root.contains("overrides")) {
    if (!root.at("overrides").is_array())
      throw config_error("config: overrides: must be an array");
    for (const json& item : root.at("overrides")) {
      InstanceOverride o;
      if (!item.is_object() || !item.contains("instance"))
        throw config_error("config: overrides: each entry needs an 'instance' index");
      reject_unknown_keys(item, {"instance", "generation"}, "config: overrides: ");
      read_field(item, "instance", o.index, "config: overrides: ");
      o.config = item.contains("generation")
                     ? generation_from_json(item.at("generation"),
                                            "config: overrides: generation: ")
                     : cfg.gen;
      cfg.overrides.push_back(std::move(o));
    }
  }
  return cfg;
}

SearchConfig load_search_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return search_config_from_json(buf.str());
}

std::string search_config_to_json(const SearchConfig& cfg) {
  json root{{"n", cfg.n},
            {"conjecture", cfg.conjecture_id},
            {"total_batch", cfg.total_batch},
            {"instances", cfg.instances},
            {"generations", cfg.max_generations},
            {"seed", cfg.master_seed},
            {"halt_on_counterexample", cfg.halt_on_counterexample},
            {"generation", generation_to_json(cfg.gen)}};
  if (!cfg.resume_graph6.empty()) root["resume_graph6"] = cfg.resume_graph6;
  if (!cfg.overrides.empty()) {
    json arr = json::array();
    for (const InstanceOverride& o : cfg.overrides)
      arr.push_back(json{{"instance", o.index}, {"generation", generation_to_json(o.config)}});
    root["overrides"] = arr;
  }
  return root.dump(2) + "\n";
}

std::string make_run_directory(const std::string& out_root) {
  fs::create_directories(out_root);
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y%m%d-%H%M%S", &tm_utc);
  for (int suffix = 0;; ++suffix) {
    fs::path dir = fs::path(out_root) /
                   (suffix == 0 ? std::string("run-") + stamp
                                : std::string("run-") + stamp + "-" + std::to_string(suffix));
    std::error_code ec;
    if (fs::create_directory(dir, ec)) return dir.string();
    if (ec && !fs::exists(dir))
      throw parse_error("cannot create run directory '" + dir.string() + "'");
  }
}

std::string run_csv(const SearchResult& result) {
  std::ostringstream out;
  out << "generation,instance_id,best_reward,mean_reward,global_best_reward,"
         "edges_in_best,wall_ms\n";
  for (const InstanceReport& inst : result.instances) {
    for (const GenerationStats& s : inst.stats) {
      char wall[32];
      std::snprintf(wall, sizeof wall, "%.3f", static_cast<double>(s.wall_us) / 1000.0);
      out << s.generation << ',' << inst.index << ',' << format_double(s.best_reward)
          << ',' << format_double(s.mean_reward) << ','
          << format_double(s.global_best_reward) << ',' << s.edges_in_best << ','
          << wall << '\n';
    }
  }
  return out.str();
}

void write_run_csv(const std::string& path, const SearchResult& result) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot open '" + path + "' for writing");
  out << run_csv(result);
}

RunOutput execute_search_run(const SearchConfig& cfg, const std::string& out_root) {
  validate(cfg);
  RunOutput out;
  const std::string started_at = iso8601_utc_now();
  out.run_dir = make_run_directory(out_root);
  out.result = run_parallel(cfg);

  out.csv_path = (fs::path(out.run_dir) / "run.csv").string();
  write_run_csv(out.csv_path, out.result);

  for (std::size_t i = 0; i < out.result.counterexamples.size(); ++i) {
    const CounterexampleRecord& rec = out.result.counterexamples[i];
    fs::path path = fs::path(out.run_dir) /
                    ("counterexample-" + std::to_string(rec.conjecture_id) + "-" +
                     std::to_string(i) + ".txt");
    std::ofstream ce(path);
    ce << format_counterexample(rec);
    out.counterexample_paths.push_back(path.string());
  }

  std::ostringstream summary;
  summary << "conjecture " << cfg.conjecture_id << " on n=" << cfg.n << ", "
          << cfg.instances << " instance(s), total batch " << cfg.total_batch << ", "
          << cfg.max_generations << " generations, seed " << cfg.master_seed << "\n"
          << "best reward: " << format_double(out.result.best_reward) << "\n"
          << "counterexamples: " << out.result.counterexamples.size() << "\n"
          << "outcome: "
          << (out.result.halted_on_counterexample ? "counterexample found"
                                                  : "generation budget exhausted")
          << "\n";
  for (const InstanceReport& inst : out.result.instances)
    if (!inst.error.empty())
      summary << "instance " << inst.index << " failed: " << inst.error << "\n";
  out.summary_path = (fs::path(out.run_dir) / "summary.txt").string();
  write_text_atomic(out.summary_path, summary.str());

  json manifest{{"artifact_version", kVersion},
                {"started_at", started_at},
                {"finished_at", iso8601_utc_now()},
                {"config", json::parse(search_config_to_json(cfg))},
                {"outputs",
                 {{"csv", out.csv_path},
                  {"summary", out.summary_path},
                  {"counterexamples", out.counterexample_paths}}},
                {"result",
                 {{"best_reward", out.result.best_reward},
                  {"counterexample_count", out.result.counterexamples.size()},
                  {"halted_on_counterexample", out.result.halted_on_counterexample},
                  {"wall_ms", static_cast<double>(out.result.wall_us) / 1000.0}}}};
  out.manifest_path = (fs::path(out.run_dir) / "manifest.json").string();
  write_text_atomic(out.manifest_path, manifest.dump(2) + "\n");
  return out;
}

RunSeries read_run_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::string header;
  if (!std::getline(in, header)) throw parse_error(path + ": empty file");
  if (!header.empty() && header.back() == '\r') header.pop_back();

  const std::vector<std::string> expected = {
      "generation",  "instance_id",    "best_reward", "mean_reward",
      "global_best_reward", "edges_in_best", "wall_ms"};
  std::vector<std::string> cols;
  {
    std::istringstream hs(header);
    std::string col;
    while (std::getline(hs, col, ',')) cols.push_back(col);
  }
  if (cols.size() != expected.size())
    throw parse_error(path + ": expected " + std::to_string(expected.size()) +
                      " columns, got " + std::to_string(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i)
    if (cols[i] != expected[i])
      throw parse_error(path + ": column " + std::to_string(i + 1) + " is '" +
                        cols[i] + "', expected '" + expected[i] + "'");

  RunSeries series;
  series.path = path;
  std::string line;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != expected.size())
      throw parse_error(path + ": line " + std::to_string(lineno) + ": expected " +
                        std::to_string(expected.size()) + " fields");
    int generation, instance_id;
    double global_best;
    try {
      generation = std::stoi(fields[0]);
      instance_id = std::stoi(fields[1]);
      global_best = std::stod(fields[4]);
    } catch (const std::exception&) {
      throw parse_error(path + ": line " + std::to_string(lineno) +
                        ": bad numeric field");
    }
    auto it = std::find_if(series.instances.begin(), series.instances.end(),
                           [&](const InstanceSeries& s) { return s.instance_id == instance_id; });
    if (it == series.instances.end()) {
      series.instances.push_back({instance_id, {}});
      it = series.instances.end() - 1;
    }
    if (generation != static_cast<int>(it->global_best.size()))
      throw parse_error(path + ": line " + std::to_string(lineno) +
                        ": column 'generation' out of order for instance " +
                        std::to_string(instance_id));
    it->global_best.push_back(global_best);
  }
  if (series.instances.empty()) throw parse_error(path + ": no data rows");
  return series;
}

std::string plotdata_csv(const std::vector<RunSeries>& runs) {
  if (runs.empty()) throw parse_error("plotdata: no input runs");

  std::size_t generations = 0;
  for (const RunSeries& run : runs)
    for (const InstanceSeries& inst : run.instances)
      generations = std::max(generations, inst.global_best.size());

  auto value_at = [](const InstanceSeries& inst, std::size_t g) {
    if (inst.global_best.empty()) return 0.0;
    return g < inst.global_best.size() ? inst.global_best[g] : inst.global_best.back();
  };
  auto run_best_at = [&](const RunSeries& run, std::size_t g) {
    double best = value_at(run.instances.front(), g);
    for (const InstanceSeries& inst : run.instances)
      best = std::max(best, value_at(inst, g));
    return best;
  };

  std::ostringstream out;
  out << "generation,mean_best";
  for (std::size_t r = 0; r < runs.size(); ++r) {
    out << ",run" << r << "_best";
    for (const InstanceSeries& inst : runs[r].instances)
      out << ",run" << r << "_inst" << inst.instance_id;
  }
  out << '\n';

  for (std::size_t g = 0; g < generations; ++g) {
    double sum = 0.0;
    for (const RunSeries& run : runs) sum += run_best_at(run, g);
    out << g << ',' << format_double(sum / static_cast<double>(runs.size()));
    for (const RunSeries& run : runs) {
      out << ',' << format_double(run_best_at(run, g));
      for (const InstanceSeries& inst : run.instances)
        out << ',' << format_double(value_at(inst, g));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace lapspec
