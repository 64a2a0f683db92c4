#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "fixtures.hpp"
#include "lapspec/errors.hpp"
#include "lapspec/run_io.hpp"

using namespace lapspec;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("lapspec_test_" + std::to_string(::getpid()) +
                                        "_" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

SearchConfig tiny_config() {
  SearchConfig cfg;
  cfg.n = 6;
  cfg.conjecture_id = 3;
  cfg.total_batch = 12;
  cfg.instances = 2;
  cfg.max_generations = 3;
  cfg.master_seed = 4;
  cfg.halt_on_counterexample = false;
  cfg.gen.hidden_sizes = {10, 4};
  return cfg;
}

}  // namespace

TEST_CASE("config JSON round-trip") {
  SearchConfig cfg = tiny_config();
  cfg.gen.seed_fraction = 0.125;
  cfg.overrides.push_back({1, cfg.gen});
  cfg.overrides.back().config.learning_rate = 0.01;

  const std::string text = search_config_to_json(cfg);
  const SearchConfig back = search_config_from_json(text);
  CHECK(back.n == cfg.n);
  CHECK(back.conjecture_id == cfg.conjecture_id);
  CHECK(back.total_batch == cfg.total_batch);
  CHECK(back.instances == cfg.instances);
  CHECK(back.max_generations == cfg.max_generations);
  CHECK(back.master_seed == cfg.master_seed);
  CHECK(back.halt_on_counterexample == cfg.halt_on_counterexample);
  CHECK(back.gen.seed_fraction == cfg.gen.seed_fraction);
  CHECK(back.gen.hidden_sizes == cfg.gen.hidden_sizes);
  REQUIRE(back.overrides.size() == 1);
  CHECK(back.overrides[0].index == 1);
  CHECK(back.overrides[0].config.learning_rate == 0.01);
  // serialize(parse(text)) is stable
  CHECK(search_config_to_json(back) == text);
}

TEST_CASE("config errors name the offending field") {
  CHECK_THROWS_WITH_AS(search_config_from_json("{\"botch\": 1}"),
                       "config: botch: unknown field", config_error);
  CHECK_THROWS_WITH_AS(search_config_from_json("{\"n\": \"twelve\"}"),
                       "config: n: wrong type", config_error);
  CHECK_THROWS_AS(search_config_from_json("not json"), config_error);
  CHECK_THROWS_AS(search_config_from_json("[1,2]"), config_error);
  CHECK_THROWS_AS(
      search_config_from_json("{\"generation\": {\"learning_rat\": 0.1}}"),
      config_error);
  CHECK_THROWS_AS(load_search_config("/nonexistent/path.json"), config_error);
}

TEST_CASE("run directories never collide") {
  TempDir tmp;
  std::set<std::string> dirs;
  for (int i = 0; i < 4; ++i) dirs.insert(make_run_directory(tmp.path.string()));
  CHECK(dirs.size() == 4);
  for (const std::string& d : dirs) CHECK(fs::is_directory(d));
}

TEST_CASE("execute_search_run persists a complete, re-readable run") {
  TempDir tmp;
  const SearchConfig cfg = tiny_config();
  const RunOutput out = execute_search_run(cfg, tmp.path.string());

  CHECK(fs::is_regular_file(out.csv_path));
  CHECK(fs::is_regular_file(out.manifest_path));
  CHECK(fs::is_regular_file(out.summary_path));
  CHECK(out.result.instances.size() == 2);

  SUBCASE("CSV parses under the plotdata reader") {
    const RunSeries series = read_run_csv(out.csv_path);
    REQUIRE(series.instances.size() == 2);
    for (const auto& inst : series.instances) CHECK(inst.global_best.size() == 3);
  }
  SUBCASE("manifest config snapshot round-trips") {
    std::ifstream in(out.manifest_path);
    std::string manifest((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
    const auto pos = manifest.find("\"config\"");
    REQUIRE(pos != std::string::npos);
    // extract the config object and re-parse it
    const auto open = manifest.find('{', pos);
    int depth = 0;
    std::size_t close = open;
    for (std::size_t i = open; i < manifest.size(); ++i) {
      if (manifest[i] == '{') ++depth;
      if (manifest[i] == '}' && --depth == 0) {
        close = i;
        break;
      }
    }
    const SearchConfig snap =
        search_config_from_json(manifest.substr(open, close - open + 1));
    CHECK(snap.n == cfg.n);
    CHECK(snap.total_batch == cfg.total_batch);
    CHECK(snap.master_seed == cfg.master_seed);
  }
}

TEST_CASE("run CSV round-trips through the reader") {
  TempDir tmp;
  const RunOutput out = execute_search_run(tiny_config(), tmp.path.string());
  const RunSeries series = read_run_csv(out.csv_path);
  // global best column is monotone nondecreasing per instance
  for (const auto& inst : series.instances)
    for (std::size_t g = 1; g < inst.global_best.size(); ++g)
      CHECK(inst.global_best[g] >= inst.global_best[g - 1]);
}

TEST_CASE("read_run_csv rejects schema drift, naming the column") {
  TempDir tmp;
  const fs::path bad = tmp.path / "bad.csv";
  {
    std::ofstream f(bad);
    f << "generation,instance,best_reward,mean_reward,global_best_reward,"
         "edges_in_best,wall_ms\n0,0,1,1,1,0,0.1\n";
  }
  CHECK_THROWS_WITH_AS(read_run_csv(bad.string()),
                       (bad.string() + ": column 2 is 'instance', expected "
                                       "'instance_id'").c_str(),
                       parse_error);

  const fs::path short_row = tmp.path / "short.csv";
  {
    std::ofstream f(short_row);
    f << "generation,instance_id,best_reward,mean_reward,global_best_reward,"
         "edges_in_best,wall_ms\n0,0,1\n";
  }
  CHECK_THROWS_AS(read_run_csv(short_row.string()), parse_error);
  CHECK_THROWS_AS(read_run_csv((tmp.path / "missing.csv").string()), parse_error);
}

TEST_CASE("plotdata") {
  TempDir tmp;
  const RunOutput run = execute_search_run(tiny_config(), tmp.path.string());
  const RunSeries series = read_run_csv(run.csv_path);

  SUBCASE("single run: mean equals the run's own best column") {
    const std::string csv = plotdata_csv({series});
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("generation,mean_best,run0_best", 0) == 0);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
      ++rows;
      std::istringstream ls(line);
      std::string gen, mean, best;
      std::getline(ls, gen, ',');
      std::getline(ls, mean, ',');
      std::getline(ls, best, ',');
      CHECK(mean == best);
    }
    CHECK(rows == 3);
  }
  SUBCASE("zero runs is an error") {
    CHECK_THROWS_AS(plotdata_csv({}), parse_error);
  }
  SUBCASE("runs of different lengths are carried forward") {
    RunSeries shorter = series;
    for (auto& inst : shorter.instances) inst.global_best.resize(1);
    const std::string csv = plotdata_csv({series, shorter});
    int rows = 0;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 3);
  }
}

TEST_CASE("counterexample files written by a run re-verify") {
  // plant-free end-to-end check is the acceptance suite's job; here the
  // export/import invariant is checked directly on the published graph
  const VerifyOutcome out = verify_counterexample(fixtures::graph2(), 3);
  REQUIRE(out.certified);
  TempDir tmp;
  const fs::path path = tmp.path / "ce.txt";
  {
    std::ofstream f(path);
    f << format_counterexample(out.record);
  }
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const CounterexampleRecord rec = parse_counterexample(text);
  CHECK(verify_counterexample(rec.graph, rec.conjecture_id).certified);
}
