#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "svd/expansivity.hpp"
#include "svd/specification.hpp"

namespace svd {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One experiment: a system, a task, and the task's parameter grid. Metric
// quantities arrive as rational strings ("1/8") so runs stay exact end to
// end; every algorithm is deterministic, so there is no seed.
struct ExperimentConfig {
  struct SystemSpec {
    std::string kind;  // constant_full, rotation_interval, blurred_doubling,
                       // single_valued, anosov_mimic, explicit
    std::string space_kind = "circle";
    int q = 8;
    int k = 1;                         // rotation step
    Rat blur;                          // blurred_doubling radius
    std::string fn = "identity";       // single_valued: identity|shift|doubling|table
    std::vector<std::int32_t> table;   // single_valued fn=table
    std::vector<std::vector<Rat>> metric;                 // explicit space
    Rat adjacency_radius;                                 // explicit space
    std::vector<std::vector<std::int32_t>> images;        // explicit map
  };

  std::string task;
  SystemSpec system;
  int n_min = 1, n_max = 3;
  std::vector<Rat> eps_list;
  Rat delta;
  int horizon = 16;
  std::size_t cap = 1u << 20;
  int m = 3;
  int min_points = 2;
  std::vector<int> gap_grid;
  // spec-check / orbit-spec instance description
  std::vector<std::pair<std::int32_t, int>> targets;  // (point, time)
  int gap = 0;
  std::optional<int> period;
  std::vector<std::vector<std::int32_t>> block_states;
  std::vector<std::pair<int, int>> block_windows;
  std::string mode = "greedy";
  std::string out;
};

ExperimentConfig parse_config_text(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

MapPtr build_system(const ExperimentConfig::SystemSpec& spec);

// Executes the task, writes its CSV, prints a one-line summary to stdout.
// Exit status: 0 completed, 1 invariant/certificate/audit violation,
// 2 configuration error.
int run_experiment(const ExperimentConfig& config);

// Named reproductions with their acceptance checks asserted inline.
// Presets: rotation-cw, constant-spec, constant-se-zero, doubling-blur,
// anosov-mimic, theorem-c1.
int reproduce(const std::string& preset, const std::string& out_path);

std::vector<std::string> preset_names();

}  // namespace svd
