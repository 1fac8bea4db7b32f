#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "otocspec/hamiltonians.hpp"
#include "otocspec/propagator.hpp"
#include "otocspec/qsp.hpp"

namespace otocspec {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kOutputDirEnv = "OTOCSPEC_OUTPUT_DIR";

struct TimeGrid {
  double start = 0.0;
  double stop = 5.0;
  int steps = 51;

  std::vector<double> points() const;
};

struct HaarSettings {
  int num_qubits = 8;
  int samples = 100;
  int i = 0;
  int j = -1;  // -1 selects N - 1
};

struct TheoremSettings {
  int num_qubits = 4;
  int trials = 20;
  int k_max = 3;
};

struct FilterSettings {
  std::optional<FilterSpec> spec;
  std::optional<std::vector<double>> phases;       // explicit sequence, skips synthesis
  std::optional<std::vector<double>> coefficients;  // explicit cos(m theta) target
  int depth = 2;
  int restarts = 8;
  std::string label;  // filter_kind column
};

struct ExperimentConfig {
  std::optional<ModelSpec> model;
  std::vector<std::pair<int, int>> sites;
  TimeGrid time_grid;
  std::vector<int> moment_orders{2, 4, 8, 12};
  int histogram_bins = kDefaultHistogramBins;
  WeightKind weighting = WeightKind::Uniform;
  std::uint64_t seed = 0;
  int disorder_realizations = 1;
  double drop_threshold = 0.5;
  std::filesystem::path output_dir = "out";
  int threads = 1;
  HaarSettings haar;
  TheoremSettings theorem;
  FilterSettings filter;

  // Checks everything a time-resolved model run needs; throws ConfigError.
  void validate_model_run() const;
};

// Throws ConfigError on schema violations. A seed override replaces "seed"
// before it is used as the default disorder seed.
ExperimentConfig parse_config(const nlohmann::json& doc,
                              std::optional<std::uint64_t> seed_override = {});
ExperimentConfig load_config(const std::filesystem::path& path,
                             std::optional<std::uint64_t> seed_override = {});

nlohmann::json model_to_json(const ModelSpec& spec);

}  // namespace otocspec
