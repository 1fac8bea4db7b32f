// otocspec: runs spectral OTOC experiments from a JSON config.
//
//   otocspec phase-map     --config cfg.json [--out DIR] [--seed S] [--threads T]
//   otocspec moments       --config cfg.json ...
//   otocspec filter-demo   --config cfg.json ...
//   otocspec haar          [--config cfg.json] ...
//   otocspec theorem-check [--config cfg.json] ...
//
// Exit codes: 0 success, 2 invalid input, 3 numerical failure or failed check.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "otocspec/config.hpp"
#include "otocspec/error.hpp"
#include "otocspec/experiments.hpp"

namespace {

using namespace otocspec;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;

struct CommonOptions {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  int threads = 0;  // 0 keeps the config value
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool config_required) {
  auto* cfg = cmd->add_option("--config", opts.config, "JSON experiment config");
  if (config_required) cfg->required();
  cmd->add_option("--out", opts.out, "output directory (overrides $" + std::string(kOutputDirEnv) + ")");
  cmd->add_option("--seed", opts.seed, "seed override");
  cmd->add_option("--threads", opts.threads, "worker threads")->check(CLI::PositiveNumber);
}

ExperimentConfig resolve_config(const CommonOptions& opts) {
  ExperimentConfig cfg;
  if (!opts.config.empty()) {
    cfg = load_config(opts.config, opts.seed);
  } else if (opts.seed) {
    cfg.seed = *opts.seed;
  }
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
    cfg.output_dir = env;
  }
  if (!opts.out.empty()) cfg.output_dir = opts.out;
  if (opts.threads > 0) cfg.threads = opts.threads;
  return cfg;
}

int run_command(const std::string& name, const CommonOptions& opts) {
  const ExperimentConfig cfg = resolve_config(opts);
  const std::filesystem::path& dir = cfg.output_dir;
  if (name == "phase-map") {
    const auto result = run_phase_map(cfg);
    write_phase_map(result, cfg, dir);
    std::cout << "phase-map: " << result.entries.size() << " histograms -> " << dir.string() << "\n";
    return kExitOk;
  }
  if (name == "moments") {
    const auto result = run_moment_sweep(cfg);
    write_moments(result, cfg, dir);
    std::cout << "moments: " << result.series.size() << " series -> " << dir.string() << "\n";
    return kExitOk;
  }
  if (name == "filter-demo") {
    const auto result = run_filter_demo(cfg);
    write_filter_demo(result, cfg, dir);
    std::cout << "filter-demo: " << result.filter_label << " depth " << result.synthesis.phases.depth();
    if (result.synthesized) std::cout << ", max residual " << result.synthesis.max_residual;
    if (result.cross_check_residual) std::cout << ", echo cross-check " << *result.cross_check_residual;
    std::cout << " -> " << dir.string() << "\n";
    return kExitOk;
  }
  if (name == "haar") {
    const auto report = run_haar_baseline(cfg.haar, cfg.moment_orders, cfg.seed);
    write_haar_report(report, dir);
    std::cout << "haar: KS " << report.ks_statistic << " (critical " << report.ks_critical << ") "
              << (report.assertions ? (report.pass ? "PASS" : "FAIL") : "no assertions") << "\n";
    return report.pass ? kExitOk : kExitNumerical;
  }
  const auto report = run_theorem_check(cfg.theorem, cfg.seed);
  write_theorem_report(report, dir);
  std::cout << "theorem-check: max residual " << report.max_residual << " "
            << (report.pass ? "PASS" : "FAIL") << "\n";
  return report.pass ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral OTOC experiments"};
  app.require_subcommand(1);
  CommonOptions opts;
  for (const char* name : {"phase-map", "moments", "filter-demo"}) {
    add_common(app.add_subcommand(name, std::string("run ") + name), opts, true);
  }
  add_common(app.add_subcommand("haar", "truncated Haar baseline"), opts, false);
  add_common(app.add_subcommand("theorem-check", "spectral vs direct OTOC check"), opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    return run_command(app.get_subcommands().front()->get_name(), opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_validation_error(e.code()) ? kExitInvalid : kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
