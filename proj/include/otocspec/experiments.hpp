#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "otocspec/config.hpp"
#include "otocspec/freefermion.hpp"
#include "otocspec/propagator.hpp"
#include "otocspec/qsp.hpp"

namespace otocspec {

// Spectra of A_{i,j}(t) indexed [realization][time][pair], one
// diagonalization per realization.
struct SpectraGrid {
  std::string model_tag;
  std::vector<double> times;
  std::vector<std::pair<int, int>> sites;
  std::vector<std::uint64_t> realization_streams;
  std::vector<std::vector<std::vector<SingularSpectrum>>> spectra;
};

SpectraGrid compute_spectra(const ExperimentConfig& cfg, WeightKind weighting);

struct PhaseMapEntry {
  int i = 0;
  int j = 0;
  double t = 0.0;
  PhaseHistogram histogram;  // realization average
  double end_bin_mass = 0.0;
};

struct PhaseMapResult {
  std::string model_tag;
  int realizations = 1;
  std::vector<PhaseMapEntry> entries;  // pair-major, then time
  // Pooled raw (theta_l, w_l / R) per entry, same order as entries.
  std::vector<std::vector<std::pair<double, double>>> raw;
  // Free-fermion models only: theta(t) of the propagating mode per pair.
  std::vector<std::pair<std::pair<int, int>, std::vector<OverlayPoint>>> overlays;
};

struct MomentSeries {
  int i = 0;
  int j = 0;
  int order = 2;
  std::vector<double> times;
  std::vector<double> values;
  std::string model_tag;
  int realizations = 1;
};

struct DropTime {
  int i = 0;
  int j = 0;
  std::optional<double> t_star;  // first grid time with M_8 below threshold
};

struct MomentSweepResult {
  std::string model_tag;
  WeightKind weighting = WeightKind::Uniform;
  std::vector<MomentSeries> series;
  std::vector<DropTime> drop_times;
  double drop_threshold = 0.5;
  int drop_order = 8;
};

struct MomentStat {
  int i = 0;
  int j = 0;
  int order = 0;
  std::size_t count = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double first = 0.0;
  double last = 0.0;
};

// Summary of a series as stored in moments_report.json.
MomentStat summarize(int i, int j, int order, const std::vector<double>& values);

struct HaarMomentStat {
  int order = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double z_score = 0.0;
  bool pass = false;
};

struct HaarReport {
  int num_qubits = 0;
  int samples = 0;
  int i = 0;
  int j = 0;
  std::uint64_t seed = 0;
  std::size_t pooled_count = 0;
  double ks_statistic = 0.0;
  double ks_critical = 0.0;  // 1% level, asymptotic
  bool ks_pass = false;
  std::vector<HaarMomentStat> moments;
  bool assertions = false;  // false below 10 samples
  bool pass = false;
};

struct TheoremTrial {
  std::string kind;  // "identity", "swap" or "haar"
  int i = 0;
  int j = 0;
  double max_residual = 0.0;
};

struct TheoremReport {
  int num_qubits = 0;
  int trials = 0;
  int k_max = 0;
  std::uint64_t seed = 0;
  std::vector<TheoremTrial> details;
  double max_residual = 0.0;
  double threshold = 1e-9;
  bool pass = false;
};

struct FilterDemoResult {
  std::string model_tag;
  std::string filter_label;
  WeightKind weighting = WeightKind::Uniform;
  SynthesisResult synthesis;
  bool synthesized = false;
  std::vector<MomentSeries> series;  // order field unused
  // Reference weighting only: |spectral - echo| at one time point.
  std::optional<double> cross_check_residual;
  std::optional<double> cross_check_time;
};

PhaseMapResult run_phase_map(const ExperimentConfig& cfg);
MomentSweepResult run_moment_sweep(const ExperimentConfig& cfg);
HaarReport run_haar_baseline(const HaarSettings& settings, const std::vector<int>& orders,
                             std::uint64_t seed);
TheoremReport run_theorem_check(const TheoremSettings& settings, std::uint64_t seed);
FilterDemoResult run_filter_demo(const ExperimentConfig& cfg);

// One-sample KS distance of `samples` (sorted in place) against uniform on [0, pi].
double ks_uniform_statistic(std::vector<double>& samples);
double ks_critical_1pct(std::size_t n);

nlohmann::json to_json(const HaarReport& r);
nlohmann::json to_json(const TheoremReport& r);
nlohmann::json moments_report(const MomentSweepResult& r, const ExperimentConfig& cfg);
nlohmann::json phase_map_report(const PhaseMapResult& r, const ExperimentConfig& cfg);
nlohmann::json filter_report(const FilterDemoResult& r, const ExperimentConfig& cfg);

// Writers emit phase_map.csv, phase_spectrum.csv, freefermion_overlay.csv,
// moments.csv, filter_series.csv and the matching *_report.json files.
void write_phase_map(const PhaseMapResult& r, const ExperimentConfig& cfg,
                     const std::filesystem::path& dir);
void write_moments(const MomentSweepResult& r, const ExperimentConfig& cfg,
                   const std::filesystem::path& dir);
void write_filter_demo(const FilterDemoResult& r, const ExperimentConfig& cfg,
                       const std::filesystem::path& dir);
void write_haar_report(const HaarReport& r, const std::filesystem::path& dir);
void write_theorem_report(const TheoremReport& r, const std::filesystem::path& dir);

}  // namespace otocspec
