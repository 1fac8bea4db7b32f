#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "otocspec/error.hpp"
#include "otocspec/experiments.hpp"
#include "otocspec/linalg.hpp"
#include "otocspec/table.hpp"

using namespace otocspec;
namespace fs = std::filesystem;

namespace {

ExperimentConfig small_config(ModelSpec model) {
  ExperimentConfig cfg;
  cfg.model = model;
  cfg.sites = {{0, 0}, {0, 2}, {0, 4}};
  cfg.time_grid = {0.0, 2.0, 9};
  cfg.histogram_bins = 16;
  cfg.seed = 5;
  return cfg;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("otocspec_test_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("one diagonalization per model realization") {
  auto cfg = small_config(ModelSpec::chaotic_xyz(5));
  auto before = eigendecomposition_count();
  run_moment_sweep(cfg);
  CHECK(eigendecomposition_count() == before + 1);

  cfg = small_config(ModelSpec::mbl_heisenberg(5, 1.0, 5.0, 3));
  cfg.disorder_realizations = 3;
  before = eigendecomposition_count();
  run_phase_map(cfg);
  CHECK(eigendecomposition_count() == before + 3);
}

TEST_CASE("t = 0 row of the phase map is bimodal") {
  auto cfg = small_config(ModelSpec::xxz(5, 1.0, 0.5, 0.1));
  cfg.sites = {{0, 4}};
  cfg.time_grid = {0.0, 0.0, 1};
  const auto r = run_phase_map(cfg);
  REQUIRE(r.entries.size() == 1);
  const auto& h = r.entries[0].histogram;
  const double width = h.bin_edges(1) - h.bin_edges(0);
  CHECK(h.densities(0) * width == doctest::Approx(0.5));
  CHECK(h.densities(h.densities.size() - 1) * width == doctest::Approx(0.5));
  CHECK(r.entries[0].end_bin_mass == doctest::Approx(1.0));
}

TEST_CASE("moments are bounded and start at the identity values") {
  for (auto weighting : {WeightKind::Uniform, WeightKind::Reference}) {
    auto cfg = small_config(ModelSpec::chaotic_xyz(5));
    cfg.weighting = weighting;
    const auto r = run_moment_sweep(cfg);
    CHECK(r.series.size() == 3 * 4);
    for (const auto& s : r.series) {
      for (double v : s.values) CHECK(std::abs(v) <= 1.0 + 1e-9);
      for (std::size_t k = 1; k < s.times.size(); ++k) CHECK(s.times[k] > s.times[k - 1]);
      const double at_zero = s.values.front();
      // The reference state lies in the lambda = 1 sector at t = 0.
      if (s.j == 0 || s.order % 4 == 0 || weighting == WeightKind::Reference) {
        CHECK(at_zero == doctest::Approx(1.0).epsilon(1e-12));
      } else {
        CHECK(std::abs(at_zero) < 1e-12);
      }
    }
  }
}

TEST_CASE("outputs are deterministic and independent of thread count") {
  auto cfg = small_config(ModelSpec::mbl_heisenberg(5, 1.0, 5.0, 8));
  cfg.disorder_realizations = 2;
  const auto a = scratch_dir("det_a"), b = scratch_dir("det_b");
  write_moments(run_moment_sweep(cfg), cfg, a);
  write_phase_map(run_phase_map(cfg), cfg, a);
  cfg.threads = 3;
  write_moments(run_moment_sweep(cfg), cfg, b);
  write_phase_map(run_phase_map(cfg), cfg, b);
  for (const char* name : {"moments.csv", "moments_report.json", "phase_map.csv", "phase_spectrum.csv"}) {
    CHECK(slurp(a / name) == slurp(b / name));
  }
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("csv headers are exact") {
  auto cfg = small_config(ModelSpec::free_fermion_xx(5));
  cfg.filter.phases = PhaseSequence::harmonic(2).phases();
  cfg.filter.label = "cos2";
  const auto dir = scratch_dir("headers");
  write_moments(run_moment_sweep(cfg), cfg, dir);
  write_phase_map(run_phase_map(cfg), cfg, dir);
  write_filter_demo(run_filter_demo(cfg), cfg, dir);
  auto header = [&](const char* name) { return read_csv(dir / name).header; };
  using H = std::vector<std::string>;
  CHECK(header("phase_map.csv") == H{"model", "i", "j", "t", "bin_lo", "bin_hi", "density"});
  CHECK(header("moments.csv") == H{"model", "i", "j", "order", "t", "value"});
  CHECK(header("filter_series.csv") == H{"model", "i", "j", "filter_kind", "t", "value"});
  CHECK(header("freefermion_overlay.csv") == H{"model", "i", "j", "t", "abs_gji", "theta"});
  fs::remove_all(dir);
}

TEST_CASE("csv round-trip reproduces the report summary") {
  auto cfg = small_config(ModelSpec::chaotic_xyz(5));
  const auto dir = scratch_dir("roundtrip");
  const auto result = run_moment_sweep(cfg);
  write_moments(result, cfg, dir);
  const auto data = read_csv(dir / "moments.csv");
  std::map<std::tuple<int, int, int>, std::vector<double>> series;
  for (const auto& row : data.rows) {
    series[{std::stoi(row[data.column("i")]), std::stoi(row[data.column("j")]), std::stoi(row[data.column("order")])}]
        .push_back(std::stod(row[data.column("value")]));
  }
  std::ifstream in(dir / "moments_report.json");
  const auto report = nlohmann::json::parse(in);
  REQUIRE(report["summary"].size() == series.size());
  for (const auto& entry : report["summary"]) {
    const auto key = std::tuple{entry["sites"][0].get<int>(), entry["sites"][1].get<int>(), entry["order"].get<int>()};
    const auto stat = summarize(std::get<0>(key), std::get<1>(key), std::get<2>(key), series.at(key));
    CHECK(stat.count == entry["count"].get<std::size_t>());
    CHECK(stat.mean == entry["mean"].get<double>());
    CHECK(stat.min == entry["min"].get<double>());
    CHECK(stat.max == entry["max"].get<double>());
    CHECK(stat.last == entry["last"].get<double>());
  }
  fs::remove_all(dir);
}

TEST_CASE("filter demo special cases") {
  auto cfg = small_config(ModelSpec::chaotic_xyz(5));
  SUBCASE("all-pass filter gives the constant 1") {
    cfg.filter.spec = FilterSpec{FilterKind::Bandpass, {{0.0, std::numbers::pi}}, 0.2, 4};
    cfg.filter.label = "allpass";
    for (const auto& s : run_filter_demo(cfg).series)
      for (double v : s.values) CHECK(std::abs(v - 1.0) < 1e-9);
  }
  SUBCASE("cos(2 theta) filter equals the fourth moment") {
    cfg.filter.coefficients = std::vector<double>{0.0, 0.0, 1.0};
    cfg.filter.depth = 2;
    cfg.filter.label = "cos2";
    const auto filtered = run_filter_demo(cfg);
    cfg.moment_orders = {4};
    const auto moments = run_moment_sweep(cfg);
    REQUIRE(filtered.series.size() == moments.series.size());
    for (std::size_t p = 0; p < filtered.series.size(); ++p)
      for (std::size_t k = 0; k < filtered.series[p].values.size(); ++k)
        CHECK(std::abs(filtered.series[p].values[k] - moments.series[p].values[k]) < 1e-9);
  }
  SUBCASE("reference weighting cross-checks against the echo") {
    cfg.weighting = WeightKind::Reference;
    cfg.filter.phases = std::vector<double>{0.3, -1.1, 0.7, 2.0, 0.1};
    cfg.filter.label = "custom";
    const auto r = run_filter_demo(cfg);
    REQUIRE(r.cross_check_residual);
    CHECK(*r.cross_check_residual < 1e-10);
  }
  SUBCASE("missing filter is a config error") {
    try {
      run_filter_demo(cfg);
      FAIL("expected ConfigError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ConfigError);
    }
  }
}

TEST_CASE("haar smoke run without assertions") {
  const auto r = run_haar_baseline({2, 1, 0, -1}, {2, 4}, 3);
  CHECK_FALSE(r.assertions);
  CHECK(r.pass);
  CHECK(r.j == 1);
  CHECK(r.pooled_count == 2);
  CHECK(to_json(r)["moments"].size() == 2);
}

TEST_CASE("theorem check includes identity and swap trials") {
  const auto r = run_theorem_check({2, 4, 2}, 1);
  REQUIRE(r.details.size() == 4);
  CHECK(r.details[0].kind == "identity");
  CHECK(r.details[0].max_residual < 1e-12);
  CHECK(r.details[1].kind == "swap");
  CHECK(r.pass);
  CHECK(r.max_residual < 1e-9);
}

TEST_CASE("KS statistic against uniform") {
  std::vector<double> exact;
  for (int k = 0; k < 100; ++k) exact.push_back(std::numbers::pi * (k + 0.5) / 100);
  CHECK(ks_uniform_statistic(exact) == doctest::Approx(0.005));
  std::vector<double> lumped(100, 0.0);
  CHECK(ks_uniform_statistic(lumped) == doctest::Approx(1.0));
}

TEST_CASE("runs without a model are rejected") {
  ExperimentConfig cfg;
  try {
    run_moment_sweep(cfg);
    FAIL("expected ConfigError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigError);
  }
}
