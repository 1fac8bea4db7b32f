#include "otocspec/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <cmath>
#include <numbers>
#include <thread>

#include "otocspec/echo.hpp"
#include "otocspec/error.hpp"
#include "otocspec/hamiltonians.hpp"
#include "otocspec/rng.hpp"
#include "otocspec/table.hpp"
#include "otocspec/tolerances.hpp"

namespace otocspec {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

// Runs body(n) for n in [0, count) on up to `threads` workers. Results must be
// written by index so the output does not depend on scheduling.
template <typename Body>
void parallel_for(std::size_t count, int threads, Body&& body) {
  const auto workers = static_cast<std::size_t>(std::clamp<long long>(threads, 1, static_cast<long long>(std::max<std::size_t>(count, 1))));
  if (workers <= 1) {
    for (std::size_t n = 0; n < count; ++n) body(n);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t n = next.fetch_add(1);
        if (n >= count || failed.load()) return;
        try {
          body(n);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::optional<DisorderRealization> realization_for(const ModelSpec& spec, std::uint64_t stream) {
  if (spec.family != ModelFamily::MBLHeisenberg) return std::nullopt;
  return draw_disorder(spec, stream);
}

json pair_json(int i, int j) { return json::array({i, j}); }

json base_report(const ExperimentConfig& cfg) {
  json doc;
  doc["schemaVersion"] = kSchemaVersion;
  if (cfg.model) {
    doc["model"] = model_to_json(*cfg.model);
    doc["modelTag"] = cfg.model->tag();
  }
  doc["seed"] = cfg.seed;
  doc["disorderRealizations"] = cfg.disorder_realizations;
  doc["timeGrid"] = {{"start", cfg.time_grid.start},
                     {"stop", cfg.time_grid.stop},
                     {"steps", cfg.time_grid.steps}};
  json sites = json::array();
  for (const auto& [i, j] : cfg.sites) sites.push_back(pair_json(i, j));
  doc["sites"] = sites;
  return doc;
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
}

// Realization-averaged moment of order m for every (pair, time).
std::vector<std::vector<double>> averaged_moments(const SpectraGrid& grid, int order) {
  const std::size_t nr = grid.spectra.size();
  const std::size_t nt = grid.times.size();
  std::vector<std::vector<double>> out(grid.sites.size(), std::vector<double>(nt, 0.0));
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t k = 0; k < nt; ++k) {
      for (std::size_t p = 0; p < grid.sites.size(); ++p) {
        out[p][k] += chebyshev_moment(grid.spectra[r][k][p], order);
      }
    }
  }
  for (auto& series : out) {
    for (double& v : series) v /= static_cast<double>(nr);
  }
  return out;
}

SynthesisOptions synthesis_options(const ExperimentConfig& cfg) {
  SynthesisOptions opts;
  opts.seed = cfg.seed;
  opts.restarts = cfg.filter.restarts;
  opts.threads = cfg.threads;
  return opts;
}

}  // namespace

SpectraGrid compute_spectra(const ExperimentConfig& cfg, WeightKind weighting) {
  cfg.validate_model_run();
  const ModelSpec& spec = *cfg.model;
  SpectraGrid grid;
  grid.model_tag = spec.tag();
  grid.times = cfg.time_grid.points();
  grid.sites = cfg.sites;
  const auto nr = static_cast<std::size_t>(cfg.disorder_realizations);
  const std::size_t nt = grid.times.size();

  std::vector<SpectralDecomposition> decomps(nr);
  for (std::size_t r = 0; r < nr; ++r) {
    grid.realization_streams.push_back(r);
    decomps[r] = hermitian_eigendecompose(build_hamiltonian(spec, realization_for(spec, r)));
  }

  grid.spectra.assign(nr, std::vector<std::vector<SingularSpectrum>>(nt));
  parallel_for(nr * nt, cfg.threads, [&](std::size_t n) {
    const std::size_t r = n / nt;
    const std::size_t k = n % nt;
    const ComplexMatrix u = evolve(decomps[r], grid.times[k]);
    auto& slot = grid.spectra[r][k];
    slot.reserve(grid.sites.size());
    for (const auto& [i, j] : grid.sites) {
      slot.push_back(singular_spectrum(truncated_propagator(u, i, j, grid.times[k], grid.model_tag),
                                       weighting));
    }
  });
  return grid;
}

PhaseMapResult run_phase_map(const ExperimentConfig& cfg) {
  // The phase map shows the intrinsic distribution, so weights are uniform.
  const SpectraGrid grid = compute_spectra(cfg, WeightKind::Uniform);
  const std::size_t nr = grid.spectra.size();
  const std::size_t nt = grid.times.size();
  const double share = 1.0 / static_cast<double>(nr);

  PhaseMapResult out;
  out.model_tag = grid.model_tag;
  out.realizations = static_cast<int>(nr);
  out.entries.resize(grid.sites.size() * nt);
  out.raw.resize(out.entries.size());
  for (std::size_t p = 0; p < grid.sites.size(); ++p) {
    for (std::size_t k = 0; k < nt; ++k) {
      const std::size_t e = p * nt + k;
      PhaseMapEntry& entry = out.entries[e];
      entry.i = grid.sites[p].first;
      entry.j = grid.sites[p].second;
      entry.t = grid.times[k];
      for (std::size_t r = 0; r < nr; ++r) {
        const SingularSpectrum& s = grid.spectra[r][k][p];
        const PhaseHistogram h = phase_histogram(s, cfg.histogram_bins);
        if (r == 0) {
          entry.histogram = h;
          entry.histogram.densities *= share;
        } else {
          entry.histogram.densities += share * h.densities;
        }
        for (Eigen::Index l = 0; l < s.thetas.size(); ++l) {
          out.raw[e].emplace_back(s.thetas(l), share * s.weights(l));
        }
      }
      entry.end_bin_mass = end_bin_mass(entry.histogram);
    }
  }

  if (cfg.model->family == ModelFamily::FreeFermionXX) {
    const RealMatrix hopping = build_hopping_matrix(*cfg.model);
    for (const auto& [i, j] : grid.sites) {
      if (i == j) continue;
      out.overlays.push_back({{i, j}, free_fermion_overlay(hopping, i, j, grid.times)});
    }
  }
  return out;
}

MomentSweepResult run_moment_sweep(const ExperimentConfig& cfg) {
  const SpectraGrid grid = compute_spectra(cfg, cfg.weighting);
  MomentSweepResult out;
  out.model_tag = grid.model_tag;
  out.weighting = cfg.weighting;
  out.drop_threshold = cfg.drop_threshold;
  for (std::size_t p = 0; p < grid.sites.size(); ++p) {
    for (int order : cfg.moment_orders) {
      MomentSeries s;
      s.i = grid.sites[p].first;
      s.j = grid.sites[p].second;
      s.order = order;
      s.times = grid.times;
      s.model_tag = grid.model_tag;
      s.realizations = static_cast<int>(grid.spectra.size());
      out.series.push_back(std::move(s));
    }
  }
  // Fill values order by order so each moment is evaluated once per spectrum.
  const std::size_t norders = cfg.moment_orders.size();
  for (std::size_t o = 0; o < norders; ++o) {
    const auto values = averaged_moments(grid, cfg.moment_orders[o]);
    for (std::size_t p = 0; p < grid.sites.size(); ++p) {
      out.series[p * norders + o].values = values[p];
    }
  }
  const auto drop = averaged_moments(grid, out.drop_order);
  for (std::size_t p = 0; p < grid.sites.size(); ++p) {
    DropTime d{grid.sites[p].first, grid.sites[p].second, std::nullopt};
    for (std::size_t k = 0; k < grid.times.size(); ++k) {
      if (drop[p][k] < cfg.drop_threshold) {
        d.t_star = grid.times[k];
        break;
      }
    }
    out.drop_times.push_back(d);
  }
  return out;
}

MomentStat summarize(int i, int j, int order, const std::vector<double>& values) {
  MomentStat s{i, j, order, values.size()};
  if (values.empty()) return s;
  s.first = values.front();
  s.last = values.back();
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  return s;
}

double ks_uniform_statistic(std::vector<double>& samples) {
  if (samples.empty()) throw Error(ErrorCode::InvalidArgument, "KS test needs samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const double cdf = std::clamp(samples[k] / kPi, 0.0, 1.0);
    d = std::max({d, (static_cast<double>(k) + 1.0) / n - cdf, cdf - static_cast<double>(k) / n});
  }
  return d;
}

double ks_critical_1pct(std::size_t n) { return 1.6276 / std::sqrt(static_cast<double>(n)); }

HaarReport run_haar_baseline(const HaarSettings& settings, const std::vector<int>& orders,
                             std::uint64_t seed) {
  const int n = settings.num_qubits;
  const int j = settings.j < 0 ? n - 1 : settings.j;
  if (n < 2 || n > 10) throw Error(ErrorCode::InvalidArgument, "haar.numQubits must be in [2, 10]");
  if (settings.samples < 1) throw Error(ErrorCode::InvalidArgument, "haar.samples must be >= 1");
  if (settings.i < 0 || settings.i >= n || j < 0 || j >= n) {
    throw Error(ErrorCode::SiteOutOfRange, "haar sites out of range");
  }
  for (int m : orders) {
    if (m <= 0) throw Error(ErrorCode::InvalidOrder, "moment order must be positive");
    if (m % 2 != 0) throw Error(ErrorCode::OddOrder, "moment order must be even");
  }

  HaarReport rep;
  rep.num_qubits = n;
  rep.samples = settings.samples;
  rep.i = settings.i;
  rep.j = j;
  rep.seed = seed;
  const auto dim = std::size_t{1} << n;
  std::vector<SingularSpectrum> spectra(static_cast<std::size_t>(settings.samples));
  for (int s = 0; s < settings.samples; ++s) {
    Philox rng(seed, static_cast<std::uint64_t>(s));
    const ComplexMatrix u = haar_unitary(dim, rng);
    spectra[static_cast<std::size_t>(s)] =
        singular_spectrum(truncated_propagator(u, settings.i, j), WeightKind::Uniform);
  }

  std::vector<double> pooled;
  for (const auto& s : spectra) pooled.insert(pooled.end(), s.thetas.begin(), s.thetas.end());
  rep.pooled_count = pooled.size();
  rep.ks_statistic = ks_uniform_statistic(pooled);
  rep.ks_critical = ks_critical_1pct(pooled.size());
  rep.ks_pass = rep.ks_statistic < rep.ks_critical;

  rep.assertions = settings.samples >= 10;
  bool all_moments = true;
  for (int m : orders) {
    HaarMomentStat st;
    st.order = m;
    std::vector<double> per_sample;
    for (const auto& s : spectra) per_sample.push_back(chebyshev_moment(s, m));
    double sum = 0.0;
    for (double v : per_sample) sum += v;
    const double count = static_cast<double>(per_sample.size());
    st.mean = sum / count;
    if (per_sample.size() > 1) {
      double var = 0.0;
      for (double v : per_sample) var += (v - st.mean) * (v - st.mean);
      var /= count - 1.0;
      st.std_error = std::sqrt(var / count);
    }
    st.z_score = st.std_error > 0.0 ? st.mean / st.std_error : 0.0;
    st.pass = std::abs(st.mean) <= 5.0 * st.std_error;
    all_moments = all_moments && st.pass;
    rep.moments.push_back(st);
  }
  rep.pass = !rep.assertions || (rep.ks_pass && all_moments);
  return rep;
}

TheoremReport run_theorem_check(const TheoremSettings& settings, std::uint64_t seed) {
  const int n = settings.num_qubits;
  if (n < 2 || n > 8) throw Error(ErrorCode::InvalidArgument, "theorem.numQubits must be in [2, 8]");
  if (settings.trials < 1) throw Error(ErrorCode::InvalidArgument, "theorem.trials must be >= 1");
  if (settings.k_max < 1) throw Error(ErrorCode::InvalidOrder, "theorem.kMax must be >= 1");

  TheoremReport rep;
  rep.num_qubits = n;
  rep.trials = settings.trials;
  rep.k_max = settings.k_max;
  rep.seed = seed;
  const auto dim = std::size_t{1} << n;
  for (int trial = 0; trial < settings.trials; ++trial) {
    Philox rng(seed, static_cast<std::uint64_t>(trial));
    TheoremTrial tt;
    // Site pair first so the unitary stream does not depend on the trial kind.
    tt.i = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    tt.j = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    if (tt.j >= tt.i) ++tt.j;
    ComplexMatrix u;
    if (trial == 0) {
      tt.kind = "identity";
      u = identity(dim);
    } else if (trial == 1) {
      tt.kind = "swap";
      u = swap_gate(tt.i, tt.j, n);
    } else {
      tt.kind = "haar";
      u = haar_unitary(dim, rng);
    }
    const SingularSpectrum spec =
        singular_spectrum(truncated_propagator(u, tt.i, tt.j), WeightKind::Reference);
    const EchoConfig echo{tt.i, tt.j};
    for (int twice_k = 1; twice_k <= 2 * settings.k_max; ++twice_k) {
      const double k = 0.5 * twice_k;
      double predicted = 0.0;
      for (Eigen::Index l = 0; l < spec.thetas.size(); ++l) {
        predicted += spec.weights(l) * std::cos(2.0 * k * spec.thetas(l));
      }
      const cplx direct = otoc_k(u, echo, k);
      tt.max_residual = std::max(tt.max_residual, std::abs(direct - predicted));
    }
    rep.max_residual = std::max(rep.max_residual, tt.max_residual);
    rep.details.push_back(tt);
  }
  rep.pass = rep.max_residual < rep.threshold;
  return rep;
}

FilterDemoResult run_filter_demo(const ExperimentConfig& cfg) {
  const FilterSettings& fs = cfg.filter;
  FilterDemoResult out;
  out.filter_label = fs.label;
  out.weighting = cfg.weighting;
  const SynthesisOptions opts = synthesis_options(cfg);
  if (fs.phases) {
    out.synthesis.phases = PhaseSequence(*fs.phases);
  } else if (fs.coefficients) {
    out.synthesis = fit_phases(*fs.coefficients, fs.depth, opts);
    out.synthesized = true;
    if (!(out.synthesis.max_residual <= kTol.synthesis_max_residual)) {
      throw Error(ErrorCode::SynthesisFailed,
                  "best max residual " + std::to_string(out.synthesis.max_residual) + " exceeds " +
                      std::to_string(kTol.synthesis_max_residual));
    }
  } else if (fs.spec) {
    out.synthesis = synthesize_phases(*fs.spec, opts);
    out.synthesized = true;
  } else {
    throw Error(ErrorCode::ConfigError, "filter section needs kind, coefficients or phases");
  }
  const PhaseSequence& phases = out.synthesis.phases;

  const SpectraGrid grid = compute_spectra(cfg, cfg.weighting);
  out.model_tag = grid.model_tag;
  const std::size_t nr = grid.spectra.size();
  const std::size_t nt = grid.times.size();
  for (std::size_t p = 0; p < grid.sites.size(); ++p) {
    MomentSeries s;
    s.i = grid.sites[p].first;
    s.j = grid.sites[p].second;
    s.order = 0;
    s.times = grid.times;
    s.model_tag = grid.model_tag;
    s.realizations = static_cast<int>(nr);
    s.values.assign(nt, 0.0);
    for (std::size_t r = 0; r < nr; ++r) {
      for (std::size_t k = 0; k < nt; ++k) {
        const SingularSpectrum& sp = grid.spectra[r][k][p];
        double acc = 0.0;
        for (Eigen::Index l = 0; l < sp.thetas.size(); ++l) {
          acc += sp.weights(l) * qsp_response(sp.thetas(l), phases).real();
        }
        s.values[k] += acc / static_cast<double>(nr);
      }
    }
    out.series.push_back(std::move(s));
  }

  // With reference weights the spectral series is the echo value itself; check
  // one mid-grid point against the state-vector evaluation.
  if (cfg.weighting == WeightKind::Reference && nr == 1) {
    const std::size_t k = nt / 2;
    const ModelSpec& spec = *cfg.model;
    const ComplexMatrix u = evolve(
        hermitian_eigendecompose(build_hamiltonian(spec, realization_for(spec, 0))), grid.times[k]);
    const auto& [i, j] = grid.sites.front();
    const double echo = qsp_otoc(u, i, j, phases).real();
    out.cross_check_time = grid.times[k];
    out.cross_check_residual = std::abs(echo - out.series.front().values[k]);
  }
  return out;
}

json to_json(const HaarReport& r) {
  json moments = json::array();
  for (const auto& m : r.moments) {
    moments.push_back({{"order", m.order},
                       {"mean", m.mean},
                       {"stdError", m.std_error},
                       {"zScore", m.z_score},
                       {"pass", m.pass}});
  }
  return {{"schemaVersion", kSchemaVersion},
          {"numQubits", r.num_qubits},
          {"samples", r.samples},
          {"sites", pair_json(r.i, r.j)},
          {"seed", r.seed},
          {"pooledCount", r.pooled_count},
          {"ks", {{"statistic", r.ks_statistic}, {"critical1pct", r.ks_critical}, {"pass", r.ks_pass}}},
          {"moments", moments},
          {"assertions", r.assertions},
          {"pass", r.pass}};
}

json to_json(const TheoremReport& r) {
  json trials = json::array();
  for (const auto& t : r.details) {
    trials.push_back({{"kind", t.kind}, {"sites", pair_json(t.i, t.j)}, {"maxResidual", t.max_residual}});
  }
  return {{"schemaVersion", kSchemaVersion},
          {"numQubits", r.num_qubits},
          {"trials", r.trials},
          {"kMax", r.k_max},
          {"seed", r.seed},
          {"details", trials},
          {"maxResidual", r.max_residual},
          {"threshold", r.threshold},
          {"pass", r.pass}};
}

json moments_report(const MomentSweepResult& r, const ExperimentConfig& cfg) {
  json doc = base_report(cfg);
  doc["weighting"] = std::string(to_string(r.weighting));
  doc["momentOrders"] = cfg.moment_orders;
  json stats = json::array();
  for (const auto& s : r.series) {
    const MomentStat st = summarize(s.i, s.j, s.order, s.values);
    stats.push_back({{"sites", pair_json(st.i, st.j)},
                     {"order", st.order},
                     {"count", st.count},
                     {"mean", st.mean},
                     {"min", st.min},
                     {"max", st.max},
                     {"first", st.first},
                     {"last", st.last}});
  }
  doc["summary"] = stats;
  json drops = json::array();
  for (const auto& d : r.drop_times) {
    drops.push_back({{"sites", pair_json(d.i, d.j)},
                     {"tStar", d.t_star ? json(*d.t_star) : json(nullptr)}});
  }
  doc["dropTimes"] = {{"order", r.drop_order}, {"threshold", r.drop_threshold}, {"pairs", drops}};
  return doc;
}

json phase_map_report(const PhaseMapResult& r, const ExperimentConfig& cfg) {
  json doc = base_report(cfg);
  doc["histogramBins"] = cfg.histogram_bins;
  doc["weighting"] = "uniform";
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"sites", pair_json(e.i, e.j)}, {"t", e.t}, {"endBinMass", e.end_bin_mass}});
  }
  doc["endBinMass"] = entries;
  return doc;
}

json filter_report(const FilterDemoResult& r, const ExperimentConfig& cfg) {
  json doc = base_report(cfg);
  doc["weighting"] = std::string(to_string(r.weighting));
  doc["filterKind"] = r.filter_label;
  doc["depth"] = r.synthesis.phases.depth();
  doc["phases"] = r.synthesis.phases.phases();
  if (r.synthesized) {
    doc["synthesis"] = {{"seed", r.synthesis.seed},
                        {"targetCoefficients", r.synthesis.target_coefficients},
                        {"maxResidual", r.synthesis.max_residual},
                        {"rmsResidual", r.synthesis.l2_residual},
                        {"bestRestart", r.synthesis.best_restart},
                        {"restartMaxResiduals", r.synthesis.restart_max_residuals}};
  }
  if (cfg.filter.spec) {
    json bands = json::array();
    for (const auto& [lo, hi] : cfg.filter.spec->passbands) bands.push_back({lo, hi});
    doc["passbands"] = bands;
    doc["transitionWidth"] = cfg.filter.spec->transition_width;
  }
  if (r.cross_check_residual) {
    doc["crossCheck"] = {{"t", *r.cross_check_time}, {"residual", *r.cross_check_residual}};
  }
  return doc;
}

void write_phase_map(const PhaseMapResult& r, const ExperimentConfig& cfg,
                     const std::filesystem::path& dir) {
  ensure_dir(dir);
  CsvTable map({"model", "i", "j", "t", "bin_lo", "bin_hi", "density"});
  CsvTable raw({"model", "i", "j", "t", "theta", "weight"});
  for (std::size_t e = 0; e < r.entries.size(); ++e) {
    const PhaseMapEntry& entry = r.entries[e];
    const auto& h = entry.histogram;
    for (Eigen::Index b = 0; b < h.densities.size(); ++b) {
      map.row().cell(r.model_tag).cell(entry.i).cell(entry.j).cell(entry.t)
          .cell(h.bin_edges(b)).cell(h.bin_edges(b + 1)).cell(h.densities(b));
    }
    for (const auto& [theta, weight] : r.raw[e]) {
      raw.row().cell(r.model_tag).cell(entry.i).cell(entry.j).cell(entry.t).cell(theta).cell(weight);
    }
  }
  map.write(dir / "phase_map.csv");
  raw.write(dir / "phase_spectrum.csv");
  if (!r.overlays.empty()) {
    CsvTable overlay({"model", "i", "j", "t", "abs_gji", "theta"});
    for (const auto& [pair, points] : r.overlays) {
      for (const auto& pt : points) {
        overlay.row().cell(r.model_tag).cell(pair.first).cell(pair.second)
            .cell(pt.t).cell(pt.abs_gji).cell(pt.theta);
      }
    }
    overlay.write(dir / "freefermion_overlay.csv");
  }
  write_json(dir / "phase_map_report.json", phase_map_report(r, cfg));
}

void write_moments(const MomentSweepResult& r, const ExperimentConfig& cfg,
                   const std::filesystem::path& dir) {
  ensure_dir(dir);
  CsvTable table({"model", "i", "j", "order", "t", "value"});
  for (const auto& s : r.series) {
    for (std::size_t k = 0; k < s.times.size(); ++k) {
      table.row().cell(s.model_tag).cell(s.i).cell(s.j).cell(s.order).cell(s.times[k]).cell(s.values[k]);
    }
  }
  table.write(dir / "moments.csv");
  write_json(dir / "moments_report.json", moments_report(r, cfg));
}

void write_filter_demo(const FilterDemoResult& r, const ExperimentConfig& cfg,
                       const std::filesystem::path& dir) {
  ensure_dir(dir);
  CsvTable table({"model", "i", "j", "filter_kind", "t", "value"});
  for (const auto& s : r.series) {
    for (std::size_t k = 0; k < s.times.size(); ++k) {
      table.row().cell(s.model_tag).cell(s.i).cell(s.j).cell(r.filter_label).cell(s.times[k]).cell(s.values[k]);
    }
  }
  table.write(dir / "filter_series.csv");
  write_json(dir / "filter_report.json", filter_report(r, cfg));
}

void write_haar_report(const HaarReport& r, const std::filesystem::path& dir) {
  ensure_dir(dir);
  write_json(dir / "haar_report.json", to_json(r));
}

void write_theorem_report(const TheoremReport& r, const std::filesystem::path& dir) {
  ensure_dir(dir);
  write_json(dir / "theorem_report.json", to_json(r));
}

}  // namespace otocspec
