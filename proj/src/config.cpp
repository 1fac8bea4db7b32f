#include "otocspec/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "otocspec/error.hpp"

namespace otocspec {

using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

template <typename T>
T get_as(const json& node, const char* key, const std::string& where) {
  try {
    return node.at(key).get<T>();
  } catch (const json::exception&) {
    config_error(where + "." + key + " is missing or has the wrong type");
  }
}

template <typename T>
T get_or(const json& node, const char* key, T fallback, const std::string& where) {
  if (!node.contains(key)) return fallback;
  return get_as<T>(node, key, where);
}

double coupling(const json& couplings, const char* key) {
  return get_as<double>(couplings, key, "model.couplings");
}

ModelSpec parse_model(const json& node, std::uint64_t seed) {
  if (!node.is_object()) config_error("model must be an object");
  ModelSpec spec;
  try {
    spec.family = parse_model_family(get_as<std::string>(node, "family", "model"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnknownFamily) config_error(e.what());
    throw;
  }
  spec.num_sites = get_as<int>(node, "numSites", "model");
  const json couplings = node.value("couplings", json::object());
  switch (spec.family) {
    case ModelFamily::ChaoticXYZ:
      spec.jx = coupling(couplings, "Jx");
      spec.jy = coupling(couplings, "Jy");
      spec.jz = coupling(couplings, "Jz");
      spec.h = coupling(couplings, "h");
      break;
    case ModelFamily::XXZ:
      spec.j = coupling(couplings, "J");
      spec.delta = coupling(couplings, "Delta");
      spec.h = coupling(couplings, "h");
      break;
    case ModelFamily::MBLHeisenberg:
      spec.j = coupling(couplings, "J");
      spec.h = coupling(couplings, "h");
      spec.disorder_seed = get_or<std::uint64_t>(node, "disorderSeed", seed, "model");
      break;
    case ModelFamily::FreeFermionXX:
      spec.j = coupling(couplings, "J");
      break;
  }
  try {
    spec.validate();
  } catch (const Error& e) {
    config_error(e.what());
  }
  return spec;
}

std::pair<double, double> parse_interval(const json& node, double unit) {
  if (!node.is_array() || node.size() != 2) config_error("passband entries must be [lo, hi]");
  return {node[0].get<double>() * unit, node[1].get<double>() * unit};
}

FilterSettings parse_filter(const json& node) {
  FilterSettings out;
  out.depth = get_or<int>(node, "depth", 2, "filter");
  out.restarts = get_or<int>(node, "restarts", 8, "filter");
  if (node.contains("phases")) {
    out.phases = get_as<std::vector<double>>(node, "phases", "filter");
    out.label = get_or<std::string>(node, "label", "custom", "filter");
    return out;
  }
  if (node.contains("coefficients")) {
    out.coefficients = get_as<std::vector<double>>(node, "coefficients", "filter");
    out.label = get_or<std::string>(node, "label", "custom", "filter");
    return out;
  }
  const std::string units = get_or<std::string>(node, "units", "radians", "filter");
  if (units != "radians" && units != "pi") config_error("filter.units must be 'radians' or 'pi'");
  const double unit = units == "pi" ? std::numbers::pi : 1.0;
  FilterSpec spec;
  try {
    spec.kind = parse_filter_kind(get_as<std::string>(node, "kind", "filter"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument) config_error(e.what());
    throw;
  }
  const json bands = node.value("passbands", json::array());
  for (const auto& b : bands) spec.passbands.push_back(parse_interval(b, unit));
  spec.transition_width = get_as<double>(node, "transitionWidth", "filter") * unit;
  spec.depth = out.depth;
  try {
    spec.validate();
  } catch (const Error& e) {
    config_error(e.what());
  }
  out.label = std::string(to_string(spec.kind));
  out.spec = spec;
  return out;
}

}  // namespace

std::vector<double> TimeGrid::points() const {
  std::vector<double> out(static_cast<std::size_t>(steps));
  if (steps == 1) {
    out[0] = start;
    return out;
  }
  for (int s = 0; s < steps; ++s) {
    out[static_cast<std::size_t>(s)] = start + (stop - start) * s / (steps - 1);
  }
  return out;
}

void ExperimentConfig::validate_model_run() const {
  if (!model) config_error("this run needs a model section");
  if (sites.empty()) config_error("sites must list at least one (i, j) pair");
  for (const auto& [i, j] : sites) {
    if (i < 0 || j < 0 || i >= model->num_sites || j >= model->num_sites) {
      config_error("site pair (" + std::to_string(i) + ", " + std::to_string(j) +
                   ") out of range for numSites " + std::to_string(model->num_sites));
    }
  }
  if (time_grid.steps < 1 || !(time_grid.stop >= time_grid.start)) {
    config_error("timeGrid needs steps >= 1 and stop >= start");
  }
  if (time_grid.steps > 1 && !(time_grid.stop > time_grid.start)) {
    config_error("timeGrid needs stop > start when steps > 1");
  }
  for (int m : moment_orders) {
    if (m <= 0 || m % 2 != 0) config_error("momentOrders must be positive even integers");
  }
  if (histogram_bins < 2) config_error("histogramBins must be >= 2");
  if (disorder_realizations < 1) config_error("disorderRealizations must be >= 1");
  if (model->family != ModelFamily::MBLHeisenberg && disorder_realizations != 1) {
    config_error("disorderRealizations > 1 only applies to MBLHeisenberg");
  }
}

ExperimentConfig parse_config(const json& doc, std::optional<std::uint64_t> seed_override) {
  if (!doc.is_object()) config_error("config root must be an object");
  const int version = get_as<int>(doc, "schemaVersion", "config");
  if (version != kSchemaVersion) {
    config_error("unsupported schemaVersion " + std::to_string(version) + " (expected " +
                 std::to_string(kSchemaVersion) + ")");
  }
  ExperimentConfig cfg;
  try {
    cfg.seed = seed_override ? *seed_override : get_or<std::uint64_t>(doc, "seed", 0, "config");
    if (doc.contains("model")) cfg.model = parse_model(doc.at("model"), cfg.seed);
    if (doc.contains("sites")) {
      for (const auto& pair : doc.at("sites")) {
        if (!pair.is_array() || pair.size() != 2) config_error("sites entries must be [i, j]");
        cfg.sites.emplace_back(pair[0].get<int>(), pair[1].get<int>());
      }
    }
    if (doc.contains("timeGrid")) {
      const json& tg = doc.at("timeGrid");
      cfg.time_grid.start = get_as<double>(tg, "start", "timeGrid");
      cfg.time_grid.stop = get_as<double>(tg, "stop", "timeGrid");
      cfg.time_grid.steps = get_as<int>(tg, "steps", "timeGrid");
    }
    cfg.moment_orders = get_or<std::vector<int>>(doc, "momentOrders", cfg.moment_orders, "config");
    cfg.histogram_bins = get_or<int>(doc, "histogramBins", cfg.histogram_bins, "config");
    cfg.weighting = parse_weight_kind(get_or<std::string>(doc, "weighting", "uniform", "config"));
    cfg.disorder_realizations = get_or<int>(doc, "disorderRealizations", 1, "config");
    cfg.drop_threshold = get_or<double>(doc, "dropThreshold", 0.5, "config");
    cfg.output_dir = get_or<std::string>(doc, "outputDir", "out", "config");
    if (doc.contains("haar")) {
      const json& h = doc.at("haar");
      cfg.haar.num_qubits = get_or<int>(h, "numQubits", cfg.haar.num_qubits, "haar");
      cfg.haar.samples = get_or<int>(h, "samples", cfg.haar.samples, "haar");
      if (h.contains("sites")) {
        const auto s = get_as<std::vector<int>>(h, "sites", "haar");
        if (s.size() != 2) config_error("haar.sites must be [i, j]");
        cfg.haar.i = s[0];
        cfg.haar.j = s[1];
      }
    }
    if (doc.contains("theorem")) {
      const json& t = doc.at("theorem");
      cfg.theorem.num_qubits = get_or<int>(t, "numQubits", cfg.theorem.num_qubits, "theorem");
      cfg.theorem.trials = get_or<int>(t, "trials", cfg.theorem.trials, "theorem");
      cfg.theorem.k_max = get_or<int>(t, "kMax", cfg.theorem.k_max, "theorem");
    }
    if (doc.contains("filter")) cfg.filter = parse_filter(doc.at("filter"));
  } catch (const json::exception& e) {
    config_error(std::string("malformed config: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConfigError) throw;
    config_error(e.what());
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path,
                             std::optional<std::uint64_t> seed_override) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    config_error("invalid JSON in " + path.string() + ": " + e.what());
  }
  return parse_config(doc, seed_override);
}

json model_to_json(const ModelSpec& spec) {
  json couplings;
  switch (spec.family) {
    case ModelFamily::ChaoticXYZ:
      couplings = {{"Jx", spec.jx}, {"Jy", spec.jy}, {"Jz", spec.jz}, {"h", spec.h}};
      break;
    case ModelFamily::XXZ:
      couplings = {{"J", spec.j}, {"Delta", spec.delta}, {"h", spec.h}};
      break;
    case ModelFamily::MBLHeisenberg:
      couplings = {{"J", spec.j}, {"h", spec.h}};
      break;
    case ModelFamily::FreeFermionXX:
      couplings = {{"J", spec.j}};
      break;
  }
  json out = {{"family", std::string(to_string(spec.family))},
              {"numSites", spec.num_sites},
              {"couplings", couplings}};
  if (spec.family == ModelFamily::MBLHeisenberg) out["disorderSeed"] = spec.disorder_seed;
  return out;
}

}  // namespace otocspec
