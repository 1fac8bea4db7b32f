#include <doctest.h>

#include <cmath>
#include <numbers>

#include "otocspec/config.hpp"
#include "otocspec/error.hpp"
#include "otocspec/table.hpp"

using namespace otocspec;
using nlohmann::json;

namespace {

json chaotic_doc() {
  return json::parse(R"({
    "schemaVersion": 1,
    "model": {"family": "ChaoticXYZ", "numSites": 4,
              "couplings": {"Jx": -0.4, "Jy": -2.0, "Jz": -1.0, "h": 0.75}},
    "sites": [[0, 3], [0, 1]],
    "timeGrid": {"start": 0.0, "stop": 2.0, "steps": 5},
    "momentOrders": [2, 4],
    "weighting": "reference",
    "seed": 9,
    "outputDir": "somewhere"
  })");
}

bool config_error(const json& doc) {
  try {
    parse_config(doc).validate_model_run();
  } catch (const Error& e) {
    return e.code() == ErrorCode::ConfigError;
  }
  return false;
}

}  // namespace

TEST_CASE("full config parses") {
  const auto cfg = parse_config(chaotic_doc());
  REQUIRE(cfg.model);
  CHECK(cfg.model->family == ModelFamily::ChaoticXYZ);
  CHECK(cfg.model->jy == -2.0);
  CHECK(cfg.sites.size() == 2);
  CHECK(cfg.time_grid.points() == std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0});
  CHECK(cfg.moment_orders == std::vector<int>{2, 4});
  CHECK(cfg.weighting == WeightKind::Reference);
  CHECK(cfg.seed == 9);
  CHECK(cfg.output_dir == "somewhere");
  cfg.validate_model_run();
}

TEST_CASE("defaults apply to omitted keys") {
  const auto cfg = parse_config(json{{"schemaVersion", 1}});
  CHECK_FALSE(cfg.model);
  CHECK(cfg.time_grid.points().size() == 51);
  CHECK(cfg.time_grid.points().back() == 5.0);
  CHECK(cfg.moment_orders == std::vector<int>{2, 4, 8, 12});
  CHECK(cfg.histogram_bins == 64);
  CHECK(cfg.weighting == WeightKind::Uniform);
  CHECK(cfg.drop_threshold == 0.5);
  CHECK(cfg.haar.num_qubits == 8);
  CHECK(cfg.theorem.trials == 20);
}

TEST_CASE("seed override also seeds the default disorder") {
  json doc = json::parse(R"({"schemaVersion": 1, "seed": 4,
    "model": {"family": "MBLHeisenberg", "numSites": 6, "couplings": {"J": 1.0, "h": 5.0}}})");
  CHECK(parse_config(doc).model->disorder_seed == 4);
  CHECK(parse_config(doc, 77).model->disorder_seed == 77);
  doc["model"]["disorderSeed"] = 5;
  CHECK(parse_config(doc, 77).model->disorder_seed == 5);
}

TEST_CASE("filter sections parse in radians and multiples of pi") {
  json doc = json::parse(R"({"schemaVersion": 1,
    "filter": {"kind": "bandpass", "units": "pi", "passbands": [[0.25, 0.5]], "transitionWidth": 0.1, "depth": 6}})");
  const auto cfg = parse_config(doc);
  REQUIRE(cfg.filter.spec);
  CHECK(cfg.filter.spec->passbands[0].first == doctest::Approx(std::numbers::pi / 4));
  CHECK(cfg.filter.spec->depth == 6);
  CHECK(cfg.filter.label == "bandpass");
  doc["filter"] = json::parse(R"({"phases": [0, 1.5707963267948966, 0], "label": "toc"})");
  const auto explicit_phases = parse_config(doc);
  CHECK(explicit_phases.filter.phases->size() == 3);
  CHECK(explicit_phases.filter.label == "toc");
}

TEST_CASE("schema violations raise ConfigError") {
  auto doc = chaotic_doc();
  doc["schemaVersion"] = 2;
  CHECK(config_error(doc));
  doc = chaotic_doc();
  doc["model"]["family"] = "Ising";
  CHECK(config_error(doc));
  doc = chaotic_doc();
  doc["model"]["couplings"].erase("Jx");
  CHECK(config_error(doc));
  doc = chaotic_doc();
  doc["sites"] = json::parse("[[0, 4]]");
  CHECK(config_error(doc));
  doc = chaotic_doc();
  doc["momentOrders"] = json::parse("[3]");
  CHECK(config_error(doc));
  doc = chaotic_doc();
  doc["timeGrid"]["steps"] = 0;
  CHECK(config_error(doc));
  doc = chaotic_doc();
  doc["timeGrid"]["stop"] = 0.0;
  CHECK(config_error(doc));
  doc = chaotic_doc();
  doc["weighting"] = "heavy";
  CHECK(config_error(doc));
  doc = chaotic_doc();
  doc["disorderRealizations"] = 3;
  CHECK(config_error(doc));
  CHECK(config_error(json::array()));
  try {
    load_config("/nonexistent/config.json");
    FAIL("expected ConfigError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigError);
  }
}

TEST_CASE("model serialization round-trips through the parser") {
  for (const auto& spec : {ModelSpec::chaotic_xyz(5), ModelSpec::xxz(4, 1.0, 0.5, 0.2),
                           ModelSpec::mbl_heisenberg(6, 1.0, 5.0, 12), ModelSpec::free_fermion_xx(3)}) {
    json doc{{"schemaVersion", 1}, {"model", model_to_json(spec)}};
    const auto back = parse_config(doc).model;
    REQUIRE(back);
    CHECK(back->tag() == spec.tag());
    CHECK(model_to_json(*back) == model_to_json(spec));
  }
}

TEST_CASE("doubles print in shortest round-trip form") {
  for (double v : {0.0, 1.0, -2.5, 0.1, 1.0 / 3.0, 1e-300, 6.02214076e23}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("csv tables round-trip") {
  CsvTable t({"name", "x", "n"});
  t.row().cell("a").cell(0.1).cell(3);
  t.row().cell("b").cell(-2.0).cell(-1);
  CHECK(t.str() == "name,x,n\na,0.1,3\nb,-2,-1\n");
  const auto path = std::filesystem::temp_directory_path() / "otocspec_table_test.csv";
  t.write(path);
  const auto data = read_csv(path);
  CHECK(data.header == std::vector<std::string>{"name", "x", "n"});
  REQUIRE(data.rows.size() == 2);
  CHECK(data.rows[1][data.column("x")] == "-2");
  CHECK_THROWS_AS(data.column("missing"), Error);
  std::filesystem::remove(path);
}
