#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "otocspec/config.hpp"
#include "otocspec/echo.hpp"
#include "otocspec/error.hpp"
#include "otocspec/experiments.hpp"
#include "otocspec/freefermion.hpp"
#include "otocspec/hamiltonians.hpp"
#include "otocspec/linalg.hpp"
#include "otocspec/propagator.hpp"
#include "otocspec/qsp.hpp"
#include "otocspec/rng.hpp"

namespace py = pybind11;
using namespace otocspec;

namespace {

// Python side sees JSON documents as plain dicts.
py::object to_python(const nlohmann::json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

ExperimentConfig config_from(const py::object& cfg) {
  const std::string text = py::str(py::module_::import("json").attr("dumps")(cfg));
  return parse_config(nlohmann::json::parse(text));
}

py::dict series_dict(const MomentSeries& s) {
  py::dict d;
  d["i"] = s.i;
  d["j"] = s.j;
  d["order"] = s.order;
  d["times"] = s.times;
  d["values"] = s.values;
  d["model"] = s.model_tag;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectral OTOC toolkit: truncated propagators, Chebyshev moments and QSP echoes";

  // Leaked on purpose: the type must outlive interpreter teardown.
  static auto* error_type = new py::exception<Error>(m, "OtocspecError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type->ptr())(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type->ptr(), exc.ptr());
    }
  });

  py::enum_<ModelFamily>(m, "ModelFamily")
      .value("ChaoticXYZ", ModelFamily::ChaoticXYZ)
      .value("XXZ", ModelFamily::XXZ)
      .value("MBLHeisenberg", ModelFamily::MBLHeisenberg)
      .value("FreeFermionXX", ModelFamily::FreeFermionXX);

  py::enum_<WeightKind>(m, "WeightKind")
      .value("uniform", WeightKind::Uniform)
      .value("reference", WeightKind::Reference);

  py::class_<ModelSpec>(m, "ModelSpec")
      .def_readonly("family", &ModelSpec::family)
      .def_readonly("num_sites", &ModelSpec::num_sites)
      .def_property_readonly("tag", &ModelSpec::tag)
      .def_static("chaotic_xyz", &ModelSpec::chaotic_xyz, py::arg("n"), py::arg("jx") = -0.4,
                  py::arg("jy") = -2.0, py::arg("jz") = -1.0, py::arg("h") = 0.75)
      .def_static("xxz", &ModelSpec::xxz, py::arg("n"), py::arg("j") = 1.0, py::arg("delta") = 0.0,
                  py::arg("h") = 0.0)
      .def_static("mbl_heisenberg", &ModelSpec::mbl_heisenberg, py::arg("n"), py::arg("j") = 1.0,
                  py::arg("bound") = 5.0, py::arg("seed") = 0)
      .def_static("free_fermion_xx", &ModelSpec::free_fermion_xx, py::arg("n"), py::arg("j") = 1.0);

  m.def(
      "build_hamiltonian",
      [](const ModelSpec& spec, std::uint64_t stream) {
        std::optional<DisorderRealization> real;
        if (spec.family == ModelFamily::MBLHeisenberg) real = draw_disorder(spec, stream);
        return build_hamiltonian(spec, real);
      },
      py::arg("spec"), py::arg("disorder_stream") = 0,
      "Dense Hamiltonian; MBL models draw their fields from (disorder_seed, disorder_stream).");
  m.def("build_hopping_matrix", &build_hopping_matrix, py::arg("spec"));
  m.def(
      "eigendecompose",
      [](const ComplexMatrix& h) {
        const auto s = hermitian_eigendecompose(h);
        return py::make_tuple(RealVector(s.energies), ComplexMatrix(s.eigenvectors));
      },
      py::arg("h"), "Returns (energies, eigenvectors) in ascending order.");
  m.def(
      "evolve",
      [](const ComplexMatrix& h, double t) { return evolve(hermitian_eigendecompose(h), t); },
      py::arg("h"), py::arg("t"), "exp(-i H t) via one eigendecomposition.");
  m.def(
      "haar_unitary",
      [](std::size_t dim, std::uint64_t seed, std::uint64_t stream) {
        Philox rng(seed, stream);
        return haar_unitary(dim, rng);
      },
      py::arg("dim"), py::arg("seed") = 0, py::arg("stream") = 0);

  m.def(
      "truncated_propagator",
      [](const ComplexMatrix& u, int i, int j) { return truncated_propagator(u, i, j).block; },
      py::arg("u"), py::arg("i"), py::arg("j"), "The <0_i| U |0_j> block.");
  m.def(
      "singular_spectrum",
      [](const ComplexMatrix& u, int i, int j, WeightKind weighting) {
        const auto s = singular_spectrum(truncated_propagator(u, i, j), weighting);
        py::dict d;
        d["lambdas"] = RealVector(s.lambdas);
        d["thetas"] = RealVector(s.thetas);
        d["weights"] = RealVector(s.weights);
        return d;
      },
      py::arg("u"), py::arg("i"), py::arg("j"), py::arg("weighting") = WeightKind::Uniform);
  m.def(
      "chebyshev_moment",
      [](const ComplexMatrix& u, int i, int j, int order, WeightKind weighting) {
        return chebyshev_moment(singular_spectrum(truncated_propagator(u, i, j), weighting), order);
      },
      py::arg("u"), py::arg("i"), py::arg("j"), py::arg("order"), py::arg("weighting") = WeightKind::Uniform);

  m.def(
      "otoc_k", [](const ComplexMatrix& u, int i, int j, double k) { return otoc_k(u, {i, j}, k); },
      py::arg("u"), py::arg("i"), py::arg("j"), py::arg("k"));
  m.def(
      "qsp_otoc",
      [](const ComplexMatrix& u, int i, int j, std::vector<double> phases) {
        return qsp_otoc(u, i, j, PhaseSequence(std::move(phases)));
      },
      py::arg("u"), py::arg("i"), py::arg("j"), py::arg("phases"));
  m.def(
      "qsp_response",
      [](double theta, std::vector<double> phases) { return qsp_response(theta, PhaseSequence(std::move(phases))); },
      py::arg("theta"), py::arg("phases"));
  m.def("harmonic_phases", [](int d) { return PhaseSequence::harmonic(d).phases(); }, py::arg("depth"));
  m.def(
      "synthesize_bandpass",
      [](double lo, double hi, double transition_width, int depth, std::uint64_t seed) {
        const auto r = synthesize_phases({FilterKind::Bandpass, {{lo, hi}}, transition_width, depth},
                                         SynthesisOptions{seed});
        py::dict d;
        d["phases"] = r.phases.phases();
        d["target_coefficients"] = r.target_coefficients;
        d["max_residual"] = r.max_residual;
        return d;
      },
      py::arg("lo"), py::arg("hi"), py::arg("transition_width"), py::arg("depth"), py::arg("seed") = 0);

  m.def(
      "free_fermion_spectrum",
      [](const ModelSpec& spec, int i, int j, double t) {
        const auto g = single_particle_propagator(build_hopping_matrix(spec), t);
        return RealVector(analytic_truncated_spectrum(g, i, j, spec.num_sites).lambdas);
      },
      py::arg("spec"), py::arg("i"), py::arg("j"), py::arg("t"));

  m.def(
      "run_moment_sweep",
      [](const py::object& cfg) {
        const auto config = config_from(cfg);
        const auto r = run_moment_sweep(config);
        py::list series;
        for (const auto& s : r.series) series.append(series_dict(s));
        py::dict d;
        d["series"] = series;
        d["report"] = to_python(moments_report(r, config));
        return d;
      },
      py::arg("config"), "Config as a dict in the JSON schema.");
  m.def(
      "run_theorem_check",
      [](int n, int trials, int k_max, std::uint64_t seed) {
        return to_python(to_json(run_theorem_check({n, trials, k_max}, seed)));
      },
      py::arg("num_qubits") = 4, py::arg("trials") = 20, py::arg("k_max") = 3, py::arg("seed") = 0);
  m.def(
      "run_haar_baseline",
      [](int n, int samples, std::vector<int> orders, std::uint64_t seed) {
        return to_python(to_json(run_haar_baseline({n, samples, 0, -1}, orders, seed)));
      },
      py::arg("num_qubits") = 8, py::arg("samples") = 100, py::arg("orders") = std::vector<int>{2, 4, 8, 12},
      py::arg("seed") = 0);
}
