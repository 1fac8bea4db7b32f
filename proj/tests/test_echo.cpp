#include <doctest.h>

#include <cmath>
#include <numbers>

#include "otocspec/echo.hpp"
#include "otocspec/error.hpp"
#include "otocspec/hamiltonians.hpp"
#include "otocspec/propagator.hpp"
#include "otocspec/qsp.hpp"
#include "otocspec/rng.hpp"

using namespace otocspec;

namespace {

ComplexMatrix random_unitary(int n, std::uint64_t seed) {
  Philox rng(seed);
  return haar_unitary(std::size_t{1} << n, rng);
}

ComplexVector zero_state(int n) {
  ComplexVector psi = ComplexVector::Zero(Eigen::Index{1} << n);
  psi(0) = 1.0;
  return psi;
}

cplx spectral_sum(const SingularSpectrum& s, double k) {
  double acc = 0.0;
  for (Eigen::Index l = 0; l < s.thetas.size(); ++l) acc += s.weights(l) * std::cos(2.0 * k * s.thetas(l));
  return acc;
}

}  // namespace

TEST_CASE("first-order echo is the time-ordered correlator") {
  const int n = 3;
  const ComplexMatrix u = random_unitary(n, 1);
  const ComplexVector psi = zero_state(n);
  const ComplexMatrix c = u.adjoint() * pauli_on_site(Pauli::Z, 0, n) * u * pauli_on_site(Pauli::Z, 2, n);
  const cplx expected = psi.dot(c * psi);
  CHECK(std::abs(otoc_k(u, {0, 2}, 0.5) - expected) < 1e-13);
  CHECK(max_abs(echo_operator(u, {0, 2}) - c) < 1e-13);
}

TEST_CASE("state-vector echo matches the explicit matrix power") {
  const int n = 4;
  const ComplexMatrix u = random_unitary(n, 2);
  for (double k : {0.5, 1.0, 1.5, 2.0, 3.0}) {
    const EchoConfig cfg{1, 3, Pauli::X, Pauli::Z};
    CHECK(std::abs(otoc_k(u, cfg, k) - otoc_k_matrix_power(u, cfg, k)) < 1e-12);
  }
}

TEST_CASE("echo values equal the reference-weighted cosine transform") {
  const int n = 4;
  for (std::uint64_t seed : {3, 4, 5}) {
    const ComplexMatrix u = random_unitary(n, seed);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto spec = singular_spectrum(truncated_propagator(u, i, j), WeightKind::Reference);
        for (double k : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
          CHECK(std::abs(otoc_k(u, {i, j}, k) - spectral_sum(spec, k)) < 1e-11);
        }
      }
    }
  }
}

TEST_CASE("identity and swap evolutions give exact echoes") {
  // U = I: C = Z_i Z_j fixes |000>.
  CHECK(std::abs(otoc_k(identity(8), {0, 2}, 2.0) - 1.0) < 1e-14);
  // Swap is degenerate: every singular value is 0 or 1.
  const ComplexMatrix s = swap_gate(0, 1, 2);
  const auto spec = singular_spectrum(truncated_propagator(s, 0, 1), WeightKind::Reference);
  for (double k : {0.5, 1.0, 1.5}) CHECK(std::abs(otoc_k(s, {0, 1}, k) - spectral_sum(spec, k)) < 1e-12);
}

TEST_CASE("harmonic QSP sequences reduce to standard higher-order echoes") {
  const int n = 3;
  const ComplexMatrix u = random_unitary(n, 6);
  for (int d : {2, 4, 6}) {
    CHECK(std::abs(qsp_otoc(u, 0, 2, PhaseSequence::harmonic(d)) - otoc_k(u, {0, 2}, d / 2.0)) < 1e-12);
  }
}

TEST_CASE("QSP echo equals the weighted response polynomial") {
  const int n = 3;
  const ComplexMatrix u = random_unitary(n, 7);
  const auto spec = singular_spectrum(truncated_propagator(u, 1, 0), WeightKind::Reference);
  Philox rng(70);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 1 + trial % 4;
    std::vector<double> phases;
    for (int k = 0; k <= 2 * d; ++k) phases.push_back(2.0 * std::numbers::pi * rng.uniform());
    const PhaseSequence seq(phases);
    cplx predicted = 0.0;
    for (Eigen::Index l = 0; l < spec.thetas.size(); ++l) predicted += spec.weights(l) * qsp_response(spec.thetas(l), seq);
    CHECK(std::abs(qsp_otoc(u, 1, 0, seq) - predicted) < 1e-11);
  }
}

TEST_CASE("in-place gates match their matrices") {
  const int n = 3;
  Philox rng(8);
  ComplexVector psi(8);
  for (int k = 0; k < 8; ++k) psi(k) = cplx(rng.normal(), rng.normal());
  for (int site = 0; site < n; ++site) {
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
      ComplexVector out = psi;
      apply_pauli(out, p, site);
      CHECK((out - pauli_on_site(p, site, n) * psi).cwiseAbs().maxCoeff() < 1e-15);
    }
    const double phi = 0.37;
    ComplexVector out = psi;
    apply_z_rotation(out, phi, site);
    const ComplexMatrix z = pauli_on_site(Pauli::Z, site, n);
    const ComplexMatrix rot = std::cos(phi) * identity(8) - cplx(0.0, std::sin(phi)) * z;
    CHECK((out - rot * psi).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("echo errors") {
  const ComplexMatrix u = random_unitary(2, 9);
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  CHECK(code([&] { otoc_k(u, {0, 1}, 0.3); }) == ErrorCode::InvalidOrder);
  CHECK(code([&] { otoc_k(u, {0, 1}, 0.0); }) == ErrorCode::InvalidOrder);
  CHECK(code([&] { otoc_k(u, {0, 2}, 1.0); }) == ErrorCode::SiteOutOfRange);
  CHECK(code([&] { echo_operator(ComplexMatrix(u * 2.0), {0, 1}); }) == ErrorCode::NotUnitary);
}
