#include "otocspec/echo.hpp"

#include <cmath>

#include "otocspec/error.hpp"
#include "otocspec/propagator.hpp"
#include "otocspec/tolerances.hpp"

namespace otocspec {

namespace {

int checked_qubits(const ComplexMatrix& u, int i, int j) {
  const int n = num_qubits_of(u);
  if (i < 0 || i >= n || j < 0 || j >= n) {
    throw Error(ErrorCode::SiteOutOfRange, "echo sites out of range");
  }
  if (!(unitarity_defect(u) <= kTol.unitary)) {
    throw Error(ErrorCode::NotUnitary, "echo requires a unitary U");
  }
  return n;
}

int checked_power(double k) {
  const double two_k = 2.0 * k;
  const double rounded = std::round(two_k);
  if (!(two_k >= 1.0) || std::abs(two_k - rounded) > 1e-12) {
    throw Error(ErrorCode::InvalidOrder, "2k must be a positive integer");
  }
  return static_cast<int>(rounded);
}

ComplexVector reference_state(Eigen::Index dim) {
  ComplexVector psi = ComplexVector::Zero(dim);
  psi(0) = 1.0;
  return psi;
}

}  // namespace

void apply_pauli(ComplexVector& psi, Pauli p, int site) {
  const std::size_t mask = std::size_t{1} << site;
  const auto dim = static_cast<std::size_t>(psi.size());
  if (p == Pauli::Z) {
    for (std::size_t s = 0; s < dim; ++s) {
      if (s & mask) psi(static_cast<Eigen::Index>(s)) = -psi(static_cast<Eigen::Index>(s));
    }
    return;
  }
  for (std::size_t s = 0; s < dim; ++s) {
    if (s & mask) continue;
    const auto lo = static_cast<Eigen::Index>(s);
    const auto hi = static_cast<Eigen::Index>(s | mask);
    const cplx a0 = psi(lo);
    const cplx a1 = psi(hi);
    if (p == Pauli::X) {
      psi(lo) = a1;
      psi(hi) = a0;
    } else {  // Y|0> = i|1>, Y|1> = -i|0>
      psi(lo) = cplx(0, -1) * a1;
      psi(hi) = cplx(0, 1) * a0;
    }
  }
}

void apply_z_rotation(ComplexVector& psi, double phi, int site) {
  const std::size_t mask = std::size_t{1} << site;
  const cplx up = std::polar(1.0, -phi);
  const cplx down = std::polar(1.0, phi);
  for (Eigen::Index s = 0; s < psi.size(); ++s) {
    psi(s) *= (static_cast<std::size_t>(s) & mask) ? down : up;
  }
}

ComplexMatrix echo_operator(const ComplexMatrix& u, const EchoConfig& cfg) {
  const int n = checked_qubits(u, cfg.i, cfg.j);
  return u.adjoint() * pauli_on_site(cfg.b_operator, cfg.i, n) * u *
         pauli_on_site(cfg.m_operator, cfg.j, n);
}

cplx otoc_k(const ComplexMatrix& u, const EchoConfig& cfg, double k) {
  const int power = checked_power(k);
  checked_qubits(u, cfg.i, cfg.j);
  ComplexVector psi = reference_state(u.rows());
  ComplexVector tmp(u.rows());
  for (int rep = 0; rep < power; ++rep) {
    apply_pauli(psi, cfg.m_operator, cfg.j);
    tmp.noalias() = u * psi;
    apply_pauli(tmp, cfg.b_operator, cfg.i);
    psi.noalias() = u.adjoint() * tmp;
  }
  return psi(0);
}

cplx otoc_k_matrix_power(const ComplexMatrix& u, const EchoConfig& cfg, double k) {
  const int power = checked_power(k);
  const ComplexMatrix c = echo_operator(u, cfg);
  ComplexMatrix acc = identity(static_cast<std::size_t>(u.rows()));
  for (int rep = 0; rep < power; ++rep) acc = acc * c;
  return acc(0, 0);
}

cplx qsp_otoc(const ComplexMatrix& u, int i, int j, const PhaseSequence& phases) {
  checked_qubits(u, i, j);
  const auto& phi = phases.phases();
  const int d = phases.depth();
  ComplexVector psi = reference_state(u.rows());
  ComplexVector tmp(u.rows());
  for (int r = 0; r < d; ++r) {
    apply_z_rotation(psi, phi[static_cast<std::size_t>(2 * r)], j);
    tmp.noalias() = u * psi;
    apply_z_rotation(tmp, phi[static_cast<std::size_t>(2 * r + 1)], i);
    psi.noalias() = u.adjoint() * tmp;
  }
  apply_z_rotation(psi, phi[static_cast<std::size_t>(2 * d)], i);
  return psi(0);
}

}  // namespace otocspec
