#pragma once

#include <complex>

#include "otocspec/hamiltonians.hpp"
#include "otocspec/linalg.hpp"
#include "otocspec/qsp.hpp"

namespace otocspec {

// C_{i,j} = U^dagger B_i U M_j with reference state |0^N>.
struct EchoConfig {
  int i = 0;  // butterfly site
  int j = 0;  // measurement site
  Pauli b_operator = Pauli::Z;
  Pauli m_operator = Pauli::Z;
};

// Explicit D x D echo operator. Throws NotUnitary or SiteOutOfRange.
ComplexMatrix echo_operator(const ComplexMatrix& u, const EchoConfig& cfg);

// <0^N| C^{2k} |0^N> by 2k state-vector applications of C; k = 1/2 is the TOC.
// Throws InvalidOrder unless 2k is a positive integer.
cplx otoc_k(const ComplexMatrix& u, const EchoConfig& cfg, double k);

// Same quantity from an explicit matrix power; for small systems and tests.
cplx otoc_k_matrix_power(const ComplexMatrix& u, const EchoConfig& cfg, double k);

// <0^N| B_i(phi_2d) prod_{r=d-1..0} [U^dagger B_i(phi_2r+1) U M_j(phi_2r)] |0^N>
// with B_i(phi) = exp(-i phi Z_i), M_j(phi) = exp(-i phi Z_j).
cplx qsp_otoc(const ComplexMatrix& u, int i, int j, const PhaseSequence& phases);

// In-place application of a single-site Pauli or Z rotation to a state vector.
void apply_pauli(ComplexVector& psi, Pauli p, int site);
void apply_z_rotation(ComplexVector& psi, double phi, int site);

}  // namespace otocspec
