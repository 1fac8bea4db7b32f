#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "otocspec/rng.hpp"

namespace otocspec {

using cplx = std::complex<double>;
// Row-major so that a basis-state row of an operator is contiguous.
using ComplexMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RealVector = Eigen::VectorXd;

// Qubit q of basis index b is bit q of b (qubit 0 is least significant).
constexpr int qubit_bit(std::size_t basis, int q) { return static_cast<int>((basis >> q) & 1u); }

struct SpectralDecomposition {
  RealVector energies;         // ascending
  ComplexMatrix eigenvectors;  // columns are eigenstates
};

struct SVDResult {
  ComplexMatrix left_vectors;
  RealVector singular_values;  // descending, nonnegative
  ComplexMatrix right_vectors_adjoint;
};

double max_abs(const ComplexMatrix& m);
// max |W^dagger W - I|
double unitarity_defect(const ComplexMatrix& w);
// max |H - H^dagger|
double hermiticity_defect(const ComplexMatrix& h);
bool all_finite(const ComplexMatrix& m);

ComplexMatrix identity(std::size_t dim);

// Throws NonHermitianInput or NumericalFailure.
SpectralDecomposition hermitian_eigendecompose(const ComplexMatrix& h);

// V diag(exp(-i E t)) V^dagger.
ComplexMatrix evolve(const SpectralDecomposition& spec, double t);

// Full thin SVD; singular values only when `vectors` is false.
SVDResult svd(const ComplexMatrix& a, bool vectors = true);

// Haar-distributed unitary from a Ginibre matrix and phase-corrected QR.
ComplexMatrix haar_unitary(std::size_t dim, Philox& rng);

// Standard Kronecker product: (A (x) B)[ra*rb_rows + rb, ca*cb_cols + cb] = A[ra,ca] B[rb,cb].
// With qubit 0 least significant, B acts on the low qubits.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Number of Hermitian eigendecompositions performed by this process.
std::uint64_t eigendecomposition_count();

}  // namespace otocspec
