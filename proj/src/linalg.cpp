#include "otocspec/linalg.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "otocspec/error.hpp"
#include "otocspec/tolerances.hpp"

namespace otocspec {

namespace {

std::atomic<std::uint64_t> g_eig_count{0};

using ColMajorComplex = Eigen::MatrixXcd;

}  // namespace

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double unitarity_defect(const ComplexMatrix& w) {
  if (w.rows() != w.cols()) return std::numeric_limits<double>::infinity();
  ComplexMatrix gram = w.adjoint() * w;
  gram.diagonal().array() -= 1.0;
  return max_abs(gram);
}

double hermiticity_defect(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(h - h.adjoint());
}

bool all_finite(const ComplexMatrix& m) {
  return m.unaryExpr([](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); })
      .all();
}

ComplexMatrix identity(std::size_t dim) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

SpectralDecomposition hermitian_eigendecompose(const ComplexMatrix& h) {
  if (h.rows() == 0 || h.rows() != h.cols()) {
    throw Error(ErrorCode::InvalidArgument, "Hamiltonian must be square and nonempty");
  }
  if (!all_finite(h)) throw Error(ErrorCode::NumericalFailure, "non-finite Hamiltonian entry");
  const double defect = hermiticity_defect(h);
  if (defect > kTol.hermitian) {
    throw Error(ErrorCode::NonHermitianInput, "max |H - H^dagger| = " + std::to_string(defect));
  }
  g_eig_count.fetch_add(1, std::memory_order_relaxed);

  SpectralDecomposition out;
  // The benchmark Hamiltonians are real; the real solver is ~4x faster.
  if (h.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.real());
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorCode::NumericalFailure, "real symmetric eigensolver did not converge");
    }
    out.energies = solver.eigenvalues();
    out.eigenvectors = solver.eigenvectors().cast<cplx>();
  } else {
    Eigen::SelfAdjointEigenSolver<ColMajorComplex> solver{ColMajorComplex(h)};
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorCode::NumericalFailure, "Hermitian eigensolver did not converge");
    }
    out.energies = solver.eigenvalues();
    out.eigenvectors = solver.eigenvectors();
  }
  return out;
}

ComplexMatrix evolve(const SpectralDecomposition& spec, double t) {
  const auto& v = spec.eigenvectors;
  const Eigen::Index dim = v.rows();
  if (dim == 0 || v.cols() != dim || spec.energies.size() != dim) {
    throw Error(ErrorCode::InvalidArgument, "malformed spectral decomposition");
  }
  const Eigen::ArrayXd angle = -t * spec.energies.array();

  if (v.imag().cwiseAbs().maxCoeff() == 0.0) {
    // Real eigenvectors: W = V cos V^T - i V sin V^T, two real products.
    const RealMatrix vr = v.real();
    RealMatrix scaled = vr * angle.cos().matrix().asDiagonal();
    ComplexMatrix w(dim, dim);
    w.real() = scaled * vr.transpose();
    scaled = vr * angle.sin().matrix().asDiagonal();
    w.imag() = scaled * vr.transpose();
    return w;
  }
  const Eigen::VectorXcd phases = angle.unaryExpr([](double a) { return std::polar(1.0, a); });
  const ComplexMatrix scaled = v * phases.asDiagonal();
  return scaled * v.adjoint();
}

SVDResult svd(const ComplexMatrix& a, bool vectors) {
  if (a.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty matrix");
  if (!all_finite(a)) throw Error(ErrorCode::NumericalFailure, "non-finite matrix entry");
  const unsigned options = vectors ? (Eigen::ComputeThinU | Eigen::ComputeThinV) : 0u;
  Eigen::BDCSVD<ColMajorComplex> solver{ColMajorComplex(a), options};
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalFailure, "SVD did not converge");
  }
  SVDResult out;
  out.singular_values = solver.singularValues();
  if (vectors) {
    out.left_vectors = solver.matrixU();
    out.right_vectors_adjoint = solver.matrixV().adjoint();
  }
  return out;
}

ComplexMatrix haar_unitary(std::size_t dim, Philox& rng) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
  const auto n = static_cast<Eigen::Index>(dim);
  const double scale = 1.0 / std::sqrt(2.0);
  ColMajorComplex ginibre(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const double re = rng.normal();
      const double im = rng.normal();
      ginibre(r, c) = cplx(re, im) * scale;
    }
  }
  Eigen::HouseholderQR<ColMajorComplex> qr(ginibre);
  ColMajorComplex q = qr.householderQ();
  const Eigen::VectorXcd diag = qr.matrixQR().diagonal();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double mag = std::abs(diag(k));
    const cplx phase = mag > 0.0 ? diag(k) / mag : cplx(1.0, 0.0);
    q.col(k) *= phase;
  }
  return q;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index ra = 0; ra < a.rows(); ++ra) {
    for (Eigen::Index ca = 0; ca < a.cols(); ++ca) {
      out.block(ra * b.rows(), ca * b.cols(), b.rows(), b.cols()) = a(ra, ca) * b;
    }
  }
  return out;
}

std::uint64_t eigendecomposition_count() { return g_eig_count.load(std::memory_order_relaxed); }

}  // namespace otocspec
