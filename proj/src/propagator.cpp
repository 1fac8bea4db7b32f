#include "otocspec/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "otocspec/error.hpp"
#include "otocspec/tolerances.hpp"

namespace otocspec {

std::string_view to_string(WeightKind kind) {
  return kind == WeightKind::Uniform ? "uniform" : "reference";
}

WeightKind parse_weight_kind(std::string_view name) {
  if (name == "uniform") return WeightKind::Uniform;
  if (name == "reference") return WeightKind::Reference;
  throw Error(ErrorCode::InvalidArgument, "weighting must be 'uniform' or 'reference'");
}

std::size_t insert_zero_bit(std::size_t value, int q) {
  const std::size_t low_mask = (std::size_t{1} << q) - 1;
  return ((value & ~low_mask) << 1) | (value & low_mask);
}

int num_qubits_of(const ComplexMatrix& u) {
  const auto dim = static_cast<std::size_t>(u.rows());
  if (dim < 2 || u.cols() != u.rows() || (dim & (dim - 1)) != 0) {
    throw Error(ErrorCode::InvalidArgument, "operator dimension must be a power of two >= 2");
  }
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

TruncatedPropagator truncated_propagator(const ComplexMatrix& u, int i, int j, double time,
                                         std::string model_tag) {
  const int n = num_qubits_of(u);
  if (i < 0 || i >= n || j < 0 || j >= n) {
    throw Error(ErrorCode::SiteOutOfRange, "site pair (" + std::to_string(i) + ", " +
                                               std::to_string(j) + ") out of range");
  }
  // O(D^2) necessary condition; a full W^dagger W check would double the cost
  // of every time point. Violations that slip through surface as lambda > 1.
  const double row_defect = (u.rowwise().squaredNorm().array() - 1.0).abs().maxCoeff();
  const double col_defect = (u.colwise().squaredNorm().array() - 1.0).abs().maxCoeff();
  if (!(std::max(row_defect, col_defect) <= kTol.unitary)) {
    throw Error(ErrorCode::NotUnitary, "rows/columns of U are not normalized");
  }

  const Eigen::Index half = u.rows() / 2;
  const std::size_t swap_mask = (std::size_t{1} << i) | (std::size_t{1} << j);
  std::vector<Eigen::Index> cols(static_cast<std::size_t>(half));
  for (Eigen::Index c = 0; c < half; ++c) {
    std::size_t s = insert_zero_bit(static_cast<std::size_t>(c), i);
    if (i != j && qubit_bit(s, i) != qubit_bit(s, j)) s ^= swap_mask;
    cols[static_cast<std::size_t>(c)] = static_cast<Eigen::Index>(s);
  }

  TruncatedPropagator out;
  out.block.resize(half, half);
  for (Eigen::Index r = 0; r < half; ++r) {
    const auto src_row = static_cast<Eigen::Index>(insert_zero_bit(static_cast<std::size_t>(r), i));
    const cplx* row = u.data() + src_row * u.cols();
    cplx* dst = out.block.data() + r * half;
    for (Eigen::Index c = 0; c < half; ++c) dst[c] = row[cols[static_cast<std::size_t>(c)]];
  }
  out.sink_site = i;
  out.source_site = j;
  out.num_sites = n;
  out.time = time;
  out.model_tag = std::move(model_tag);
  return out;
}

SingularSpectrum spectrum_from_values(RealVector lambdas, RealVector weights, WeightKind kind) {
  if (lambdas.size() == 0 || weights.size() != lambdas.size()) {
    throw Error(ErrorCode::InvalidArgument, "spectrum and weights must be nonempty and equal length");
  }
  SingularSpectrum out;
  out.weight_kind = kind;
  out.lambdas.resize(lambdas.size());
  out.thetas.resize(lambdas.size());
  for (Eigen::Index l = 0; l < lambdas.size(); ++l) {
    double lam = lambdas(l);
    if (!(lam <= 1.0 + kTol.singular_clamp) || !(lam >= -kTol.singular_clamp)) {
      throw Error(ErrorCode::NumericalFailure,
                  "singular value " + std::to_string(lam) + " outside [0, 1]: input not unitary");
    }
    lam = std::clamp(lam, 0.0, 1.0);
    out.lambdas(l) = lam;
    out.thetas(l) = 2.0 * std::acos(lam);
  }
  out.weights = std::move(weights);
  return out;
}

SingularSpectrum singular_spectrum(const TruncatedPropagator& a, WeightKind weighting) {
  const bool want_vectors = weighting == WeightKind::Reference;
  SVDResult dec = svd(a.block, want_vectors);
  const Eigen::Index dim = dec.singular_values.size();
  RealVector weights;
  if (want_vectors) {
    // |<phi_l|0>|^2 = |(V^dagger)_{l,0}|^2
    weights = dec.right_vectors_adjoint.col(0).cwiseAbs2();
  } else {
    weights = RealVector::Constant(dim, 1.0 / static_cast<double>(dim));
  }
  return spectrum_from_values(std::move(dec.singular_values), std::move(weights), weighting);
}

PhaseHistogram phase_histogram(const SingularSpectrum& spec, int nbins) {
  if (nbins < 2) throw Error(ErrorCode::InvalidArgument, "histogram needs at least 2 bins");
  PhaseHistogram out;
  const double width = std::numbers::pi / nbins;
  out.bin_edges = RealVector::LinSpaced(nbins + 1, 0.0, std::numbers::pi);
  out.densities = RealVector::Zero(nbins);
  for (Eigen::Index l = 0; l < spec.thetas.size(); ++l) {
    const auto bin = static_cast<int>(std::floor(spec.thetas(l) / width));
    out.densities(std::clamp(bin, 0, nbins - 1)) += spec.weights(l);
  }
  out.densities /= width;
  return out;
}

double chebyshev_moment(const SingularSpectrum& spec, int order) {
  if (order <= 0) throw Error(ErrorCode::InvalidOrder, "Chebyshev order must be positive");
  if (order % 2 != 0) throw Error(ErrorCode::OddOrder, "Chebyshev order must be even");
  const double harmonic = order / 2;
  double sum = 0.0;
  for (Eigen::Index l = 0; l < spec.thetas.size(); ++l) {
    sum += spec.weights(l) * std::cos(harmonic * spec.thetas(l));
  }
  return sum;
}

double end_bin_mass(const PhaseHistogram& hist) {
  const auto n = hist.densities.size();
  const double width = hist.bin_edges(1) - hist.bin_edges(0);
  return (hist.densities(0) + hist.densities(n - 1)) * width;
}

}  // namespace otocspec
