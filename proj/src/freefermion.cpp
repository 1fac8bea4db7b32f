#include "otocspec/freefermion.hpp"

#include <algorithm>
#include <cmath>

#include "otocspec/error.hpp"

namespace otocspec {

SingleParticlePropagator single_particle_propagator(const RealMatrix& hopping, double t) {
  const SpectralDecomposition spec = hermitian_eigendecompose(hopping.cast<cplx>());
  return {evolve(spec, t), t};
}

SingularSpectrum analytic_truncated_spectrum(const SingleParticlePropagator& g, int i, int j,
                                             int num_sites) {
  if (num_sites < 2 || g.g.rows() != num_sites) {
    throw Error(ErrorCode::InvalidArgument, "propagator size does not match number of sites");
  }
  if (i < 0 || i >= num_sites || j < 0 || j >= num_sites) {
    throw Error(ErrorCode::SiteOutOfRange, "site pair out of range");
  }
  if (i == j) throw Error(ErrorCode::EqualSites, "analytic spectrum requires i != j");
  const Eigen::Index mult = Eigen::Index{1} << (num_sites - 2);
  const double transfer = std::min(1.0, std::abs(g.g(j, i)));
  RealVector lambdas(2 * mult);
  lambdas.head(mult).setConstant(1.0);
  lambdas.tail(mult).setConstant(transfer);
  const RealVector weights = RealVector::Constant(2 * mult, 1.0 / static_cast<double>(2 * mult));
  return spectrum_from_values(std::move(lambdas), weights, WeightKind::Uniform);
}

std::vector<OverlayPoint> free_fermion_overlay(const RealMatrix& hopping, int i, int j,
                                               const std::vector<double>& times) {
  const SpectralDecomposition spec = hermitian_eigendecompose(hopping.cast<cplx>());
  std::vector<OverlayPoint> out;
  out.reserve(times.size());
  for (double t : times) {
    const ComplexMatrix g = evolve(spec, t);
    const double a = std::min(1.0, std::abs(g(j, i)));
    out.push_back({t, a, 2.0 * std::acos(a)});
  }
  return out;
}

}  // namespace otocspec
