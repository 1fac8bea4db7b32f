#pragma once

#include "otocspec/linalg.hpp"
#include "otocspec/propagator.hpp"

namespace otocspec {

// G(t) = exp(-i h t) for a single-particle hopping matrix h.
struct SingleParticlePropagator {
  ComplexMatrix g;
  double time = 0.0;
};

// Throws NonHermitianInput.
SingleParticlePropagator single_particle_propagator(const RealMatrix& hopping, double t);

// Closed-form spectrum of A_{i,j}(t) for a quadratic hopping model: lambda = 1
// and lambda = |G_ji(t)|, each with multiplicity 2^(N-2), uniform weights.
// Throws EqualSites or SiteOutOfRange.
SingularSpectrum analytic_truncated_spectrum(const SingleParticlePropagator& g, int i, int j,
                                             int num_sites);

struct OverlayPoint {
  double t = 0.0;
  double abs_gji = 0.0;
  double theta = 0.0;  // 2 arccos |G_ji|
};

// theta(t) trace of the propagating singular value.
std::vector<OverlayPoint> free_fermion_overlay(const RealMatrix& hopping, int i, int j,
                                               const std::vector<double>& times);

}  // namespace otocspec
