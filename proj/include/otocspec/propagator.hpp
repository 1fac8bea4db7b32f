#pragma once

#include <string>
#include <vector>

#include "otocspec/linalg.hpp"

namespace otocspec {

// A_{i,j} = <0_i| U |0_j>, a 2^(N-1) x 2^(N-1) block of U.
//
// Rows enumerate the N-1 qubits other than the sink site i in their natural
// order. Columns are labelled through the probe frame U S_{j<->i}: column c is
// the basis state obtained by inserting a 0 at bit i of c and then swapping
// bits i and j. The block is therefore exactly the <0_i|.|0_i> corner of
// U S_{j<->i}; it differs from the order-preserving labelling of the non-j
// qubits by a column permutation only.
struct TruncatedPropagator {
  ComplexMatrix block;
  int sink_site = 0;    // i
  int source_site = 0;  // j
  int num_sites = 0;
  double time = 0.0;
  std::string model_tag;
};

enum class WeightKind { Uniform, Reference };

std::string_view to_string(WeightKind kind);
WeightKind parse_weight_kind(std::string_view name);

struct SingularSpectrum {
  RealVector lambdas;  // descending, clamped into [0, 1]
  RealVector thetas;   // 2 arccos(lambda) in [0, pi]
  RealVector weights;  // sum to 1
  WeightKind weight_kind = WeightKind::Uniform;
};

struct PhaseHistogram {
  RealVector bin_edges;  // nbins + 1 uniform edges over [0, pi]
  RealVector densities;  // mass per bin / bin width
};

inline constexpr int kDefaultHistogramBins = 64;

// Inserts a zero bit at position q of `value`.
std::size_t insert_zero_bit(std::size_t value, int q);
int num_qubits_of(const ComplexMatrix& u);

// Throws NotUnitary (row/column normalization check) or SiteOutOfRange.
TruncatedPropagator truncated_propagator(const ComplexMatrix& u, int i, int j, double time = 0.0,
                                         std::string model_tag = {});

// Reference weights are |<phi_l|0^{N-1}>|^2 over the right singular vectors,
// i.e. the expansion of the input reference state that enters U first.
// Throws NumericalFailure if a singular value exceeds 1 + clamp tolerance.
SingularSpectrum singular_spectrum(const TruncatedPropagator& a, WeightKind weighting);

// Spectrum from raw singular values (clamped) and weights.
SingularSpectrum spectrum_from_values(RealVector lambdas, RealVector weights, WeightKind kind);

PhaseHistogram phase_histogram(const SingularSpectrum& spec, int nbins = kDefaultHistogramBins);

// sum_l w_l T_m(lambda_l), evaluated as sum_l w_l cos((m/2) theta_l).
// Throws OddOrder for odd m and InvalidOrder for m <= 0.
double chebyshev_moment(const SingularSpectrum& spec, int order);

// Mass of the first and last histogram bins.
double end_bin_mass(const PhaseHistogram& hist);

}  // namespace otocspec
