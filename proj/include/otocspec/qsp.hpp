#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace otocspec {

// (phi_0, ..., phi_2d) defining a depth-d QSP-OTOC.
class PhaseSequence {
 public:
  // Throws BadPhaseCount unless the length is odd and >= 3.
  explicit PhaseSequence(std::vector<double> phases);

  // Interior phases pi/2, front phase 0: response (-1)^d cos(d theta).
  static PhaseSequence harmonic(int depth);
  static PhaseSequence zeros(int depth);

  const std::vector<double>& phases() const { return phases_; }
  int depth() const { return static_cast<int>(phases_.size() - 1) / 2; }

 private:
  std::vector<double> phases_;
};

// Re(response) = sum_m cheb_coefficients[m] T_m(lambda), lambda = cos(theta/2).
struct ResponsePolynomial {
  std::vector<double> cheb_coefficients;  // T_0 .. T_2d
  double max_abs_on_domain = 0.0;         // max |Re P| over theta in [0, pi]
  double parity_defect = 0.0;             // max |c_m| over odd m and m > 2d
};

// <0| e^{-i phi_2d Z} prod_{r=d-1..0} [R^dagger e^{-i phi_2r+1 Z} R e^{-i phi_2r Z}] |0>,
// R = exp(-i (theta/2) Y).
std::complex<double> qsp_response(double theta, const PhaseSequence& phases);

// Response and d response / d phi_k for every k.
std::complex<double> qsp_response_gradient(double theta, const PhaseSequence& phases,
                                           std::vector<std::complex<double>>& gradient);

// Chebyshev interpolation of Re(response) on 4d+1 Lobatto nodes in lambda.
ResponsePolynomial response_cheb_coeffs(const PhaseSequence& phases);

// Evaluates sum_m c_m cos(m theta).
double cosine_series(const std::vector<double>& coeffs, double theta);

enum class FilterKind { Lowpass, Highpass, Bandpass };

std::string_view to_string(FilterKind kind);
FilterKind parse_filter_kind(std::string_view name);

struct FilterSpec {
  FilterKind kind = FilterKind::Lowpass;
  std::vector<std::pair<double, double>> passbands;  // theta intervals in [0, pi]
  double transition_width = 0.1;
  int depth = 2;

  void validate() const;
};

// Pass-band indicator convolved with a Hann taper of width transition_width.
double smoothed_indicator(const FilterSpec& spec, double theta);

// Cosine coefficients a_0..a_d of the smoothed target, scaled so that both the
// smoothed and the truncated target stay within the filter ceiling. The full
// band [0, pi] yields the constant 1 unscaled.
std::vector<double> filter_target_coefficients(const FilterSpec& spec);

struct SynthesisOptions {
  std::uint64_t seed = 0;
  int restarts = 8;
  double init_noise = 0.05;
  int fit_grid = 0;      // 0 selects 16 d + 1 points
  int check_grid = 2001;
  int max_iterations = 2000;
  int threads = 1;
};

struct SynthesisResult {
  PhaseSequence phases = PhaseSequence::zeros(1);
  std::vector<double> target_coefficients;  // cos(m theta), m = 0..d
  double max_residual = 0.0;                // on the check grid
  double l2_residual = 0.0;                 // RMS on the check grid
  int best_restart = -1;
  std::uint64_t seed = 0;
  std::vector<double> restart_max_residuals;
};

// Least-squares fit of Re(qsp_response) to a cosine series target. Never throws
// on a poor fit; the residuals report the quality.
SynthesisResult fit_phases(const std::vector<double>& target_coefficients, int depth,
                           const SynthesisOptions& options = {});

// Builds the filter target and fits it. Throws SynthesisFailed when the best
// max residual exceeds the synthesis tolerance.
SynthesisResult synthesize_phases(const FilterSpec& target, const SynthesisOptions& options = {});

}  // namespace otocspec
