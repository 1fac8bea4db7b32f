#include "otocspec/qsp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "otocspec/error.hpp"
#include "otocspec/tolerances.hpp"

namespace otocspec {

namespace {

using cplx = std::complex<double>;
using Vec2 = Eigen::Vector2cd;
using Row2 = Eigen::RowVector2cd;
using Mat2 = Eigen::Matrix2cd;

constexpr double kPi = std::numbers::pi;

// exp(-i (theta/2) Y)
Mat2 signal_rotation(double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  Mat2 r;
  r << c, -s, s, c;
  return r;
}

void rotate_z(Vec2& v, double phi) {
  v(0) *= std::polar(1.0, -phi);
  v(1) *= std::polar(1.0, phi);
}

void rotate_z(Row2& w, double phi) {
  w(0) *= std::polar(1.0, -phi);
  w(1) *= std::polar(1.0, phi);
}

// Hann-window step: 0 for s <= 0, 1 for s >= 1.
double hann_step(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  return s - std::sin(2.0 * kPi * s) / (2.0 * kPi);
}

}  // namespace

PhaseSequence::PhaseSequence(std::vector<double> phases) : phases_(std::move(phases)) {
  if (phases_.size() < 3 || phases_.size() % 2 == 0) {
    throw Error(ErrorCode::BadPhaseCount,
                "phase sequence length must be odd and >= 3, got " + std::to_string(phases_.size()));
  }
  for (double p : phases_) {
    if (!std::isfinite(p)) throw Error(ErrorCode::InvalidArgument, "non-finite phase");
  }
}

PhaseSequence PhaseSequence::harmonic(int depth) {
  if (depth < 1) throw Error(ErrorCode::BadPhaseCount, "depth must be >= 1");
  std::vector<double> p(static_cast<std::size_t>(2 * depth + 1), kPi / 2);
  p.back() = 0.0;
  return PhaseSequence(std::move(p));
}

PhaseSequence PhaseSequence::zeros(int depth) {
  if (depth < 1) throw Error(ErrorCode::BadPhaseCount, "depth must be >= 1");
  return PhaseSequence(std::vector<double>(static_cast<std::size_t>(2 * depth + 1), 0.0));
}

cplx qsp_response(double theta, const PhaseSequence& phases) {
  const auto& phi = phases.phases();
  const int d = phases.depth();
  const Mat2 r = signal_rotation(theta);
  const Mat2 r_adj = r.adjoint();
  Vec2 v(1.0, 0.0);
  for (int layer = 0; layer < d; ++layer) {
    rotate_z(v, phi[static_cast<std::size_t>(2 * layer)]);
    v = r * v;
    rotate_z(v, phi[static_cast<std::size_t>(2 * layer + 1)]);
    v = r_adj * v;
  }
  rotate_z(v, phi[static_cast<std::size_t>(2 * d)]);
  return v(0);
}

cplx qsp_response_gradient(double theta, const PhaseSequence& phases,
                           std::vector<cplx>& gradient) {
  const auto& phi = phases.phases();
  const std::size_t count = phi.size();
  const Mat2 r = signal_rotation(theta);
  const Mat2 r_adj = r.adjoint();
  // Signal applied right after the rotation by phi_k: R for even k, R^dagger for odd.
  auto signal_after = [&](std::size_t k) -> const Mat2& { return k % 2 == 0 ? r : r_adj; };

  std::vector<Vec2> forward(count);
  Vec2 v(1.0, 0.0);
  for (std::size_t k = 0; k < count; ++k) {
    rotate_z(v, phi[k]);
    forward[k] = v;
    if (k + 1 < count) v = signal_after(k) * v;
  }
  gradient.assign(count, cplx(0.0, 0.0));
  Row2 w(1.0, 0.0);
  for (std::size_t k = count; k-- > 0;) {
    // d/dphi exp(-i phi Z) = -i Z exp(-i phi Z)
    gradient[k] = w(0) * cplx(0, -1) * forward[k](0) + w(1) * cplx(0, 1) * forward[k](1);
    rotate_z(w, phi[k]);
    if (k > 0) w = w * signal_after(k - 1);
  }
  return forward.back()(0);
}

ResponsePolynomial response_cheb_coeffs(const PhaseSequence& phases) {
  const int d = phases.depth();
  const int m_nodes = 4 * d;
  std::vector<double> samples(static_cast<std::size_t>(m_nodes + 1));
  for (int k = 0; k <= m_nodes; ++k) {
    const double lambda = std::cos(kPi * k / m_nodes);
    samples[static_cast<std::size_t>(k)] = qsp_response(2.0 * std::acos(lambda), phases).real();
  }
  // DCT-I on the Lobatto nodes gives exact coefficients up to degree 4d.
  std::vector<double> coeffs(static_cast<std::size_t>(m_nodes + 1));
  for (int m = 0; m <= m_nodes; ++m) {
    double acc = 0.0;
    for (int k = 0; k <= m_nodes; ++k) {
      const double w = (k == 0 || k == m_nodes) ? 0.5 : 1.0;
      acc += w * samples[static_cast<std::size_t>(k)] * std::cos(kPi * m * k / m_nodes);
    }
    acc *= 2.0 / m_nodes;
    if (m == 0 || m == m_nodes) acc *= 0.5;
    coeffs[static_cast<std::size_t>(m)] = acc;
  }

  ResponsePolynomial out;
  out.cheb_coefficients.assign(coeffs.begin(), coeffs.begin() + 2 * d + 1);
  for (int m = 0; m <= m_nodes; ++m) {
    if (m % 2 == 1 || m > 2 * d) {
      out.parity_defect = std::max(out.parity_defect, std::abs(coeffs[static_cast<std::size_t>(m)]));
      if (m <= 2 * d) out.cheb_coefficients[static_cast<std::size_t>(m)] = 0.0;
    }
  }
  constexpr int kDenseGrid = 1001;
  for (int g = 0; g < kDenseGrid; ++g) {
    const double theta = kPi * g / (kDenseGrid - 1);
    out.max_abs_on_domain =
        std::max(out.max_abs_on_domain, std::abs(qsp_response(theta, phases).real()));
  }
  return out;
}

double cosine_series(const std::vector<double>& coeffs, double theta) {
  double acc = 0.0;
  for (std::size_t m = 0; m < coeffs.size(); ++m) acc += coeffs[m] * std::cos(m * theta);
  return acc;
}

std::string_view to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::Lowpass: return "lowpass";
    case FilterKind::Highpass: return "highpass";
    case FilterKind::Bandpass: return "bandpass";
  }
  return "unknown";
}

FilterKind parse_filter_kind(std::string_view name) {
  if (name == "lowpass") return FilterKind::Lowpass;
  if (name == "highpass") return FilterKind::Highpass;
  if (name == "bandpass") return FilterKind::Bandpass;
  throw Error(ErrorCode::InvalidArgument, "filter kind must be lowpass, highpass or bandpass");
}

void FilterSpec::validate() const {
  if (depth < 1) throw Error(ErrorCode::InvalidArgument, "filter depth must be >= 1");
  if (!(transition_width > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "transition width must be > 0");
  }
  if (passbands.empty()) throw Error(ErrorCode::InvalidArgument, "filter needs a passband");
  for (const auto& [lo, hi] : passbands) {
    if (!(lo >= 0.0 && hi <= kPi + 1e-12 && lo < hi)) {
      throw Error(ErrorCode::InvalidArgument, "passband must satisfy 0 <= lo < hi <= pi");
    }
  }
  const auto& [first_lo, first_hi] = passbands.front();
  const auto& [last_lo, last_hi] = passbands.back();
  if (kind == FilterKind::Lowpass && (passbands.size() != 1 || first_lo != 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "lowpass filter needs a single band starting at 0");
  }
  if (kind == FilterKind::Highpass && (passbands.size() != 1 || last_hi < kPi - 1e-12)) {
    throw Error(ErrorCode::InvalidArgument, "highpass filter needs a single band ending at pi");
  }
  (void)first_hi;
  (void)last_lo;
}

double smoothed_indicator(const FilterSpec& spec, double theta) {
  const double w = spec.transition_width;
  double value = 0.0;
  for (const auto& [lo, hi] : spec.passbands) {
    // Edges at 0 and pi are reflection points of the even extension, not edges.
    const double rise = lo <= 0.0 ? 1.0 : hann_step((theta - lo) / w + 0.5);
    const double fall = hi >= kPi - 1e-12 ? 0.0 : hann_step((theta - hi) / w + 0.5);
    value += rise - fall;
  }
  return value;
}

std::vector<double> filter_target_coefficients(const FilterSpec& spec) {
  spec.validate();
  const int d = spec.depth;
  const bool all_pass = spec.passbands.size() == 1 && spec.passbands.front().first <= 0.0 &&
                        spec.passbands.front().second >= kPi - 1e-12;
  std::vector<double> coeffs(static_cast<std::size_t>(d + 1), 0.0);
  if (all_pass) {
    coeffs[0] = 1.0;
    return coeffs;
  }

  // Trapezoid rule on the even 2pi-periodic extension.
  constexpr int kQuad = 8192;
  std::vector<double> f(kQuad + 1);
  double peak = 0.0;
  for (int q = 0; q <= kQuad; ++q) {
    f[static_cast<std::size_t>(q)] = smoothed_indicator(spec, kPi * q / kQuad);
    peak = std::max(peak, std::abs(f[static_cast<std::size_t>(q)]));
  }
  const double ceiling = kTol.filter_ceiling;
  const double scale = peak > ceiling ? ceiling / peak : 1.0;
  for (int m = 0; m <= d; ++m) {
    double acc = 0.0;
    for (int q = 0; q <= kQuad; ++q) {
      const double w = (q == 0 || q == kQuad) ? 0.5 : 1.0;
      acc += w * f[static_cast<std::size_t>(q)] * std::cos(m * kPi * q / kQuad);
    }
    acc *= (m == 0 ? 1.0 : 2.0) / kQuad;
    coeffs[static_cast<std::size_t>(m)] = scale * acc;
  }

  // Truncation can overshoot (Gibbs); keep the truncated target inside the ceiling too.
  double truncated_peak = 0.0;
  constexpr int kCheck = 4001;
  for (int g = 0; g < kCheck; ++g) {
    truncated_peak = std::max(truncated_peak, std::abs(cosine_series(coeffs, kPi * g / (kCheck - 1))));
  }
  if (truncated_peak > ceiling) {
    for (double& c : coeffs) c *= ceiling / truncated_peak;
  }
  return coeffs;
}

}  // namespace otocspec
