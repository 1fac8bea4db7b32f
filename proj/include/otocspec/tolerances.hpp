#pragma once

namespace otocspec {

// Numerical tolerances shared by every module.
struct Tolerances {
  // Max |H - H^dagger| entry accepted as Hermitian.
  double hermitian = 1e-12;
  // Max |W^dagger W - I| entry accepted as unitary on input validation.
  double unitary = 1e-9;
  // Singular values in (1, 1 + clamp] are rounded to 1; above that is an error.
  double singular_clamp = 1e-10;
  // Max |f| the smoothed filter target is rescaled to.
  double filter_ceiling = 0.99;
  // Max residual a synthesized phase sequence may leave against its target.
  double synthesis_max_residual = 1e-2;
};

inline constexpr Tolerances kTol{};

}  // namespace otocspec
