#pragma once

#include <complex>

namespace gfrag {

using cplx = std::complex<double>;

// Gamma(z) for complex z. Lanczos rational approximation (g = 607/128, 15
// terms), reflection formula for Re z < 0.5. Relative accuracy ~1e-13 for
// |z| <= 50, |Im z| <= 200. Throws PoleProximity within kPoleEps of a
// non-positive integer. Overflows to inf for Re z >~ 170; use log_gamma then.
cplx cgamma(cplx z);

// log Gamma(z), safe for large |Im z| (no overflow up to |z| ~ 1e15).
// The branch is continuous on Re z >= 0.5 (principal there); for Re z < 0.5
// the reflection uses a log-sin that never overflows. exp(log_gamma(z))
// equals Gamma(z) regardless of the branch the reflection lands on.
cplx log_gamma(cplx z);

// |Im z| threshold beyond which cgamma internally defers to exp(log_gamma).
inline constexpr double kGammaLogSwitch = 20.0;

// Digamma-free helper: distance from z to the nearest non-positive integer.
double dist_to_nonpos_int(cplx z);

}  // namespace gfrag
