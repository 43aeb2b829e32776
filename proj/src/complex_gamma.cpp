#include "gfrag/complex_gamma.hpp"

#include <cmath>

#include "gfrag/errors.hpp"

namespace gfrag {

namespace {

// Lanczos coefficients for g = 607/128, n = 15 (Godfrey's table).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,     -0.49191381609762019978,
    0.33994649984811888699e-4, 0.46523628927048575665e-4,
    -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,
    -0.16431810653676389022e-3, 0.84418223983852743293e-4,
    -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

constexpr double kLogSqrt2Pi = 0.91893853320467274178;
constexpr double kPi = 3.14159265358979323846;

// log Gamma on Re z >= 0.5 via Lanczos.
cplx log_gamma_right(cplx z) {
  z -= 1.0;
  cplx a = kLanczos[0];
  for (int k = 1; k < 15; ++k) a += kLanczos[k] / (z + static_cast<double>(k));
  cplx t = z + kLanczosG + 0.5;
  return kLogSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(a);
}

// log(sin(pi z)) without overflow for large |Im z| (Kolbig's method).
cplx log_sin_pi(cplx z) {
  const cplx i(0.0, 1.0);
  if (z.imag() > 0) {
    // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2i)
    return -i * kPi * z + std::log(1.0 - std::exp(2.0 * i * kPi * z)) -
           std::log(2.0 * i);
  }
  if (z.imag() < 0) {
    return i * kPi * z + std::log(1.0 - std::exp(-2.0 * i * kPi * z)) -
           std::log(-2.0 * i);
  }
  return std::log(std::sin(kPi * z));
}

}  // namespace

double dist_to_nonpos_int(cplx z) {
  if (z.real() > 0.5) return std::abs(z);  // nearest is 0 only if |z| small anyway
  double n = std::round(z.real());
  if (n > 0.0) n = 0.0;
  return std::abs(z - cplx(n, 0.0));
}

cplx log_gamma(cplx z) {
  if (z.real() >= 0.5) return log_gamma_right(z);
  if (dist_to_nonpos_int(z) < kPoleEps)
    throw PoleProximity(z, cplx(std::round(z.real()), 0.0));
  // Gamma(z) Gamma(1-z) = pi / sin(pi z)
  return std::log(kPi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

cplx cgamma(cplx z) {
  if (z.real() < 0.5 && dist_to_nonpos_int(z) < kPoleEps)
    throw PoleProximity(z, cplx(std::round(z.real()), 0.0));
  if (std::abs(z.imag()) > kGammaLogSwitch) return std::exp(log_gamma(z));
  if (z.real() >= 0.5) return std::exp(log_gamma_right(z));
  return kPi / (std::sin(kPi * z) * std::exp(log_gamma_right(1.0 - z)));
}

}  // namespace gfrag
