#pragma once

#include <complex>

namespace gfrag {

using cplx = std::complex<double>;

struct Hyp2F1Params {
  cplx a;
  cplx b;
  cplx c;
  cplx z;
};

// Gauss hypergeometric 2F1(a,b;c;z), complex parameters, principal branch.
// Evaluation regimes: direct Maclaurin series for |z| <= 0.6; Pfaff map
// z -> z/(z-1) when that shrinks the argument; the 1-z connection for
// 0.6 < |z| < 1 (non-integer c-a-b); Taylor continuation along a path from
// z=1/2 when the connection is degenerate and |z| < 1; the 1/z connection
// for |z| > 1 off the cut [1,inf) (non-integer a-b).
//
// Throws PoleProximity (c near a non-positive integer without a terminating
// numerator), DegenerateConnection (log case needed and unreachable by the
// continuation path), DomainError (z on the cut), NonConvergence.
cplx hyp2f1(const Hyp2F1Params& p);

inline cplx hyp2f1(cplx a, cplx b, cplx c, cplx z) {
  return hyp2f1(Hyp2F1Params{a, b, c, z});
}

enum class LimitRegime {
  Regular,             // Re(c-a-b) > 0: value of F at z=1
  SingularCoefficient  // Re(c-a-b) < 0: coefficient of (1-z)^{c-a-b}
};

struct LimitZ1 {
  cplx value;
  LimitRegime regime;
};

// z -> 1 limit data: Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)) when the
// limit exists, else the coefficient Gamma(c)Gamma(a+b-c)/(Gamma(a)Gamma(b))
// of the (1-z)^{c-a-b} singular factor. Throws BalancedCase when
// Re(c-a-b) ~ 0.
LimitZ1 hyp2f1_limit_z1(cplx a, cplx b, cplx c);

// Series truncation policy shared by every series in the library.
inline constexpr int kSeriesMaxTerms = 5000;
inline constexpr double kSeriesTermTol = 1e-16;

}  // namespace gfrag
