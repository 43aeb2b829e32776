#include "gfrag/hyp2f1.hpp"

#include <cmath>
#include <cstdlib>

#include "gfrag/complex_gamma.hpp"
#include "gfrag/errors.hpp"

namespace gfrag {

namespace {

bool near_int(cplx z, double eps = kPoleEps) {
  return std::abs(z - std::round(z.real())) < eps;
}

bool near_nonpos_int(cplx z, double eps = kPoleEps) {
  return z.real() < 0.5 && near_int(z, eps);
}

// Maclaurin sum; stops after three consecutive terms below kSeriesTermTol
// relative to the running sum.
cplx maclaurin(cplx a, cplx b, cplx c, cplx z) {
  cplx sum = 1.0, term = 1.0;
  int small_run = 0;
  for (int n = 0; n < kSeriesMaxTerms; ++n) {
    double nd = static_cast<double>(n);
    term *= (a + nd) * (b + nd) / ((c + nd) * (nd + 1.0)) * z;
    sum += term;
    if (std::abs(term) < kSeriesTermTol * std::abs(sum)) {
      if (++small_run == 3) return sum;
    } else {
      small_run = 0;
    }
  }
  throw NonConvergence("2F1 Maclaurin series did not converge");
}

// Terminating case: a (or b) is a non-positive integer -m.
cplx polynomial(cplx a, cplx b, cplx c, cplx z, int m) {
  cplx sum = 1.0, term = 1.0;
  for (int n = 0; n < m; ++n) {
    double nd = static_cast<double>(n);
    term *= (a + nd) * (b + nd) / ((c + nd) * (nd + 1.0)) * z;
    sum += term;
  }
  return sum;
}

// Derivative via F'(z) = (ab/c) F(a+1,b+1;c+1;z).
cplx hyp2f1_impl(cplx a, cplx b, cplx c, cplx z, int depth);

// Analytic continuation by Taylor re-expansion of the hypergeometric ODE
//   z(1-z) F'' + (c-(a+b+1)z) F' - ab F = 0
// along the straight path from z0=z/(2|z|) (where the series converges) to z.
// Handles the log-degenerate connection cases; cost grows as z approaches 1.
cplx taylor_continue(cplx a, cplx b, cplx c, cplx z) {
  cplx z0 = 0.5 * z / std::abs(z);
  cplx f = maclaurin(a, b, c, z0);
  cplx fp = a * b / c * maclaurin(a + 1.0, b + 1.0, c + 1.0, z0);
  const int max_steps = 800;
  for (int step = 0; step < max_steps; ++step) {
    cplx rem = z - z0;
    if (std::abs(rem) < 1e-300) return f;
    double radius = std::min(std::abs(z0), std::abs(1.0 - z0));
    double hlen = std::min(std::abs(rem), 0.38 * radius);
    if (hlen < 1e-15) throw NonConvergence("2F1 continuation stalled near z=1");
    cplx h = hlen * rem / std::abs(rem);
    // local Taylor: sum a_k h^k with the ODE three-term recurrence
    cplx A0 = z0 * (1.0 - z0), A1 = 1.0 - 2.0 * z0;
    cplx B0 = c - (a + b + 1.0) * z0, B1 = -(a + b + 1.0);
    cplx ab = a * b;
    cplx ak = f, ak1 = fp;           // a_k, a_{k+1}
    cplx val = f + fp * h, der = fp; // running sums of F and F'
    cplx hp = h;                     // h^{k+1}
    bool done = false;
    for (int k = 0; k + 2 < kSeriesMaxTerms; ++k) {
      double kd = static_cast<double>(k);
      cplx ak2 = -((A1 * kd + B0) * (kd + 1.0) * ak1 +
                   (-kd * (kd - 1.0) + B1 * kd - ab) * ak) /
                 (A0 * (kd + 2.0) * (kd + 1.0));
      der += (kd + 2.0) * ak2 * hp;
      hp *= h;
      cplx dval = ak2 * hp;
      val += dval;
      ak = ak1;
      ak1 = ak2;
      if (std::abs(dval) < kSeriesTermTol * std::abs(val) && k > 4) {
        done = true;
        break;
      }
    }
    if (!done) throw NonConvergence("2F1 continuation Taylor step stalled");
    f = val;
    fp = der;
    z0 += h;
  }
  throw NonConvergence("2F1 continuation exceeded step budget");
}

// AS 15.3.6: connection z -> 1-z (requires c-a-b non-integer).
cplx connect_1mz(cplx a, cplx b, cplx c, cplx z, int depth) {
  cplx cab = c - a - b;
  cplx g1 = std::exp(log_gamma(c) + log_gamma(cab) - log_gamma(c - a) -
                     log_gamma(c - b));
  cplx g2 = std::exp(log_gamma(c) + log_gamma(-cab) - log_gamma(a) -
                     log_gamma(b));
  cplx w = 1.0 - z;
  return g1 * hyp2f1_impl(a, b, a + b - c + 1.0, w, depth + 1) +
         std::pow(w, cab) * g2 *
             hyp2f1_impl(c - a, c - b, cab + 1.0, w, depth + 1);
}

// AS 15.3.7: connection z -> 1/z (requires a-b non-integer), |arg(-z)| < pi.
cplx connect_inv(cplx a, cplx b, cplx c, cplx z, int depth) {
  cplx g1 = std::exp(log_gamma(c) + log_gamma(b - a) - log_gamma(b) -
                     log_gamma(c - a));
  cplx g2 = std::exp(log_gamma(c) + log_gamma(a - b) - log_gamma(a) -
                     log_gamma(c - b));
  cplx w = 1.0 / z;
  return g1 * std::pow(-z, -a) *
             hyp2f1_impl(a, a - c + 1.0, a - b + 1.0, w, depth + 1) +
         g2 * std::pow(-z, -b) *
             hyp2f1_impl(b, b - c + 1.0, b - a + 1.0, w, depth + 1);
}

cplx hyp2f1_impl(cplx a, cplx b, cplx c, cplx z, int depth) {
  if (depth > 4) throw NonConvergence("2F1 transformation recursion too deep");
  if (std::abs(z) < 1e-300) return 1.0;
  // Terminating numerator parameter: exact polynomial regardless of c
  // (as long as c's pole, if any, sits beyond the last term).
  for (cplx num : {a, b}) {
    if (near_nonpos_int(num, 1e-13)) {
      int m = static_cast<int>(-std::llround(num.real()));
      if (!near_nonpos_int(c) || -std::round(c.real()) > m)
        return polynomial(a, b, c, z, m + 1);
    }
  }
  if (near_nonpos_int(c)) throw PoleProximity(c, std::round(c.real()));
  if (std::abs(z) <= 0.6) return maclaurin(a, b, c, z);
  // Pfaff z -> z/(z-1) when it lands in the series disk.
  cplx zp = z / (z - 1.0);
  if (std::abs(zp) <= 0.6)
    return std::pow(1.0 - z, -a) * hyp2f1_impl(a, c - b, c, zp, depth + 1);
  if (std::abs(z) < 1.0) {
    if (!near_int(c - a - b)) return connect_1mz(a, b, c, z, depth);
    return taylor_continue(a, b, c, z);
  }
  // |z| >= 1: refuse the branch cut [1, inf).
  if (std::abs(z.imag()) < kPoleEps && z.real() >= 1.0 - kPoleEps)
    throw DomainError("2F1 argument on the branch cut [1,inf)");
  if (!near_int(a - b)) return connect_inv(a, b, c, z, depth);
  if (std::abs(zp) < 1.0)
    return std::pow(1.0 - z, -a) * hyp2f1_impl(a, c - b, c, zp, depth + 1);
  throw DegenerateConnection("2F1: integer a-b with |z|>1 not supported");
}

}  // namespace

cplx hyp2f1(const Hyp2F1Params& p) {
  if (std::abs(1.0 - p.z) < kPoleEps) {
    cplx cab = p.c - p.a - p.b;
    if (cab.real() <= 0.0 && !near_nonpos_int(p.a, 1e-13) &&
        !near_nonpos_int(p.b, 1e-13))
      throw DomainError("2F1 divergent as z -> 1 (Re(c-a-b) <= 0); use the z=1 limit operation");
  }
  return hyp2f1_impl(p.a, p.b, p.c, p.z, 0);
}

LimitZ1 hyp2f1_limit_z1(cplx a, cplx b, cplx c) {
  cplx cab = c - a - b;
  if (std::abs(cab.real()) < kPoleEps)
    throw BalancedCase("Re(c-a-b) ~ 0: no power-law limit at z=1");
  if (cab.real() > 0) {
    cplx v = std::exp(log_gamma(c) + log_gamma(cab) - log_gamma(c - a) -
                      log_gamma(c - b));
    return {v, LimitRegime::Regular};
  }
  cplx v = std::exp(log_gamma(c) + log_gamma(-cab) - log_gamma(a) -
                    log_gamma(b));
  return {v, LimitRegime::SingularCoefficient};
}

}  // namespace gfrag
