#pragma once

#include <complex>
#include <vector>

#include "gfrag/model.hpp"

namespace gfrag {

// --- closed-form solutions of dW/dt(t,s) = Phi(s) W(t,s+gamma) ---

// Omega(t,s) = F((s-s1)/g,(s-s2)/g;s/g;gt), equivalently
// (1-gt)^{(2-s)/g} F(s1/g,s2/g;s/g;gt). Both forms are evaluated and must
// agree to 1e-9 relative; the first is returned. Requires |gt| < 1 and s/g
// away from non-positive integers. The public overload additionally requires
// gamma > 0, 0 <= gt < 1 per the solution's validity interval.
cplx omega(const ModelParams& p, double t, cplx s);

// Omega at t = 1/gamma (gamma > 0, Re s < 2):
//   Gamma(s/g) Gamma((2-s)/g) / (Gamma(s1/g) Gamma(s2/g)).
cplx omega_limit(const ModelParams& p, cplx s);

// U(t,s) for gamma > 0, gt > 1:
//   (gt)^{(s1-s)/g} Gamma(s/g) Gamma(1-(s-s2)/g)
//   / (Gamma(s1/g) Gamma(1+(s2-s1)/g))
//   * F(1-s1/g, (s-s1)/g; 1+(s2-s1)/g; 1/(gt)).
// Meromorphic with poles at s = -m g and s = s2+(m+1)g.
cplx u_closed(const ModelParams& p, double t, cplx s);

// gamma < 0 pieces, 0 < -gt < 1. U2 = Omega1 - Omega2 is analytic at the
// lattice s = -m g (the two terms' poles cancel); near it the value is
// recovered by a circle mean.
cplx omega1_neg(const ModelParams& p, double t, cplx s);
cplx omega2_neg(const ModelParams& p, double t, cplx s);
cplx u2(const ModelParams& p, double t, cplx s);

// Residue of U2 at s = sigma_l + (m+1) gamma (l = 1 or 2); simple-pole
// lattice only (throws DegenerateConnection when sigma2-sigma1 is a multiple
// of |gamma| and the two lattices collide into double poles).
cplx u2_residue(const ModelParams& p, double t, int m, int l);

// Mellin transform of the real global density for t > 1/gamma (gamma > 0):
// the sigma-symmetrized (U(t,s) + conj U(t, conj s))/2. Coincides with U for
// theta <= 1.
cplx w_mellin(const ModelParams& p, double t, cplx s);

// Mellin transform of the real local solution v for gamma < 0: symmetrized
// 2*i*pi*U2 (which has W(0,s) = 1).
cplx v_mellin(const ModelParams& p, double t, cplx s);

// Truncated power series W(t,s) = sum_n t^n/n! prod_{j<n} Phi(s+j g); the
// unique formal solution with W(0,s)=1 and the module's independent ground
// truth for |gt| < 1. Throws NonConvergence if the tail estimate at n_terms
// exceeds 1e-12 relative.
cplx series_oracle(const ModelParams& p, double t, cplx s, int n_terms = 80);

enum class SolutionKind { Omega, U, U2, Omega1, Omega2 };

struct TimeInterval {
  double lo;
  double hi;
};

struct Strip {
  double re_lo;
  double re_hi;
};

// Poles of the named solution with Re inside the window, sorted by Re then Im.
std::vector<cplx> pole_set(SolutionKind kind, const ModelParams& p, Strip window);

// Validity domain (t-interval, s-strip) carried as data for callers.
struct MellinSolution {
  SolutionKind kind;
  ModelParams params;
  TimeInterval t_valid;
  Strip s_strip;

  static MellinSolution make(SolutionKind kind, const ModelParams& p);
  cplx evaluate(double t, cplx s) const;  // checks validity, then dispatches
  std::vector<cplx> poles(Strip window) const { return pole_set(kind, params, window); }
};

}  // namespace gfrag
