#pragma once

#include <complex>
#include <string>

namespace gfrag {

using cplx = std::complex<double>;

// Predicted long-time behaviour of non-negative solutions.
enum class Behavior {
  GlobalNonneg,       // theta < 1: Malthusian, global non-negative solution
  BlowupNoExtension,  // theta > 1, gamma in (0,2): blow-up at t=1/gamma, no
                      // non-negative extension
  NoLocalNonneg,      // theta > 1, gamma < 0: no local non-negative solution
  Inconclusive        // theta = 1, or theta > 1 with gamma >= 2
};

std::string to_string(Behavior b);

// Growth exponent gamma != 0 and dislocation intensity theta > 0, with the
// derived roots of s Phi(s) = (s - sigma1)(s - sigma2):
//   sigma1 = 1 - sqrt(1-theta), sigma2 = 1 + sqrt(1-theta)
// (principal square root, so Im sigma2 >= 0 and sigma1 = conj(sigma2) for
// theta > 1). nu = min(2, Re sigma2 + gamma) for gamma > 0.
class ModelParams {
 public:
  ModelParams(double gamma, double theta);

  double gamma() const { return gamma_; }
  double theta() const { return theta_; }
  cplx sigma1() const { return sigma1_; }
  cplx sigma2() const { return sigma2_; }
  double nu() const { return nu_; }
  bool conjugate_pair() const { return theta_ > 1.0; }
  // |theta - 1| < 1e-10: repeated root, several Gamma-ratio formulas degenerate
  bool critical() const { return critical_; }

 private:
  double gamma_;
  double theta_;
  cplx sigma1_;
  cplx sigma2_;
  double nu_;
  bool critical_;
};

// Phi(s) = theta/s + s - 2. Throws PoleProximity at s ~ 0.
cplx phi(const ModelParams& p, cplx s);

// Mellin transform of the dislocation density theta*H(1-x): K(s) = theta/s.
// Requires Re s > 0.
cplx dislocation_mellin(const ModelParams& p, cplx s);

struct RegimeReport {
  bool malthusian;     // theta < 1
  bool critical;       // theta = 1 within tolerance
  double inf_phi;      // inf_{s>0} Phi(s) = 2(sqrt(theta)-1)
  int gamma_sign;      // sign of gamma
  Behavior expected_behavior;
};

RegimeReport classify(const ModelParams& p);

}  // namespace gfrag
