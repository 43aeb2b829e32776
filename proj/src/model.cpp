#include "gfrag/model.hpp"

#include <cmath>

#include "gfrag/errors.hpp"

namespace gfrag {

std::string to_string(Behavior b) {
  switch (b) {
    case Behavior::GlobalNonneg: return "GlobalNonneg";
    case Behavior::BlowupNoExtension: return "BlowupNoExtension";
    case Behavior::NoLocalNonneg: return "NoLocalNonneg";
    case Behavior::Inconclusive: return "Inconclusive";
  }
  return "?";
}

ModelParams::ModelParams(double gamma, double theta)
    : gamma_(gamma), theta_(theta) {
  if (gamma == 0.0) throw DomainError("gamma must be non-zero");
  if (theta <= 0.0) throw DomainError("theta must be positive");
  cplx root = std::sqrt(cplx(1.0 - theta, 0.0));  // principal: Im >= 0
  sigma1_ = 1.0 - root;
  sigma2_ = 1.0 + root;
  critical_ = std::abs(theta - 1.0) < 1e-10;
  nu_ = gamma > 0 ? std::min(2.0, sigma2_.real() + gamma) : 0.0;
}

cplx phi(const ModelParams& p, cplx s) {
  if (std::abs(s) < kPoleEps) throw PoleProximity(s, cplx(0.0, 0.0));
  return p.theta() / s + s - 2.0;
}

cplx dislocation_mellin(const ModelParams& p, cplx s) {
  if (std::abs(s) < kPoleEps) throw PoleProximity(s, cplx(0.0, 0.0));
  if (s.real() <= 0.0)
    throw DomainError("Mellin transform of theta*H(1-x) needs Re s > 0");
  return p.theta() / s;
}

RegimeReport classify(const ModelParams& p) {
  RegimeReport r;
  r.malthusian = p.theta() < 1.0 && !p.critical();
  r.critical = p.critical();
  // Phi'(s) = 1 - theta/s^2 vanishes at s = sqrt(theta), which lies between
  // the roots when theta < 1; inf over s > 0 is 2(sqrt(theta)-1) either way.
  r.inf_phi = 2.0 * (std::sqrt(p.theta()) - 1.0);
  r.gamma_sign = p.gamma() > 0 ? 1 : -1;
  if (r.critical) {
    r.expected_behavior = Behavior::Inconclusive;
  } else if (p.theta() < 1.0) {
    r.expected_behavior = Behavior::GlobalNonneg;
  } else if (p.gamma() < 0.0) {
    r.expected_behavior = Behavior::NoLocalNonneg;
  } else if (p.gamma() < 2.0) {
    r.expected_behavior = Behavior::BlowupNoExtension;
  } else {
    r.expected_behavior = Behavior::Inconclusive;
  }
  return r;
}

}  // namespace gfrag
