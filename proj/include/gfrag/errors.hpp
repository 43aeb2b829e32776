#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace gfrag {

// Distance in C below which a point counts as sitting on an excluded pole.
inline constexpr double kPoleEps = 1e-8;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class PoleProximity : public Error {
 public:
  PoleProximity(std::complex<double> s, std::complex<double> nearest)
      : Error("evaluation point within pole tolerance of " + to_str(nearest) +
              " (s = " + to_str(s) + ")"),
        point(s),
        nearest_pole(nearest) {}
  std::complex<double> point;
  std::complex<double> nearest_pole;

 private:
  static std::string to_str(std::complex<double> z) {
    return "(" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
  }
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DegenerateConnection : public Error {
 public:
  using Error::Error;
};

class BalancedCase : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

class SlowDecay : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

class TiltViolation : public Error {
 public:
  using Error::Error;
};

class SeriesSwitchPoint : public Error {
 public:
  using Error::Error;
};

class InconclusiveGrid : public Error {
 public:
  using Error::Error;
};

}  // namespace gfrag
