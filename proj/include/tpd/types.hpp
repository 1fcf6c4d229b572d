#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace tpd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

// Default tolerances. All positive-definiteness and Hermitian gates are
// scale-aware: they compare against tol * max(1, scale of the input).
inline constexpr double kDefaultTol = 1e-10;       // PD threshold, Hermitian gates
inline constexpr double kCirculantTol = 1e-12;     // bcirc_inverse structure check
inline constexpr double kRealRecoveryTol = 1e-10;  // imaginary residue for real inputs
inline constexpr double kRiccatiBound = 1e-8;      // accepted residual of a computed mean

// Tag for the scalar functions applied through a Hermitian eigendecomposition.
struct ScalarFn {
  enum class Kind { Power, Sqrt, Inv, Exp, Log };

  Kind kind = Kind::Sqrt;
  double exponent = 0.0;  // Power only

  static ScalarFn power(double r) { return {Kind::Power, r}; }
  static ScalarFn sqrt() { return {Kind::Sqrt}; }
  static ScalarFn inv() { return {Kind::Inv}; }
  static ScalarFn exp() { return {Kind::Exp}; }
  static ScalarFn log() { return {Kind::Log}; }

  // sqrt, inv, log and non-integer or negative powers are only defined on the
  // positive definite cone; exp and nonnegative integer powers accept any
  // Hermitian input.
  bool requires_pd() const {
    switch (kind) {
      case Kind::Sqrt:
      case Kind::Inv:
      case Kind::Log:
        return true;
      case Kind::Exp:
        return false;
      case Kind::Power:
        return exponent < 0.0 || std::nearbyint(exponent) != exponent;
    }
    return true;
  }

  const char* name() const {
    switch (kind) {
      case Kind::Power:
        return "power";
      case Kind::Sqrt:
        return "sqrt";
      case Kind::Inv:
        return "inv";
      case Kind::Exp:
        return "exp";
      case Kind::Log:
        return "log";
    }
    return "?";
  }
};

}  // namespace tpd
