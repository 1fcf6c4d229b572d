#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tpd/means.hpp"
#include "tpd/tensor.hpp"

namespace tpd {

/// Value of the trace metric g_p(x, y) = tr(p^{-1} * x * p^{-1} * y) at a
/// base point, together with the arguments it was evaluated at.
struct MetricValue {
  Tensor3 base, x, y;
  double value = 0.0;
};

struct GeodesicSample {
  double t = 0.0;
  Tensor3 point;
  std::string a_ref = "a", b_ref = "b";
};

// Riemannian metric on the T-PD cone. Requires base T-PD and x, y
// T-Hermitian; the trace is provably real and is verified to be so.
MetricValue metric(const Tensor3& base, const Tensor3& x, const Tensor3& y);

// Riemannian distance sqrt(p) * ||log(a^{-1/2} * b * a^{-1/2})||, evaluated
// per Fourier block as sqrt(sum_i sum_j log^2 lambda_j(A_i^{-1/2} B_i
// A_i^{-1/2})).
double distance(const Tensor3& a, const Tensor3& b);

// Samples the unique geodesic from a to b at the given parameters, which
// must lie in [0, 1].
std::vector<GeodesicSample> geodesic(const Tensor3& a, const Tensor3& b,
                                     const std::vector<double>& ts);

// Length of an arbitrary T-PD-valued path by composite 4-point Gauss-Legendre
// quadrature of sqrt(p) * ||gamma^{-1/2} gamma' gamma^{-1/2}||, with gamma'
// from central differences of step 1e-5 * (t1 - t0). quad_points is the total
// node count (rounded up to a multiple of 4); it must be >= 2.
double path_length(const std::function<Tensor3(double)>& path, double t0, double t1,
                   int quad_points = 64);

// Infinitesimal exponential metric increase: returns
//   lhs = ||(e^h)^{-1/2} * De^h(k) * (e^h)^{-1/2}||,   rhs = ||k||,
// with the derivative De^h(k) approximated by the central difference of step
// fd_step. The inequality lhs >= rhs holds up to finite-difference error.
// The overload without a step uses 1e-5 * max(1, ||k||).
std::pair<double, double> iemi_check(const Tensor3& h, const Tensor3& k, double fd_step);
std::pair<double, double> iemi_check(const Tensor3& h, const Tensor3& k);

// Returns (distance(a, b), sqrt(p) * ||log a - log b||); the first dominates
// the second, with equality when a and b commute.
std::pair<double, double> lower_bound_check(const Tensor3& a, const Tensor3& b);

}  // namespace tpd
