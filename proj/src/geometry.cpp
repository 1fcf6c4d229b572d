#include "tpd/geometry.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "block_detail.hpp"

namespace tpd {

namespace {

void certify_tpd_arg(const Tensor3& t, const char* which) {
  const TpdCertificate cert = check_tpd(t);
  if (!cert.positive_definite()) {
    throw NotTPD(which, std::string("verdict ") + to_string(cert.verdict));
  }
}

void require_hermitian_arg(const Tensor3& t, const char* which) {
  if (!is_t_hermitian(t)) {
    throw NotTHermitian(std::string(which) + " is not T-Hermitian");
  }
}

// ||t||^2 = (1/p) * sum_i ||block_i||_F^2 (Parseval), evaluated without
// assembling the tensor.
double tensor_norm_from_blocks(const BlockSpectrum& s) {
  double acc = 0.0;
  for (const Matrix& block : s.blocks) {
    acc += block.squaredNorm();
  }
  return std::sqrt(acc / static_cast<double>(s.p));
}

// Abscissas/weights of 4-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 2> kGl4Nodes = {0.3399810435848563, 0.8611363115940526};
constexpr std::array<double, 2> kGl4Weights = {0.6521451548625461, 0.3478548451374538};

}  // namespace

MetricValue metric(const Tensor3& base, const Tensor3& x, const Tensor3& y) {
  if (!base.same_dims(x) || !base.same_dims(y)) {
    throw DimensionMismatch("metric: base, x, y must share dimensions");
  }
  certify_tpd_arg(base, "base");
  require_hermitian_arg(x, "x");
  require_hermitian_arg(y, "y");

  const BlockSpectrum sp = to_spectrum(base);
  const BlockSpectrum sx = to_spectrum(x);
  const BlockSpectrum sy = to_spectrum(y);
  Complex trace(0.0, 0.0);
  for (size_t i = 0; i < sp.blocks.size(); ++i) {
    const Eigen::LLT<Matrix> llt(0.5 * (sp.blocks[i] + sp.blocks[i].adjoint()));
    const Matrix px = llt.solve(sx.blocks[i]);
    const Matrix py = llt.solve(sy.blocks[i]);
    trace += (px * py).trace();
  }
  const double scale = 1.0 + std::abs(trace);
  if (std::abs(trace.imag()) > kDefaultTol * scale) {
    throw ConsistencyError("metric: trace has imaginary residue " +
                           std::to_string(trace.imag()));
  }
  return MetricValue{base, x, y, trace.real()};
}

double distance(const Tensor3& a, const Tensor3& b) {
  if (!a.same_dims(b)) {
    throw DimensionMismatch("distance: dimensions differ");
  }
  certify_tpd_arg(a, "a");
  certify_tpd_arg(b, "b");

  const BlockSpectrum sa = to_spectrum(a);
  const BlockSpectrum sb = to_spectrum(b);
  // delta^2 = sum_i sum_j log^2 lambda_j(A_i^{-1/2} B_i A_i^{-1/2}); equal to
  // sqrt(p) * ||log(a^{-1/2} * b * a^{-1/2})|| by Parseval.
  double delta_sq = 0.0;
  for (size_t i = 0; i < sa.blocks.size(); ++i) {
    const detail::EigH ea =
        detail::eig_hermitian(0.5 * (sa.blocks[i] + sa.blocks[i].adjoint()));
    const Matrix inv_sqrt_a = detail::hermitian_inv_sqrt(ea);
    Matrix core = inv_sqrt_a * sb.blocks[i] * inv_sqrt_a;
    core = 0.5 * (core + core.adjoint());
    const detail::EigH ec = detail::eig_hermitian(core);
    for (Index j = 0; j < ec.evals.size(); ++j) {
      if (ec.evals(j) <= 0.0) {
        throw ConsistencyError("distance: nonpositive eigenvalue after PD certification");
      }
      const double l = std::log(ec.evals(j));
      delta_sq += l * l;
    }
  }
  return std::sqrt(delta_sq);
}

std::vector<GeodesicSample> geodesic(const Tensor3& a, const Tensor3& b,
                                     const std::vector<double>& ts) {
  for (double t : ts) {
    if (!(t >= 0.0 && t <= 1.0)) {
      throw ParameterOutOfRange("geodesic: t=" + std::to_string(t) + " outside [0, 1]");
    }
  }
  std::vector<GeodesicSample> samples;
  samples.reserve(ts.size());
  for (double t : ts) {
    samples.push_back(GeodesicSample{t, weighted_geometric_mean(a, b, t)});
  }
  return samples;
}

double path_length(const std::function<Tensor3(double)>& path, double t0, double t1,
                   int quad_points) {
  if (quad_points < 2) {
    throw ParameterOutOfRange("path_length: quad_points must be >= 2, got " +
                              std::to_string(quad_points));
  }
  if (!(t1 > t0)) {
    throw ParameterOutOfRange("path_length: need t1 > t0");
  }
  const int subintervals = (quad_points + 3) / 4;
  const double range = t1 - t0;
  const double fd_step = 1e-5 * range;

  const auto integrand = [&](double t) {
    const Tensor3 gamma = path(t);
    certify_tpd_arg(gamma, "path(t)");
    const Tensor3 derivative =
        (1.0 / (2.0 * fd_step)) * (path(t + fd_step) - path(t - fd_step));
    const BlockSpectrum sg = to_spectrum(gamma);
    const BlockSpectrum sd = to_spectrum(derivative);
    BlockSpectrum pulled{sg.n, sg.p, {}};
    pulled.blocks.reserve(sg.blocks.size());
    for (size_t i = 0; i < sg.blocks.size(); ++i) {
      const detail::EigH eg =
          detail::eig_hermitian(0.5 * (sg.blocks[i] + sg.blocks[i].adjoint()));
      const Matrix inv_sqrt = detail::hermitian_inv_sqrt(eg);
      pulled.blocks.push_back(inv_sqrt * sd.blocks[i] * inv_sqrt);
    }
    // sqrt(p) * ||gamma^{-1/2} gamma' gamma^{-1/2}|| via Parseval.
    return std::sqrt(static_cast<double>(sg.p)) * tensor_norm_from_blocks(pulled);
  };

  double length = 0.0;
  const double h = range / subintervals;
  for (int s = 0; s < subintervals; ++s) {
    const double mid = t0 + (s + 0.5) * h;
    for (size_t q = 0; q < kGl4Nodes.size(); ++q) {
      const double offset = 0.5 * h * kGl4Nodes[q];
      length += 0.5 * h * kGl4Weights[q] * (integrand(mid - offset) + integrand(mid + offset));
    }
  }
  return length;
}

std::pair<double, double> iemi_check(const Tensor3& h, const Tensor3& k, double fd_step) {
  if (!h.same_dims(k)) {
    throw DimensionMismatch("iemi_check: dimensions differ");
  }
  require_hermitian_arg(h, "h");
  require_hermitian_arg(k, "k");
  if (!(fd_step > 0.0)) {
    throw ParameterOutOfRange("iemi_check: fd_step must be positive");
  }
  const Tensor3 derivative =
      (1.0 / (2.0 * fd_step)) * (t_exp(h + fd_step * k) - t_exp(h - fd_step * k));
  // (e^h)^{-1/2} = e^{-h/2}.
  const Tensor3 inv_sqrt_exp = t_exp(-0.5 * h);
  const double lhs = frobenius_norm(t_product(t_product(inv_sqrt_exp, derivative), inv_sqrt_exp));
  return {lhs, frobenius_norm(k)};
}

std::pair<double, double> iemi_check(const Tensor3& h, const Tensor3& k) {
  return iemi_check(h, k, 1e-5 * std::max(1.0, frobenius_norm(k)));
}

std::pair<double, double> lower_bound_check(const Tensor3& a, const Tensor3& b) {
  const double delta = distance(a, b);
  const double bound = std::sqrt(static_cast<double>(a.num_slices())) *
                       frobenius_norm(t_log(a) - t_log(b));
  return {delta, bound};
}

}  // namespace tpd
