#include "tpd/means.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "block_detail.hpp"
#include "tpd/oracle.hpp"

namespace tpd {

namespace {

TpdCertificate certify_tpd(const Tensor3& t, const char* which) {
  const TpdCertificate cert = check_tpd(t);
  if (!cert.positive_definite()) {
    throw NotTPD(which, std::string("verdict ") + to_string(cert.verdict) +
                            ", lambda_min=" + std::to_string(cert.lambda_min));
  }
  return cert;
}

void require_mean_dims(const Tensor3& a, const Tensor3& b) {
  if (!a.is_frontal_square() || !b.is_frontal_square() || !a.same_dims(b)) {
    throw DimensionMismatch("geometric mean: inputs must be frontal-square with equal dimensions");
  }
}

// A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2} for Hermitian PD blocks.
Matrix block_weighted_mean(const Matrix& a, const Matrix& b, double t) {
  const detail::EigH ea = detail::eig_hermitian(0.5 * (a + a.adjoint()));
  const Matrix sqrt_a = detail::hermitian_sqrt(ea);
  const Matrix inv_sqrt_a = detail::hermitian_inv_sqrt(ea);
  Matrix core = inv_sqrt_a * b * inv_sqrt_a;
  core = 0.5 * (core + core.adjoint());
  const Matrix powered = detail::hermitian_pow(detail::eig_hermitian(core), t);
  Matrix mean = sqrt_a * powered * sqrt_a;
  return 0.5 * (mean + mean.adjoint());
}

Tensor3 fourier_weighted_mean(const Tensor3& a, const Tensor3& b, double t) {
  const BlockSpectrum sa = to_spectrum(a);
  const BlockSpectrum sb = to_spectrum(b);
  BlockSpectrum out{sa.n, sa.p, {}};
  out.blocks.reserve(sa.blocks.size());
  for (size_t i = 0; i < sa.blocks.size(); ++i) {
    out.blocks.push_back(block_weighted_mean(sa.blocks[i], sb.blocks[i], t));
  }
  Tensor3 mean = from_spectrum(out);
  if (a.is_real() && b.is_real()) {
    const double residue = mean.max_abs_imag();
    if (residue > kRealRecoveryTol * (1.0 + frobenius_norm(mean))) {
      throw ConsistencyError("weighted mean of real tensors has imaginary residue " +
                             std::to_string(residue));
    }
    mean.clear_imag();
  }
  return mean;
}

}  // namespace

const char* to_string(MeanPath p) {
  return p == MeanPath::DenseOracle ? "DenseOracle" : "FourierBlocks";
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::StrictlyLess:
      return "StrictlyLess";
    case Ordering::LessOrEqual:
      return "LessOrEqual";
    case Ordering::Incomparable:
      return "Incomparable";
  }
  return "?";
}

MeanResult geometric_mean(const Tensor3& a, const Tensor3& b, MeanPath path,
                          bool allow_large_dense) {
  require_mean_dims(a, b);
  certify_tpd(a, "a");
  certify_tpd(b, "b");

  Tensor3 mean = [&] {
    if (path == MeanPath::FourierBlocks) {
      return fourier_weighted_mean(a, b, 0.5);
    }
    Tensor3 folded = bcirc_inverse(dense_gmean(bcirc(a), bcirc(b), allow_large_dense));
    if (a.is_real() && b.is_real()) {
      const double residue = folded.max_abs_imag();
      if (residue > kRealRecoveryTol * (1.0 + frobenius_norm(folded))) {
        throw ConsistencyError("dense mean of real tensors has imaginary residue " +
                               std::to_string(residue));
      }
      folded.clear_imag();
    }
    return folded;
  }();

  MeanResult result;
  result.path_used = path;
  result.riccati_residual = riccati_residual(mean, a, b);
  result.certificate = check_tpd(mean);
  result.mean = std::move(mean);
  if (result.riccati_residual > kRiccatiBound) {
    throw ConsistencyError("geometric mean failed the Riccati identity: residual " +
                           std::to_string(result.riccati_residual));
  }
  if (!result.certificate.positive_definite()) {
    throw ConsistencyError(std::string("geometric mean is not T-PD: verdict ") +
                           to_string(result.certificate.verdict));
  }
  return result;
}

Tensor3 weighted_geometric_mean(const Tensor3& a, const Tensor3& b, double t) {
  require_mean_dims(a, b);
  certify_tpd(a, "a");
  certify_tpd(b, "b");
  return fourier_weighted_mean(a, b, t);
}

double riccati_residual(const Tensor3& x, const Tensor3& a, const Tensor3& b) {
  if (!x.is_frontal_square() || !b.is_frontal_square() || !x.same_dims(b) || !x.same_dims(a)) {
    throw DimensionMismatch("riccati_residual: x, a, b must share frontal-square dimensions");
  }
  certify_tpd(a, "a");
  const Tensor3 a_inv = t_inv(a);
  const Tensor3 lhs = t_product(t_product(x, a_inv), x);
  return frobenius_norm(lhs - b) / std::max(1.0, frobenius_norm(b));
}

Tensor3 congruence(const Tensor3& c, const Tensor3& a) {
  if (!c.is_frontal_square() || !a.is_frontal_square() || !c.same_dims(a)) {
    throw DimensionMismatch("congruence: c and a must share frontal-square dimensions");
  }
  const BlockSpectrum sc = to_spectrum(c);
  for (size_t i = 0; i < sc.blocks.size(); ++i) {
    Eigen::JacobiSVD<Matrix> svd(sc.blocks[i]);
    const double sigma_max = svd.singularValues().maxCoeff();
    const double sigma_min = svd.singularValues().minCoeff();
    if (sigma_min <= 1e-12 * std::max(1.0, sigma_max)) {
      throw SingularTensor("congruence: Fourier block " + std::to_string(i + 1) +
                           " of c is singular (sigma_min=" + std::to_string(sigma_min) + ")");
    }
  }
  return t_product(t_product(t_conj_transpose(c), a), c);
}

Ordering lowner_compare(const Tensor3& a, const Tensor3& b, double tol) {
  if (!a.same_dims(b)) {
    throw DimensionMismatch("lowner_compare: dimensions differ");
  }
  if (!is_t_hermitian(a, tol)) {
    throw NotTHermitian("lowner_compare: 'a' is not T-Hermitian");
  }
  if (!is_t_hermitian(b, tol)) {
    throw NotTHermitian("lowner_compare: 'b' is not T-Hermitian");
  }
  const TpdCertificate cert = check_tpd(b - a, tol);
  switch (cert.verdict) {
    case TpdVerdict::PositiveDefinite:
      return Ordering::StrictlyLess;
    case TpdVerdict::PositiveSemiDefinite:
      return Ordering::LessOrEqual;
    case TpdVerdict::Indefinite:
      return Ordering::Incomparable;
    case TpdVerdict::NotHermitian:
      throw NotTHermitian("lowner_compare: difference is not T-Hermitian");
  }
  return Ordering::Incomparable;
}

}  // namespace tpd
