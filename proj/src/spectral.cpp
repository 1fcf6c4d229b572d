#include "tpd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "block_detail.hpp"

namespace tpd {

namespace {

void require_frontal_square(const Tensor3& a, const char* op) {
  if (!a.is_frontal_square()) {
    throw NotFrontalSquare(std::string(op) + ": slices are " + std::to_string(a.rows()) + "x" +
                           std::to_string(a.cols()));
  }
}

// Powers omega^0 .. omega^{p-1} of omega = e^{2 pi i / p}.
std::vector<Complex> root_table(Index p) {
  std::vector<Complex> roots(static_cast<size_t>(p));
  for (Index j = 0; j < p; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(p);
    roots[static_cast<size_t>(j)] = Complex(std::cos(theta), std::sin(theta));
  }
  return roots;
}

// After assembling a function of real data the result is provably real;
// anything beyond rounding noise in the imaginary part is a defect.
Tensor3 recover_real(Tensor3 t, const char* op) {
  const double residue = t.max_abs_imag();
  if (residue > kRealRecoveryTol * (1.0 + frobenius_norm(t))) {
    throw ConsistencyError(std::string(op) + ": result of real inputs has imaginary residue " +
                           std::to_string(residue));
  }
  t.clear_imag();
  return t;
}

double apply_scalar(ScalarFn f, double lambda) {
  switch (f.kind) {
    case ScalarFn::Kind::Power:
      return std::pow(lambda, f.exponent);
    case ScalarFn::Kind::Sqrt:
      return std::sqrt(lambda);
    case ScalarFn::Kind::Inv:
      return 1.0 / lambda;
    case ScalarFn::Kind::Exp:
      return std::exp(lambda);
    case ScalarFn::Kind::Log:
      return std::log(lambda);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

const char* to_string(TpdVerdict v) {
  switch (v) {
    case TpdVerdict::PositiveDefinite:
      return "PositiveDefinite";
    case TpdVerdict::PositiveSemiDefinite:
      return "PositiveSemiDefinite";
    case TpdVerdict::Indefinite:
      return "Indefinite";
    case TpdVerdict::NotHermitian:
      return "NotHermitian";
  }
  return "?";
}

BlockSpectrum to_spectrum(const Tensor3& a) {
  require_frontal_square(a, "to_spectrum");
  const Index n = a.cols(), p = a.num_slices();
  const std::vector<Complex> omega = root_table(p);
  BlockSpectrum s{n, p, {}};
  s.blocks.reserve(static_cast<size_t>(p));
  // A_i = sum_k omega^{(i-1)(k-1)} A^{(k)}; the direct sum is normative.
  for (Index i = 0; i < p; ++i) {
    Matrix block = Matrix::Zero(n, n);
    for (Index k = 0; k < p; ++k) {
      block += omega[static_cast<size_t>((i * k) % p)] * a.slice(k);
    }
    s.blocks.push_back(std::move(block));
  }
  return s;
}

Tensor3 from_spectrum(const BlockSpectrum& s) {
  const Index n = s.n, p = s.p;
  if (p <= 0 || static_cast<Index>(s.blocks.size()) != p) {
    throw DimensionMismatch("from_spectrum: expected p=" + std::to_string(p) + " blocks, got " +
                            std::to_string(s.blocks.size()));
  }
  for (size_t i = 0; i < s.blocks.size(); ++i) {
    if (s.blocks[i].rows() != n || s.blocks[i].cols() != n) {
      throw DimensionMismatch("from_spectrum: block " + std::to_string(i + 1) + " is " +
                              std::to_string(s.blocks[i].rows()) + "x" +
                              std::to_string(s.blocks[i].cols()) + ", expected " +
                              std::to_string(n) + "x" + std::to_string(n));
    }
  }
  const std::vector<Complex> omega = root_table(p);
  const double inv_p = 1.0 / static_cast<double>(p);
  Tensor3 t(n, n, p);
  for (Index k = 0; k < p; ++k) {
    Matrix& slice = t.slice(k);
    for (Index i = 0; i < p; ++i) {
      slice += std::conj(omega[static_cast<size_t>((i * k) % p)]) * s.blocks[i];
    }
    slice *= inv_p;
  }
  if (!t.all_finite()) {
    throw ConsistencyError("from_spectrum: non-finite entries in result");
  }
  return t;
}

std::vector<Complex> t_eigenvalues(const Tensor3& a) {
  require_frontal_square(a, "t_eigenvalues");
  const BlockSpectrum s = to_spectrum(a);
  std::vector<Complex> values;
  values.reserve(static_cast<size_t>(s.n * s.p));
  for (const Matrix& block : s.blocks) {
    Eigen::ComplexEigenSolver<Matrix> solver(block, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
      throw ConsistencyError("t_eigenvalues: eigensolver failed to converge");
    }
    for (Index j = 0; j < s.n; ++j) {
      values.push_back(solver.eigenvalues()(j));
    }
  }
  return values;
}

Complex t_trace(const Tensor3& a) {
  require_frontal_square(a, "t_trace");
  return static_cast<double>(a.num_slices()) * a.slice(0).trace();
}

TpdCertificate check_tpd(const Tensor3& a, double tol) {
  require_frontal_square(a, "check_tpd");
  TpdCertificate cert;
  cert.tol_used = tol;
  cert.hermitian_residual =
      frobenius_norm(a - t_conj_transpose(a)) / std::max(1.0, frobenius_norm(a));

  const BlockSpectrum s = to_spectrum(a);
  cert.per_block_min.reserve(static_cast<size_t>(s.p));
  double lambda_min = std::numeric_limits<double>::infinity();
  double lambda_max = -std::numeric_limits<double>::infinity();
  for (const Matrix& block : s.blocks) {
    const detail::EigH eig = detail::eig_hermitian(0.5 * (block + block.adjoint()));
    const double block_min = eig.evals.minCoeff();
    cert.per_block_min.push_back(block_min);
    lambda_min = std::min(lambda_min, block_min);
    lambda_max = std::max(lambda_max, eig.evals.maxCoeff());
  }
  cert.lambda_min = lambda_min;
  cert.lambda_max = lambda_max;

  if (cert.hermitian_residual > tol) {
    cert.verdict = TpdVerdict::NotHermitian;
  } else if (lambda_min > tol * std::max(1.0, lambda_max)) {
    cert.verdict = TpdVerdict::PositiveDefinite;
  } else if (lambda_min >= -tol * std::max(1.0, std::abs(lambda_max))) {
    cert.verdict = TpdVerdict::PositiveSemiDefinite;
  } else {
    cert.verdict = TpdVerdict::Indefinite;
  }
  return cert;
}

Tensor3 t_inverse(const Tensor3& a) {
  require_frontal_square(a, "t_inverse");
  BlockSpectrum s = to_spectrum(a);
  const bool real_input = a.is_real();
  for (size_t i = 0; i < s.blocks.size(); ++i) {
    Eigen::PartialPivLU<Matrix> lu(s.blocks[i]);
    const Matrix inv = lu.solve(Matrix::Identity(s.n, s.n));
    const double gap = (s.blocks[i] * inv - Matrix::Identity(s.n, s.n)).norm();
    if (!inv.allFinite() || gap > 1e-8 * std::sqrt(static_cast<double>(s.n))) {
      throw SingularTensor("t_inverse: Fourier block " + std::to_string(i + 1) +
                           " is numerically singular");
    }
    s.blocks[i] = inv;
  }
  Tensor3 result = from_spectrum(s);
  return real_input ? recover_real(std::move(result), "t_inverse") : result;
}

Tensor3 spectral_map(const Tensor3& a, ScalarFn f, double tol) {
  require_frontal_square(a, "spectral_map");
  const bool real_input = a.is_real();
  BlockSpectrum s = to_spectrum(a);

  std::vector<detail::EigH> eigs;
  eigs.reserve(s.blocks.size());
  double lambda_min = std::numeric_limits<double>::infinity();
  double lambda_max = -std::numeric_limits<double>::infinity();
  for (const Matrix& block : s.blocks) {
    eigs.push_back(detail::eig_hermitian(detail::hermitize_checked(block, tol, "spectral_map")));
    lambda_min = std::min(lambda_min, eigs.back().evals.minCoeff());
    lambda_max = std::max(lambda_max, eigs.back().evals.maxCoeff());
  }

  // Domain gate; eigenvalues are never clamped.
  if (f.requires_pd() && !(lambda_min > tol * std::max(1.0, lambda_max))) {
    throw NotTPD("a", std::string("spectral_map(") + f.name() + ") needs eigenvalues above " +
                          std::to_string(tol) + " * scale, found lambda_min=" +
                          std::to_string(lambda_min));
  }

  for (size_t i = 0; i < s.blocks.size(); ++i) {
    Eigen::VectorXd mapped(eigs[i].evals.size());
    for (Index j = 0; j < mapped.size(); ++j) {
      mapped(j) = apply_scalar(f, eigs[i].evals(j));
    }
    s.blocks[i] = detail::assemble(eigs[i], mapped);
  }
  Tensor3 result = from_spectrum(s);
  return real_input ? recover_real(std::move(result), "spectral_map") : result;
}

}  // namespace tpd
