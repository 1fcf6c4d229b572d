#include "tpd/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace tpd {

namespace {

void require_within_cap(Index size, bool allow_large, const char* op) {
  if (!allow_large && size > kOracleSizeCap) {
    throw ParameterOutOfRange(std::string(op) + ": matrix size " + std::to_string(size) +
                              " exceeds the oracle cap " + std::to_string(kOracleSizeCap) +
                              " (pass allow_large to override)");
  }
}

double oracle_scalar(ScalarFn f, double lambda) {
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

Matrix hermitian_checked(const Matrix& mat, const char* op) {
  if (mat.rows() != mat.cols()) {
    throw DimensionMismatch(std::string(op) + ": matrix must be square");
  }
  const double residual = (mat - mat.adjoint()).norm();
  if (residual > 1e-10 * std::max(1.0, mat.norm())) {
    throw NotHermitian(std::string(op) + ": Hermitian residual " + std::to_string(residual));
  }
  return 0.5 * (mat + mat.adjoint());
}

struct DenseEig {
  Eigen::VectorXd evals;
  Matrix evecs;
};

DenseEig dense_eig(const Matrix& hermitian, const char* op) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian);
  if (solver.info() != Eigen::Success) {
    throw ConsistencyError(std::string(op) + ": dense eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

void require_pd(const DenseEig& eig, const char* op) {
  const double lambda_min = eig.evals.minCoeff();
  const double lambda_max = eig.evals.maxCoeff();
  if (!(lambda_min > 1e-10 * std::max(1.0, lambda_max))) {
    throw NotPD(std::string(op) + ": lambda_min=" + std::to_string(lambda_min));
  }
}

Matrix map_eig(const DenseEig& eig, ScalarFn f) {
  Eigen::VectorXd mapped(eig.evals.size());
  for (Index j = 0; j < mapped.size(); ++j) {
    mapped(j) = oracle_scalar(f, eig.evals(j));
  }
  return eig.evecs * mapped.cast<Complex>().asDiagonal() * eig.evecs.adjoint();
}

}  // namespace

DenseCirc dense_gmean(const DenseCirc& a, const DenseCirc& b, bool allow_large) {
  if (a.mat.rows() != b.mat.rows() || a.mat.cols() != b.mat.cols() || a.n != b.n || a.p != b.p) {
    throw DimensionMismatch("dense_gmean: dimensions differ");
  }
  require_within_cap(a.mat.rows(), allow_large, "dense_gmean");

  const DenseEig ea = dense_eig(hermitian_checked(a.mat, "dense_gmean(a)"), "dense_gmean(a)");
  require_pd(ea, "dense_gmean(a)");
  const Matrix sqrt_a = map_eig(ea, ScalarFn::sqrt());
  const Matrix inv_sqrt_a = map_eig(ea, ScalarFn::power(-0.5));

  Matrix core = inv_sqrt_a * hermitian_checked(b.mat, "dense_gmean(b)") * inv_sqrt_a;
  core = 0.5 * (core + core.adjoint());
  const DenseEig ec = dense_eig(core, "dense_gmean");
  require_pd(ec, "dense_gmean(b)");

  Matrix mean = sqrt_a * map_eig(ec, ScalarFn::sqrt()) * sqrt_a;
  mean = 0.5 * (mean + mean.adjoint());
  if (!mean.allFinite()) {
    throw ConsistencyError("dense_gmean: non-finite entries in result");
  }
  return DenseCirc{a.m, a.n, a.p, std::move(mean)};
}

double dense_distance(const DenseCirc& a, const DenseCirc& b, bool allow_large) {
  if (a.mat.rows() != b.mat.rows() || a.mat.cols() != b.mat.cols()) {
    throw DimensionMismatch("dense_distance: dimensions differ");
  }
  require_within_cap(a.mat.rows(), allow_large, "dense_distance");

  const DenseEig ea =
      dense_eig(hermitian_checked(a.mat, "dense_distance(a)"), "dense_distance(a)");
  require_pd(ea, "dense_distance(a)");
  const Matrix inv_sqrt_a = map_eig(ea, ScalarFn::power(-0.5));

  Matrix core = inv_sqrt_a * hermitian_checked(b.mat, "dense_distance(b)") * inv_sqrt_a;
  core = 0.5 * (core + core.adjoint());
  const DenseEig ec = dense_eig(core, "dense_distance");
  require_pd(ec, "dense_distance(b)");
  return map_eig(ec, ScalarFn::log()).norm();
}

Matrix dense_func(const Matrix& mat, ScalarFn f, bool allow_large) {
  require_within_cap(mat.rows(), allow_large, "dense_func");
  const DenseEig eig = dense_eig(hermitian_checked(mat, "dense_func"), "dense_func");
  if (f.requires_pd()) {
    require_pd(eig, "dense_func");
  }
  Matrix result = map_eig(eig, f);
  if (!result.allFinite()) {
    throw ConsistencyError("dense_func: non-finite entries in result");
  }
  return result;
}

}  // namespace tpd
