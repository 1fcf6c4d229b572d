#pragma once

// Internal per-Fourier-block primitives shared by the spectral, means and
// geometry translation units. Not part of the public API.

#include <string>

#include "tpd/errors.hpp"
#include "tpd/types.hpp"

namespace tpd::detail {

struct EigH {
  Eigen::VectorXd evals;  // ascending
  Matrix evecs;           // unitary
};

// Symmetrizes a block whose Hermitian residual is within tol of its norm;
// throws NotTHermitian otherwise.
inline Matrix hermitize_checked(const Matrix& block, double tol, const char* context) {
  const double residual = (block - block.adjoint()).norm();
  if (residual > tol * std::max(1.0, block.norm())) {
    throw NotTHermitian(std::string(context) + ": Fourier block has Hermitian residual " +
                        std::to_string(residual));
  }
  return 0.5 * (block + block.adjoint());
}

inline EigH eig_hermitian(const Matrix& block) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(block);
  if (solver.info() != Eigen::Success) {
    throw ConsistencyError("Hermitian eigendecomposition failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

inline Matrix assemble(const EigH& eig, const Eigen::VectorXd& mapped) {
  return eig.evecs * mapped.cast<Complex>().asDiagonal() * eig.evecs.adjoint();
}

inline Matrix hermitian_sqrt(const EigH& eig) {
  return assemble(eig, eig.evals.array().sqrt().matrix());
}

inline Matrix hermitian_inv_sqrt(const EigH& eig) {
  return assemble(eig, eig.evals.array().rsqrt().matrix());
}

inline Matrix hermitian_pow(const EigH& eig, double t) {
  return assemble(eig, eig.evals.array().pow(t).matrix());
}

}  // namespace tpd::detail
