#pragma once

#include "tpd/spectral.hpp"
#include "tpd/tensor.hpp"

namespace tpd {

enum class MeanPath { DenseOracle, FourierBlocks };

const char* to_string(MeanPath p);

/// Result of a geometric mean computation, carrying its own verification:
/// the Riccati residual ||x * a^{-1} * x - b|| / max(1, ||b||) and a
/// positive-definiteness certificate of the mean. Both are checked on
/// construction; a residual above kRiccatiBound or a non-PD mean raises
/// ConsistencyError.
struct MeanResult {
  Tensor3 mean;
  MeanPath path_used = MeanPath::FourierBlocks;
  double riccati_residual = 0.0;
  TpdCertificate certificate;
};

// Geometric mean a # b = a^{1/2} * (a^{-1/2} * b * a^{-1/2})^{1/2} * a^{1/2}.
// FourierBlocks evaluates the matrix mean per Fourier block; DenseOracle
// applies the matrix formula to bcirc(a), bcirc(b) and folds back. The dense
// path is subject to the oracle size cap unless allow_large_dense is set.
MeanResult geometric_mean(const Tensor3& a, const Tensor3& b,
                          MeanPath path = MeanPath::FourierBlocks,
                          bool allow_large_dense = false);

// Geodesic point gamma(t) = a^{1/2} * (a^{-1/2} * b * a^{-1/2})^t * a^{1/2},
// per Fourier block. Accepts any real t; range restriction to [0,1] is a
// caller-level concern.
Tensor3 weighted_geometric_mean(const Tensor3& a, const Tensor3& b, double t);

// ||x * a^{-1} * x - b|| / max(1, ||b||).
double riccati_residual(const Tensor3& x, const Tensor3& a, const Tensor3& b);

// Congruence transform c^H * a * c. Throws SingularTensor when c is not
// invertible.
Tensor3 congruence(const Tensor3& c, const Tensor3& a);

enum class Ordering { StrictlyLess, LessOrEqual, Incomparable };

const char* to_string(Ordering o);

// T-Loewner comparison of T-Hermitian tensors: classifies b - a as positive
// definite (StrictlyLess), positive semi-definite (LessOrEqual) or neither.
Ordering lowner_compare(const Tensor3& a, const Tensor3& b, double tol = kDefaultTol);

}  // namespace tpd
