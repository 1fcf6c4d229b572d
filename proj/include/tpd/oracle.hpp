#pragma once

#include "tpd/tensor.hpp"

namespace tpd {

// The oracle exists to be slow and obviously correct: it evaluates every
// formula on the explicit (np) x (np) block circulant matrix with its own
// eigensolver calls, sharing no intermediates with the per-block path.
// Agreement between the two routes is evidence, not tautology.

// Dense operations refuse matrices larger than this unless allow_large is
// set (the bench harness's --force-dense flag).
inline constexpr Index kOracleSizeCap = 512;

// Matrix geometric mean a^{1/2} (a^{-1/2} b a^{-1/2})^{1/2} a^{1/2} applied
// to the full block circulant matrices. Both inputs must be Hermitian PD.
DenseCirc dense_gmean(const DenseCirc& a, const DenseCirc& b, bool allow_large = false);

// ||log(a^{-1/2} b a^{-1/2})||_F on the full matrices.
double dense_distance(const DenseCirc& a, const DenseCirc& b, bool allow_large = false);

// Hermitian matrix function through a dense eigendecomposition. Throws
// NotHermitian / NotPD when the input violates f's domain.
Matrix dense_func(const Matrix& mat, ScalarFn f, bool allow_large = false);

}  // namespace tpd
