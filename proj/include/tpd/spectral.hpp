#pragma once

#include <vector>

#include "tpd/tensor.hpp"

namespace tpd {

/// Fourier-domain representation of a frontal-square tensor: the p diagonal
/// blocks A_1..A_p of (F_p (x) I_n) * bcirc(a) * (F_p^H (x) I_n), where F_p is
/// the unitary DFT matrix with entries omega^{jk} / sqrt(p), omega = e^{2 pi
/// i / p}. Equivalently A_i = sum_k omega^{(i-1)(k-1)} A^{(k)}; that direct
/// sum is the normative kernel and is what to_spectrum computes.
struct BlockSpectrum {
  Index n = 0, p = 0;
  std::vector<Matrix> blocks;
};

enum class TpdVerdict { PositiveDefinite, PositiveSemiDefinite, Indefinite, NotHermitian };

const char* to_string(TpdVerdict v);

/// Record of a positive-definiteness check: per-block eigenvalue extremes and
/// the tolerances the verdict was decided with.
struct TpdCertificate {
  double lambda_min = 0.0;  // min over all blocks == min(per_block_min)
  double lambda_max = 0.0;
  std::vector<double> per_block_min;
  double hermitian_residual = 0.0;  // ||a - a^H|| / max(1, ||a||)
  double tol_used = 0.0;
  TpdVerdict verdict = TpdVerdict::NotHermitian;

  bool positive_definite() const { return verdict == TpdVerdict::PositiveDefinite; }
};

BlockSpectrum to_spectrum(const Tensor3& a);

// Inverse transform: A^{(k)} = (1/p) sum_i omega^{-(i-1)(k-1)} A_i.
Tensor3 from_spectrum(const BlockSpectrum& s);

// Multiset of the eigenvalues of bcirc(a): the union of the Fourier blocks'
// spectra, computed per block.
std::vector<Complex> t_eigenvalues(const Tensor3& a);

// trace(bcirc(a)) = p * sum of the first slice's diagonal.
Complex t_trace(const Tensor3& a);

// Classifies a as T-PD / T-PSD / indefinite / not Hermitian. Hermitizes the
// Fourier blocks once the tensor-level Hermitian residual passes tol; verdict
// PositiveDefinite requires lambda_min > tol * max(1, lambda_max).
TpdCertificate check_tpd(const Tensor3& a, double tol = kDefaultTol);

// Inverse of a general invertible frontal-square tensor (per-block LU).
// Throws SingularTensor when any Fourier block is numerically singular.
Tensor3 t_inverse(const Tensor3& a);

// Applies f through each Fourier block's Hermitian eigendecomposition and
// reassembles. Requires a T-Hermitian; f with restricted domain (sqrt, inv,
// log, non-integer or negative power) additionally require a T-PD, checked
// with the same tolerance. Eigenvalues are never clamped: out-of-domain
// spectra raise NotTPD. Real input tensors recover real output (imaginary
// residue must stay below kRealRecoveryTol and is then zeroed).
Tensor3 spectral_map(const Tensor3& a, ScalarFn f, double tol = kDefaultTol);

inline Tensor3 t_sqrt(const Tensor3& a) { return spectral_map(a, ScalarFn::sqrt()); }
inline Tensor3 t_inv(const Tensor3& a) { return spectral_map(a, ScalarFn::inv()); }
inline Tensor3 t_exp(const Tensor3& a) { return spectral_map(a, ScalarFn::exp()); }
inline Tensor3 t_log(const Tensor3& a) { return spectral_map(a, ScalarFn::log()); }
inline Tensor3 t_power(const Tensor3& a, double r) {
  return spectral_map(a, ScalarFn::power(r));
}

}  // namespace tpd
