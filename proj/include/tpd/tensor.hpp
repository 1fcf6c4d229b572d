#pragma once

#include <vector>

#include "tpd/errors.hpp"
#include "tpd/types.hpp"

namespace tpd {

/// Dense third-order complex tensor, stored as p frontal slices of m x n
/// matrices.
///
/// Storage convention (the single place it is documented): slices are kept
/// slice-major in a std::vector, each slice an Eigen column-major MatrixXcd.
/// Real-valued data is represented with zero imaginary parts.
class Tensor3 {
 public:
  Tensor3() = default;

  // Zero-initialized m x n x p tensor.
  Tensor3(Index m, Index n, Index p);

  // Takes ownership of the given slices; they must be non-empty and equally
  // sized.
  explicit Tensor3(std::vector<Matrix> slices);

  // Identity tensor: first slice I_n, remaining slices zero.
  static Tensor3 identity(Index n, Index p);
  static Tensor3 zero(Index m, Index n, Index p);

  Index rows() const { return m_; }
  Index cols() const { return n_; }
  Index num_slices() const { return static_cast<Index>(slices_.size()); }

  const Matrix& slice(Index k) const { return slices_[static_cast<size_t>(k)]; }
  Matrix& slice(Index k) { return slices_[static_cast<size_t>(k)]; }

  bool is_frontal_square() const { return m_ == n_; }
  bool same_dims(const Tensor3& other) const {
    return m_ == other.m_ && n_ == other.n_ && num_slices() == other.num_slices();
  }

  bool all_finite() const;
  // True when every imaginary part is exactly zero.
  bool is_real() const;
  double max_abs_imag() const;
  void clear_imag();

 private:
  Index m_ = 0, n_ = 0;
  std::vector<Matrix> slices_;
};

/// Explicit (mp) x (np) block circulant matrix of a tensor. Materialized only
/// by the oracle and bench paths; the per-block algorithms never build it.
struct DenseCirc {
  Index m = 0, n = 0, p = 0;
  Matrix mat;
};

// Block circulant matricization: block column j holds the cyclic downward
// rotation of the frontal slices by j positions.
DenseCirc bcirc(const Tensor3& a);

// Reads back the first block column. Throws NotCirculant if the blocks
// violate the circulant structure beyond kCirculantTol relative to the
// matrix norm.
Tensor3 bcirc_inverse(const DenseCirc& c);

// Vertical stack of the frontal slices; (mp) x n.
Matrix unfold(const Tensor3& a);

// Inverse of unfold. Throws DimensionMismatch when rows are not divisible
// by p.
Tensor3 fold(const Matrix& stacked, Index p);

// T-product: fold(bcirc(a) * unfold(b)), computed as the slice-wise cyclic
// convolution without materializing bcirc(a).
Tensor3 t_product(const Tensor3& a, const Tensor3& b);

// T-conjugate transpose: conjugate-transpose every slice, then reverse the
// order of slices 2..p. Satisfies bcirc(a^H) == bcirc(a)^H.
Tensor3 t_conj_transpose(const Tensor3& a);

Complex frobenius_inner(const Tensor3& a, const Tensor3& b);
double frobenius_norm(const Tensor3& a);

// True iff ||a - a^H|| <= tol * max(1, ||a||). Throws NotFrontalSquare.
bool is_t_hermitian(const Tensor3& a, double tol = kDefaultTol);

Tensor3 operator+(const Tensor3& a, const Tensor3& b);
Tensor3 operator-(const Tensor3& a, const Tensor3& b);
Tensor3 operator-(const Tensor3& a);
Tensor3 operator*(double s, const Tensor3& a);
Tensor3 operator*(Complex s, const Tensor3& a);
// T-product shorthand.
Tensor3 operator*(const Tensor3& a, const Tensor3& b);

// Exact entrywise equality (used for the copy-only round trips).
bool operator==(const Tensor3& a, const Tensor3& b);
inline bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

}  // namespace tpd
