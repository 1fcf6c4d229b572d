#include "tpd/tensor.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace tpd {

namespace {

void require_same_dims(const Tensor3& a, const Tensor3& b, const char* op) {
  if (!a.same_dims(b)) {
    throw DimensionMismatch(std::string(op) + ": got " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + "x" + std::to_string(a.num_slices()) +
                            " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                            "x" + std::to_string(b.num_slices()));
  }
}

}  // namespace

Tensor3::Tensor3(Index m, Index n, Index p) : m_(m), n_(n) {
  if (m <= 0 || n <= 0 || p <= 0) {
    throw DimensionMismatch("Tensor3: dimensions must be positive");
  }
  slices_.assign(static_cast<size_t>(p), Matrix::Zero(m, n));
}

Tensor3::Tensor3(std::vector<Matrix> slices) : slices_(std::move(slices)) {
  if (slices_.empty()) {
    throw DimensionMismatch("Tensor3: at least one frontal slice required");
  }
  m_ = slices_.front().rows();
  n_ = slices_.front().cols();
  if (m_ <= 0 || n_ <= 0) {
    throw DimensionMismatch("Tensor3: slices must be non-empty");
  }
  for (size_t k = 0; k < slices_.size(); ++k) {
    if (slices_[k].rows() != m_ || slices_[k].cols() != n_) {
      throw DimensionMismatch("Tensor3: slice " + std::to_string(k + 1) + " is " +
                              std::to_string(slices_[k].rows()) + "x" +
                              std::to_string(slices_[k].cols()) + ", expected " +
                              std::to_string(m_) + "x" + std::to_string(n_));
    }
  }
}

Tensor3 Tensor3::identity(Index n, Index p) {
  Tensor3 t(n, n, p);
  t.slice(0) = Matrix::Identity(n, n);
  return t;
}

Tensor3 Tensor3::zero(Index m, Index n, Index p) { return Tensor3(m, n, p); }

bool Tensor3::all_finite() const {
  for (const Matrix& s : slices_) {
    if (!s.allFinite()) return false;
  }
  return true;
}

bool Tensor3::is_real() const {
  for (const Matrix& s : slices_) {
    if ((s.imag().array() != 0.0).any()) return false;
  }
  return true;
}

double Tensor3::max_abs_imag() const {
  double m = 0.0;
  for (const Matrix& s : slices_) {
    m = std::max(m, s.imag().cwiseAbs().maxCoeff());
  }
  return m;
}

void Tensor3::clear_imag() {
  for (Matrix& s : slices_) {
    s.imag().setZero();
  }
}

DenseCirc bcirc(const Tensor3& a) {
  const Index m = a.rows(), n = a.cols(), p = a.num_slices();
  DenseCirc c{m, n, p, Matrix(m * p, n * p)};
  for (Index j = 0; j < p; ++j) {
    for (Index i = 0; i < p; ++i) {
      c.mat.block(i * m, j * n, m, n) = a.slice((i - j + p) % p);
    }
  }
  return c;
}

Tensor3 bcirc_inverse(const DenseCirc& c) {
  const Index m = c.m, n = c.n, p = c.p;
  if (m <= 0 || n <= 0 || p <= 0 || c.mat.rows() != m * p || c.mat.cols() != n * p) {
    throw DimensionMismatch("bcirc_inverse: matrix is " + std::to_string(c.mat.rows()) + "x" +
                            std::to_string(c.mat.cols()) + ", expected " + std::to_string(m * p) +
                            "x" + std::to_string(n * p));
  }
  // Circulant structure: block (i, j) must equal block (i+1, j+1) mod p.
  double violation_sq = 0.0;
  for (Index j = 0; j < p; ++j) {
    for (Index i = 0; i < p; ++i) {
      const Index in = (i + 1) % p, jn = (j + 1) % p;
      violation_sq +=
          (c.mat.block(i * m, j * n, m, n) - c.mat.block(in * m, jn * n, m, n)).squaredNorm();
    }
  }
  const double scale = std::max(1.0, c.mat.norm());
  if (std::sqrt(violation_sq) > kCirculantTol * scale) {
    throw NotCirculant("bcirc_inverse: blocks deviate from circulant structure by " +
                       std::to_string(std::sqrt(violation_sq)) + " (relative tolerance " +
                       std::to_string(kCirculantTol) + ")");
  }
  std::vector<Matrix> slices;
  slices.reserve(static_cast<size_t>(p));
  for (Index i = 0; i < p; ++i) {
    slices.push_back(c.mat.block(i * m, 0, m, n));
  }
  return Tensor3(std::move(slices));
}

Matrix unfold(const Tensor3& a) {
  const Index m = a.rows(), n = a.cols(), p = a.num_slices();
  Matrix stacked(m * p, n);
  for (Index k = 0; k < p; ++k) {
    stacked.block(k * m, 0, m, n) = a.slice(k);
  }
  return stacked;
}

Tensor3 fold(const Matrix& stacked, Index p) {
  if (p <= 0 || stacked.rows() % p != 0) {
    throw DimensionMismatch("fold: " + std::to_string(stacked.rows()) +
                            " rows not divisible by p=" + std::to_string(p));
  }
  const Index m = stacked.rows() / p;
  std::vector<Matrix> slices;
  slices.reserve(static_cast<size_t>(p));
  for (Index k = 0; k < p; ++k) {
    slices.push_back(stacked.block(k * m, 0, m, stacked.cols()));
  }
  return Tensor3(std::move(slices));
}

Tensor3 t_product(const Tensor3& a, const Tensor3& b) {
  if (a.cols() != b.rows() || a.num_slices() != b.num_slices()) {
    throw DimensionMismatch(
        "t_product: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + "x" +
        std::to_string(a.num_slices()) + " incompatible with " + std::to_string(b.rows()) + "x" +
        std::to_string(b.cols()) + "x" + std::to_string(b.num_slices()));
  }
  const Index p = a.num_slices();
  Tensor3 c(a.rows(), b.cols(), p);
  // Slice-wise cyclic convolution; reduction order fixed by slice index.
  for (Index i = 0; i < p; ++i) {
    Matrix& out = c.slice(i);
    for (Index j = 0; j < p; ++j) {
      out.noalias() += a.slice(j) * b.slice((i - j + p) % p);
    }
  }
  return c;
}

Tensor3 t_conj_transpose(const Tensor3& a) {
  const Index p = a.num_slices();
  std::vector<Matrix> slices;
  slices.reserve(static_cast<size_t>(p));
  slices.push_back(a.slice(0).adjoint());
  for (Index k = 1; k < p; ++k) {
    slices.push_back(a.slice(p - k).adjoint());
  }
  return Tensor3(std::move(slices));
}

Complex frobenius_inner(const Tensor3& a, const Tensor3& b) {
  require_same_dims(a, b, "frobenius_inner");
  Complex acc(0.0, 0.0);
  for (Index k = 0; k < a.num_slices(); ++k) {
    acc += a.slice(k).conjugate().cwiseProduct(b.slice(k)).sum();
  }
  return acc;
}

double frobenius_norm(const Tensor3& a) {
  double acc = 0.0;
  for (Index k = 0; k < a.num_slices(); ++k) {
    acc += a.slice(k).squaredNorm();
  }
  return std::sqrt(acc);
}

bool is_t_hermitian(const Tensor3& a, double tol) {
  if (!a.is_frontal_square()) {
    throw NotFrontalSquare("is_t_hermitian: slices are " + std::to_string(a.rows()) + "x" +
                           std::to_string(a.cols()));
  }
  const double residual = frobenius_norm(a - t_conj_transpose(a));
  return residual <= tol * std::max(1.0, frobenius_norm(a));
}

Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
  require_same_dims(a, b, "operator+");
  Tensor3 c = a;
  for (Index k = 0; k < c.num_slices(); ++k) {
    c.slice(k) += b.slice(k);
  }
  return c;
}

Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
  require_same_dims(a, b, "operator-");
  Tensor3 c = a;
  for (Index k = 0; k < c.num_slices(); ++k) {
    c.slice(k) -= b.slice(k);
  }
  return c;
}

Tensor3 operator-(const Tensor3& a) { return Complex(-1.0, 0.0) * a; }

Tensor3 operator*(double s, const Tensor3& a) { return Complex(s, 0.0) * a; }

Tensor3 operator*(Complex s, const Tensor3& a) {
  Tensor3 c = a;
  for (Index k = 0; k < c.num_slices(); ++k) {
    c.slice(k) *= s;
  }
  return c;
}

Tensor3 operator*(const Tensor3& a, const Tensor3& b) { return t_product(a, b); }

bool operator==(const Tensor3& a, const Tensor3& b) {
  if (!a.same_dims(b)) return false;
  for (Index k = 0; k < a.num_slices(); ++k) {
    if (!(a.slice(k).array() == b.slice(k).array()).all()) return false;
  }
  return true;
}

}  // namespace tpd
