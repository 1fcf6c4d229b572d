#include <doctest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "tpd/geometry.hpp"
#include "tpd/oracle.hpp"

using namespace tpd;
using namespace tpd::testing;

namespace {

// Test-only oracle: Frechet derivative of exp at a Hermitian matrix through
// the divided-difference (Loewner) matrix in the eigenbasis. Independent of
// the finite-difference route used by iemi_check.
Matrix frechet_exp_oracle(const Matrix& h, const Matrix& k) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (h + h.adjoint()));
  REQUIRE(solver.info() == Eigen::Success);
  const Eigen::VectorXd lambda = solver.eigenvalues();
  const Matrix u = solver.eigenvectors();
  const Matrix k_tilde = u.adjoint() * k * u;
  Matrix scaled(k.rows(), k.cols());
  for (Index i = 0; i < k.rows(); ++i) {
    for (Index j = 0; j < k.cols(); ++j) {
      const double li = lambda(i), lj = lambda(j);
      double phi;
      if (std::abs(li - lj) < 1e-12 * std::max({1.0, std::abs(li), std::abs(lj)})) {
        phi = std::exp(0.5 * (li + lj));
      } else {
        phi = (std::exp(li) - std::exp(lj)) / (li - lj);
      }
      scaled(i, j) = phi * k_tilde(i, j);
    }
  }
  return u * scaled * u.adjoint();
}

}  // namespace

TEST_CASE("metric at the identity base point is tr(x^2) = p * ||x||^2") {
  std::mt19937_64 rng(60);
  const Index n = 3, p = 4;
  const Tensor3 x = random_t_hermitian(n, p, rng, 2.0);
  const MetricValue mv = metric(Tensor3::identity(n, p), x, x);
  const double expected = static_cast<double>(p) * frobenius_norm(x) * frobenius_norm(x);
  CHECK(rel_err(mv.value, expected) < 1e-12);
  CHECK(mv.value > 0.0);
}

TEST_CASE("metric is symmetric in its tangent arguments") {
  std::mt19937_64 rng(61);
  const Tensor3 base = random_tpd(3, 3, rng);
  const Tensor3 x = random_t_hermitian(3, 3, rng);
  const Tensor3 y = random_t_hermitian(3, 3, rng);
  CHECK(rel_err(metric(base, x, y).value, metric(base, y, x).value) < 1e-12);
}

TEST_CASE("metric matches the dense bcirc trace formula") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 10; ++trial) {
    const Tensor3 base = random_tpd(2, 3, rng);
    const Tensor3 x = random_t_hermitian(2, 3, rng);
    const Tensor3 y = random_t_hermitian(2, 3, rng);
    const Matrix pinv = bcirc(base).mat.inverse();
    const Complex dense = (pinv * bcirc(x).mat * pinv * bcirc(y).mat).trace();
    CHECK(std::abs(dense.imag()) < 1e-10);
    CHECK(rel_err(metric(base, x, y).value, dense.real()) < 1e-10);
  }
}

TEST_CASE("metric rejects invalid arguments") {
  std::mt19937_64 rng(63);
  const Tensor3 base = random_tpd(2, 2, rng);
  const Tensor3 x = random_t_hermitian(2, 2, rng);
  CHECK_THROWS_AS(metric(-base, x, x), NotTPD);
  CHECK_THROWS_AS(metric(base, random_tensor(2, 2, 2, rng), x), NotTHermitian);
}

TEST_CASE("distance is zero on the diagonal") {
  std::mt19937_64 rng(64);
  const Tensor3 a = random_tpd(3, 3, rng);
  const double scale = 1.0 + frobenius_norm(t_log(a));
  CHECK(distance(a, a) <= 1e-10 * scale);
}

TEST_CASE("distance between I and e*I on 2x2x3 is sqrt(6)") {
  const Tensor3 identity = Tensor3::identity(2, 3);
  const Tensor3 e_tensor = std::exp(1.0) * identity;
  CHECK(distance(identity, e_tensor) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
}

TEST_CASE("distance agrees with the dense oracle") {
  std::mt19937_64 rng(65);
  for (int trial = 0; trial < 10; ++trial) {
    const Tensor3 a = random_tpd(2, 3, rng);
    const Tensor3 b = random_tpd(2, 3, rng);
    CHECK(rel_err(distance(a, b), dense_distance(bcirc(a), bcirc(b))) < 1e-10);
  }
}

TEST_CASE("distance axioms on random triples") {
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 10; ++trial) {
    const Tensor3 a = random_tpd(2, 2, rng);
    const Tensor3 b = random_tpd(2, 2, rng);
    const Tensor3 c = random_tpd(2, 2, rng);
    CHECK(rel_err(distance(a, b), distance(b, a)) < 1e-10);
    CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-9);
  }
}

TEST_CASE("distance is invariant under congruence and inversion") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    const Tensor3 a = random_tpd(2, 3, rng);
    const Tensor3 b = random_tpd(2, 3, rng);
    const Tensor3 c = random_invertible(2, 3, rng);
    const double base = distance(a, b);
    CHECK(rel_err(distance(congruence(c, a), congruence(c, b)), base) < 1e-9);
    CHECK(rel_err(distance(t_inv(a), t_inv(b)), base) < 1e-9);
  }
}

TEST_CASE("the mean is the metric midpoint") {
  std::mt19937_64 rng(68);
  for (int trial = 0; trial < 10; ++trial) {
    const Tensor3 a = random_tpd(3, 2, rng);
    const Tensor3 b = random_tpd(3, 2, rng);
    const Tensor3 mid = geometric_mean(a, b).mean;
    const double total = distance(a, b);
    CHECK(rel_err(distance(a, mid), 0.5 * total) < 1e-9);
    CHECK(rel_err(distance(mid, b), 0.5 * total) < 1e-9);
  }
}

TEST_CASE("geodesic endpoints and midpoint") {
  std::mt19937_64 rng(69);
  const Tensor3 a = random_tpd(2, 3, rng);
  const Tensor3 b = random_tpd(2, 3, rng);
  const std::vector<GeodesicSample> ends = geodesic(a, b, {0.0, 1.0});
  REQUIRE(ends.size() == 2);
  CHECK(rel_err(ends[0].point, a) < 1e-10);
  CHECK(rel_err(ends[1].point, b) < 1e-10);

  const std::vector<GeodesicSample> mid = geodesic(a, b, {0.5});
  CHECK(rel_err(mid[0].point, geometric_mean(a, b).mean) < 1e-10);

  CHECK_THROWS_AS(geodesic(a, b, {0.0, 1.2}), ParameterOutOfRange);
  CHECK_THROWS_AS(geodesic(a, b, {-0.1}), ParameterOutOfRange);
}

TEST_CASE("geodesic has constant speed") {
  std::mt19937_64 rng(70);
  for (int trial = 0; trial < 5; ++trial) {
    const Tensor3 a = random_tpd(2, 2, rng);
    const Tensor3 b = random_tpd(2, 2, rng);
    const double total = distance(a, b);
    const std::vector<GeodesicSample> samples = geodesic(a, b, {0.2, 0.45, 0.8});
    for (size_t i = 0; i < samples.size(); ++i) {
      for (size_t j = i + 1; j < samples.size(); ++j) {
        const double expected = (samples[j].t - samples[i].t) * total;
        CHECK(rel_err(distance(samples[i].point, samples[j].point), expected) < 1e-8);
      }
    }
  }
}

TEST_CASE("semi-parallelogram law holds on random triples") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const Tensor3 a = random_tpd(2, 3, rng);
    const Tensor3 b = random_tpd(2, 3, rng);
    const Tensor3 c = random_tpd(2, 3, rng);
    const Tensor3 mid = geometric_mean(a, b).mean;
    const double lhs = std::pow(distance(mid, c), 2);
    const double rhs = 0.5 * (std::pow(distance(a, c), 2) + std::pow(distance(b, c), 2)) -
                       0.25 * std::pow(distance(a, b), 2);
    CHECK(lhs <= rhs + 1e-9);
  }
}

TEST_CASE("path_length of a constant path is zero") {
  std::mt19937_64 rng(72);
  const Tensor3 a = random_tpd(2, 2, rng);
  const double len = path_length([&](double) { return a; }, 0.0, 1.0, 16);
  CHECK(len <= 1e-10);
}

TEST_CASE("path_length of the commuting exponential segment") {
  std::mt19937_64 rng(73);
  const auto [a, b] = random_commuting_tpd(2, 3, rng);
  const Tensor3 log_a = t_log(a);
  const Tensor3 log_b = t_log(b);
  const auto segment = [&](double t) { return t_exp((1.0 - t) * log_a + t * log_b); };
  const double expected = std::sqrt(3.0) * frobenius_norm(log_a - log_b);
  CHECK(rel_err(path_length(segment, 0.0, 1.0, 64), expected) < 1e-6);
}

TEST_CASE("the geodesic realizes the distance as its length") {
  std::mt19937_64 rng(74);
  for (int trial = 0; trial < 3; ++trial) {
    const Tensor3 a = random_tpd(2, 2, rng);
    const Tensor3 b = random_tpd(2, 2, rng);
    const auto curve = [&](double t) { return weighted_geometric_mean(a, b, t); };
    CHECK(rel_err(path_length(curve, 0.0, 1.0, 64), distance(a, b)) < 1e-6);
  }
}

TEST_CASE("path_length parameter validation") {
  std::mt19937_64 rng(75);
  const Tensor3 a = random_tpd(2, 2, rng);
  CHECK_THROWS_AS(path_length([&](double) { return a; }, 0.0, 1.0, 1), ParameterOutOfRange);
  CHECK_THROWS_AS(path_length([&](double) { return -a; }, 0.0, 1.0, 16), NotTPD);
}

TEST_CASE("iemi equality at h = 0") {
  std::mt19937_64 rng(76);
  const Tensor3 h = Tensor3::zero(2, 2, 2);
  const Tensor3 k = random_t_hermitian(2, 2, rng);
  const auto [lhs, rhs] = iemi_check(h, k, 1e-5);
  // De^0(K) = K exactly; only finite-difference truncation separates the
  // sides.
  CHECK(rel_err(lhs, rhs) < 1e-9);
  CHECK(rhs == doctest::Approx(frobenius_norm(k)));
}

TEST_CASE("iemi equality in the commuting direction, against the divided-difference oracle") {
  std::mt19937_64 rng(77);
  const Tensor3 h = random_t_hermitian(2, 2, rng);
  const auto [lhs, rhs] = iemi_check(h, h, 1e-5);
  CHECK(rel_err(lhs, rhs) < 1e-9);

  // Independent route: the divided-difference derivative on bcirc(h), whose
  // diagonal scaling factor is exactly one in the commuting direction.
  const Matrix ch = bcirc(h).mat;
  const Matrix dense_derivative = frechet_exp_oracle(ch, ch);
  const Matrix inv_sqrt_exp = dense_func(Matrix(-0.5 * ch), ScalarFn::exp());
  const double dense_lhs =
      (inv_sqrt_exp * dense_derivative * inv_sqrt_exp).norm() / std::sqrt(2.0);
  CHECK(rel_err(lhs, dense_lhs) < 1e-8);
}

TEST_CASE("iemi inequality on random directions") {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 20; ++trial) {
    const Tensor3 h = random_t_hermitian(2, 2, rng, 1.0);
    const Tensor3 k = random_t_hermitian(2, 2, rng, 1.0);
    const auto [lhs, rhs] = iemi_check(h, k, 1e-5);
    CHECK(lhs >= rhs * (1.0 - 1e-6));
    // Default-step overload behaves the same at these scales.
    const auto [lhs2, rhs2] = iemi_check(h, k);
    CHECK(lhs2 >= rhs2 * (1.0 - 1e-6));
  }
  CHECK_THROWS_AS(iemi_check(Tensor3::identity(2, 2), Tensor3::identity(2, 2), -1.0),
                  ParameterOutOfRange);
}

TEST_CASE("iemi finite difference matches the divided-difference oracle") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 5; ++trial) {
    const Tensor3 h = random_t_hermitian(2, 3, rng, 1.0);
    const Tensor3 k = random_t_hermitian(2, 3, rng, 1.0);
    const auto [lhs, rhs] = iemi_check(h, k, 1e-5);
    const Matrix ch = bcirc(h).mat;
    const Matrix inv_sqrt_exp = dense_func(Matrix(-0.5 * ch), ScalarFn::exp());
    const double dense_lhs =
        (inv_sqrt_exp * frechet_exp_oracle(ch, bcirc(k).mat) * inv_sqrt_exp).norm() /
        std::sqrt(3.0);
    CHECK(rel_err(lhs, dense_lhs) < 1e-8);
    CHECK(dense_lhs >= rhs * (1.0 - 1e-12));
  }
}

TEST_CASE("lower bound: distance dominates the log-difference bound") {
  std::mt19937_64 rng(80);
  for (int trial = 0; trial < 10; ++trial) {
    const Tensor3 a = random_tpd(2, 3, rng);
    const Tensor3 b = random_tpd(2, 3, rng);
    const auto [delta, bound] = lower_bound_check(a, b);
    CHECK(delta >= bound * (1.0 - 1e-9));
  }
}

TEST_CASE("lower bound is tight for commuting pairs") {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 10; ++trial) {
    const auto [a, b] = random_commuting_tpd(2, 3, rng);
    const auto [delta, bound] = lower_bound_check(a, b);
    CHECK(rel_err(delta, bound) < 1e-9);
  }
}

TEST_CASE("lower bound from the identity is exactly sqrt(p) * ||log b||") {
  std::mt19937_64 rng(82);
  const Index n = 2, p = 3;
  const Tensor3 b = random_tpd(n, p, rng);
  const auto [delta, bound] = lower_bound_check(Tensor3::identity(n, p), b);
  const double expected = std::sqrt(static_cast<double>(p)) * frobenius_norm(t_log(b));
  CHECK(rel_err(bound, expected) < 1e-12);
  CHECK(rel_err(delta, expected) < 1e-9);
}
