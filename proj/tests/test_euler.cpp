#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "grouprep/euler.hpp"
#include "grouprep/exact.hpp"

using namespace grouprep;
using cplx = std::complex<double>;

namespace {

GroupPoint random_point(Family f, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
  GroupPoint p{f, n, {}};
  for (size_t i = 0; i < angle_count(f, n); ++i) p.angles.push_back(u(rng));
  return p;
}

}  // namespace

TEST_CASE("parameter counts") {
  CHECK(param_count(3, 0) == 3);
  CHECK(param_count(3, 1) == 8);
  CHECK(param_count(2, 2) == 10);
  for (int m = 0; m <= 2; ++m)
    for (int n = 2; n <= 12; ++n) {
      CHECK(param_count(n, m) == param_count(n - 1, m) + (1L << m) * n - 1);
      if (n >= 3) CHECK(param_count(n, m) == 2 * param_count(n - 1, m) - param_count(n - 2, m) + (1L << m));
    }
  CHECK_THROWS_AS(param_count(3, 3), DomainError);
  CHECK_THROWS_AS(param_count(0, 1), DomainError);
}

TEST_CASE("group matrices") {
  CHECK(so_matrix({Family::orthogonal, 4, std::vector<double>(6, 0.0)}).isIdentity(1e-15));
  CHECK(su_matrix({Family::unitary, 3, std::vector<double>(8, 0.0)}).isIdentity(1e-15));

  const double t = 0.7;
  Eigen::Matrix2d R;
  R << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
  CHECK((so_matrix({Family::orthogonal, 2, {t}}) - R).norm() < 1e-15);

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const Eigen::MatrixXd g = so_matrix(random_point(Family::orthogonal, n, rng));
    CHECK((g.transpose() * g - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(g.determinant() - 1.0) < 1e-12);
    const Eigen::MatrixXcd u = su_matrix(random_point(Family::unitary, n, rng));
    CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(u.determinant() - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(su_matrix({Family::unitary, 3, {0.1}}), DomainError);
  CHECK_THROWS_AS(so_matrix({Family::unitary, 2, {0, 0, 0}}), DomainError);
}

TEST_CASE("last-plane factor commutes with the leading block") {
  std::mt19937_64 rng(2);
  for (int n = 4; n <= 6; ++n) {
    // slot n-2 is the last polar rotation of the top factor, acting on coordinates (n-2, n-1)
    const Eigen::MatrixXcd B = angle_factor(Family::orthogonal, n, static_cast<size_t>(n - 2), 0.9);
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd small = su_matrix(random_point(Family::unitary, n - 2, rng));
    A.topLeftCorner(n - 2, n - 2) = small;
    CHECK((A * B - B * A).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("quadrature grids") {
  for (int n = 2; n <= 3; ++n) {
    const auto g = quad_grid(Family::unitary, n, 4);
    double total = 0;
    for (size_t i = 0; i < g.size(); ++i) total += g.weight(i);
    CHECK(std::abs(total - 1.0) < 1e-12);
    CHECK(std::abs(integrate([](const GroupPoint&) { return cplx(1.0); }, g) - 1.0) < 1e-12);
    const cplx m2 = integrate_matrix([](const Eigen::MatrixXcd& U) { return std::norm(U(0, 0)); }, g);
    CHECK(std::abs(m2 - 1.0 / n) < 1e-10);
  }
  const auto g2 = quad_grid(Family::unitary, 2, 3);
  CHECK(std::abs(integrate_matrix([](const Eigen::MatrixXcd& U) { return U(0, 0); }, g2)) < 1e-14);
  CHECK(std::abs(integrate_matrix([](const Eigen::MatrixXcd& U) { return U(0, 0) * std::conj(U(1, 1)); }, g2)) <
        1e-10);
  const auto so3 = quad_grid(Family::orthogonal, 3, 4);
  CHECK(std::abs(integrate([](const GroupPoint&) { return cplx(1.0); }, so3) - 1.0) < 1e-12);
  CHECK(std::abs(integrate_matrix([](const Eigen::MatrixXcd& U) { return U(2, 2) * U(2, 2); }, so3) - 1.0 / 3) <
        1e-10);
  CHECK_THROWS_AS(quad_grid(Family::unitary, 2, 0), DomainError);
}

TEST_CASE("Haar weight integrates to one") {
  // brute-force midpoint sum over the angle box for SU(2) and SO(3)
  const int N = 200;
  const double pi = std::numbers::pi;
  double su2 = 0;
  for (int a = 0; a < N; ++a) {
    const double t = (a + 0.5) * (pi / 2) / N;
    su2 += haar_weight({Family::unitary, 2, {0.3, t, 1.1}}) * (pi / 2) / N;
  }
  CHECK(std::abs(su2 * 4 * pi * pi - 1.0) < 1e-4);
  double so3 = 0;
  for (int a = 0; a < N; ++a) {
    const double t = (a + 0.5) * pi / N;
    so3 += haar_weight({Family::orthogonal, 3, {0.2, t, 0.4}}) * pi / N;
  }
  CHECK(std::abs(so3 * 4 * pi * pi - 1.0) < 1e-4);
  // sphere constant for S^3: Gamma(2) / (2 pi^2)
  CHECK(std::abs(haar_weight({Family::unitary, 2, {0, pi / 4, 0}}) - 2 * std::sin(pi / 4) * std::cos(pi / 4) /
                                                                          (4 * pi * pi)) < 1e-15);
}

TEST_CASE("left invariance") {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 3; ++n) {
    const auto g = quad_grid(Family::unitary, n, 4);
    const Eigen::MatrixXcd V = su_matrix(random_point(Family::unitary, n, rng));
    auto f = [](const Eigen::MatrixXcd& U) { return U(0, 0) * std::conj(U(0, 0)) * U(1, 1) + U(0, 1) * U(1, 0); };
    const cplx plain = integrate_matrix(f, g);
    const cplx moved = integrate_matrix([&](const Eigen::MatrixXcd& U) { return f(V * U); }, g);
    CHECK(std::abs(plain - moved) < 1e-8);
  }
}

TEST_CASE("moment tensor") {
  const auto g = quad_grid(Family::unitary, 2, 3);
  const Eigen::MatrixXcd M = moment_tensor(g, 1, 1);
  REQUIRE(M.rows() == 4);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) {
          const double want = (i == k && j == l) ? 0.5 : 0.0;
          CHECK(std::abs(M(i * 2 + k, j * 2 + l) - want) < 1e-12);
        }
  const auto g3 = quad_grid(Family::unitary, 3, 5);
  const Eigen::MatrixXcd M3 = moment_tensor(g3, 2, 2);
  // E |U_11|^4 = 2 / (n (n+1))
  const int r = 0;
  CHECK(std::abs(M3(r, r) - 1.0 / 6) < 1e-12);
  const cplx direct = integrate_matrix(
      [](const Eigen::MatrixXcd& U) { return U(0, 1) * U(2, 0) * std::conj(U(0, 1)) * std::conj(U(2, 0)); }, g3);
  // rows (i1,i2,k1,k2) = (0,2,0,2), cols (j1,j2,l1,l2) = (1,0,1,0)
  const int row = ((0 * 3 + 2) * 3 + 0) * 3 + 2, col = ((1 * 3 + 0) * 3 + 1) * 3 + 0;
  CHECK(std::abs(M3(row, col) - direct) < 1e-12);
  CHECK(std::abs(direct - 1.0 / 8) < 1e-12);
}

TEST_CASE("Haar sampling") {
  std::mt19937_64 rng(42);
  for (int n = 2; n <= 3; ++n) {
    const int N = 100000;
    double s = 0, s2 = 0;
    for (int i = 0; i < N; ++i) {
      const Eigen::MatrixXcd U = su_matrix(haar_sample(Family::unitary, n, rng));
      const double v = std::norm(U(0, 0));
      s += v;
      s2 += v * v;
      if (i < 1000) CHECK(std::abs(U.determinant() - 1.0) < 1e-12);
    }
    const double mean = s / N, se = std::sqrt((s2 / N - mean * mean) / N);
    CHECK(std::abs(mean - 1.0 / n) < 4 * se);
  }
  // top polar angle of SO(3) has density sin(theta): cos(theta) uniform on [-1, 1]
  const int N = 20000;
  std::vector<double> c;
  for (int i = 0; i < N; ++i) c.push_back(std::cos(haar_sample(Family::orthogonal, 3, rng).angles[1]));
  std::sort(c.begin(), c.end());
  double d = 0;
  for (int i = 0; i < N; ++i) {
    const double F = (c[i] + 1) / 2;
    d = std::max({d, std::abs(F - double(i) / N), std::abs(F - double(i + 1) / N)});
  }
  CHECK(d < 1.63 / std::sqrt(double(N)));
}
