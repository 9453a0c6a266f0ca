#include "doctest.h"

#include <random>

#include "grouprep/poly.hpp"

using namespace grouprep;

namespace {

SpacePtr one() {
  static const SpacePtr s = make_space({"z"});
  return s;
}
SpacePtr three() {
  static const SpacePtr s = make_space({"z1", "z2", "z3"});
  return s;
}

RationalPoly random_poly(std::mt19937& rng, const SpacePtr& s, int max_deg, int terms) {
  std::uniform_int_distribution<int> c(-5, 5), e(0, max_deg);
  RationalPoly p(s);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int budget = max_deg;
    for (int v = 0; v < s->size(); ++v) {
      const int k = std::min(budget, e(rng) / s->size());
      m.e[v] = static_cast<uint8_t>(k);
      budget -= k;
    }
    p.add(m, Rational(c(rng), 1 + std::abs(c(rng))));
  }
  return p;
}

Eigen::MatrixXcd random_unitary(std::mt19937& rng, int n) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(A);
  return qr.householderQ();
}

}  // namespace

TEST_CASE("bargmann inner product") {
  const auto z = RationalPoly::variable(one(), 0);
  CHECK(bargmann_inner(pow(z, 3), pow(z, 3)) == 6);
  const auto s = three();
  const auto z1 = RationalPoly::variable(s, 0), z2 = RationalPoly::variable(s, 1);
  CHECK(bargmann_inner(z1 * z2, z1 * z1) == 0);
  for (int n = 0; n < 6; ++n)
    for (int m = 0; m < 6; ++m) {
      const Rational v = bargmann_inner(pow(z, n), pow(z, m)) / Rational(factorial(n) * (n == m ? 1 : 1));
      CHECK(v == (n == m ? 1 : 0));
    }
  const ComplexPoly a = to_complex(z1) * cplx(0, 2), b = to_complex(z1);
  CHECK(bargmann_inner(a, b) == cplx(0, -2));
  CHECK_THROWS_AS(bargmann_inner(z1, z), StructuralError);
}

TEST_CASE("inner product is symmetric and positive, adjointness") {
  std::mt19937 rng(5);
  const auto s = three();
  for (int t = 0; t < 30; ++t) {
    const RationalPoly f = random_poly(rng, s, 7, 8), g = random_poly(rng, s, 8, 8);
    CHECK(bargmann_inner(f, g) == bargmann_inner(g, f));
    if (!f.is_zero()) CHECK(bargmann_inner(f, f) > 0);
    for (int v = 0; v < 3; ++v) CHECK(bargmann_inner(multiply_variable(f, v), g) == bargmann_inner(f, derivative(g, v)));
  }
}

TEST_CASE("weyl operators") {
  const auto s = three();
  const Blocks b{{0, 1, 2}};
  const auto z1 = RationalPoly::variable(s, 0), z2 = RationalPoly::variable(s, 1), z3 = RationalPoly::variable(s, 2);
  CHECK(apply_weyl(z2, 0, 1, b) == z1);
  const RationalPoly y_z3 = apply_weyl(z3, 0, 0, b) + apply_weyl(z3, 1, 1, b) - apply_weyl(z3, 2, 2, b) * Rational(2);
  CHECK(y_z3 == z3 * Rational(-2));
  CHECK(apply_weyl(z1 * z1, 0, 0, b) == z1 * z1 * Rational(2));

  std::mt19937 rng(9);
  for (int t = 0; t < 10; ++t) {
    const RationalPoly p = random_poly(rng, s, 6, 10);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) {
            const RationalPoly lhs = apply_weyl(apply_weyl(p, k, l, b), i, j, b) - apply_weyl(apply_weyl(p, i, j, b), k, l, b);
            RationalPoly rhs(s);
            if (j == k) rhs += apply_weyl(p, i, l, b);
            if (i == l) rhs -= apply_weyl(p, k, j, b);
            CHECK(lhs == rhs);
          }
  }
}

TEST_CASE("linear substitution") {
  const auto s = three();
  const Blocks b{{0, 1, 2}};
  std::mt19937 rng(3);
  const RationalPoly p = random_poly(rng, s, 5, 10);
  const ComplexPoly pc = to_complex(p);
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(3, 3);
  CHECK(bargmann_inner(substitute_linear(pc, I, b) - pc, substitute_linear(pc, I, b) - pc).real() < 1e-24);

  const std::vector<std::vector<Rational>> swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK(substitute_linear(RationalPoly::variable(s, 0), swap, b) == RationalPoly::variable(s, 1));

  // fundamental monomials carry exactly U
  const Eigen::MatrixXcd U = random_unitary(rng, 3);
  for (int k = 0; k < 3; ++k) {
    const ComplexPoly t = substitute_linear(to_complex(RationalPoly::variable(s, k)), U, b);
    for (int j = 0; j < 3; ++j) CHECK(std::abs(bargmann_inner(to_complex(RationalPoly::variable(s, j)), t) - U(j, k)) < 1e-14);
  }
  const double n0 = bargmann_inner(pc, pc).real();
  const ComplexPoly tp = substitute_linear(pc, U, b);
  CHECK(std::abs(bargmann_inner(tp, tp).real() - n0) < 1e-10 * n0);

  // T_{U1} T_{U2} = T_{U2 U1} on polynomials, i.e. matrices compose as M(U1) M(U2) = M(U1 U2)
  const Eigen::MatrixXcd V = random_unitary(rng, 3);
  const ComplexPoly lhs = substitute_linear(substitute_linear(pc, U, b), V, b);
  const ComplexPoly rhs = substitute_linear(pc, V * U, b);
  const ComplexPoly diff = lhs - rhs;
  for (const auto& [m, c] : diff.terms()) CHECK(std::abs(c) < 1e-11);
  CHECK_THROWS_AS(substitute_linear(pc, Eigen::MatrixXcd::Identity(2, 2), b), StructuralError);
}

TEST_CASE("truncated exponential") {
  const auto z = RationalPoly::variable(one(), 0);
  RationalPoly want = RationalPoly::constant(one(), Rational(1)) + z + z * z * Rational(1, 2);
  CHECK(exp_truncate(z, 2) == want);
  CHECK(exp_truncate(RationalPoly(one()), 5) == RationalPoly::constant(one(), Rational(1)));
  const auto s = three();
  const auto z1 = RationalPoly::variable(s, 0), z2 = RationalPoly::variable(s, 1);
  const Rational a(3, 7);
  const RationalPoly e = exp_truncate(z1 * z2 * a, 4);
  CHECK(e == RationalPoly::constant(s, Rational(1)) + z1 * z2 * a + z1 * z1 * z2 * z2 * (a * a / 2));
  CHECK_THROWS_AS(exp_truncate(RationalPoly::constant(s, Rational(1)) + z1, 3), DomainError);
}

TEST_CASE("gaussian pairing") {
  Eigen::MatrixXcd X(1, 1);
  Eigen::VectorXcd A(1), B(1);
  X(0, 0) = 1;
  A(0) = cplx(0.3, 0.1);
  B(0) = cplx(-0.2, 0.5);
  CHECK(std::abs(gaussian_pairing(X, A, B) - std::exp(A(0) * B(0))) < 1e-14);
  X(0, 0) = 2;
  CHECK(std::abs(gaussian_pairing(X, A, B) - 0.5 * std::exp(A(0) * B(0) / 2.0)) < 1e-14);
  X(0, 0) = -1;
  CHECK_THROWS_AS(gaussian_pairing(X, A, B), DomainError);

  // n=2: integrand exp(-wbar^T K z + A^T z + zbar^T B) against the Gaussian, expanded with zbar as independent w
  const SpacePtr s = make_space({"w1", "w2", "z1", "z2"});
  Eigen::MatrixXcd K(2, 2);
  K << cplx(0.1, 0.02), cplx(-0.05, 0.03), cplx(0.04, -0.01), cplx(0.12, 0.0);
  Eigen::VectorXcd a2(2), b2(2);
  a2 << cplx(0.3, -0.2), cplx(0.1, 0.25);
  b2 << cplx(-0.15, 0.1), cplx(0.2, 0.05);
  ComplexPoly arg(s);
  for (int i = 0; i < 2; ++i) {
    arg += ComplexPoly::variable(s, 2 + i) * a2(i) + ComplexPoly::variable(s, i) * b2(i);
    for (int j = 0; j < 2; ++j) arg -= ComplexPoly::variable(s, i) * ComplexPoly::variable(s, 2 + j) * K(i, j);
  }
  const ComplexPoly ser = exp_truncate(arg, 24);
  cplx sum = 0;
  for (const auto& [m, c] : ser.terms()) {
    if (m.e[0] != m.e[2] || m.e[1] != m.e[3]) continue;
    Monomial half;
    half.e[0] = m.e[0];
    half.e[1] = m.e[1];
    sum += c * monomial_weight(half).get_d();
  }
  const Eigen::MatrixXcd X2 = Eigen::MatrixXcd::Identity(2, 2) + K;
  CHECK(std::abs(gaussian_pairing(X2, a2, b2) - sum) < 1e-8);
}
