#include "doctest.h"

#include <cmath>
#include <random>

#include "grouprep/euler.hpp"
#include "grouprep/su2.hpp"
#include "oracles/racah.hpp"

using namespace grouprep;
using cplx = std::complex<double>;

namespace {

RadicalScalar inv_sqrt(long n) { return sqrt_rational(Rational(1) / Rational(n)); }

Eigen::MatrixXcd random_su2(std::mt19937_64& rng) { return group_matrix(haar_sample(Family::unitary, 2, rng)); }

}  // namespace

TEST_CASE("Bargmann states") {
  CHECK(phi(0, 0) == ExactPoly::constant(su2_space(), RadicalScalar(1)));
  CHECK(phi(1, 1) == to_exact(RationalPoly::variable(su2_space(), 0)));
  for (int a = 0; a <= 6; ++a)
    for (int ma = -a; ma <= a; ma += 2)
      for (int b = 0; b <= 6; ++b)
        for (int mb = -b; mb <= b; mb += 2) {
          const RadicalScalar ip = bargmann_inner(phi(a, ma), phi(b, mb));
          CHECK(ip == RadicalScalar(a == b && ma == mb ? 1 : 0));
        }
  CHECK(phi_conj(1, 1) == phi(1, -1));
  CHECK(phi_conj(1, -1) == phi(1, 1) * RadicalScalar(-1));
  CHECK_THROWS_AS(phi(2, 1), DomainError);
}

TEST_CASE("Van der Waerden invariant") {
  for (int j1 = 0; j1 <= 4; ++j1)
    for (int j2 = 0; j2 <= 4; ++j2)
      for (int j3 = 0; j3 <= 4; ++j3) {
        if (!triangle(j1, j2, j3)) continue;
        const ExactPoly H = vdw_invariant(j1, j2, j3).poly();
        CHECK(bargmann_inner(H, H) == RadicalScalar(1));
      }
  const auto s = su2_triple_space();
  const RationalPoly bracket = RationalPoly::variable(s, 0) * RationalPoly::variable(s, 3) -
                               RationalPoly::variable(s, 1) * RationalPoly::variable(s, 2);
  CHECK(vdw_invariant(1, 1, 0).shape == bracket);
  CHECK_THROWS_AS(vdw_invariant(1, 1, 1), DomainError);
  CHECK_THROWS_AS(vdw_invariant(2, 0, 4), DomainError);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const Eigen::MatrixXcd U = random_su2(rng);
    const ComplexPoly H = to_complex(vdw_invariant(2, 3, 3).poly());
    const ComplexPoly g = substitute_linear(H, U, su2_triple_blocks());
    double worst = 0;
    for (const auto& [m, c] : (g - H).terms()) worst = std::max(worst, std::abs(c));
    CHECK(worst < 1e-11);
  }
}

TEST_CASE("3j symbols against the Racah sum") {
  CHECK(wigner3j(1, 1, 0, 1, 1, 0).is_zero());
  const RadicalScalar a = wigner3j(1, 1, 0, 1, -1, 0);
  CHECK((a == inv_sqrt(2) || a == -inv_sqrt(2)));
  const RadicalScalar b = wigner3j(2, 2, 4, 2, 2, -4);
  CHECK((b == inv_sqrt(5) || b == -inv_sqrt(5)));

  for (int j1 = 0; j1 <= 7; ++j1)
    for (int j2 = 0; j2 <= 7; ++j2)
      for (int j3 = 0; j3 <= 7; ++j3) {
        if (!triangle(j1, j2, j3)) continue;
        int sign = 0;
        bool all = true;
        RadicalScalar sum_sq;
        for (int m1 = -j1; m1 <= j1; m1 += 2)
          for (int m2 = -j2; m2 <= j2; m2 += 2)
            for (int m3 = -j3; m3 <= j3; m3 += 2) {
              const RadicalScalar w = wigner3j(j1, j2, j3, m1, m2, m3);
              const RadicalScalar o = oracle::racah_3j(j1, j2, j3, m1, m2, m3);
              sum_sq += w * w;
              if (o.is_zero()) {
                all = all && w.is_zero();
                continue;
              }
              if (sign == 0) sign = (w == o) ? 1 : -1;
              all = all && (sign > 0 ? w == o : w == -o);
            }
        CHECK_MESSAGE(all, "triple " << j1 << "," << j2 << "," << j3);
        CHECK(sum_sq == RadicalScalar(1));
      }
}

TEST_CASE("Clebsch-Gordan") {
  const RadicalScalar c = clebsch(1, 1, 1, -1, 0, 0);
  CHECK((c == inv_sqrt(2) || c == -inv_sqrt(2)));
  for (int j1 = 0; j1 <= 4; ++j1)
    for (int j2 = 0; j2 <= 4; ++j2)
      CHECK(clebsch(j1, j1, j2, j2, j1 + j2, j1 + j2) == RadicalScalar(j1 % 2 ? -1 : 1));

  for (int j1 = 0; j1 <= 4; ++j1)
    for (int j2 = 0; j2 <= 4; ++j2)
      for (int J = std::abs(j1 - j2); J <= j1 + j2; J += 2)
        for (int Jp = std::abs(j1 - j2); Jp <= j1 + j2; Jp += 2)
          for (int M = -J; M <= J; M += 2)
            for (int Mp = -Jp; Mp <= Jp; Mp += 2) {
              RadicalScalar s;
              for (int m1 = -j1; m1 <= j1; m1 += 2) {
                const int m2 = M - m1, m2p = Mp - m1;
                if (std::abs(m2) > j2 || std::abs(m2p) > j2 || m2 != m2p) continue;
                s += clebsch(j1, m1, j2, m2, J, M) * clebsch(j1, m1, j2, m2, Jp, Mp);
              }
              CHECK(s == RadicalScalar(J == Jp && M == Mp ? 1 : 0));
            }
}

TEST_CASE("Schwinger generating function") {
  // t exp(tau3 [12] + tau2 [13] + tau1 [23]); the tau monomial picks out H up to a positive factor
  const auto s = make_space({"z1_1", "z1_2", "z2_1", "z2_2", "z3_1", "z3_2", "tau1", "tau2", "tau3"});
  auto v = [&](int i) { return RationalPoly::variable(s, i); };
  auto br = [&](int a, int b) { return v(2 * a) * v(2 * b + 1) - v(2 * a + 1) * v(2 * b); };
  const RationalPoly arg = v(8) * br(0, 1) + v(7) * br(0, 2) + v(6) * br(1, 2);
  const RationalPoly G = exp_truncate(arg, 18);
  const auto t = su2_triple_space();
  int checked = 0;
  for (int j1 = 0; j1 <= 4; ++j1)
    for (int j2 = 0; j2 <= 4; ++j2)
      for (int j3 = 0; j3 <= 4; ++j3) {
        if (!triangle(j1, j2, j3)) continue;
        const int J = (j1 + j2 + j3) / 2;
        RationalPoly c(t);
        for (const auto& [m, q] : G.terms()) {
          if (m.e[6] != J - j1 || m.e[7] != J - j2 || m.e[8] != J - j3) continue;
          Monomial z;
          for (int i = 0; i < 6; ++i) z.e[i] = m.e[i];
          c.add(z, q);
        }
        REQUIRE_FALSE(c.is_zero());
        const ExactPoly H = to_exact(c, sqrt_rational(Rational(1) / bargmann_inner(c, c)));
        for (int m1 = -j1; m1 <= j1; m1 += 2)
          for (int m2 = -j2; m2 <= j2; m2 += 2) {
            const int m3 = -m1 - m2;
            if (std::abs(m3) > j3) continue;
            const ExactPoly prod = phi(j1, m1, t, 0, 1) * phi(j2, m2, t, 2, 3) * phi(j3, m3, t, 4, 5);
            CHECK(bargmann_inner(prod, H) == wigner3j(j1, j2, j3, m1, m2, m3));
            ++checked;
          }
      }
  CHECK(checked > 100);
}

TEST_CASE("D matrices") {
  CHECK(d_matrix(3, 0, 0, 0).isIdentity(1e-14));
  const Eigen::Matrix2cd U = u2_matrix(0.4, 1.1, -0.7);
  CHECK((d_matrix(1, 0.4, 1.1, -0.7) - U).cwiseAbs().maxCoeff() < 1e-14);
  for (double th : {0.0, 0.3, 1.2, 2.9}) CHECK(std::abs(d_matrix(2, 0, th, 0)(1, 1) - std::cos(th)) < 1e-14);
  CHECK(std::abs(wigner_small_d(2, 0, 0, 0.8) - std::cos(0.8)) < 1e-14);

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi), pol(0, std::numbers::pi);
  for (int trial = 0; trial < 10; ++trial) {
    const double a1 = ang(rng), t1 = pol(rng), b1 = ang(rng), a2 = ang(rng), t2 = pol(rng), b2 = ang(rng);
    const Eigen::Matrix2cd g = u2_matrix(a1, t1, b1) * u2_matrix(a2, t2, b2);
    const auto p = angles_from_matrix(g);
    CHECK((u2_matrix(p[0], p[1], p[2]) - g).cwiseAbs().maxCoeff() < 1e-12);
    for (int j2 = 1; j2 <= 4; ++j2) {
      const Eigen::MatrixXcd D1 = d_matrix(j2, a1, t1, b1), D2 = d_matrix(j2, a2, t2, b2);
      CHECK((D1.adjoint() * D1 - Eigen::MatrixXcd::Identity(j2 + 1, j2 + 1)).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((D1 * D2 - d_matrix(j2, p[0], p[1], p[2])).cwiseAbs().maxCoeff() < 1e-10);
      CHECK((D1 - d_matrix_closed(j2, a1, t1, b1)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  CHECK_THROWS_AS(d_matrix(-1, 0, 0, 0), DomainError);
}
