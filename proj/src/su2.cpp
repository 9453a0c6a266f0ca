#include "grouprep/su2.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace grouprep {

bool valid_jm(int j2, int m2) { return j2 >= 0 && std::abs(m2) <= j2 && (j2 - m2) % 2 == 0; }

bool triangle(int j1, int j2, int j3) {
  if (j1 < 0 || j2 < 0 || j3 < 0) return false;
  if ((j1 + j2 + j3) % 2 != 0) return false;
  return j3 >= std::abs(j1 - j2) && j3 <= j1 + j2;
}

SpacePtr su2_space() {
  static const SpacePtr s = make_space({"z1", "z2"});
  return s;
}

SpacePtr su2_triple_space() {
  static const SpacePtr s = make_space({"z1_1", "z1_2", "z2_1", "z2_2", "z3_1", "z3_2"});
  return s;
}

Blocks su2_triple_blocks() { return {{0, 1}, {2, 3}, {4, 5}}; }

ExactPoly phi(int j2, int m2, const SpacePtr& space, int v1, int v2) {
  if (!valid_jm(j2, m2)) throw DomainError("invalid (j, m)");
  const int a = (j2 + m2) / 2, b = (j2 - m2) / 2;
  Monomial m;
  m.e[v1] = static_cast<uint8_t>(a);
  m.e[v2] = static_cast<uint8_t>(b);
  ExactPoly p(space);
  p.add(m, sqrt_rational(Rational(1) / Rational(factorial(a) * factorial(b))));
  return p;
}

ExactPoly phi(int j2, int m2) { return phi(j2, m2, su2_space(), 0, 1); }

ExactPoly phi_conj(int j2, int m2) {
  ExactPoly p = phi(j2, -m2);
  if (((j2 - m2) / 2) % 2) p *= RadicalScalar(-1);
  return p;
}

ExactPoly VdwInvariant::poly() const { return to_exact(shape, sqrt_rational(norm_sq)); }

VdwInvariant vdw_invariant(int j1, int j2, int j3) {
  if (!triangle(j1, j2, j3)) throw DomainError("angular momenta violate the triangle rule");
  const int J3 = (j1 + j2 - j3) / 2, J2 = (j1 - j2 + j3) / 2, J1 = (-j1 + j2 + j3) / 2;
  const int J = (j1 + j2 + j3) / 2;
  const auto s = su2_triple_space();
  auto bracket = [&](int a, int b) {
    // [z^a z^b] = z^a_1 z^b_2 - z^a_2 z^b_1
    return RationalPoly::variable(s, 2 * a) * RationalPoly::variable(s, 2 * b + 1) -
           RationalPoly::variable(s, 2 * a + 1) * RationalPoly::variable(s, 2 * b);
  };
  VdwInvariant h;
  h.shape = pow(bracket(0, 1), J3) * pow(bracket(0, 2), J2) * pow(bracket(1, 2), J1);
  h.norm_sq = Rational(1) / Rational(factorial(J + 1) * factorial(J1) * factorial(J2) * factorial(J3));
  return h;
}

namespace {
const VdwInvariant& cached_vdw(int j1, int j2, int j3) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, VdwInvariant> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(j1, j2, j3);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, vdw_invariant(j1, j2, j3)).first;
  return it->second;
}
}  // namespace

RadicalScalar wigner3j(int j1, int j2, int j3, int m1, int m2, int m3) {
  if (!valid_jm(j1, m1) || !valid_jm(j2, m2) || !valid_jm(j3, m3)) throw DomainError("invalid (j, m)");
  if (m1 + m2 + m3 != 0 || !triangle(j1, j2, j3)) return {};
  const VdwInvariant& h = cached_vdw(j1, j2, j3);
  const int e[6] = {(j1 + m1) / 2, (j1 - m1) / 2, (j2 + m2) / 2, (j2 - m2) / 2, (j3 + m3) / 2, (j3 - m3) / 2};
  Monomial mono;
  Integer fact = 1;
  for (int i = 0; i < 6; ++i) {
    mono.e[i] = static_cast<uint8_t>(e[i]);
    fact *= factorial(e[i]);
  }
  const Rational c = h.shape.coeff(mono);
  if (c == 0) return {};
  // <phi phi phi, H> = c * prod(e_i!) / sqrt(prod(e_i!)) * sqrt(norm_sq)
  return RadicalScalar(c) * sqrt_rational(Rational(fact) * h.norm_sq);
}

RadicalScalar clebsch(int j1, int m1, int j2, int m2, int j3, int m3) {
  RadicalScalar w = wigner3j(j1, j2, j3, m1, m2, -m3);
  if (w.is_zero()) return w;
  const int e = (j1 - j2 + m3) / 2;
  RadicalScalar v = w * sqrt_rational(Rational(j3 + 1));
  return (e % 2 != 0) ? -v : v;
}

Eigen::Matrix2cd u2_matrix(double psi, double theta, double phi) {
  const std::complex<double> a = std::polar(1.0, -psi / 2), b = std::polar(1.0, -phi / 2);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Eigen::Matrix2cd U;
  U << a * b * c, -a * std::conj(b) * s, std::conj(a) * b * s, std::conj(a) * std::conj(b) * c;
  return U;
}

std::array<double, 3> angles_from_matrix(const Eigen::Matrix2cd& U) {
  const double c = std::abs(U(0, 0)), s = std::abs(U(1, 0));
  const double theta = 2 * std::atan2(s, c);
  // half-angle sums are read off directly so the element itself, not its negative, is recovered
  const double a = c > 1e-14 ? -std::arg(U(0, 0)) : 0.0;  // (psi + phi)/2
  const double b = s > 1e-14 ? std::arg(U(1, 0)) : 0.0;         // (psi - phi)/2
  return {a + b, theta, a - b};
}

Eigen::MatrixXcd d_matrix(int j2, double psi, double theta, double phi) {
  if (j2 < 0) throw DomainError("negative j");
  const Eigen::MatrixXcd U = u2_matrix(psi, theta, phi);
  const Blocks blocks{{0, 1}};
  const int dim = j2 + 1;
  std::vector<ComplexPoly> basis;
  for (int m2 = j2; m2 >= -j2; m2 -= 2) basis.push_back(to_complex(grouprep::phi(j2, m2)));
  Eigen::MatrixXcd D(dim, dim);
  for (int b = 0; b < dim; ++b) {
    ComplexPoly t = substitute_linear(basis[b], U, blocks);
    for (int a = 0; a < dim; ++a) D(a, b) = bargmann_inner(basis[a], t);
  }
  return D;
}

double wigner_small_d(int j2, int mp2, int m2, double theta) {
  if (!valid_jm(j2, mp2) || !valid_jm(j2, m2)) throw DomainError("invalid (j, m)");
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const int jpm = (j2 + m2) / 2, jmm = (j2 - m2) / 2, jpmp = (j2 + mp2) / 2, jmmp = (j2 - mp2) / 2;
  const int diff = (mp2 - m2) / 2;  // m' - m
  auto f = [](int n) { return std::tgamma(n + 1.0); };
  const double pre = std::sqrt(f(jpmp) * f(jmmp) * f(jpm) * f(jmm));
  double sum = 0;
  for (int k = std::max(0, -diff); k <= std::min(jpm, jmmp); ++k) {
    const double sign = ((k + diff) % 2 == 0) ? 1.0 : -1.0;
    const double den = f(jpm - k) * f(k) * f(jmmp - k) * f(k + diff);
    sum += sign / den * std::pow(c, j2 - 2 * k - diff) * std::pow(s, 2 * k + diff);
  }
  return pre * sum;
}

Eigen::MatrixXcd d_matrix_closed(int j2, double psi, double theta, double phi) {
  const int dim = j2 + 1;
  Eigen::MatrixXcd D(dim, dim);
  for (int a = 0; a < dim; ++a) {
    const int mp2 = j2 - 2 * a;
    for (int b = 0; b < dim; ++b) {
      const int m2 = j2 - 2 * b;
      D(a, b) = wigner_small_d(j2, mp2, m2, theta) * std::polar(1.0, -(mp2 * psi + m2 * phi) / 2);
    }
  }
  return D;
}

}  // namespace grouprep
