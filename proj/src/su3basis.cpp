#include "grouprep/su3basis.hpp"

#include <map>
#include <mutex>
#include <set>

namespace grouprep {

std::string Su3Label::str() const {
  return "(" + std::to_string(lambda) + "," + std::to_string(mu) + ";" + std::to_string(p) + "," +
         std::to_string(q) + "," + std::to_string(r) + ")";
}

bool valid(const Su3Label& l) {
  if (l.lambda < 0 || l.mu < 0) return false;
  if (l.p < 0 || l.p > l.lambda || l.q < 0 || l.q > l.mu) return false;
  return l.r >= 0 && l.r <= l.t2();
}

std::vector<Su3Label> labels(int lambda, int mu) {
  if (lambda < 0 || mu < 0) throw DomainError("negative representation label");
  std::vector<Su3Label> out;
  for (int p = 0; p <= lambda; ++p)
    for (int q = 0; q <= mu; ++q)
      for (int r = 0; r <= mu + p - q; ++r) out.push_back({lambda, mu, p, q, r});
  return out;
}

long su3_dimension(int lambda, int mu) { return static_cast<long>(lambda + 1) * (mu + 1) * (lambda + mu + 2) / 2; }

SpacePtr su3_space() {
  static const SpacePtr s = make_space({"z1_1", "z1_2", "z1_3", "z2_1", "z2_2", "z2_3"});
  return s;
}

Blocks su3_blocks() { return {{0, 1, 2}, {3, 4, 5}}; }

SpacePtr su3_formula_space() {
  static const SpacePtr s = make_space({"a1", "a2", "a3", "d1", "d2", "d3"});
  return s;
}

ExactPoly Su3State::poly() const { return to_exact(shape, sqrt_rational(norm_sq)); }
ComplexPoly Su3State::complex_poly() const {
  ComplexPoly c = to_complex(shape);
  c *= cplx(std::sqrt(norm_sq.get_d()));
  return c;
}

namespace {

Rational coefficient(const Su3Label& l, int k) {
  return Rational(binomial(l.r, k) * factorial(l.mu - l.q) * factorial(l.p)) /
         Rational(factorial(l.mu - l.q - k) * factorial(l.p - l.r + k));
}

// (a1, a2, a3, d1, d2, d3) supplied as polynomials in some space
RationalPoly assemble(const Su3Label& l, const std::vector<RationalPoly>& g) {
  RationalPoly out(g[0].space());
  for (int k = 0; k <= l.r; ++k) {
    if (l.mu - l.q - k < 0 || l.p - l.r + k < 0) continue;
    RationalPoly term = pow(g[0], l.p - l.r + k) * pow(g[1], l.r - k) * pow(g[2], l.lambda - l.p) *
                        pow(g[3], k) * pow(g[4], l.mu - l.q - k) * pow(g[5], l.q);
    out += term * coefficient(l, k);
  }
  return out;
}

Rational norm_sq_of(const Su3Label& l) {
  const int t2 = l.t2();
  // ((l+1)!(mu+p-q+1)! / (p! q! (mu-q)! (l-p)! (mu+p+1)! (l+mu-q+1)!)) * ((2t-r)! / ((2t)! r!))
  return rational_factorial_ratio({l.lambda + 1, l.mu + l.p - l.q + 1, t2 - l.r},
                                  {l.p, l.q, l.mu - l.q, l.lambda - l.p, l.mu + l.p + 1, l.lambda + l.mu - l.q + 1,
                                   t2, l.r});
}

}  // namespace

RationalPoly state_formula(const Su3Label& l) {
  if (!valid(l)) throw DomainError("invalid SU(3) label " + l.str());
  const auto s = su3_formula_space();
  std::vector<RationalPoly> g;
  for (int v = 0; v < 6; ++v) g.push_back(RationalPoly::variable(s, v));
  return assemble(l, g);
}

Su3State state_poly(const Su3Label& l) {
  if (!valid(l)) throw DomainError("invalid SU(3) label " + l.str());
  static std::mutex mu;
  static std::map<Su3Label, Su3State> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(l);
    if (it != cache.end()) return it->second;
  }
  const auto s = su3_space();
  auto z = [&](int i, int k) { return RationalPoly::variable(s, 3 * (i - 1) + (k - 1)); };
  auto minor = [&](int a, int b) { return z(1, a) * z(2, b) - z(1, b) * z(2, a); };
  // Delta_1 = [23], Delta_2 = [31], Delta_3 = [12]; the formula uses -Delta_2 = [13]
  std::vector<RationalPoly> g{z(1, 1), z(1, 2), z(1, 3), minor(2, 3), minor(1, 3), minor(1, 2)};
  Su3State st{l, assemble(l, g), norm_sq_of(l)};
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(l, st);
  return st;
}

RationalPoly op_t0_twice(const RationalPoly& p) {
  const auto b = su3_blocks();
  return apply_weyl(p, 0, 0, b) - apply_weyl(p, 1, 1, b);
}

RationalPoly op_y(const RationalPoly& p) {
  const auto b = su3_blocks();
  return apply_weyl(p, 0, 0, b) + apply_weyl(p, 1, 1, b) - apply_weyl(p, 2, 2, b) * Rational(2);
}

RationalPoly op_t_plus(const RationalPoly& p) { return apply_weyl(p, 0, 1, su3_blocks()); }
RationalPoly op_t_minus(const RationalPoly& p) { return apply_weyl(p, 1, 0, su3_blocks()); }

RationalPoly op_casimir(const RationalPoly& p) {
  const RationalPoly t0 = op_t0_twice(p) * Rational(1, 2);
  const RationalPoly t0t0 = op_t0_twice(t0) * Rational(1, 2);
  return t0t0 - t0 + op_t_plus(op_t_minus(p));
}

RationalPoly op_t12(const RationalPoly& p) {
  // columns as blocks: sum_k z1_k d/dz2_k
  return apply_weyl(p, 0, 1, Blocks{{0, 3}, {1, 4}, {2, 5}});
}

QuantumReport check_quantum_numbers(const Su3State& s) {
  QuantumReport rep;
  const Su3Label& l = s.label;
  auto expect = [&](const std::string& name, const RationalPoly& got, const Rational& eig) {
    const RationalPoly want = s.shape * eig;
    if (!(got == want)) {
      rep.ok = false;
      rep.failures.push_back(l.str() + ": " + name + " eigenvalue " + eig.get_str() + " fails, residual terms " +
                             std::to_string((got - want).size()));
    }
  };
  const Rational t(l.t2(), 2), t0(l.t02(), 2);
  expect("2T0", op_t0_twice(s.shape), Rational(l.t02()));
  expect("Y", op_y(s.shape), Rational(l.y()));
  expect("T^2", op_casimir(s.shape), t * (t + 1));
  expect("T12", op_t12(s.shape), Rational(0));
  if (s.shape.is_zero()) {
    rep.ok = false;
    rep.failures.push_back(l.str() + ": zero polynomial");
  }
  return rep;
}

RConjugate r_conjugate(const Su3Label& l) {
  if (!valid(l)) throw DomainError("invalid SU(3) label " + l.str());
  RConjugate rc;
  rc.image = {l.mu, l.lambda, l.mu - l.q, l.lambda - l.p, l.t2() - l.r};
  // (y - 2 t0) / 2 = -lambda - mu + p + 2q + r
  const int diff = l.y() - l.t02();
  rc.integral = diff % 2 == 0;
  const int e = diff / 2;
  rc.phase = (e % 2 == 0) ? 1 : -1;
  return rc;
}

bool r_conjugate_support_check(const Su3Label& l) {
  const RConjugate rc = r_conjugate(l);
  std::set<Monomial> swapped, image;
  const RationalPoly own = state_formula(l), other = state_formula(rc.image);
  for (const auto& [m, c] : own.terms()) {
    Monomial s;
    for (int k = 0; k < 3; ++k) {
      s.e[k] = m.e[k + 3];
      s.e[k + 3] = m.e[k];
    }
    swapped.insert(s);
  }
  for (const auto& [m, c] : other.terms()) image.insert(m);
  return swapped == image;
}

GelfandPattern label_to_pattern(const Su3Label& l) {
  if (!valid(l)) throw DomainError("invalid SU(3) label " + l.str());
  GelfandPattern g;
  g.rows = {{l.lambda + l.mu, l.mu, 0}, {l.mu + l.p, l.q}, {l.mu + l.p - l.r}};
  return g;
}

Su3Label pattern_to_label(const GelfandPattern& g) {
  if (g.n() != 3 || !validate(g)) throw DomainError("not a valid SU(3) pattern");
  const int shift = g.h(3, 3);
  const int mu = g.h(2, 3) - shift, lambda = g.h(1, 3) - g.h(2, 3);
  const int p = g.h(1, 2) - shift - mu, q = g.h(2, 2) - shift, r = g.h(1, 2) - g.h(1, 1);
  Su3Label l{lambda, mu, p, q, r};
  if (!valid(l)) throw DomainError("pattern has no SU(3) label");
  return l;
}

BiedenharnLabels biedenharn_map(const GelfandPattern& g) {
  if (g.n() != 3 || !validate(g)) throw DomainError("not a valid SU(3) pattern");
  const int h13 = g.h(1, 3), h23 = g.h(2, 3), h33 = g.h(3, 3);
  const int h12 = g.h(1, 2), h22 = g.h(2, 2), h11 = g.h(1, 1);
  BiedenharnLabels b;
  b.j2 = h12 - h22;
  b.m2 = 2 * h11 - h12 - h22;
  b.jp2 = h13 - h23;
  b.j32 = h13 - h12 + h23 - h22;
  // nu = j1 - j2 with 2 j1 = h11 - h33, 2 j2 = h12 + h22 - h11
  b.nu2 = (h11 - h33) - (h12 + h22 - h11);
  return b;
}

}  // namespace grouprep
