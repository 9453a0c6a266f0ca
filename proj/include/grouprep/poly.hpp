#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <type_traits>
#include <vector>

#include "grouprep/exact.hpp"

namespace grouprep {

using cplx = std::complex<double>;

constexpr int kMaxVars = 24;
constexpr double kComplexDropTol = 1e-14;

struct Monomial {
  std::array<uint8_t, kMaxVars> e{};
  auto operator<=>(const Monomial&) const = default;
  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
};

// prod_k e_k!
Integer monomial_weight(const Monomial& m);

class VariableSpace {
 public:
  explicit VariableSpace(std::vector<std::string> names);
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  int index(const std::string& name) const;
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

using SpacePtr = std::shared_ptr<const VariableSpace>;
SpacePtr make_space(std::vector<std::string> names);

// index blocks: each block lists the variables z_1..z_n of one row vector
using Blocks = std::vector<std::vector<int>>;

template <class C>
struct Coeff;

template <>
struct Coeff<Rational> {
  static bool zero(const Rational& c) { return c == 0; }
  static Rational conj(const Rational& c) { return c; }
  static Rational from_int(const Integer& n) { return Rational(n); }
  static cplx to_complex(const Rational& c) { return {c.get_d(), 0.0}; }
};

template <>
struct Coeff<RadicalScalar> {
  static bool zero(const RadicalScalar& c) { return c.is_zero(); }
  static RadicalScalar conj(const RadicalScalar& c) { return c; }
  static RadicalScalar from_int(const Integer& n) { return RadicalScalar(Rational(n)); }
  static cplx to_complex(const RadicalScalar& c) { return {c.to_double(), 0.0}; }
};

template <>
struct Coeff<cplx> {
  static bool zero(const cplx& c) { return std::abs(c) < kComplexDropTol; }
  static cplx conj(const cplx& c) { return std::conj(c); }
  static cplx from_int(const Integer& n) { return {n.get_d(), 0.0}; }
  static cplx to_complex(const cplx& c) { return c; }
};

template <class C>
class BargmannPoly {
 public:
  using Terms = std::map<Monomial, C>;

  BargmannPoly() = default;
  explicit BargmannPoly(SpacePtr space) : space_(std::move(space)) {}

  static BargmannPoly constant(SpacePtr space, const C& c) {
    BargmannPoly p(std::move(space));
    p.add(Monomial{}, c);
    return p;
  }
  static BargmannPoly variable(SpacePtr space, int idx, int power = 1) {
    BargmannPoly p(std::move(space));
    Monomial m;
    m.e[idx] = static_cast<uint8_t>(power);
    p.add(m, C(1));
    return p;
  }

  const SpacePtr& space() const { return space_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  C coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add(const Monomial& m, const C& c) {
    if constexpr (std::is_same_v<C, Rational>) {
      if (mpz_cmp_ui(c.get_den_mpz_t(), 1) != 0) {
        Rational k = c;
        k.canonicalize();
        add_canonical(m, k);
        return;
      }
    }
    add_canonical(m, c);
  }

 private:
  void add_canonical(const Monomial& m, const C& c) {
    if (Coeff<C>::zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (Coeff<C>::zero(it->second)) terms_.erase(it);
  }

 public:
  BargmannPoly& operator+=(const BargmannPoly& o) {
    check_space(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  BargmannPoly& operator-=(const BargmannPoly& o) {
    check_space(o);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  BargmannPoly& operator*=(const C& s) {
    if (Coeff<C>::zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      if (Coeff<C>::zero(it->second)) it = terms_.erase(it);
      else ++it;
    }
    return *this;
  }

  friend BargmannPoly operator+(BargmannPoly a, const BargmannPoly& b) { return a += b; }
  friend BargmannPoly operator-(BargmannPoly a, const BargmannPoly& b) { return a -= b; }
  friend BargmannPoly operator*(BargmannPoly a, const C& s) { return a *= s; }
  friend BargmannPoly operator*(const C& s, BargmannPoly a) { return a *= s; }

  friend BargmannPoly operator*(const BargmannPoly& a, const BargmannPoly& b) {
    a.check_space(b);
    BargmannPoly r(a.space_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        for (int k = 0; k < kMaxVars; ++k) m.e[k] = static_cast<uint8_t>(ma.e[k] + mb.e[k]);
        r.add(m, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const BargmannPoly& a, const BargmannPoly& b) { return a.terms_ == b.terms_; }

  void check_space(const BargmannPoly& o) const {
    if (space_ && o.space_ && space_ != o.space_ && space_->names() != o.space_->names())
      throw StructuralError("polynomials live in different variable spaces");
  }

 private:
  SpacePtr space_;
  Terms terms_;
};

using RationalPoly = BargmannPoly<Rational>;
using ExactPoly = BargmannPoly<RadicalScalar>;
using ComplexPoly = BargmannPoly<cplx>;

template <class C>
BargmannPoly<C> pow(const BargmannPoly<C>& p, int n) {
  auto r = BargmannPoly<C>::constant(p.space(), C(1));
  for (int i = 0; i < n; ++i) r = r * p;
  return r;
}

// product truncated to total degree <= cap
template <class C>
BargmannPoly<C> mul_truncated(const BargmannPoly<C>& a, const BargmannPoly<C>& b, int cap) {
  a.check_space(b);
  BargmannPoly<C> r(a.space());
  for (const auto& [ma, ca] : a.terms()) {
    int da = ma.degree();
    if (da > cap) continue;
    for (const auto& [mb, cb] : b.terms()) {
      if (da + mb.degree() > cap) continue;
      Monomial m;
      for (int k = 0; k < kMaxVars; ++k) m.e[k] = static_cast<uint8_t>(ma.e[k] + mb.e[k]);
      r.add(m, ca * cb);
    }
  }
  return r;
}

template <class C>
BargmannPoly<cplx> to_complex(const BargmannPoly<C>& p) {
  BargmannPoly<cplx> r(p.space());
  for (const auto& [m, c] : p.terms()) r.add(m, Coeff<C>::to_complex(c));
  return r;
}

ExactPoly to_exact(const RationalPoly& p, const RadicalScalar& scale = RadicalScalar(1));

// Bargmann pairing sum_m conj(p_m) q_m prod_k m_k!
template <class C>
C bargmann_inner(const BargmannPoly<C>& p, const BargmannPoly<C>& q) {
  p.check_space(q);
  C s(0);
  const auto& small = p.size() <= q.size() ? p.terms() : q.terms();
  const auto& large = p.size() <= q.size() ? q.terms() : p.terms();
  const bool p_small = p.size() <= q.size();
  for (const auto& [m, c] : small) {
    auto it = large.find(m);
    if (it == large.end()) continue;
    C w = Coeff<C>::from_int(monomial_weight(m));
    if (p_small) s += Coeff<C>::conj(c) * it->second * w;
    else s += Coeff<C>::conj(it->second) * c * w;
  }
  return s;
}

cplx bargmann_inner(const ExactPoly& p, const ComplexPoly& q);
cplx bargmann_inner(const ComplexPoly& p, const ExactPoly& q);

// pairing without conjugation, used for generating-function identities
cplx bargmann_bilinear(const ComplexPoly& p, const ComplexPoly& q);

template <class C>
BargmannPoly<C> derivative(const BargmannPoly<C>& p, int var) {
  BargmannPoly<C> r(p.space());
  for (const auto& [m, c] : p.terms()) {
    if (m.e[var] == 0) continue;
    Monomial n = m;
    n.e[var] -= 1;
    r.add(n, c * Coeff<C>::from_int(Integer(m.e[var])));
  }
  return r;
}

template <class C>
BargmannPoly<C> multiply_variable(const BargmannPoly<C>& p, int var) {
  BargmannPoly<C> r(p.space());
  for (const auto& [m, c] : p.terms()) {
    Monomial n = m;
    n.e[var] += 1;
    r.add(n, c);
  }
  return r;
}

// E_ij = sum over blocks of z_i d/dz_j (indices are positions inside each block)
template <class C>
BargmannPoly<C> apply_weyl(const BargmannPoly<C>& p, int i, int j, const Blocks& blocks) {
  BargmannPoly<C> r(p.space());
  for (const auto& b : blocks) {
    if (i < 0 || j < 0 || i >= static_cast<int>(b.size()) || j >= static_cast<int>(b.size()))
      throw StructuralError("Weyl operator index outside block");
    const int vi = b[i], vj = b[j];
    for (const auto& [m, c] : p.terms()) {
      if (m.e[vj] == 0) continue;
      Monomial n = m;
      n.e[vj] -= 1;
      n.e[vi] += 1;
      r.add(n, c * Coeff<C>::from_int(Integer(m.e[vj])));
    }
  }
  return r;
}

// Each block row vector z is replaced by z*M.
ComplexPoly substitute_linear(const ComplexPoly& p, const Eigen::MatrixXcd& M, const Blocks& blocks);
ExactPoly substitute_linear(const ExactPoly& p, const std::vector<std::vector<Rational>>& M, const Blocks& blocks);
RationalPoly substitute_linear(const RationalPoly& p, const std::vector<std::vector<Rational>>& M,
                               const Blocks& blocks);

template <class C>
BargmannPoly<C> exp_truncate(const BargmannPoly<C>& s, int degree_cap = 12) {
  if (degree_cap < 0) throw DomainError("negative degree cap");
  for (const auto& [m, c] : s.terms())
    if (m.degree() == 0) throw DomainError("exp_truncate needs a series without constant term");
  auto result = BargmannPoly<C>::constant(s.space(), C(1));
  auto term = result;
  for (int k = 1; k <= degree_cap; ++k) {
    term = mul_truncated(term, s, degree_cap);
    if (term.is_zero()) break;
    term *= C(Rational(1, k));
    result += term;
  }
  return result;
}

template <>
inline BargmannPoly<cplx> exp_truncate(const BargmannPoly<cplx>& s, int degree_cap) {
  if (degree_cap < 0) throw DomainError("negative degree cap");
  for (const auto& [m, c] : s.terms())
    if (m.degree() == 0) throw DomainError("exp_truncate needs a series without constant term");
  auto result = BargmannPoly<cplx>::constant(s.space(), cplx(1.0));
  auto term = result;
  for (int k = 1; k <= degree_cap; ++k) {
    term = mul_truncated(term, s, degree_cap);
    if (term.is_zero()) break;
    term *= cplx(1.0 / k);
    result += term;
  }
  return result;
}

// (det X)^-1 exp(A^T X^-1 B); hermitian part of X must be positive definite
cplx gaussian_pairing(const Eigen::MatrixXcd& X, const Eigen::VectorXcd& A, const Eigen::VectorXcd& B);

std::string to_string(const RationalPoly& p);
std::string to_string(const ExactPoly& p);

}  // namespace grouprep
