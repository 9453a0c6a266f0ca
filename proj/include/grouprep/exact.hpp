#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace grouprep {

using Integer = mpz_class;
using Rational = mpq_class;

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sum of q_d * sqrt(d), d squarefree. The empty map is zero.
class RadicalScalar {
 public:
  RadicalScalar() = default;
  RadicalScalar(long v);  // NOLINT
  RadicalScalar(const Rational& q);  // NOLINT
  RadicalScalar(const Rational& q, const Integer& radicand);

  const std::map<Integer, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool is_single_term() const { return terms_.size() == 1; }
  Rational rational_part() const;
  double to_double() const;
  // exact sign for single-term values, float sign otherwise
  int sign() const;
  std::string str() const;

  RadicalScalar operator-() const;
  RadicalScalar& operator+=(const RadicalScalar& o);
  RadicalScalar& operator-=(const RadicalScalar& o);
  RadicalScalar& operator*=(const RadicalScalar& o);
  RadicalScalar& operator/=(const RadicalScalar& o);

  friend RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) { return a += b; }
  friend RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) { return a -= b; }
  friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b);
  friend RadicalScalar operator/(RadicalScalar a, const RadicalScalar& b) { return a /= b; }
  friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const RadicalScalar& a, const RadicalScalar& b) { return !(a == b); }

 private:
  void add_term(const Integer& d, const Rational& q);
  std::map<Integer, Rational> terms_;
};

RadicalScalar radical_add(const RadicalScalar& a, const RadicalScalar& b);
RadicalScalar radical_mul(const RadicalScalar& a, const RadicalScalar& b);
RadicalScalar sqrt_rational(const Rational& q);

// n = s^2 * f with f squarefree; returns {s, f}
std::pair<Integer, Integer> split_square(const Integer& n);

void set_factorial_cap(unsigned cap);
Integer factorial(long n);
Integer binomial(long n, long k);
Rational rational_factorial_ratio(const std::vector<long>& num, const std::vector<long>& den);

struct RadicalTerm {
  std::string coeff;  // "p/q"
  Integer radicand;
};
std::vector<RadicalTerm> serialize(const RadicalScalar& x);

}  // namespace grouprep
