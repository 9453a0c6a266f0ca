#include "grouprep/exact.hpp"

#include <cmath>
#include <mutex>
#include <sstream>

namespace grouprep {

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    const unsigned long limit = 20000;
    std::vector<bool> sieve(limit + 1, true);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= limit; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= limit; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

std::mutex g_fact_mutex;
std::vector<Integer> g_fact{Integer(1)};
unsigned g_fact_cap = 200;

}  // namespace

std::pair<Integer, Integer> split_square(const Integer& n) {
  if (n < 0) throw DomainError("split_square of negative integer");
  if (n == 0) return {Integer(0), Integer(1)};
  Integer rest = n, square = 1, free = 1;
  for (unsigned long p : small_primes()) {
    if (rest == 1) break;
    if (Integer(p) * p > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) square *= p;
    if (e % 2) free *= p;
  }
  if (rest != 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      square *= r;
    } else {
      // cofactor has no prime below the sieve limit; products of factorials never get here
      free *= rest;
    }
  }
  return {square, free};
}

RadicalScalar::RadicalScalar(long v) {
  if (v != 0) terms_[Integer(1)] = Rational(v);
}

RadicalScalar::RadicalScalar(const Rational& q) {
  if (q != 0) {
    Rational c = q;
    c.canonicalize();
    terms_[Integer(1)] = c;
  }
}

RadicalScalar::RadicalScalar(const Rational& q, const Integer& radicand) {
  if (radicand < 0) throw DomainError("negative radicand");
  if (q == 0 || radicand == 0) return;
  auto [s, f] = split_square(radicand);
  Rational c = q * Rational(s);
  c.canonicalize();
  terms_[f] = c;
}

void RadicalScalar::add_term(const Integer& d, const Rational& q) {
  if (q == 0) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, q);
    return;
  }
  it->second += q;
  if (it->second == 0) terms_.erase(it);
}

bool RadicalScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational RadicalScalar::rational_part() const {
  auto it = terms_.find(Integer(1));
  return it == terms_.end() ? Rational(0) : it->second;
}

double RadicalScalar::to_double() const {
  double s = 0.0;
  for (const auto& [d, q] : terms_) s += q.get_d() * std::sqrt(d.get_d());
  return s;
}

int RadicalScalar::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sgn(terms_.begin()->second);
  double v = to_double();
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

std::string RadicalScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, q] : terms_) {
    if (!first) os << (q > 0 ? " + " : " - ");
    else if (q < 0) os << "-";
    first = false;
    Rational a = abs(q);
    if (d == 1) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "sqrt(" << d.get_str() << ")";
    }
  }
  return os.str();
}

RadicalScalar RadicalScalar::operator-() const {
  RadicalScalar r = *this;
  for (auto& [d, q] : r.terms_) q = -q;
  return r;
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& o) {
  for (const auto& [d, q] : o.terms_) add_term(d, q);
  return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& o) {
  for (const auto& [d, q] : o.terms_) add_term(d, -q);
  return *this;
}

RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
  RadicalScalar r;
  for (const auto& [d1, q1] : a.terms_) {
    for (const auto& [d2, q2] : b.terms_) {
      if (d1 == 1 || d2 == 1) {
        r.add_term(d1 == 1 ? d2 : d1, q1 * q2);
        continue;
      }
      Integer g;
      mpz_gcd(g.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
      // d1 d2 = g^2 (d1/g)(d2/g) and the cofactors are coprime squarefree
      Integer f = (d1 / g) * (d2 / g);
      r.add_term(f, q1 * q2 * Rational(g));
    }
  }
  return r;
}

RadicalScalar& RadicalScalar::operator*=(const RadicalScalar& o) { return *this = *this * o; }

RadicalScalar& RadicalScalar::operator/=(const RadicalScalar& o) {
  if (o.terms_.empty()) throw DomainError("division by zero radical");
  if (o.terms_.size() != 1) throw DomainError("division by a multi-term radical is not supported");
  const auto& [d, q] = *o.terms_.begin();
  // 1/(q sqrt d) = sqrt(d) / (q d)
  RadicalScalar inv(Rational(1) / (q * Rational(d)), d);
  return *this = *this * inv;
}

RadicalScalar radical_add(const RadicalScalar& a, const RadicalScalar& b) { return a + b; }
RadicalScalar radical_mul(const RadicalScalar& a, const RadicalScalar& b) { return a * b; }

RadicalScalar sqrt_rational(const Rational& q) {
  if (q < 0) throw DomainError("sqrt of negative rational");
  if (q == 0) return {};
  // sqrt(a/b) = sqrt(a b) / b
  Integer a = q.get_num(), b = q.get_den();
  return RadicalScalar(Rational(1, 1) / Rational(b), a * b);
}

void set_factorial_cap(unsigned cap) {
  std::lock_guard<std::mutex> lock(g_fact_mutex);
  g_fact_cap = cap;
  if (g_fact.size() > cap + 1) g_fact.resize(cap + 1);
}

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  std::lock_guard<std::mutex> lock(g_fact_mutex);
  if (static_cast<unsigned long>(n) <= g_fact_cap) {
    while (g_fact.size() <= static_cast<size_t>(n)) g_fact.push_back(g_fact.back() * Integer(g_fact.size()));
    return g_fact[n];
  }
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational rational_factorial_ratio(const std::vector<long>& num, const std::vector<long>& den) {
  Integer a = 1, b = 1;
  for (long n : num) a *= factorial(n);
  for (long n : den) b *= factorial(n);
  Rational r(a, b);
  r.canonicalize();
  return r;
}

std::vector<RadicalTerm> serialize(const RadicalScalar& x) {
  std::vector<RadicalTerm> out;
  for (const auto& [d, q] : x.terms()) {
    out.push_back({q.get_num().get_str() + "/" + q.get_den().get_str(), d});
  }
  return out;
}

}  // namespace grouprep
