#pragma once

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "grouprep/exact.hpp"

namespace grouprep {

// rows[0] is the top row (n entries), rows[n-1] has one entry.
struct GelfandPattern {
  std::vector<std::vector<int>> rows;

  int n() const { return static_cast<int>(rows.size()); }
  // h_{i,m}: i-th entry (1-based) of the row with m entries
  int h(int i, int m) const { return rows[n() - m][i - 1]; }
  std::string str() const;
  static GelfandPattern parse(const std::string& text);
  auto operator<=>(const GelfandPattern&) const = default;
};

bool validate(const GelfandPattern& p);
std::vector<GelfandPattern> enumerate(const std::vector<int>& top);

// key (m, l) with 1 <= m < l <= n  ->  (L, R)
std::map<std::pair<int, int>, std::pair<int, int>> lr_exponents(const GelfandPattern& p);

struct BfrTable {
  std::vector<int> bits;  // box 1 first
  bool valid() const;
  std::string str() const;
  static BfrTable from_number(int n, int value);  // box 1 holds the most significant bit
  int number() const;
};

// (kind, mu, lambda) -> power; kind is 'x' or 'y'
using PhiWord = std::map<std::tuple<char, int, int>, int>;
std::string phi_str(const PhiWord& w);
PhiWord phi_parse(const std::string& text);

struct BfrImage {
  std::vector<int> minor_columns;  // 1-based columns i_1 < ... < i_l; rows are 1..l
  GelfandPattern pattern;
  PhiWord phi;
};

BfrImage bfr_maps(const BfrTable& t);
BfrTable complement(const BfrTable& t);
std::vector<BfrTable> all_tables(int n);

// y(m,l) <-> x(l-m,l)
PhiWord reflect(const PhiWord& w);
// prod y(m,l)^L(m,l) x(m,l)^R(m,l)
PhiWord phi_from_exponents(const GelfandPattern& p);

// Normalization N of the semi-maximal formula: element = prod(minors) / sqrt(N)
Rational semi_maximal_norm(const std::vector<int>& hn, const std::vector<int>& hn1);
std::complex<double> semi_maximal_D(const std::vector<int>& hn, const std::vector<int>& hn1,
                                    const Eigen::MatrixXcd& U);

}  // namespace grouprep
