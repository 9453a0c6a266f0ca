#include "grouprep/gelfand.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <functional>
#include <sstream>

namespace grouprep {

std::string GelfandPattern::str() const {
  std::ostringstream os;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (r) os << "/";
    for (size_t i = 0; i < rows[r].size(); ++i) {
      if (i) os << ",";
      os << rows[r][i];
    }
  }
  return os.str();
}

GelfandPattern GelfandPattern::parse(const std::string& text) {
  GelfandPattern p;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, '/')) {
    std::vector<int> entries;
    std::stringstream es(row);
    std::string e;
    while (std::getline(es, e, ',')) {
      try {
        entries.push_back(std::stoi(e));
      } catch (const std::exception&) {
        throw StructuralError("bad pattern entry '" + e + "'");
      }
    }
    p.rows.push_back(entries);
  }
  const int n = p.n();
  for (int r = 0; r < n; ++r)
    if (static_cast<int>(p.rows[r].size()) != n - r) throw StructuralError("pattern rows are not triangular");
  if (n == 0) throw StructuralError("empty pattern");
  return p;
}

bool validate(const GelfandPattern& p) {
  const int n = p.n();
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(p.rows[r].size()) != n - r) return false;
    for (int x : p.rows[r])
      if (x < 0) return false;
  }
  for (int r = 0; r + 1 < n; ++r) {
    const auto& up = p.rows[r];
    const auto& down = p.rows[r + 1];
    for (size_t l = 0; l < down.size(); ++l)
      if (!(up[l] >= down[l] && down[l] >= up[l + 1])) return false;
  }
  return true;
}

namespace {
void fill_rows(GelfandPattern& cur, std::vector<GelfandPattern>& out) {
  const std::vector<int> up = cur.rows.back();
  if (up.size() == 1) {
    out.push_back(cur);
    return;
  }
  std::vector<int> row(up.size() - 1);
  // odometer over entries, leftmost slowest, each ascending
  std::function<void(size_t)> rec = [&](size_t l) {
    if (l == row.size()) {
      cur.rows.push_back(row);
      fill_rows(cur, out);
      cur.rows.pop_back();
      return;
    }
    for (int v = up[l + 1]; v <= up[l]; ++v) {
      row[l] = v;
      rec(l + 1);
    }
  };
  rec(0);
}
}  // namespace

std::vector<GelfandPattern> enumerate(const std::vector<int>& top) {
  if (top.empty()) throw DomainError("empty top row");
  for (size_t i = 0; i < top.size(); ++i) {
    if (top[i] < 0) throw DomainError("negative top-row entry");
    if (i + 1 < top.size() && top[i] < top[i + 1]) throw DomainError("top row must be non-increasing");
  }
  GelfandPattern cur;
  cur.rows.push_back(top);
  std::vector<GelfandPattern> out;
  fill_rows(cur, out);
  return out;
}

std::map<std::pair<int, int>, std::pair<int, int>> lr_exponents(const GelfandPattern& p) {
  if (!validate(p)) throw DomainError("invalid Gel'fand pattern " + p.str());
  std::map<std::pair<int, int>, std::pair<int, int>> out;
  const int n = p.n();
  for (int l = 2; l <= n; ++l)
    for (int m = 1; m < l; ++m) out[{m, l}] = {p.h(m, l) - p.h(m, l - 1), p.h(m, l - 1) - p.h(m + 1, l)};
  return out;
}

bool BfrTable::valid() const {
  bool one = false, zero = false;
  for (int b : bits) {
    if (b != 0 && b != 1) return false;
    (b ? one : zero) = true;
  }
  return one && zero;
}

std::string BfrTable::str() const {
  std::string s;
  for (int b : bits) s += b ? '1' : '0';
  return s;
}

BfrTable BfrTable::from_number(int n, int value) {
  BfrTable t;
  for (int i = n - 1; i >= 0; --i) t.bits.push_back((value >> i) & 1);
  return t;
}

int BfrTable::number() const {
  int v = 0;
  for (int b : bits) v = 2 * v + b;
  return v;
}

std::string phi_str(const PhiWord& w) {
  // y factors before x factors, each ordered by (lambda, mu)
  std::string s;
  for (char kind : {'y', 'x'}) {
    std::vector<std::tuple<int, int, int>> items;
    for (const auto& [key, pw] : w)
      if (std::get<0>(key) == kind) items.emplace_back(std::get<2>(key), std::get<1>(key), pw);
    std::sort(items.begin(), items.end());
    for (auto [l, m, pw] : items) {
      s += std::string(1, kind) + "(" + std::to_string(m) + "," + std::to_string(l) + ")";
      if (pw > 1) s += "^" + std::to_string(pw);
    }
  }
  return s.empty() ? "1" : s;
}

PhiWord phi_parse(const std::string& text) {
  PhiWord w;
  size_t i = 0;
  while (i < text.size()) {
    char kind = text[i];
    if (kind != 'x' && kind != 'y') throw StructuralError("bad phi word " + text);
    size_t close = text.find(')', i);
    if (close == std::string::npos) throw StructuralError("bad phi word " + text);
    int m = 0, l = 0;
    if (std::sscanf(text.substr(i + 1, close - i).c_str(), "(%d,%d)", &m, &l) != 2)
      throw StructuralError("bad phi word " + text);
    i = close + 1;
    int pw = 1;
    if (i < text.size() && text[i] == '^') {
      size_t end = i + 1;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      pw = std::stoi(text.substr(i + 1, end - i - 1));
      i = end;
    }
    w[{kind, m, l}] += pw;
  }
  return w;
}

BfrImage bfr_maps(const BfrTable& t) {
  if (!t.valid()) throw DomainError("invalid binary table " + t.str());
  const int n = static_cast<int>(t.bits.size());
  BfrImage img;
  for (int i = 0; i < n; ++i)
    if (t.bits[i]) img.minor_columns.push_back(i + 1);
  // row m: one entry 1 per selected column <= m
  for (int m = n; m >= 1; --m) {
    int ones = 0;
    for (int i = 0; i < m; ++i) ones += t.bits[i];
    std::vector<int> row(m, 0);
    for (int i = 0; i < ones && i < m; ++i) row[i] = 1;
    img.pattern.rows.push_back(row);
  }
  bool seen_zero = false, seen_one = false;
  int ones_before = 0;
  for (int i = 0; i < n; ++i) {
    const int box = i + 1;
    if (t.bits[i]) {
      if (seen_zero) img.phi[{'y', ones_before + 1, box}] += 1;
      seen_one = true;
      ++ones_before;
    } else {
      if (seen_one) img.phi[{'x', ones_before, box}] += 1;
      seen_zero = true;
    }
  }
  return img;
}

BfrTable complement(const BfrTable& t) {
  if (!t.valid()) throw DomainError("invalid binary table " + t.str());
  BfrTable c = t;
  for (auto& b : c.bits) b = 1 - b;
  return c;
}

std::vector<BfrTable> all_tables(int n) {
  if (n < 2 || n > 16) throw DomainError("table size out of range");
  std::vector<BfrTable> out;
  for (int v = 1; v < (1 << n) - 1; ++v) out.push_back(BfrTable::from_number(n, v));
  return out;
}

PhiWord reflect(const PhiWord& w) {
  PhiWord r;
  for (const auto& [key, pw] : w) {
    auto [kind, m, l] = key;
    r[{kind == 'y' ? 'x' : 'y', l - m, l}] += pw;
  }
  return r;
}

PhiWord phi_from_exponents(const GelfandPattern& p) {
  PhiWord w;
  for (const auto& [key, lr] : lr_exponents(p)) {
    auto [m, l] = key;
    if (lr.first) w[{'y', m, l}] += lr.first;
    if (lr.second) w[{'x', m, l}] += lr.second;
  }
  return w;
}

namespace {
void check_semi_maximal(const std::vector<int>& hn, const std::vector<int>& hn1) {
  if (hn.size() < 2 || hn1.size() + 1 != hn.size()) throw DomainError("row lengths must be n and n-1");
  for (size_t i = 0; i < hn1.size(); ++i)
    if (!(hn[i] >= hn1[i] && hn1[i] >= hn[i + 1])) throw DomainError("rows are not between");
  for (size_t i = 0; i + 1 < hn.size(); ++i)
    if (hn[i] < hn[i + 1]) throw DomainError("top row must be non-increasing");
}

std::complex<double> minor(const Eigen::MatrixXcd& U, const std::vector<int>& rows, const std::vector<int>& cols) {
  const int k = static_cast<int>(rows.size());
  Eigen::MatrixXcd S(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) S(a, b) = U(rows[a], cols[b]);
  return S.determinant();
}
}  // namespace

Rational semi_maximal_norm(const std::vector<int>& hn, const std::vector<int>& hn1) {
  check_semi_maximal(hn, hn1);
  const int n = static_cast<int>(hn.size());
  auto p = [&](int i) { return static_cast<long>(hn[i - 1] + n - i); };
  auto q = [&](int i) { return static_cast<long>(hn1[i - 1] + n - 1 - i); };
  std::vector<long> num, den;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i; j <= n - 1; ++j) {
      num.push_back(q(i) - p(j + 1));
      num.push_back(p(i) - q(j) - 1);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) den.push_back(p(i) - p(j) - 1);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) den.push_back(q(i) - q(j));
  return rational_factorial_ratio(num, den);
}

std::complex<double> semi_maximal_D(const std::vector<int>& hn, const std::vector<int>& hn1,
                                    const Eigen::MatrixXcd& U) {
  check_semi_maximal(hn, hn1);
  const int n = static_cast<int>(hn.size());
  if (U.rows() != n || U.cols() != n) throw DomainError("matrix size does not match the pattern");
  std::complex<double> v = 1.0;
  for (int k = 1; k <= n - 1; ++k) {
    std::vector<int> lead, edge;
    for (int i = 0; i < k; ++i) lead.push_back(i);
    for (int i = 0; i < k - 1; ++i) edge.push_back(i);
    edge.push_back(n - 1);
    const int a = hn1[k - 1] - hn[k];
    const int b = hn[k - 1] - hn1[k - 1];
    if (a) v *= std::pow(minor(U, lead, lead), a);
    if (b) v *= std::pow(minor(U, edge, lead), b);
  }
  return v / std::sqrt(semi_maximal_norm(hn, hn1).get_d());
}

}  // namespace grouprep
