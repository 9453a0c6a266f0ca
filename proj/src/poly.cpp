#include "grouprep/poly.hpp"

#include <sstream>

namespace grouprep {

Integer monomial_weight(const Monomial& m) {
  Integer w = 1;
  for (auto x : m.e)
    if (x > 1) w *= factorial(x);
  return w;
}

VariableSpace::VariableSpace(std::vector<std::string> names) : names_(std::move(names)) {
  if (static_cast<int>(names_.size()) > kMaxVars) throw StructuralError("too many variables");
  for (size_t i = 0; i < names_.size(); ++i)
    for (size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw StructuralError("duplicate variable name " + names_[i]);
}

int VariableSpace::index(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  throw StructuralError("unknown variable " + name);
}

SpacePtr make_space(std::vector<std::string> names) {
  return std::make_shared<const VariableSpace>(std::move(names));
}

ExactPoly to_exact(const RationalPoly& p, const RadicalScalar& scale) {
  ExactPoly r(p.space());
  for (const auto& [m, c] : p.terms()) r.add(m, RadicalScalar(c) * scale);
  return r;
}

cplx bargmann_inner(const ExactPoly& p, const ComplexPoly& q) { return bargmann_inner(to_complex(p), q); }
cplx bargmann_inner(const ComplexPoly& p, const ExactPoly& q) { return bargmann_inner(p, to_complex(q)); }

cplx bargmann_bilinear(const ComplexPoly& p, const ComplexPoly& q) {
  p.check_space(q);
  cplx s = 0;
  for (const auto& [m, c] : p.terms()) {
    auto it = q.terms().find(m);
    if (it == q.terms().end()) continue;
    s += c * it->second * monomial_weight(m).get_d();
  }
  return s;
}

namespace {

template <class C, class Entry, class Conv>
BargmannPoly<C> substitute_impl(const BargmannPoly<C>& p, const std::vector<std::vector<Entry>>& M,
                                const Blocks& blocks, Conv conv) {
  const int n = static_cast<int>(M.size());
  for (const auto& row : M)
    if (static_cast<int>(row.size()) != n) throw StructuralError("substitution matrix is not square");
  for (const auto& b : blocks)
    if (static_cast<int>(b.size()) != n) throw StructuralError("block length differs from matrix size");
  const auto& space = p.space();
  const int nv = space->size();
  // image of each variable as a linear form; untouched variables map to themselves
  std::vector<BargmannPoly<C>> image(nv);
  std::vector<bool> moved(nv, false);
  for (int v = 0; v < nv; ++v) image[v] = BargmannPoly<C>::variable(space, v);
  for (const auto& b : blocks) {
    for (int k = 0; k < n; ++k) {
      BargmannPoly<C> lin(space);
      for (int j = 0; j < n; ++j) {
        Monomial m;
        m.e[b[j]] = 1;
        lin.add(m, conv(M[j][k]));
      }
      image[b[k]] = lin;
      moved[b[k]] = true;
    }
  }
  std::vector<std::vector<BargmannPoly<C>>> powers(nv);
  auto power = [&](int v, int e) -> const BargmannPoly<C>& {
    auto& pv = powers[v];
    if (pv.empty()) pv.push_back(BargmannPoly<C>::constant(space, C(1)));
    while (static_cast<int>(pv.size()) <= e) pv.push_back(pv.back() * image[v]);
    return pv[e];
  };
  BargmannPoly<C> out(space);
  for (const auto& [m, c] : p.terms()) {
    BargmannPoly<C> term = BargmannPoly<C>::constant(space, c);
    Monomial fixed;
    for (int v = 0; v < nv; ++v) {
      if (m.e[v] == 0) continue;
      if (!moved[v]) {
        fixed.e[v] = m.e[v];
        continue;
      }
      term = term * power(v, m.e[v]);
    }
    for (const auto& [tm, tc] : term.terms()) {
      Monomial r = tm;
      for (int v = 0; v < nv; ++v) r.e[v] += fixed.e[v];
      out.add(r, tc);
    }
  }
  return out;
}

}  // namespace

ComplexPoly substitute_linear(const ComplexPoly& p, const Eigen::MatrixXcd& M, const Blocks& blocks) {
  if (M.rows() != M.cols()) throw StructuralError("substitution matrix is not square");
  std::vector<std::vector<cplx>> m(M.rows(), std::vector<cplx>(M.cols()));
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) m[i][j] = M(i, j);
  return substitute_impl(p, m, blocks, [](const cplx& x) { return x; });
}

ExactPoly substitute_linear(const ExactPoly& p, const std::vector<std::vector<Rational>>& M, const Blocks& blocks) {
  return substitute_impl(p, M, blocks, [](const Rational& x) { return RadicalScalar(x); });
}

RationalPoly substitute_linear(const RationalPoly& p, const std::vector<std::vector<Rational>>& M,
                               const Blocks& blocks) {
  return substitute_impl(p, M, blocks, [](const Rational& x) { return x; });
}

cplx gaussian_pairing(const Eigen::MatrixXcd& X, const Eigen::VectorXcd& A, const Eigen::VectorXcd& B) {
  if (X.rows() != X.cols() || A.size() != X.rows() || B.size() != X.rows())
    throw StructuralError("gaussian_pairing dimension mismatch");
  Eigen::MatrixXcd H = (X + X.adjoint()) / 2.0;
  Eigen::LLT<Eigen::MatrixXcd> llt(H);
  if (llt.info() != Eigen::Success) throw DomainError("hermitian part of X is not positive definite");
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(X);
  cplx det = lu.determinant();
  cplx e = (A.transpose() * lu.solve(B))(0, 0);
  return std::exp(e) / det;
}

namespace {
template <class C, class F>
std::string poly_str(const BargmannPoly<C>& p, F coeff_str) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << coeff_str(it->second) << ")";
    for (int v = 0; v < p.space()->size(); ++v) {
      int e = it->first.e[v];
      if (e == 0) continue;
      os << "*" << p.space()->name(v);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}
}  // namespace

std::string to_string(const RationalPoly& p) {
  return poly_str(p, [](const Rational& q) { return q.get_str(); });
}
std::string to_string(const ExactPoly& p) {
  return poly_str(p, [](const RadicalScalar& q) { return q.str(); });
}

}  // namespace grouprep
