#include "grouprep/repmat.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "grouprep/su2.hpp"
#include "grouprep/su3basis.hpp"

namespace grouprep {

namespace {

Eigen::Matrix3cd embed(const Eigen::Matrix2cd& V, int plane) {
  Eigen::Matrix3cd M = Eigen::Matrix3cd::Identity();
  M.block(plane, plane, 2, 2) = V;
  return M;
}

void check_unitary(const Eigen::MatrixXcd& U) {
  if (U.rows() != 3 || U.cols() != 3) throw DomainError("SU(3) representation needs a 3x3 matrix");
  const double dev = (U * U.adjoint() - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff();
  if (!(dev < 1e-10)) throw DomainError("input matrix is not unitary");
}

// exact matrix of the cyclic permutation e1 -> e2 -> e3 -> e1
const Eigen::MatrixXd& w_matrix(int lambda, int mu) {
  static std::mutex m;
  static std::map<std::pair<int, int>, Eigen::MatrixXd> cache;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_pair(lambda, mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const std::vector<std::vector<Rational>> P{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  const auto ls = labels(lambda, mu);
  const int dim = static_cast<int>(ls.size());
  std::vector<ExactPoly> states;
  for (const auto& l : ls) states.push_back(state_poly(l).poly());
  Eigen::MatrixXd W(dim, dim);
  for (int b = 0; b < dim; ++b) {
    const ExactPoly t = substitute_linear(states[b], P, su3_blocks());
    for (int a = 0; a < dim; ++a) W(a, b) = bargmann_inner(states[a], t).to_double();
  }
  return cache.emplace(key, W).first->second;
}

// block-diagonal action of embed12(U2(psi, theta, phi)) on the isospin multiplets
Eigen::MatrixXcd isospin_block(int lambda, int mu, double psi, double theta, double phi) {
  const auto ls = labels(lambda, mu);
  const int dim = static_cast<int>(ls.size());
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim, dim);
  for (int start = 0; start < dim;) {
    const int t2 = ls[start].t2();
    M.block(start, start, t2 + 1, t2 + 1) = d_matrix_closed(t2, psi, theta, phi);
    start += t2 + 1;
  }
  return M;
}

}  // namespace

Eigen::Matrix3cd angles_to_unitary(const Su3Angles& a) {
  const Eigen::Matrix2cd outer_p = u2_matrix(a.omega_prime[0], a.omega_prime[1], a.omega_prime[2]);
  const Eigen::Matrix2cd middle = u2_matrix(a.nu, a.chi, a.nu);
  const Eigen::Matrix2cd outer = u2_matrix(a.omega[0], a.omega[1], a.omega[2]);
  return embed(outer_p, 0) * embed(middle, 1) * embed(outer, 0);
}

RepMatrix rep_matrix_oracle(int lambda, int mu, const Eigen::MatrixXcd& U) {
  check_unitary(U);
  const auto ls = labels(lambda, mu);
  const int dim = static_cast<int>(ls.size());
  std::vector<ComplexPoly> states;
  for (const auto& l : ls) states.push_back(state_poly(l).complex_poly());
  RepMatrix r{lambda, mu, Eigen::MatrixXcd(dim, dim)};
  for (int b = 0; b < dim; ++b) {
    const ComplexPoly t = substitute_linear(states[b], U, su3_blocks());
    for (int a = 0; a < dim; ++a) r.entries(a, b) = bargmann_inner(states[a], t);
  }
  return r;
}

RepMatrix dmatrix_closed(int lambda, int mu, const Su3Angles& a) {
  const auto ls = labels(lambda, mu);
  const int dim = static_cast<int>(ls.size());
  const Eigen::MatrixXd& W = w_matrix(lambda, mu);
  Eigen::VectorXcd phase(dim);
  for (int i = 0; i < dim; ++i) {
    const int n2 = ls[i].q + ls[i].r, n3 = lambda + mu - ls[i].p - ls[i].q;
    phase(i) = std::polar(1.0, -a.nu / 2 * (n2 - n3));
  }
  const Eigen::MatrixXcd middle =
      phase.asDiagonal() * (W.cast<cplx>() * isospin_block(lambda, mu, 0, a.chi, 0) * W.transpose().cast<cplx>()) *
      phase.asDiagonal();
  RepMatrix r{lambda, mu, Eigen::MatrixXcd()};
  r.entries = isospin_block(lambda, mu, a.omega_prime[0], a.omega_prime[1], a.omega_prime[2]) * middle *
              isospin_block(lambda, mu, a.omega[0], a.omega[1], a.omega[2]);
  return r;
}

double gf_identity_check(const Eigen::Vector3cd& alpha, const Eigen::Vector3cd& alpha_p, const Eigen::Vector3cd& lam,
                         const Eigen::Vector3cd& lam_p, int degree_cap) {
  if (degree_cap < 0 || degree_cap > 16) throw DomainError("degree cap outside [0, 16]");
  auto dot = [](const Eigen::Vector3cd& x, const Eigen::Vector3cd& y) { return x.cwiseProduct(y).sum(); };
  const cplx ll = dot(lam, lam_p);
  if (!(std::abs(ll) < 1)) throw DomainError("|lambda . lambda'| must be below 1 for the series to converge");
  const int D = degree_cap;

  const auto s = su3_space();
  auto side = [&](const Eigen::Vector3cd& al, const Eigen::Vector3cd& la) {
    auto z = [&](int i, int k) { return ComplexPoly::variable(s, 3 * i + k); };
    auto minor = [&](int a, int b) { return z(0, a) * z(1, b) - z(0, b) * z(1, a); };
    ComplexPoly arg(s);
    for (int k = 0; k < 3; ++k) arg += z(0, k) * al(k);
    arg += minor(1, 2) * la(0) + minor(2, 0) * la(1) + minor(0, 1) * la(2);
    std::vector<ComplexPoly> graded(D + 1, ComplexPoly(s));
    const ComplexPoly full = exp_truncate(arg, D);
    for (const auto& [m, c] : full.terms()) graded[m.degree()].add(m, c);
    return graded;
  };
  const auto left = side(alpha, lam), right = side(alpha_p, lam_p);

  const cplx b = dot(alpha, alpha_p);
  const cplx c = dot(alpha, lam) * dot(alpha_p, lam_p);
  using Series = std::vector<cplx>;
  auto mul = [&](const Series& x, const Series& y) {
    Series r(D + 1, 0.0);
    for (int i = 0; i <= D; ++i)
      for (int j = 0; i + j <= D; ++j) r[i + j] += x[i] * y[j];
    return r;
  };
  Series inv(D + 1, 0.0);  // 1 / (1 - ll t^2)
  for (int k = 0, p = 0; p <= D; ++k, p += 2) inv[p] = std::pow(ll, k);
  Series num(D + 1, 0.0);
  if (D >= 1) num[1] = b;
  if (D >= 3) num[3] = -c;
  const Series g = mul(num, inv);
  Series e(D + 1, 0.0);
  e[0] = 1.0;
  for (int n = 1; n <= D; ++n) {
    cplx acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += static_cast<double>(k) * g[k] * e[n - k];
    e[n] = acc / static_cast<double>(n);
  }
  const Series rhs = mul(mul(inv, inv), e);

  double worst = 0;
  for (int d = 0; d <= D; ++d) worst = std::max(worst, std::abs(bargmann_bilinear(left[d], right[d]) - rhs[d]));
  return worst;
}

EntryExpansion rep_entry_expansion(int lambda, int mu, int a, int b) {
  const auto ls = labels(lambda, mu);
  const int dim = static_cast<int>(ls.size());
  if (a < 0 || b < 0 || a >= dim || b >= dim) throw DomainError("state index out of range");
  static const SpacePtr space = make_space({"z1_1", "z1_2", "z1_3", "z2_1", "z2_2", "z2_3", "u11", "u12", "u13",
                                            "u21", "u22", "u23", "u31", "u32", "u33"});
  const Su3State sa = state_poly(ls[a]), sb = state_poly(ls[b]);
  // z^i_k -> sum_j z^i_j u_jk
  std::vector<std::vector<RationalPoly>> powers(6);
  int top = 0;
  for (const auto& [m, c] : sb.shape.terms())
    for (int v = 0; v < 6; ++v) top = std::max(top, static_cast<int>(m.e[v]));
  for (int v = 0; v < 6; ++v) {
    const int i = v / 3, k = v % 3;
    RationalPoly img(space);
    for (int j = 0; j < 3; ++j)
      img += RationalPoly::variable(space, 3 * i + j) * RationalPoly::variable(space, 6 + 3 * j + k);
    powers[v].push_back(RationalPoly::constant(space, Rational(1)));
    for (int p = 1; p <= top; ++p) powers[v].push_back(powers[v].back() * img);
  }
  std::map<std::array<int, 9>, Rational> acc;
  for (const auto& [m, c] : sb.shape.terms()) {
    RationalPoly t = RationalPoly::constant(space, c);
    for (int v = 0; v < 6; ++v)
      if (m.e[v]) t = t * powers[v][m.e[v]];
    for (const auto& [tm, tc] : t.terms()) {
      Monomial zpart;
      for (int v = 0; v < 6; ++v) zpart.e[v] = tm.e[v];
      const Rational ca = sa.shape.coeff(zpart);
      if (ca == 0) continue;
      std::array<int, 9> e{};
      for (int k = 0; k < 9; ++k) e[k] = tm.e[6 + k];
      acc[e] += ca * tc * Rational(monomial_weight(zpart));
    }
  }
  const double scale = std::sqrt(Rational(sa.norm_sq * sb.norm_sq).get_d());
  EntryExpansion out;
  for (const auto& [e, c] : acc)
    if (c != 0) out.push_back({e, cplx(c.get_d() * scale, 0.0)});
  return out;
}

cplx evaluate(const EntryExpansion& x, const Eigen::MatrixXcd& U) {
  cplx s = 0.0;
  for (const auto& t : x) {
    cplx v = t.c;
    for (int k = 0; k < 9; ++k)
      if (t.e[k]) v *= std::pow(U(k / 3, k % 3), t.e[k]);
    s += v;
  }
  return s;
}

namespace {

std::map<std::array<int, 9>, cplx> multiply_out(const std::vector<EntryExpansion>& xs) {
  std::map<std::array<int, 9>, cplx> acc{{std::array<int, 9>{}, cplx(1.0)}};
  for (const auto& x : xs) {
    std::map<std::array<int, 9>, cplx> next;
    for (const auto& [e, c] : acc)
      for (const auto& t : x) {
        std::array<int, 9> f = e;
        for (int k = 0; k < 9; ++k) f[k] += t.e[k];
        next[f] += c * t.c;
      }
    acc.swap(next);
  }
  return acc;
}

int degree_of(const std::array<int, 9>& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

const Eigen::MatrixXcd& cached_moment(const QuadratureGrid& grid, int a, int b) {
  static std::mutex m;
  static std::map<std::tuple<int, int, int>, Eigen::MatrixXcd> cache;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_tuple(grid.order, a, b);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, moment_tensor(grid, a, b)).first;
  return it->second;
}

}  // namespace

cplx haar_integral(const std::vector<EntryExpansion>& plain, const std::vector<EntryExpansion>& conj,
                   const QuadratureGrid& grid) {
  if (grid.family != Family::unitary || grid.n != 3) throw DomainError("haar_integral expects an SU(3) grid");
  const auto P = multiply_out(plain), C = multiply_out(conj);
  cplx total = 0.0;
  // group by degree so each (a, b) moment is built once
  std::map<int, std::vector<std::pair<std::array<int, 9>, cplx>>> pby, cby;
  for (const auto& [e, c] : P) pby[degree_of(e)].push_back({e, c});
  for (const auto& [e, c] : C) cby[degree_of(e)].push_back({e, c});
  for (const auto& [da, ps] : pby)
    for (const auto& [db, cs] : cby) {
      const Eigen::MatrixXcd& T = cached_moment(grid, da, db);
      for (const auto& [pe, pc] : ps)
        for (const auto& [ce, cc] : cs) {
          long row = 0, col = 0;
          for (int k = 0; k < 9; ++k)
            for (int r = 0; r < pe[k]; ++r) {
              row = row * 3 + k / 3;
              col = col * 3 + k % 3;
            }
          for (int k = 0; k < 9; ++k)
            for (int r = 0; r < ce[k]; ++r) {
              row = row * 3 + k / 3;
              col = col * 3 + k % 3;
            }
          total += pc * std::conj(cc) * T(row, col);
        }
    }
  return total;
}

}  // namespace grouprep
