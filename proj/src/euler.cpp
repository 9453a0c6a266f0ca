#include "grouprep/euler.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>

#include "grouprep/exact.hpp"

namespace grouprep {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

Family parse_family(const std::string& s) {
  if (s == "so" || s == "orthogonal" || s == "SO") return Family::orthogonal;
  if (s == "su" || s == "unitary" || s == "SU") return Family::unitary;
  throw DomainError("unknown group family " + s);
}

std::string family_name(Family f) { return f == Family::orthogonal ? "SO" : "SU"; }

long param_count(int n, int m) {
  if (n < 1) throw DomainError("n must be positive");
  const long N = n;
  switch (m) {
    case 0: return N * (N - 1) / 2;
    case 1: return N * N - 1;
    case 2: return N * (2 * N + 1);
    default: throw DomainError("m must be 0, 1 or 2");
  }
}

size_t angle_count(Family f, int n) {
  return static_cast<size_t>(param_count(n, f == Family::orthogonal ? 0 : 1));
}

namespace {

enum class SlotKind { phase, polar };

struct Slot {
  SlotKind kind;
  int plane;  // rotates coordinates (plane, plane+1), 0-based
  int j;      // polar index inside its factor (1-based); 0 for phases
  bool diag;  // unitary phase factor
};

std::vector<Slot> slots(Family f, int n) {
  if (n < 2) throw DomainError("group dimension must be at least 2");
  std::vector<Slot> out;
  for (int k = n - 1; k >= 1; --k) {
    if (f == Family::orthogonal) {
      out.push_back({SlotKind::phase, 0, 1, false});
      for (int j = 2; j <= k; ++j) out.push_back({SlotKind::polar, j - 1, j, false});
    } else {
      out.push_back({SlotKind::phase, 0, 0, true});
      for (int i = 1; i <= k; ++i) {
        out.push_back({SlotKind::polar, i - 1, i, false});
        out.push_back({SlotKind::phase, i - 1, 0, true});
      }
    }
  }
  return out;
}

void check_point(const GroupPoint& p) {
  if (p.angles.size() != angle_count(p.family, p.n))
    throw DomainError("expected " + std::to_string(angle_count(p.family, p.n)) + " angles, got " +
                      std::to_string(p.angles.size()));
}

double so_polar_norm(int j) {
  // integral of sin^{j-1} over [0, pi]
  return std::sqrt(kPi) * std::tgamma(j / 2.0) / std::tgamma((j + 1) / 2.0);
}

}  // namespace

Eigen::MatrixXcd angle_factor(Family f, int n, size_t slot, double angle) {
  const auto s = slots(f, n);
  if (slot >= s.size()) throw DomainError("angle slot out of range");
  const Slot& sl = s[slot];
  Eigen::MatrixXcd F = Eigen::MatrixXcd::Identity(n, n);
  const int a = sl.plane, b = sl.plane + 1;
  if (f == Family::unitary && sl.diag) {
    F(a, a) = std::polar(1.0, -angle);
    F(b, b) = std::polar(1.0, angle);
  } else {
    const double c = std::cos(angle), sn = std::sin(angle);
    F(a, a) = c;
    F(a, b) = sn;
    F(b, a) = -sn;
    F(b, b) = c;
  }
  return F;
}

Eigen::MatrixXcd group_matrix(const GroupPoint& p) {
  check_point(p);
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Identity(p.n, p.n);
  for (size_t i = 0; i < p.angles.size(); ++i) U = U * angle_factor(p.family, p.n, i, p.angles[i]);
  return U;
}

Eigen::MatrixXd so_matrix(const GroupPoint& p) {
  if (p.family != Family::orthogonal) throw DomainError("so_matrix needs an orthogonal point");
  return group_matrix(p).real();
}

Eigen::MatrixXcd su_matrix(const GroupPoint& p) {
  if (p.family != Family::unitary) throw DomainError("su_matrix needs a unitary point");
  return group_matrix(p);
}

double haar_weight(const GroupPoint& p) {
  check_point(p);
  const auto s = slots(p.family, p.n);
  double w = 1.0;
  for (size_t i = 0; i < s.size(); ++i) {
    const double t = p.angles[i];
    if (s[i].kind == SlotKind::phase) {
      w *= 1.0 / (2 * kPi);
    } else if (p.family == Family::unitary) {
      if (t < 0 || t > kPi / 2) return 0.0;
      const int j = s[i].j;
      w *= 2 * j * std::pow(std::sin(t), 2 * j - 1) * std::cos(t);
    } else {
      if (t < 0 || t > kPi) return 0.0;
      const int j = s[i].j;
      w *= std::pow(std::sin(t), j - 1) / so_polar_norm(j);
    }
  }
  return w;
}

AxisRule gauss_gegenbauer(int order, double alpha) {
  if (order < 1) throw DomainError("quadrature order must be positive");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double b = std::sqrt(k * (k + 2 * alpha) / ((2 * k + 2 * alpha + 1) * (2 * k + 2 * alpha - 1)));
    J(k, k - 1) = J(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  AxisRule r;
  double total = 0;
  for (int i = 0; i < order; ++i) {
    r.nodes.push_back(es.eigenvalues()(i));
    const double v = es.eigenvectors()(0, i);
    r.weights.push_back(v * v);
    total += v * v;
  }
  for (auto& w : r.weights) w /= total;
  return r;
}

size_t QuadratureGrid::size() const {
  size_t s = 1;
  for (const auto& a : axes) s *= a.nodes.size();
  return s;
}

GroupPoint QuadratureGrid::point(size_t index) const {
  GroupPoint p{family, n, std::vector<double>(axes.size())};
  for (size_t i = axes.size(); i-- > 0;) {
    const size_t m = axes[i].nodes.size();
    p.angles[i] = axes[i].nodes[index % m];
    index /= m;
  }
  return p;
}

double QuadratureGrid::weight(size_t index) const {
  double w = 1.0;
  for (size_t i = axes.size(); i-- > 0;) {
    const size_t m = axes[i].nodes.size();
    w *= axes[i].weights[index % m];
    index /= m;
  }
  return w;
}

QuadratureGrid quad_grid(Family f, int n, int order) {
  if (order < 1) throw DomainError("quadrature order must be positive");
  QuadratureGrid g{f, n, order, {}};
  const AxisRule legendre = gauss_gegenbauer(order, 0.0);
  for (const Slot& s : slots(f, n)) {
    AxisRule r;
    if (s.kind == SlotKind::phase) {
      for (int m = 0; m < order; ++m) {
        r.nodes.push_back(2 * kPi * m / order);
        r.weights.push_back(1.0 / order);
      }
    } else if (f == Family::unitary) {
      // density 2j sin^{2j-1} cos on [0, pi/2]; Gauss-Legendre in c = cos(theta) on [0, 1]
      double total = 0;
      for (int i = 0; i < order; ++i) {
        const double c = (legendre.nodes[i] + 1) / 2;
        const double w = legendre.weights[i] * 2 * s.j * c * std::pow(1 - c * c, s.j - 1);
        r.nodes.push_back(std::acos(c));
        r.weights.push_back(w);
        total += w;
      }
      for (auto& w : r.weights) w /= total;
    } else {
      // density sin^{j-1} on [0, pi]; Gauss rule for (1-c^2)^{(j-2)/2} in c = cos(theta)
      const AxisRule gg = gauss_gegenbauer(order, (s.j - 2) / 2.0);
      for (int i = 0; i < order; ++i) {
        r.nodes.push_back(std::acos(gg.nodes[i]));
        r.weights.push_back(gg.weights[i]);
      }
    }
    g.axes.push_back(std::move(r));
  }
  return g;
}

GroupPoint haar_sample(Family f, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  GroupPoint p{f, n, {}};
  for (const Slot& s : slots(f, n)) {
    const double u = uni(rng);
    if (s.kind == SlotKind::phase) {
      p.angles.push_back(2 * kPi * u);
    } else if (f == Family::unitary) {
      // CDF sin^{2j}(theta)
      p.angles.push_back(std::asin(std::pow(u, 1.0 / (2 * s.j))));
    } else {
      // (1 - cos theta)/2 ~ Beta(j/2, j/2)
      const double x = boost::math::ibeta_inv(s.j / 2.0, s.j / 2.0, u);
      p.angles.push_back(std::acos(1 - 2 * x));
    }
  }
  return p;
}

namespace {

struct Nested {
  const QuadratureGrid& grid;
  std::vector<std::vector<Eigen::MatrixXcd>> factors;  // [axis][node]
  std::vector<Eigen::MatrixXcd> prefix;                // prefix[l] = product of factors of axes < l
  GroupPoint point;

  explicit Nested(const QuadratureGrid& g, bool with_matrices) : grid(g), point{g.family, g.n, {}} {
    point.angles.resize(g.axes.size());
    if (!with_matrices) return;
    factors.resize(g.axes.size());
    for (size_t a = 0; a < g.axes.size(); ++a)
      for (double t : g.axes[a].nodes) factors[a].push_back(angle_factor(g.family, g.n, a, t));
    prefix.assign(g.axes.size() + 1, Eigen::MatrixXcd::Identity(g.n, g.n));
  }

  template <class F>
  cplx run(size_t level, const F& leaf) {
    if (level == grid.axes.size()) return leaf();
    const auto& ax = grid.axes[level];
    cplx s = 0;
    for (size_t i = 0; i < ax.nodes.size(); ++i) {
      point.angles[level] = ax.nodes[i];
      if (!prefix.empty()) prefix[level + 1].noalias() = prefix[level] * factors[level][i];
      s += ax.weights[i] * run(level + 1, leaf);
    }
    return s;
  }
};

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
  Eigen::MatrixXcd K(A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

}  // namespace

cplx integrate(const std::function<cplx(const GroupPoint&)>& f, const QuadratureGrid& grid) {
  Nested nest(grid, false);
  return nest.run(0, [&] { return f(nest.point); });
}

cplx integrate_matrix(const std::function<cplx(const Eigen::MatrixXcd&)>& f, const QuadratureGrid& grid) {
  Nested nest(grid, true);
  const size_t last = grid.axes.size();
  return nest.run(0, [&] { return f(nest.prefix[last]); });
}

Eigen::MatrixXcd moment_tensor(const QuadratureGrid& grid, int a, int b) {
  if (a < 0 || b < 0 || a + b == 0) throw DomainError("tensor degrees must be nonnegative and not both zero");
  const int n = grid.n;
  long dim = 1;
  for (int i = 0; i < a + b; ++i) dim *= n;
  if (dim > 4096) throw DomainError("moment tensor too large");
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(dim, dim);
  for (size_t ax = 0; ax < grid.axes.size(); ++ax) {
    Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(dim, dim);
    for (size_t i = 0; i < grid.axes[ax].nodes.size(); ++i) {
      const Eigen::MatrixXcd F = angle_factor(grid.family, n, ax, grid.axes[ax].nodes[i]);
      Eigen::MatrixXcd T = Eigen::MatrixXcd::Ones(1, 1);
      for (int s = 0; s < a; ++s) T = kron(T, F);
      const Eigen::MatrixXcd Fc = F.conjugate();
      for (int s = 0; s < b; ++s) T = kron(T, Fc);
      avg += grid.axes[ax].weights[i] * T;
    }
    result = result * avg;
  }
  return result;
}

}  // namespace grouprep
