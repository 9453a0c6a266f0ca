#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace grouprep {

enum class Family { orthogonal, unitary };

Family parse_family(const std::string& s);
std::string family_name(Family f);

// Angle layout, k = n-1 down to 1:
//   orthogonal: theta_1^k, ..., theta_k^k            (theta_j^k rotates plane (j, j+1))
//   unitary:    psi_1^k, theta_1^k, psi_2^k, ..., theta_k^k, psi_{k+1}^k
// Ranges: orthogonal theta_1 in [0,2pi), theta_j in [0,pi] for j >= 2;
//         unitary phases in [0,2pi), polar angles in [0,pi/2].
struct GroupPoint {
  Family family = Family::unitary;
  int n = 2;
  std::vector<double> angles;
};

long param_count(int n, int m);
size_t angle_count(Family f, int n);

Eigen::MatrixXd so_matrix(const GroupPoint& p);
Eigen::MatrixXcd su_matrix(const GroupPoint& p);
Eigen::MatrixXcd group_matrix(const GroupPoint& p);

// normalized density with respect to the flat measure on the angle box
double haar_weight(const GroupPoint& p);

struct AxisRule {
  std::vector<double> nodes;
  std::vector<double> weights;  // sums to 1
};

// Tensor-product grid, stored per axis and enumerated on demand.
// Node index is mixed-radix with the first axis slowest.
struct QuadratureGrid {
  Family family = Family::unitary;
  int n = 2;
  int order = 1;
  std::vector<AxisRule> axes;

  size_t size() const;
  GroupPoint point(size_t index) const;
  double weight(size_t index) const;
};

QuadratureGrid quad_grid(Family f, int n, int order);

// Gauss rule for weight (1-x^2)^alpha on [-1,1], weights normalized to sum 1
AxisRule gauss_gegenbauer(int order, double alpha);

GroupPoint haar_sample(Family f, int n, std::mt19937_64& rng);

// Nested sum over axes, first axis outermost; each level sums its children in
// node order before scaling by the level weight.
std::complex<double> integrate(const std::function<std::complex<double>(const GroupPoint&)>& f,
                               const QuadratureGrid& grid);
// Same order, with the group matrix built incrementally and passed to f.
std::complex<double> integrate_matrix(const std::function<std::complex<double>(const Eigen::MatrixXcd&)>& f,
                                      const QuadratureGrid& grid);

// E[U^{(x)a} (x) conj(U)^{(x)b}] over the grid, computed as the ordered product of
// per-angle factor averages. Row multi-index (i_1..i_a, k_1..k_b), column (j_1..j_a, l_1..l_b),
// first index slowest; entry = E[prod U_{i_s j_s} prod conj(U_{k_t l_t})].
Eigen::MatrixXcd moment_tensor(const QuadratureGrid& grid, int a, int b);

// the single plane factor attached to angle slot `slot` of the layout
Eigen::MatrixXcd angle_factor(Family f, int n, size_t slot, double angle);

}  // namespace grouprep
