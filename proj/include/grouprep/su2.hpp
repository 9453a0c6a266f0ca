#pragma once

#include <Eigen/Dense>

#include <array>

#include "grouprep/exact.hpp"
#include "grouprep/poly.hpp"

namespace grouprep {

// Angular momenta are passed doubled: j2 = 2j, m2 = 2m.

bool valid_jm(int j2, int m2);
bool triangle(int j1, int j2, int j3);

SpacePtr su2_space();          // z1, z2
SpacePtr su2_triple_space();   // z1_1, z1_2, z2_1, z2_2, z3_1, z3_2
Blocks su2_triple_blocks();

// z1^{j+m} z2^{j-m} / sqrt((j+m)!(j-m)!) on variables (v1, v2) of `space`
ExactPoly phi(int j2, int m2, const SpacePtr& space, int v1, int v2);
ExactPoly phi(int j2, int m2);
// (-1)^{j-m} phi_{j,-m}
ExactPoly phi_conj(int j2, int m2);

// [12]^{J3} [13]^{J2} [23]^{J1} / sqrt((J+1)! J1! J2! J3!)
struct VdwInvariant {
  RationalPoly shape;
  Rational norm_sq;  // H = shape * sqrt(norm_sq)
  ExactPoly poly() const;
};
VdwInvariant vdw_invariant(int j1, int j2, int j3);

RadicalScalar wigner3j(int j1, int j2, int j3, int m1, int m2, int m3);
RadicalScalar clebsch(int j1, int m1, int j2, int m2, int j3, int m3);

// diag(e^{-i psi/2}, e^{i psi/2}) [[cos t/2, -sin t/2], [sin t/2, cos t/2]] diag(e^{-i phi/2}, e^{i phi/2})
Eigen::Matrix2cd u2_matrix(double psi, double theta, double phi);
std::array<double, 3> angles_from_matrix(const Eigen::Matrix2cd& U);

// rows and columns ordered m = j, j-1, ..., -j
Eigen::MatrixXcd d_matrix(int j2, double psi, double theta, double phi);
Eigen::MatrixXcd d_matrix_closed(int j2, double psi, double theta, double phi);
double wigner_small_d(int j2, int mp2, int m2, double theta);

}  // namespace grouprep
