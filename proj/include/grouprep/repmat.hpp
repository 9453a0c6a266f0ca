#pragma once

#include <Eigen/Dense>

#include <array>
#include <vector>

#include "grouprep/euler.hpp"
#include "grouprep/poly.hpp"

namespace grouprep {

struct Su3Angles {
  std::array<double, 3> omega{};  // (psi, theta, phi)
  double chi = 0;
  double nu = 0;
  std::array<double, 3> omega_prime{};
};

// embed12(U2(omega')) * embed23(U2(nu, chi, nu)) * embed12(U2(omega))
Eigen::Matrix3cd angles_to_unitary(const Su3Angles& a);

struct RepMatrix {
  int lambda = 0, mu = 0;
  Eigen::MatrixXcd entries;  // indexed in su3basis labels order
};

// M_ab = <V_a, T_U V_b>
RepMatrix rep_matrix_oracle(int lambda, int mu, const Eigen::MatrixXcd& U);
RepMatrix dmatrix_closed(int lambda, int mu, const Su3Angles& a);

// max over degrees d <= degree_cap of |LHS_d - RHS_d|
double gf_identity_check(const Eigen::Vector3cd& alpha, const Eigen::Vector3cd& alpha_p, const Eigen::Vector3cd& lam,
                         const Eigen::Vector3cd& lam_p, int degree_cap);

// M_ab(U) written as sum_t c_t prod_{j,k} U_{jk}^{e_t[3j+k]}
struct EntryTerm {
  std::array<int, 9> e{};
  cplx c;
};
using EntryExpansion = std::vector<EntryTerm>;
EntryExpansion rep_entry_expansion(int lambda, int mu, int a, int b);
cplx evaluate(const EntryExpansion& x, const Eigen::MatrixXcd& U);

// integral of prod plain_i(U) * prod conj(conj_j(U)) over an SU(3) grid, through moment_tensor
cplx haar_integral(const std::vector<EntryExpansion>& plain, const std::vector<EntryExpansion>& conj,
                   const QuadratureGrid& grid);

}  // namespace grouprep
