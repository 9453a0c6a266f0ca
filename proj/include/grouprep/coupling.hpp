#pragma once

#include <array>
#include <string>
#include <vector>

#include "grouprep/euler.hpp"
#include "grouprep/exact.hpp"
#include "grouprep/poly.hpp"
#include "grouprep/su3basis.hpp"

namespace grouprep {

// Variables z^{a,i}_k for factor a, row i, column k at index (a-1)*6 + (i-1)*3 + (k-1).
SpacePtr coupling_space();
Blocks coupling_blocks();  // six row vectors

struct ElementaryScalar {
  std::string id;
  RationalPoly poly;
};
// 1.34, 12.3, 1.56, 12.5, 3.56, 5.34, det  (in this order)
const std::vector<ElementaryScalar>& elementary_scalars();

struct Irrep {
  int lambda = 0, mu = 0;
  auto operator<=>(const Irrep&) const = default;
};
using RepTriple = std::array<Irrep, 3>;
std::string str(const RepTriple& r);
RepTriple parse_reps(const std::string& text);  // "1,0;1,0;1,0"

struct Invariant {
  std::array<int, 7> exponents{};  // leading monomial of the Gram-Schmidt step
  RationalPoly shape;
  Rational norm_sq;  // H = shape * sqrt(norm_sq)
  ExactPoly poly() const;
};

struct MultiplicityBasis {
  RepTriple reps;
  std::vector<std::array<int, 7>> monomials;  // all compatible exponent vectors, lexicographic
  std::vector<Invariant> invariants;          // orthonormal
  size_t multiplicity() const { return invariants.size(); }
};

// exponent vectors whose per-factor row degrees match (lambda_a + mu_a, mu_a)
std::vector<std::array<int, 7>> compatible_monomials(const RepTriple& reps);
const MultiplicityBasis& enumerate_invariants(const RepTriple& reps);

// <V_1 V_2 V_3, H(rho)>
RadicalScalar su3_3j(const RepTriple& reps, const std::array<Su3Label, 3>& states, int rho);

bool selection_rule(int lambda1, int lambda2, int lambda3);

struct IsoscalarResult {
  RadicalScalar value;
  int substates_checked = 0;
};
// Blocks are fixed by (p_i, q_i). Throws DomainError when no substate has a nonzero SU(2) 3j,
// StructuralError when the ratio depends on the substate.
IsoscalarResult isoscalar_factor(const RepTriple& reps, const std::array<std::array<int, 2>, 3>& pq, int rho);

// integral of prod_i M^{(i)}_{row_i, col_i}(U) over the SU(3) grid
cplx gaunt_numeric(const RepTriple& reps, const std::array<Su3Label, 3>& rows, const std::array<Su3Label, 3>& cols,
                   const QuadratureGrid& grid);
// sum_rho 3j(rows) 3j(cols)
RadicalScalar gaunt_exact(const RepTriple& reps, const std::array<Su3Label, 3>& rows,
                          const std::array<Su3Label, 3>& cols);
// SU(2) analogue with doubled angular momenta, integrand from the closed-form D matrices
cplx gaunt_su2(const std::array<int, 3>& j2, const std::array<int, 3>& row_m2, const std::array<int, 3>& col_m2,
               const QuadratureGrid& grid);

struct GfReportEntry {
  int degree = 0;
  std::string scalars;     // e.g. "[1.56]^2 [3.56]"
  std::string parameters;  // formal parameter monomial including tau
  Rational coefficient;
  std::string status;  // agree | undecodable | projection-zero | beyond-cap
  std::string detail;
  std::string projection;  // exact isoscalar factor when computed
};

struct GfReport {
  int degree_cap = 0;
  bool geometric_ok = false;
  std::vector<GfReportEntry> entries;
  int agreements = 0, disagreements = 0, skipped = 0;
};
GfReport special_gf_report(int degree_cap, int max_lm);

}  // namespace grouprep
