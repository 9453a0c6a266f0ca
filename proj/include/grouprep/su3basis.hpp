#pragma once

#include <string>
#include <vector>

#include "grouprep/exact.hpp"
#include "grouprep/gelfand.hpp"
#include "grouprep/poly.hpp"

namespace grouprep {

struct Su3Label {
  int lambda = 0, mu = 0, p = 0, q = 0, r = 0;

  int y() const { return -(2 * lambda + mu) + 3 * (p + q); }
  int t2() const { return mu + p - q; }       // 2t
  int t02() const { return mu + p - q - 2 * r; }  // 2t0
  std::string str() const;
  auto operator<=>(const Su3Label&) const = default;
};

bool valid(const Su3Label& l);
// ordered by p, then q, then r
std::vector<Su3Label> labels(int lambda, int mu);
long su3_dimension(int lambda, int mu);

// z1_1 z1_2 z1_3 z2_1 z2_2 z2_3
SpacePtr su3_space();
Blocks su3_blocks();

struct Su3State {
  Su3Label label;
  RationalPoly shape;  // V = shape * sqrt(norm_sq)
  Rational norm_sq;
  ExactPoly poly() const;
  ComplexPoly complex_poly() const;
};

Su3State state_poly(const Su3Label& label);
// same construction over abstract symbols (a1,a2,a3,d1,d2,d3) with d2 = -Delta_2
RationalPoly state_formula(const Su3Label& label);
SpacePtr su3_formula_space();

// Operators on the six-variable space
RationalPoly op_t0_twice(const RationalPoly& p);   // 2 T0
RationalPoly op_y(const RationalPoly& p);
RationalPoly op_t_plus(const RationalPoly& p);
RationalPoly op_t_minus(const RationalPoly& p);
RationalPoly op_casimir(const RationalPoly& p);    // T0(T0-1) + T+T-
RationalPoly op_t12(const RationalPoly& p);        // sum_k z1_k d/dz2_k

struct QuantumReport {
  bool ok = true;
  std::vector<std::string> failures;
};
QuantumReport check_quantum_numbers(const Su3State& s);

struct RConjugate {
  Su3Label image;
  int phase = 1;
  bool integral = true;
};
RConjugate r_conjugate(const Su3Label& l);
// monomial supports of the formula are exchanged by a_k <-> d_k
bool r_conjugate_support_check(const Su3Label& l);

GelfandPattern label_to_pattern(const Su3Label& l);
Su3Label pattern_to_label(const GelfandPattern& g);

struct BiedenharnLabels {
  int j2, m2, jp2, j32, nu2;  // all doubled
};
BiedenharnLabels biedenharn_map(const GelfandPattern& g);

}  // namespace grouprep
