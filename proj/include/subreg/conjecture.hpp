// Closed formulas for G2 at general l, compared exactly against the computed quotient category.
#pragma once

#include <optional>

#include "fusion.hpp"

namespace subreg::conjecture {

using exactnum::CycloReal;
using exactnum::Q;
using exactnum::qint;
using exactnum::sin2;

inline CycloReal constant(int l, Q x) { return CycloReal(exactnum::field(l), std::move(x)); }

inline Q l4(int l) {
  Q x(l);
  return x * x * x * x;
}

// 6 l^4 / ((2 sin pi/l)^8 (2 sin 2pi/l)^2)
inline CycloReal undivisible_dimension(int l) {
  CycloReal s1 = sin2(1, l);
  return constant(l, 6 * l4(l)) / (s1 * s1 * s1 * s1 * sin2(2, l));
}

// (2/9) l^4 / ((2 sin pi/l)^4 (2 sin 2pi/l)^2 (2 sin 3pi/l)^4)
inline CycloReal divisible_dimension(int l) {
  CycloReal s1 = sin2(1, l), s3 = sin2(3, l);
  return constant(l, Q(2, 9) * l4(l)) / (s1 * s1 * sin2(2, l) * s3 * s3);
}

// 6 S_2(l) S_1(l)^3: centralizer S3 and Jordan blocks of sizes 5, 3, 3, 3.
inline CycloReal s_product(int l) {
  CycloReal s1 = exactnum::s_formula(1, l);
  return exactnum::s_formula(2, l) * s1 * s1 * s1 * 6L;
}

inline std::pair<CycloReal, CycloReal> generator_formulas(int l) {
  CycloReal one = constant(l, Q(1));
  if (l % 3) return {qint(3, l) * 2L + one, qint(5, l) + qint(3, l) * 3L};
  return {qint(3, l) + qint(5, l) - one, qint(7, l) * 2L - qint(5, l) + qint(3, l) + one * 2L};
}

struct G2Report {
  int l = 0;
  bool divisible = false;
  CycloReal fp_C, formula_C;
  CycloReal gen1, gen2, formula1, formula2;
  CycloReal identity_lhs, identity_rhs;  // only meaningful for undivisible l
  bool dimension_ok = false, gen1_ok = false, gen2_ok = false, identity_ok = false;
  std::optional<Q> gen2_offset;  // rational difference computed minus formula, if rational
};

inline G2Report check_g2(fusion::Category& cat) {
  if (rootdata::series_char(cat.roots().type().series) != 'G') throw rootdata::DomainError("closed formulas are stated for G2 only");
  int l = cat.l();
  G2Report r;
  r.l = l;
  r.divisible = l % 3 == 0;
  const auto& fp = cat.fpdims();
  r.fp_C = fp.fp_C;
  r.gen1 = *fp.gen1.value;
  r.gen2 = *fp.gen2.value;
  r.formula_C = r.divisible ? divisible_dimension(l) : undivisible_dimension(l);
  std::tie(r.formula1, r.formula2) = generator_formulas(l);
  r.dimension_ok = r.fp_C == r.formula_C;
  r.gen1_ok = r.gen1 == r.formula1;
  r.gen2_ok = r.gen2 == r.formula2;
  CycloReal d = r.gen2 - r.formula2;
  if (d.is_rational()) r.gen2_offset = d.coeff(0);
  r.identity_lhs = s_product(l);
  r.identity_rhs = undivisible_dimension(l);
  r.identity_ok = r.identity_lhs == r.identity_rhs;
  return r;
}

}  // namespace subreg::conjecture
