#pragma once

#include <cstdint>

#include "fplab/residue_set.hpp"

namespace fplab {

struct ComplexSum {
  double re = 0.0;
  double im = 0.0;
  double magnitude() const;
};

// Parameters of one exponential-sum evaluation over powers of a primitive
// root g. Ranges beyond the period p-1 are rejected; g is verified primitive
// at construction. a = 0 is representable (moment sweeps) but the single and
// double sum entry points require a != 0.
struct ExpSumSpec {
  FieldModulus field;
  uint32_t g;
  uint32_t a;
  uint32_t n = 0;       // single-sum length
  uint32_t x = 0, y = 0;  // double-sum ranges

  static ExpSumSpec single(FieldModulus f, uint32_t g, uint32_t a, uint32_t n);
  static ExpSumSpec rectangle(FieldModulus f, uint32_t g, uint32_t a, uint32_t x,
                              uint32_t y);
};

// sum_{n=1}^{N} e_p(a g^n), compensated accumulation.
ComplexSum single_sum(const ExpSumSpec& spec);

// sum_{x=1}^{X} sum_{y=1}^{Y} e_p(a g^{x+y}) via the weighted O(X+Y) form
// sum_t c(t) e_p(a g^t) with trapezoidal weights c(t) = #{x+y = t}.
ComplexSum double_sum(const ExpSumSpec& spec);

// lhs = sum_{a in F_p} |sum_{x in A} e_p(ax)|^2 and rhs = p|A| (character
// orthogonality; agreement is a float-accuracy check, not a theorem test).
struct ParsevalResult {
  double lhs = 0.0;
  double rhs = 0.0;
};
ParsevalResult parseval_check(const ResidueSet& a);

// moment = sum_{a in F_p} |sum_{x in A} e_p(ax)|^4 alongside the exact
// integer p * E(A) it must equal.
struct FourthMoment {
  double moment = 0.0;
  uint64_t p_times_energy = 0;
};
FourthMoment fourth_moment(const ResidueSet& a);

// Maximal circular gap (wraparound included) between consecutive sorted
// residues of {a g^n : 1 <= n <= N} in Z/p. A single element leaves the
// full-circle gap p.
uint32_t hole_size(const ExpSumSpec& spec);

// Report-only evaluator for the hole-size bound shape
// p^{1 - c/8 - 1/(8 nu)} + p^{1 - c/6 + 1/(12 nu (nu+1))}.
double hole_bound_formula(uint32_t p, uint32_t nu, double c);

}  // namespace fplab
