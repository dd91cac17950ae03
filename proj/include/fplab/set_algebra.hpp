#pragma once

#include <cstdint>

#include "fplab/residue_set.hpp"

namespace fplab {

enum class PairLaw { sum, difference, product, ratio };

enum class EnergyKind { additive, multiplicative };

// A k-th moment energy. `value` is always usable; when the order is integral
// and the count fits 64 bits, `exact` is set and `exact_value` carries the
// count exactly.
struct EnergyValue {
  double value = 0.0;
  double order = 1.0;
  EnergyKind kind = EnergyKind::additive;
  bool exact = false;
  uint64_t exact_value = 0;
};

// Pairwise set arithmetic. Operands must be nonempty and share a modulus.
// ratio_set skips zero divisors (and requires at least one nonzero divisor).
ResidueSet sumset(const ResidueSet& a, const ResidueSet& b);
ResidueSet difference_set(const ResidueSet& a, const ResidueSet& b);
ResidueSet product_set(const ResidueSet& a, const ResidueSet& b);
ResidueSet ratio_set(const ResidueSet& a, const ResidueSet& b);

// {a^-1 : a in A, a != 0}; requires a nonzero element.
ResidueSet inverse_set(const ResidueSet& a);

ResidueSet dilate(Residue a, const ResidueSet& s);      // a != 0
ResidueSet translate(Residue a, const ResidueSet& s);
ResidueSet nfold_sum(const ResidueSet& s, uint32_t n);  // A + ... + A, n >= 1

// {a + bc}; equals sumset(A, product_set(B, C)). All operands nonempty.
ResidueSet compose_a_plus_bc(const ResidueSet& a, const ResidueSet& b,
                             const ResidueSet& c);

RepFunction rep_function(const ResidueSet& a, const ResidueSet& b, PairLaw law);

// E(A,B) = sum_s r_{A+B}(s)^2, the quadruple count a1+b1 = a2+b2.
EnergyValue additive_energy(const ResidueSet& a, const ResidueSet& b);

// E_k(A) = sum_s r_{A-A}(s)^k (additive) or over r_{A:A} (multiplicative,
// 0 not in A). k >= 1 need not be an integer; E_1(A) = |A|^2.
EnergyValue energy_moment(const ResidueSet& a, double k, EnergyKind kind);

// A cap sA; its size is r_{A:A}(s). Requires s != 0 and 0 not in A.
ResidueSet katz_koester_mult(const ResidueSet& a, Residue s);

// S cap (S + s).
ResidueSet shifted_intersection(const ResidueSet& s_set, Residue s);

// Number of sextuples a+bc = a'+b'c' over A x B x C squared, via
// sum_x r(x)^2 with r(x) = #{(a,b,c) : a+bc = x}. O(p + |A||B||C|).
uint64_t bilinear_solution_count(const ResidueSet& a, const ResidueSet& b,
                                 const ResidueSet& c);

}  // namespace fplab
