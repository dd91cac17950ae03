#include "fplab/exp_sums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fplab/kernels.hpp"
#include "fplab/set_algebra.hpp"

namespace fplab {

double ComplexSum::magnitude() const { return std::hypot(re, im); }

namespace {

// e_p(t) for every canonical residue t; arguments are exact to one rounding
// because t is reduced before the division.
struct UnitCircleTable {
  std::vector<double> cos_tab, sin_tab;
  explicit UnitCircleTable(uint32_t p) : cos_tab(p), sin_tab(p) {
    const double w = 2.0 * std::numbers::pi / static_cast<double>(p);
    for (uint32_t t = 0; t < p; ++t) {
      cos_tab[t] = std::cos(w * t);
      sin_tab[t] = std::sin(w * t);
    }
  }
};

void validate_primitive(FieldModulus f, uint32_t g) {
  if (g == 0 || g >= f.p()) throw DomainError("generator out of range");
  if (multiplicative_order(f, g) != f.p() - 1)
    throw DomainError(std::to_string(g) + " is not a primitive root mod " +
                      std::to_string(f.p()));
}

void validate_range(FieldModulus f, uint32_t r, const char* name) {
  if (r == 0 || r > f.p() - 1)
    throw DomainError(std::string(name) + " must lie in [1, p-1], got " +
                      std::to_string(r));
}

}  // namespace

ExpSumSpec ExpSumSpec::single(FieldModulus f, uint32_t g, uint32_t a, uint32_t n) {
  validate_primitive(f, g);
  if (a >= f.p()) throw DomainError("coefficient a out of range");
  validate_range(f, n, "N");
  return ExpSumSpec{f, g, a, n, 0, 0};
}

ExpSumSpec ExpSumSpec::rectangle(FieldModulus f, uint32_t g, uint32_t a, uint32_t x,
                                 uint32_t y) {
  validate_primitive(f, g);
  if (a >= f.p()) throw DomainError("coefficient a out of range");
  validate_range(f, x, "X");
  validate_range(f, y, "Y");
  return ExpSumSpec{f, g, a, 0, x, y};
}

ComplexSum single_sum(const ExpSumSpec& spec) {
  if (spec.a == 0) throw DomainError("single_sum: a must be nonzero");
  if (spec.n == 0) throw DomainError("single_sum: spec carries no N");
  const FieldModulus f = spec.field;
  UnitCircleTable tab(f.p());
  std::vector<uint32_t> idx(spec.n);
  uint32_t t = spec.a;
  for (uint32_t i = 0; i < spec.n; ++i) {
    t = f.mul(t, spec.g);  // t = a g^{i+1}
    idx[i] = t;
  }
  auto [re, im] = kernels::table_sum(idx.data(), idx.size(), tab.cos_tab.data(),
                                     tab.sin_tab.data());
  return {re, im};
}

ComplexSum double_sum(const ExpSumSpec& spec) {
  if (spec.a == 0) throw DomainError("double_sum: a must be nonzero");
  if (spec.x == 0 || spec.y == 0) throw DomainError("double_sum: spec carries no X,Y");
  const FieldModulus f = spec.field;
  UnitCircleTable tab(f.p());
  const uint64_t lo = 2, hi = static_cast<uint64_t>(spec.x) + spec.y;
  std::vector<uint32_t> idx;
  std::vector<double> w;
  idx.reserve(hi - lo + 1);
  w.reserve(hi - lo + 1);
  uint32_t ag = f.mul(spec.a, f.mul(spec.g, spec.g));  // a g^2
  for (uint64_t t = lo; t <= hi; ++t) {
    // #{(x,y) : x+y = t, 1<=x<=X, 1<=y<=Y}
    const uint64_t c = std::min({t - 1, static_cast<uint64_t>(spec.x),
                                 static_cast<uint64_t>(spec.y), hi + 1 - t});
    idx.push_back(ag);
    w.push_back(static_cast<double>(c));
    ag = f.mul(ag, spec.g);
  }
  auto [re, im] = kernels::weighted_table_sum(idx.data(), w.data(), idx.size(),
                                              tab.cos_tab.data(), tab.sin_tab.data());
  return {re, im};
}

namespace {

// |S_a|^k for all a, accumulated with scalar compensation; the inner sums go
// through the dispatched table-sum kernel.
double character_moment(const ResidueSet& a_set, int power) {
  const FieldModulus f = a_set.field();
  const uint32_t p = f.p();
  UnitCircleTable tab(p);
  const auto& elems = a_set.elements();
  std::vector<uint32_t> idx(elems.size());
  double acc = 0.0, comp = 0.0;
  for (uint32_t a = 0; a < p; ++a) {
    kernels::axpb_mod(0, a, elems.data(), elems.size(), p, idx.data());
    auto [re, im] = kernels::table_sum(idx.data(), idx.size(), tab.cos_tab.data(),
                                       tab.sin_tab.data());
    double v = re * re + im * im;
    if (power == 4) v *= v;
    const double y = v - comp;
    const double t = acc + y;
    comp = (t - acc) - y;
    acc = t;
  }
  return acc;
}

}  // namespace

ParsevalResult parseval_check(const ResidueSet& a) {
  const double lhs = character_moment(a, 2);
  return {lhs, static_cast<double>(a.field().p()) * static_cast<double>(a.size())};
}

FourthMoment fourth_moment(const ResidueSet& a) {
  FourthMoment out;
  out.moment = character_moment(a, 4);
  out.p_times_energy = a.empty()
                           ? 0
                           : a.field().p() * additive_energy(a, a).exact_value;
  return out;
}

uint32_t hole_size(const ExpSumSpec& spec) {
  if (spec.a == 0) throw DomainError("hole_size: a must be nonzero");
  if (spec.n == 0) throw DomainError("hole_size: spec carries no N");
  const FieldModulus f = spec.field;
  std::vector<uint32_t> vals(spec.n);
  uint32_t t = spec.a;
  for (uint32_t i = 0; i < spec.n; ++i) {
    t = f.mul(t, spec.g);
    vals[i] = t;
  }
  std::sort(vals.begin(), vals.end());
  // n <= p-1 powers of a primitive root are distinct, so no dedup needed.
  if (vals.size() == 1) return f.p();
  uint32_t best = vals.front() + f.p() - vals.back();  // wraparound gap
  for (std::size_t i = 0; i + 1 < vals.size(); ++i)
    best = std::max(best, vals[i + 1] - vals[i]);
  return best;
}

double hole_bound_formula(uint32_t p, uint32_t nu, double c) {
  if (nu == 0) throw DomainError("hole_bound_formula: nu must be positive");
  const double pd = static_cast<double>(p);
  const double e1 = 1.0 - c / 8.0 - 1.0 / (8.0 * nu);
  const double e2 = 1.0 - c / 6.0 + 1.0 / (12.0 * nu * (nu + 1.0));
  return std::pow(pd, e1) + std::pow(pd, e2);
}

}  // namespace fplab
