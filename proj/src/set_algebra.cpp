#include "fplab/set_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fplab/kernels.hpp"

namespace fplab {

namespace {

void require_same_field(const ResidueSet& a, const ResidueSet& b) {
  if (a.field() != b.field())
    throw ModulusMismatch("sets live over F_" + std::to_string(a.field().p()) +
                          " and F_" + std::to_string(b.field().p()));
}

void require_nonempty(const ResidueSet& s, const char* what) {
  if (s.empty()) throw DomainError(std::string(what) + ": empty operand");
}

ResidueSet pairwise(const ResidueSet& a, const ResidueSet& b, PairLaw law,
                    const char* what) {
  require_same_field(a, b);
  require_nonempty(a, what);
  require_nonempty(b, what);
  const FieldModulus f = a.field();
  std::vector<uint32_t> vals;
  vals.reserve(a.size() * b.size());
  switch (law) {
    case PairLaw::sum:
      for (uint32_t x : a.elements())
        for (uint32_t y : b.elements()) vals.push_back(f.add(x, y));
      break;
    case PairLaw::difference:
      for (uint32_t x : a.elements())
        for (uint32_t y : b.elements()) vals.push_back(f.sub(x, y));
      break;
    case PairLaw::product:
      for (uint32_t x : a.elements())
        for (uint32_t y : b.elements()) vals.push_back(f.mul(x, y));
      break;
    case PairLaw::ratio: {
      bool any = false;
      for (uint32_t y : b.elements()) {
        if (y == 0) continue;
        any = true;
        const uint32_t yi = f.inv(y);
        for (uint32_t x : a.elements()) vals.push_back(f.mul(x, yi));
      }
      if (!any) throw DomainError(std::string(what) + ": divisor set is {0}");
      break;
    }
  }
  return ResidueSet::from_values(f, std::move(vals));
}

}  // namespace

ResidueSet sumset(const ResidueSet& a, const ResidueSet& b) {
  return pairwise(a, b, PairLaw::sum, "sumset");
}

ResidueSet difference_set(const ResidueSet& a, const ResidueSet& b) {
  return pairwise(a, b, PairLaw::difference, "difference_set");
}

ResidueSet product_set(const ResidueSet& a, const ResidueSet& b) {
  return pairwise(a, b, PairLaw::product, "product_set");
}

ResidueSet ratio_set(const ResidueSet& a, const ResidueSet& b) {
  return pairwise(a, b, PairLaw::ratio, "ratio_set");
}

ResidueSet inverse_set(const ResidueSet& a) {
  require_nonempty(a, "inverse_set");
  const FieldModulus f = a.field();
  std::vector<uint32_t> vals;
  vals.reserve(a.size());
  for (uint32_t x : a.elements())
    if (x != 0) vals.push_back(f.inv(x));
  if (vals.empty()) throw DomainError("inverse_set: set is {0}");
  return ResidueSet::from_values(f, std::move(vals));
}

ResidueSet dilate(Residue a, const ResidueSet& s) {
  if (a.field() != s.field())
    throw ModulusMismatch("dilate: scalar and set moduli differ");
  if (a.value() == 0) throw DomainError("dilate by zero");
  const FieldModulus f = s.field();
  std::vector<uint32_t> vals;
  vals.reserve(s.size());
  for (uint32_t x : s.elements()) vals.push_back(f.mul(a.value(), x));
  return ResidueSet::from_values(f, std::move(vals));
}

ResidueSet translate(Residue a, const ResidueSet& s) {
  if (a.field() != s.field())
    throw ModulusMismatch("translate: scalar and set moduli differ");
  const FieldModulus f = s.field();
  std::vector<uint32_t> vals;
  vals.reserve(s.size());
  for (uint32_t x : s.elements()) vals.push_back(f.add(a.value(), x));
  return ResidueSet::from_values(f, std::move(vals));
}

ResidueSet nfold_sum(const ResidueSet& s, uint32_t n) {
  require_nonempty(s, "nfold_sum");
  if (n == 0) throw DomainError("nfold_sum: n must be >= 1");
  ResidueSet acc = s;
  for (uint32_t i = 1; i < n; ++i) acc = sumset(acc, s);
  return acc;
}

ResidueSet compose_a_plus_bc(const ResidueSet& a, const ResidueSet& b,
                             const ResidueSet& c) {
  require_same_field(a, b);
  require_same_field(a, c);
  require_nonempty(a, "compose_a_plus_bc");
  require_nonempty(b, "compose_a_plus_bc");
  require_nonempty(c, "compose_a_plus_bc");
  return sumset(a, product_set(b, c));
}

RepFunction rep_function(const ResidueSet& a, const ResidueSet& b, PairLaw law) {
  require_same_field(a, b);
  const FieldModulus f = a.field();
  RepFunction rep{f, {}, 0, 0};
  rep.counts.reserve(a.size() * b.size());
  auto tally = [&](uint32_t s) {
    ++rep.counts[s];
    ++rep.total;
  };
  switch (law) {
    case PairLaw::sum:
      for (uint32_t x : a.elements())
        for (uint32_t y : b.elements()) tally(f.add(x, y));
      break;
    case PairLaw::difference:
      for (uint32_t x : a.elements())
        for (uint32_t y : b.elements()) tally(f.sub(x, y));
      break;
    case PairLaw::product:
      for (uint32_t x : a.elements())
        for (uint32_t y : b.elements()) tally(f.mul(x, y));
      break;
    case PairLaw::ratio: {
      bool any = false;
      for (uint32_t y : b.elements()) {
        if (y == 0) {
          rep.skipped += a.size();
          continue;
        }
        any = true;
        const uint32_t yi = f.inv(y);
        for (uint32_t x : a.elements()) tally(f.mul(x, yi));
      }
      if (!any && !b.empty()) throw DomainError("rep_function: ratio law with divisor {0}");
      break;
    }
  }
  return rep;
}

EnergyValue additive_energy(const ResidueSet& a, const ResidueSet& b) {
  RepFunction rep = rep_function(a, b, PairLaw::sum);
  uint64_t e = 0;
  for (const auto& [s, r] : rep.counts) e += r * r;
  return EnergyValue{static_cast<double>(e), 2.0, EnergyKind::additive, true, e};
}

EnergyValue energy_moment(const ResidueSet& a, double k, EnergyKind kind) {
  if (k < 1.0) throw DomainError("energy_moment: order k must be >= 1");
  if (kind == EnergyKind::multiplicative && a.contains_zero())
    throw DomainError("energy_moment: multiplicative energy requires 0 not in A");
  RepFunction rep = rep_function(
      a, a, kind == EnergyKind::additive ? PairLaw::difference : PairLaw::ratio);

  EnergyValue out;
  out.order = k;
  out.kind = kind;
  const double ik = std::floor(k);
  if (ik == k && k <= 64.0) {
    unsigned __int128 acc = 0;
    bool fits = true;
    for (const auto& [s, r] : rep.counts) {
      unsigned __int128 term = 1;
      for (uint64_t j = 0; j < static_cast<uint64_t>(ik); ++j) term *= r;
      acc += term;
      if (acc > static_cast<unsigned __int128>(UINT64_MAX)) fits = false;
    }
    out.exact = fits;
    if (fits) out.exact_value = static_cast<uint64_t>(acc);
    out.value = static_cast<double>(static_cast<long double>(acc));
  } else {
    double acc = 0.0;
    for (const auto& [s, r] : rep.sorted()) acc += std::pow(static_cast<double>(r), k);
    out.value = acc;
  }
  return out;
}

ResidueSet katz_koester_mult(const ResidueSet& a, Residue s) {
  if (a.field() != s.field())
    throw ModulusMismatch("katz_koester_mult: moduli differ");
  if (s.value() == 0) throw DomainError("katz_koester_mult: s = 0");
  if (a.contains_zero()) throw DomainError("katz_koester_mult: 0 in A");
  const FieldModulus f = a.field();
  std::vector<uint32_t> vals;
  for (uint32_t x : a.elements()) {
    // x in A cap sA  <=>  x in A and x/s in A
    if (a.contains(f.mul(x, f.inv(s.value())))) vals.push_back(x);
  }
  return ResidueSet::from_values(f, std::move(vals));
}

ResidueSet shifted_intersection(const ResidueSet& s_set, Residue s) {
  if (s_set.field() != s.field())
    throw ModulusMismatch("shifted_intersection: moduli differ");
  const FieldModulus f = s_set.field();
  std::vector<uint32_t> vals;
  for (uint32_t x : s_set.elements()) {
    // x in S cap (S + s)  <=>  x in S and x - s in S
    if (s_set.contains(f.sub(x, s.value()))) vals.push_back(x);
  }
  return ResidueSet::from_values(f, std::move(vals));
}

uint64_t bilinear_solution_count(const ResidueSet& a, const ResidueSet& b,
                                 const ResidueSet& c) {
  require_same_field(a, b);
  require_same_field(a, c);
  if (a.empty() || b.empty() || c.empty()) return 0;
  const FieldModulus f = a.field();
  const uint32_t p = f.p();

  // Multiset of products bc, collapsed to (value, multiplicity).
  RepFunction prod = rep_function(b, c, PairLaw::product);
  auto prod_sorted = prod.sorted();
  std::vector<uint32_t> tvals, tcounts;
  tvals.reserve(prod_sorted.size());
  tcounts.reserve(prod_sorted.size());
  for (const auto& [t, cnt] : prod_sorted) {
    tvals.push_back(t);
    tcounts.push_back(static_cast<uint32_t>(cnt));
  }

  // r = 1_A (+) prod, convolved into a dense table when p is small enough.
  constexpr uint32_t kDenseLimit = 1u << 24;
  uint64_t energy = 0;
  std::vector<uint32_t> shifted(tvals.size());
  if (p <= kDenseLimit) {
    std::vector<uint32_t> r(p, 0);
    for (uint32_t x : a.elements()) {
      kernels::axpb_mod(x, 1, tvals.data(), tvals.size(), p, shifted.data());
      for (std::size_t i = 0; i < shifted.size(); ++i) r[shifted[i]] += tcounts[i];
    }
    energy = kernels::sum_squares_u32(r.data(), r.size());
  } else {
    std::unordered_map<uint32_t, uint64_t> r;
    r.reserve(a.size() * tvals.size());
    for (uint32_t x : a.elements()) {
      kernels::axpb_mod(x, 1, tvals.data(), tvals.size(), p, shifted.data());
      for (std::size_t i = 0; i < shifted.size(); ++i) r[shifted[i]] += tcounts[i];
    }
    for (const auto& [x, cnt] : r) energy += cnt * cnt;
  }
  return energy;
}

}  // namespace fplab
