#include "fplab/projective.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <string>

#include "fplab/kernels.hpp"

namespace fplab {

namespace {

// Scale a homogeneous 4-vector so its first nonzero entry is 1.
std::array<uint32_t, 4> normalize4(std::array<uint32_t, 4> v, FieldModulus f) {
  int lead = -1;
  for (int i = 0; i < 4; ++i) {
    if (v[i] != 0) {
      lead = i;
      break;
    }
  }
  if (lead < 0) throw DomainError("projective vector must be nonzero");
  for (int i = 0; i < 4; ++i) {
    if (v[i] >= f.p()) throw DomainError("coordinate out of range");
  }
  if (v[lead] != 1) {
    const uint32_t s = f.inv(v[lead]);
    for (auto& c : v) c = f.mul(c, s);
  }
  return v;
}

uint32_t dot4_mod(const std::array<uint32_t, 4>& a, const std::array<uint32_t, 4>& b,
                  FieldModulus f) {
  uint64_t s = 0;
  for (int i = 0; i < 4; ++i) s += static_cast<uint64_t>(a[i]) * b[i] % f.p();
  return static_cast<uint32_t>(s % f.p());
}

}  // namespace

ProjPoint3::ProjPoint3(std::array<uint32_t, 4> coords, FieldModulus field)
    : coords_(normalize4(coords, field)), field_(field) {}

ProjPlane3::ProjPlane3(std::array<uint32_t, 4> coeffs, FieldModulus field)
    : coeffs_(normalize4(coeffs, field)), field_(field) {}

bool incident(const ProjPoint3& x, const ProjPlane3& h) {
  if (x.field() != h.field()) throw ModulusMismatch("incident: moduli differ");
  return dot4_mod(x.coords(), h.coeffs(), x.field()) == 0;
}

std::vector<ProjPoint3> all_projective_points(FieldModulus f) {
  const uint64_t p = f.p();
  std::vector<ProjPoint3> out;
  out.reserve(p * p * p + p * p + p + 1);
  // Canonical representatives by leading index.
  for (uint32_t a = 0; a < p; ++a)
    for (uint32_t b = 0; b < p; ++b)
      for (uint32_t c = 0; c < p; ++c) out.emplace_back(std::array<uint32_t, 4>{1, a, b, c}, f);
  for (uint32_t a = 0; a < p; ++a)
    for (uint32_t b = 0; b < p; ++b) out.emplace_back(std::array<uint32_t, 4>{0, 1, a, b}, f);
  for (uint32_t a = 0; a < p; ++a) out.emplace_back(std::array<uint32_t, 4>{0, 0, 1, a}, f);
  out.emplace_back(std::array<uint32_t, 4>{0, 0, 0, 1}, f);
  return out;
}

std::vector<ProjPlane3> all_projective_planes(FieldModulus f) {
  std::vector<ProjPlane3> out;
  for (const auto& x : all_projective_points(f)) out.emplace_back(x.coords(), f);
  return out;
}

Arrangement::Arrangement(FieldModulus field, std::vector<ProjPoint3> points,
                         std::vector<ProjPlane3> planes)
    : field_(field), points_(std::move(points)), planes_(std::move(planes)) {
  for (const auto& x : points_)
    if (x.field() != field_) throw ModulusMismatch("arrangement: point modulus differs");
  for (const auto& h : planes_)
    if (h.field() != field_) throw ModulusMismatch("arrangement: plane modulus differs");
  auto pts = points_;
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
    throw DomainError("arrangement: duplicate point");
  auto pls = planes_;
  std::sort(pls.begin(), pls.end());
  if (std::adjacent_find(pls.begin(), pls.end()) != pls.end())
    throw DomainError("arrangement: duplicate plane");
}

namespace {

// Anchored pair hashing for the collinearity statistic. For each anchor
// vector x (leading coordinate 1 at index j), every other vector y reduces to
// the canonical representative of span{x,y} modulo x: zero the j-th entry of
// y, then renormalize. Two vectors collide exactly when they span the same
// line with x, so max over anchors of (count + 1) is the exact statistic.
// O(n^2) pair hashing with O(n) memory.
class AnchoredLineCounter {
public:
  AnchoredLineCounter(FieldModulus f, std::size_t n) : f_(f) {
    std::size_t cap = std::bit_ceil(2 * std::max<std::size_t>(n, 1));
    table_.resize(cap);
    mask_ = cap - 1;
    if (f.p() <= (1u << 22)) {
      // Batched inverses: inv[i] = -(p/i) * inv[p mod i].
      const uint64_t p = f.p();
      inv_table_.resize(f.p());
      inv_table_[1] = 1;
      for (uint64_t i = 2; i < p; ++i)
        inv_table_[i] = static_cast<uint32_t>((p - (p / i) * inv_table_[p % i] % p) % p);
    }
  }

  uint32_t max_collinear(const std::vector<std::array<uint32_t, 4>>& vecs) {
    if (vecs.size() <= 2) return static_cast<uint32_t>(vecs.size());
    uint32_t best = 2;
    for (std::size_t ai = 0; ai < vecs.size(); ++ai) {
      ++generation_;
      const auto& x = vecs[ai];
      int j = 0;
      while (x[j] == 0) ++j;  // x[j] == 1 by normalization
      for (std::size_t bi = 0; bi < vecs.size(); ++bi) {
        if (bi == ai) continue;
        std::array<uint32_t, 4> y = vecs[bi];
        const uint32_t t = y[j];
        if (t != 0) {
          for (int k = 0; k < 4; ++k) y[k] = f_.sub(y[k], f_.mul(t, x[k]));
        }
        int lead = 0;
        while (y[lead] == 0) ++lead;  // y != x projectively, so y' != 0
        if (y[lead] != 1) {
          const uint32_t s = invert(y[lead]);
          for (int k = lead; k < 4; ++k) y[k] = f_.mul(y[k], s);
        }
        const uint64_t k0 = y[0] | (static_cast<uint64_t>(y[1]) << 31);
        const uint64_t k1 = y[2] | (static_cast<uint64_t>(y[3]) << 31);
        best = std::max(best, insert(k0, k1) + 1);
      }
    }
    return best;
  }

private:
  uint32_t invert(uint32_t v) const {
    return inv_table_.empty() ? f_.inv(v) : inv_table_[v];
  }

  uint32_t insert(uint64_t k0, uint64_t k1) {
    uint64_t h = k0 ^ (k1 * 0x9e3779b97f4a7c15ull);
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 27;
    std::size_t i = h & mask_;
    for (;;) {
      Entry& e = table_[i];
      if (e.gen != generation_) {
        e = Entry{k0, k1, 1, generation_};
        return 1;
      }
      if (e.k0 == k0 && e.k1 == k1) return ++e.count;
      i = (i + 1) & mask_;
    }
  }

  struct Entry {
    uint64_t k0 = 0, k1 = 0;
    uint32_t count = 0;
    uint32_t gen = 0;
  };

  FieldModulus f_;
  std::vector<Entry> table_;
  std::size_t mask_ = 0;
  uint32_t generation_ = 0;
  std::vector<uint32_t> inv_table_;
};

template <typename T>
std::vector<std::array<uint32_t, 4>> raw_coords(const std::vector<T>& items) {
  std::vector<std::array<uint32_t, 4>> out;
  out.reserve(items.size());
  for (const auto& it : items) {
    if constexpr (std::is_same_v<T, ProjPoint3>)
      out.push_back(it.coords());
    else
      out.push_back(it.coeffs());
  }
  return out;
}

}  // namespace

uint32_t Arrangement::max_collinear_points() const {
  if (points_.empty()) throw DomainError("max_collinear_points: no points");
  uint32_t cached = k_points_.load(std::memory_order_acquire);
  if (cached != 0) return cached;
  AnchoredLineCounter counter(field_, points_.size());
  const uint32_t k = counter.max_collinear(raw_coords(points_));
  k_points_.store(k, std::memory_order_release);
  return k;
}

uint32_t Arrangement::max_collinear_planes() const {
  if (planes_.empty()) throw DomainError("max_collinear_planes: no planes");
  uint32_t cached = k_planes_.load(std::memory_order_acquire);
  if (cached != 0) return cached;
  // Dual statistic: planes through a common line are collinear dual points.
  AnchoredLineCounter counter(field_, planes_.size());
  const uint32_t k = counter.max_collinear(raw_coords(planes_));
  k_planes_.store(k, std::memory_order_release);
  return k;
}

uint64_t count_incidences(const Arrangement& arr) {
  const std::size_t m = arr.m();
  std::vector<uint32_t> x0(m), x1(m), x2(m), x3(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = arr.points()[i].coords();
    x0[i] = c[0];
    x1[i] = c[1];
    x2[i] = c[2];
    x3[i] = c[3];
  }
  uint64_t total = 0;
  for (const auto& h : arr.planes()) {
    total += kernels::dot4_zero_count(x0.data(), x1.data(), x2.data(), x3.data(),
                                      h.coeffs().data(), m, arr.field().p());
  }
  return total;
}

Arrangement build_theorem2_arrangement(const ResidueSet& a, const ResidueSet& b,
                                       const ResidueSet& c, std::size_t budget) {
  if (a.field() != b.field() || a.field() != c.field())
    throw ModulusMismatch("build_theorem2_arrangement: moduli differ");
  const std::size_t m = a.size() * b.size() * c.size();
  if (m > budget)
    throw BudgetError("arrangement size " + std::to_string(m) + " exceeds budget " +
                      std::to_string(budget));
  const FieldModulus f = a.field();
  std::vector<ProjPoint3> points;
  points.reserve(m);
  for (uint32_t av : a.elements())
    for (uint32_t cv : c.elements())
      for (uint32_t bv : b.elements())
        points.emplace_back(std::array<uint32_t, 4>{1, av, cv, bv}, f);
  std::vector<ProjPlane3> planes;
  planes.reserve(m);
  for (uint32_t av : a.elements())
    for (uint32_t bv : b.elements())
      for (uint32_t cv : c.elements())
        planes.emplace_back(std::array<uint32_t, 4>{f.neg(av), 1, bv, f.neg(cv)}, f);
  return Arrangement(f, std::move(points), std::move(planes));
}

double theorem1_rhs(uint64_t m, uint64_t n, uint64_t k) {
  const double md = static_cast<double>(m);
  return md * std::sqrt(static_cast<double>(n)) + static_cast<double>(k) * md;
}

void dump_arrangement_csv(const Arrangement& arr, std::ostream& out) {
  out << "kind,c0,c1,c2,c3\n";
  for (const auto& x : arr.points()) {
    const auto& c = x.coords();
    out << "point," << c[0] << ',' << c[1] << ',' << c[2] << ',' << c[3] << '\n';
  }
  for (const auto& h : arr.planes()) {
    const auto& c = h.coeffs();
    out << "plane," << c[0] << ',' << c[1] << ',' << c[2] << ',' << c[3] << '\n';
  }
}

}  // namespace fplab
