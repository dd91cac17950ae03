#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "fplab/residue_set.hpp"

namespace fplab {

// A point of PG(3,F_p): homogeneous coordinates (X0,X1,X2,X3), canonicalized
// so the first nonzero coordinate is 1.
class ProjPoint3 {
public:
  ProjPoint3(std::array<uint32_t, 4> coords, FieldModulus field);

  const std::array<uint32_t, 4>& coords() const { return coords_; }
  FieldModulus field() const { return field_; }

  friend bool operator==(const ProjPoint3& a, const ProjPoint3& b) {
    return a.field_ == b.field_ && a.coords_ == b.coords_;
  }
  friend auto operator<=>(const ProjPoint3& a, const ProjPoint3& b) {
    return a.coords_ <=> b.coords_;
  }

private:
  std::array<uint32_t, 4> coords_;
  FieldModulus field_;
};

// A plane of PG(3,F_p): dual vector (pi0..pi3) with incidence form
// pi0 X0 + pi1 X1 + pi2 X2 + pi3 X3 = 0, canonicalized like a point.
class ProjPlane3 {
public:
  ProjPlane3(std::array<uint32_t, 4> coeffs, FieldModulus field);

  const std::array<uint32_t, 4>& coeffs() const { return coeffs_; }
  FieldModulus field() const { return field_; }

  friend bool operator==(const ProjPlane3& a, const ProjPlane3& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  friend auto operator<=>(const ProjPlane3& a, const ProjPlane3& b) {
    return a.coeffs_ <=> b.coeffs_;
  }

private:
  std::array<uint32_t, 4> coeffs_;
  FieldModulus field_;
};

bool incident(const ProjPoint3& x, const ProjPlane3& h);

// Canonical enumeration of all p^3+p^2+p+1 points (resp. planes) of
// PG(3,F_p). Intended for small p; the Klein sweeps use p <= 7.
std::vector<ProjPoint3> all_projective_points(FieldModulus f);
std::vector<ProjPlane3> all_projective_planes(FieldModulus f);

// A set of points and a set of planes with cached collinearity statistics.
// Duplicate points or planes are rejected. The k-statistics are computed on
// first use; concurrent readers may race only to store the same value.
class Arrangement {
public:
  Arrangement(FieldModulus field, std::vector<ProjPoint3> points,
              std::vector<ProjPlane3> planes);

  FieldModulus field() const { return field_; }
  std::size_t m() const { return points_.size(); }
  std::size_t n() const { return planes_.size(); }
  const std::vector<ProjPoint3>& points() const { return points_; }
  const std::vector<ProjPlane3>& planes() const { return planes_; }

  // Maximum number of points of the arrangement on a common line (m >= 1).
  uint32_t max_collinear_points() const;
  // Maximum number of planes of the arrangement through a common line (n >= 1).
  uint32_t max_collinear_planes() const;

private:
  FieldModulus field_;
  std::vector<ProjPoint3> points_;
  std::vector<ProjPlane3> planes_;
  mutable std::atomic<uint32_t> k_points_{0};  // 0 = not yet computed
  mutable std::atomic<uint32_t> k_planes_{0};
};

// |I(P,Pi)| by exact counting over the m x n grid (SIMD inner loop where
// available; agrees exactly with the incident() double loop).
uint64_t count_incidences(const Arrangement& arr);

// The arrangement from the bilinear-count construction: points (1,a,c,b')
// and planes x + by - c'z = a', i.e. dual vectors (-a',1,b,-c'). Its
// incidence count equals bilinear_solution_count(A,B,C).
Arrangement build_theorem2_arrangement(const ResidueSet& a, const ResidueSet& b,
                                       const ResidueSet& c,
                                       std::size_t budget = 2'000'000);

// m*sqrt(n) + k*m; the implied constant is reported as a ratio elsewhere.
double theorem1_rhs(uint64_t m, uint64_t n, uint64_t k);

// CSV dump: kind(point|plane), c0..c3.
void dump_arrangement_csv(const Arrangement& arr, std::ostream& out);

}  // namespace fplab
