#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <variant>
#include <vector>

#include "fplab/projective.hpp"

namespace fplab {

// A line of PG(3,F_p) as a point of the Klein quadric in PG(5,F_p), in the
// Plucker coordinate order (p01,p02,p03,p12,p13,p23), first nonzero entry 1.
class PluckerLine {
public:
  PluckerLine(std::array<uint32_t, 6> coords, FieldModulus field);

  const std::array<uint32_t, 6>& coords() const { return coords_; }
  FieldModulus field() const { return field_; }

  friend bool operator==(const PluckerLine& a, const PluckerLine& b) {
    return a.field_ == b.field_ && a.coords_ == b.coords_;
  }
  friend auto operator<=>(const PluckerLine& a, const PluckerLine& b) {
    return a.coords_ <=> b.coords_;
  }

private:
  std::array<uint32_t, 6> coords_;
  FieldModulus field_;
};

// p01 p23 - p02 p13 + p03 p12 mod p; zero exactly on the quadric.
uint32_t klein_quadric_form(const PluckerLine& l);

// Plucker embedding p_ij = X_i Y_j - X_j Y_i of the line through two
// distinct points.
PluckerLine line_through(const ProjPoint3& x, const ProjPoint3& y);

// The common line of two distinct planes, via dual Plucker coordinates.
// Agrees with line_through applied to any two distinct common points.
PluckerLine line_of_intersection(const ProjPlane3& h1, const ProjPlane3& h2);

// True iff the polarized quadric form vanishes, i.e. the two lines of
// PG(3,F_p) intersect.
bool lines_meet(const PluckerLine& l1, const PluckerLine& l2);

enum class KleinKind { alpha, beta };

// A ruling plane of the Klein quadric, stored extensionally: the p^2+p+1
// Klein images of the lines through a point (alpha) or inside a plane (beta).
class KleinPlane {
public:
  KleinPlane(ProjPoint3 anchor, std::vector<PluckerLine> members);
  KleinPlane(ProjPlane3 anchor, std::vector<PluckerLine> members);

  KleinKind kind() const { return kind_; }
  const ProjPoint3& point_anchor() const { return std::get<ProjPoint3>(anchor_); }
  const ProjPlane3& plane_anchor() const { return std::get<ProjPlane3>(anchor_); }
  // Sorted; usable for merge-style set intersection.
  const std::vector<PluckerLine>& members() const { return members_; }

  friend bool operator==(const KleinPlane& a, const KleinPlane& b) {
    return a.kind_ == b.kind_ && a.anchor_ == b.anchor_;
  }

private:
  KleinKind kind_;
  std::variant<ProjPoint3, ProjPlane3> anchor_;
  std::vector<PluckerLine> members_;
};

KleinPlane alpha_plane(const ProjPoint3& x);
KleinPlane beta_plane(const ProjPlane3& h);

enum class IntersectionClass { point, line, empty, equal };

const char* intersection_class_name(IntersectionClass c);

// Member-set intersection classified by size: 1 -> point, p+1 -> line,
// 0 -> empty; identical anchors -> equal.
IntersectionClass classify_intersection(const KleinPlane& k1, const KleinPlane& k2);

// The full Remark-1 sweep over all (point, plane) pairs of PG(3,F_p):
// CSV columns point_id, plane_id, incident, intersection_class.
void dump_klein_sweep_csv(FieldModulus f, std::ostream& out);

}  // namespace fplab
