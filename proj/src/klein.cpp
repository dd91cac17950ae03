#include "fplab/klein.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace fplab {

namespace {

std::array<uint32_t, 6> normalize6(std::array<uint32_t, 6> v, FieldModulus f) {
  int lead = -1;
  for (int i = 0; i < 6; ++i) {
    if (v[i] != 0) {
      lead = i;
      break;
    }
  }
  if (lead < 0) throw DomainError("Plucker vector must be nonzero");
  if (v[lead] != 1) {
    const uint32_t s = f.inv(v[lead]);
    for (auto& c : v) c = f.mul(c, s);
  }
  return v;
}

uint32_t quadric_form_raw(const std::array<uint32_t, 6>& c, FieldModulus f) {
  // p01 p23 - p02 p13 + p03 p12
  uint32_t v = f.mul(c[0], c[5]);
  v = f.sub(v, f.mul(c[1], c[4]));
  return f.add(v, f.mul(c[2], c[3]));
}

}  // namespace

PluckerLine::PluckerLine(std::array<uint32_t, 6> coords, FieldModulus field)
    : coords_(normalize6(coords, field)), field_(field) {
  if (quadric_form_raw(coords_, field) != 0)
    throw DomainError("coordinates do not satisfy the Klein quadric relation");
}

uint32_t klein_quadric_form(const PluckerLine& l) {
  return quadric_form_raw(l.coords(), l.field());
}

PluckerLine line_through(const ProjPoint3& x, const ProjPoint3& y) {
  if (x.field() != y.field()) throw ModulusMismatch("line_through: moduli differ");
  if (x == y) throw DomainError("line_through: points coincide");
  const FieldModulus f = x.field();
  const auto& a = x.coords();
  const auto& b = y.coords();
  auto minor = [&](int i, int j) {
    return f.sub(f.mul(a[i], b[j]), f.mul(a[j], b[i]));
  };
  return PluckerLine({minor(0, 1), minor(0, 2), minor(0, 3),
                      minor(1, 2), minor(1, 3), minor(2, 3)}, f);
}

PluckerLine line_of_intersection(const ProjPlane3& h1, const ProjPlane3& h2) {
  if (h1.field() != h2.field())
    throw ModulusMismatch("line_of_intersection: moduli differ");
  if (h1 == h2) throw DomainError("line_of_intersection: planes coincide");
  const FieldModulus f = h1.field();
  const auto& a = h1.coeffs();
  const auto& b = h2.coeffs();
  auto minor = [&](int i, int j) {
    return f.sub(f.mul(a[i], b[j]), f.mul(a[j], b[i]));
  };
  // Dual coordinates q_ij map to primal ones through the epsilon tensor:
  // (p01,...,p23) = (q23, -q13, q12, q03, -q02, q01).
  return PluckerLine({minor(2, 3), f.neg(minor(1, 3)), minor(1, 2),
                      minor(0, 3), f.neg(minor(0, 2)), minor(0, 1)}, f);
}

bool lines_meet(const PluckerLine& l1, const PluckerLine& l2) {
  if (l1.field() != l2.field()) throw ModulusMismatch("lines_meet: moduli differ");
  const FieldModulus f = l1.field();
  const auto& a = l1.coords();
  const auto& b = l2.coords();
  // Polarized quadric form.
  uint32_t v = f.mul(a[0], b[5]);
  v = f.add(v, f.mul(a[5], b[0]));
  v = f.sub(v, f.mul(a[1], b[4]));
  v = f.sub(v, f.mul(a[4], b[1]));
  v = f.add(v, f.mul(a[2], b[3]));
  v = f.add(v, f.mul(a[3], b[2]));
  return v == 0;
}

namespace {

std::vector<PluckerLine> sorted_unique(std::vector<PluckerLine> lines) {
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

}  // namespace

KleinPlane::KleinPlane(ProjPoint3 anchor, std::vector<PluckerLine> members)
    : kind_(KleinKind::alpha), anchor_(std::move(anchor)), members_(std::move(members)) {}

KleinPlane::KleinPlane(ProjPlane3 anchor, std::vector<PluckerLine> members)
    : kind_(KleinKind::beta), anchor_(std::move(anchor)), members_(std::move(members)) {}

KleinPlane alpha_plane(const ProjPoint3& x) {
  const FieldModulus f = x.field();
  std::vector<PluckerLine> lines;
  lines.reserve(static_cast<std::size_t>(f.p()) * f.p() + f.p() + 1);
  for (const auto& y : all_projective_points(f)) {
    if (y == x) continue;
    lines.push_back(line_through(x, y));
  }
  return KleinPlane(x, sorted_unique(std::move(lines)));
}

KleinPlane beta_plane(const ProjPlane3& h) {
  const FieldModulus f = h.field();
  std::vector<ProjPoint3> on_plane;
  for (const auto& y : all_projective_points(f)) {
    if (incident(y, h)) on_plane.push_back(y);
  }
  std::vector<PluckerLine> lines;
  for (std::size_t i = 0; i < on_plane.size(); ++i)
    for (std::size_t j = i + 1; j < on_plane.size(); ++j)
      lines.push_back(line_through(on_plane[i], on_plane[j]));
  return KleinPlane(h, sorted_unique(std::move(lines)));
}

const char* intersection_class_name(IntersectionClass c) {
  switch (c) {
    case IntersectionClass::point: return "point";
    case IntersectionClass::line: return "line";
    case IntersectionClass::empty: return "empty";
    case IntersectionClass::equal: return "equal";
  }
  return "?";
}

IntersectionClass classify_intersection(const KleinPlane& k1, const KleinPlane& k2) {
  if (k1 == k2) return IntersectionClass::equal;
  std::vector<PluckerLine> common;
  std::set_intersection(k1.members().begin(), k1.members().end(),
                        k2.members().begin(), k2.members().end(),
                        std::back_inserter(common));
  const std::size_t p = k1.members().empty() ? 0 : k1.members()[0].field().p();
  if (common.empty()) return IntersectionClass::empty;
  if (common.size() == 1) return IntersectionClass::point;
  if (common.size() == p + 1) return IntersectionClass::line;
  throw Error("impossible Klein intersection of size " + std::to_string(common.size()));
}

void dump_klein_sweep_csv(FieldModulus f, std::ostream& out) {
  const auto points = all_projective_points(f);
  const auto planes = all_projective_planes(f);
  std::vector<KleinPlane> alphas, betas;
  alphas.reserve(points.size());
  betas.reserve(planes.size());
  for (const auto& x : points) alphas.push_back(alpha_plane(x));
  for (const auto& h : planes) betas.push_back(beta_plane(h));
  out << "point_id,plane_id,incident,intersection_class\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < planes.size(); ++j) {
      const bool inc = incident(points[i], planes[j]);
      const auto cls = classify_intersection(alphas[i], betas[j]);
      out << i << ',' << j << ',' << (inc ? 1 : 0) << ','
          << intersection_class_name(cls) << '\n';
    }
  }
}

}  // namespace fplab
