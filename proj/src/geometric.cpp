#include "surfhh/geometric.hpp"

#include <stdexcept>

#include "surfhh/linalg.hpp"

namespace surfhh {

SurfaceCounts surface_counts(const TriangulatedSurface& s) {
  SurfaceCounts c;
  c.vertices = static_cast<long>(s.arcs().size());
  for (const auto& tri : s.triangle_sides())
    for (int i = 0; i < 3; ++i)
      if (tri[i].kind == SideKind::Arc && tri[(i + 1) % 3].kind == SideKind::Arc) ++c.arrows;
  c.internal = static_cast<long>(internal_triangles(s).size());
  c.sint = static_cast<long>(sint_count(s));
  for (const auto& prof : classify_boundaries(s)) {
    if (prof.type == BoundaryType::Type0) ++c.type0;
    if (prof.type == BoundaryType::Type1) ++c.type1;
  }
  return c;
}

GeometricHH hh_dims_geometric(const TriangulatedSurface& s, int characteristic, int nmax) {
  const FieldSpec field(characteristic);
  if (nmax < 1) throw std::invalid_argument("nmax must be at least 1");
  const auto c = surface_counts(s);
  const int period = field.is_char2() ? 3 : 6;

  GeometricHH out;
  auto& t = out.table;
  t.characteristic = characteristic;
  t.dims.assign(nmax + 1, 0);
  t.dims[0] = 1 + c.type0;
  t.dims[1] = 1 + c.type1 + c.arrows - c.vertices;
  for (int n = 2; n <= nmax; ++n) {
    const int r = n % period;
    t.dims[n] = (r == 0 || r == 1) ? c.internal : 0;
  }
  for (int n = 2; n + period <= nmax; ++n)
    if (t.dims[n] != t.dims[n + period]) throw std::logic_error("geometric HH tail is not periodic");

  t.tail_note = c.internal == 0 ? std::string("HH^n = 0 for n >= 2")
                                 : "HH^n = " + std::to_string(c.internal) + " for n >= 2 with n = 0,1 (mod " +
                                       std::to_string(period) + "), else 0";
  out.cup_nontrivial = c.internal >= 1;
  out.bracket_nontrivial = out.cup_nontrivial && characteristic == 0;
  return out;
}

long hh1_remark(const TriangulatedSurface& s) {
  const auto c = surface_counts(s);
  const long g = s.genus(), b = s.boundary_count(), m = s.marked_point_count();
  return 1 + c.type1 + 3 * c.internal + c.sint - 6 * g - 3 * b - m + 6;
}

}  // namespace surfhh
