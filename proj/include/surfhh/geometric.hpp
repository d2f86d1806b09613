#pragma once

// Hochschild cohomology dimensions read directly off the triangulated
// surface: internal triangles, type 0 / type 1 boundaries, and the arrow and
// vertex counts of the quiver (computed from the triangulation, not from a
// built quiver).

#include "surfhh/hh_table.hpp"
#include "surfhh/surface.hpp"

namespace surfhh {

struct SurfaceCounts {
  long vertices = 0;   // |Q0| = number of arcs
  long arrows = 0;     // |Q1| = pairs of consecutive arc sides in a triangle
  long internal = 0;   // |Int|
  long sint = 0;       // |SInt|
  long type0 = 0;      // |B0|
  long type1 = 0;      // |B1|
};

SurfaceCounts surface_counts(const TriangulatedSurface& s);

struct GeometricHH {
  HHTable table;
  bool cup_nontrivial = false;
  bool bracket_nontrivial = false;
};

GeometricHH hh_dims_geometric(const TriangulatedSurface& s, int characteristic, int nmax = kDefaultNmax);

// HH^1 from g, b, c, |B1|, |Int| and |SInt| alone.
long hh1_remark(const TriangulatedSurface& s);

}  // namespace surfhh
