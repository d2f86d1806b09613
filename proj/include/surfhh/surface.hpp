#pragma once

// Combinatorial triangulations of unpunctured marked surfaces.
//
// A triangulation is given as a list of triangles, each a counter-clockwise
// list of three oriented sides. Arc sides are glued in pairs with reversed
// direction; boundary sides occur once. Everything downstream (quiver,
// boundary types, genus) is read off this incidence data.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfhh {

enum class SideKind { Arc, Boundary };

struct OrientedSide {
  std::string label;
  SideKind kind = SideKind::Arc;
  std::string from;
  std::string to;

  bool operator==(const OrientedSide&) const = default;
};

using TriangleSides = std::array<OrientedSide, 3>;

struct TriangulationInput {
  std::string name;
  std::vector<TriangleSides> triangles;

  bool operator==(const TriangulationInput&) const = default;
};

class SurfaceError : public std::runtime_error {
 public:
  enum class Kind {
    Malformed,
    CornerInconsistency,
    NonManifoldGluing,
    OrientationMismatch,
    InteriorVertex,
    Disconnected,
    NoArcs,
    NonIntegerGenus,
  };

  SurfaceError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(SurfaceError::Kind kind);

// Position of a side inside the triangle list.
struct SideSlot {
  std::size_t triangle = 0;
  int position = 0;  // 0..2, counter-clockwise

  bool operator==(const SideSlot&) const = default;
};

struct Arc {
  std::string label;
  std::array<std::size_t, 2> endpoints{};  // marked point ids (from, to) of first occurrence
  std::array<SideSlot, 2> slots{};
};

struct BoundarySegment {
  std::string label;
  std::size_t from = 0;
  std::size_t to = 0;
  SideSlot slot;
};

// One boundary circle, traversed with the surface on the left. points[i] is
// the start of segments[i].
struct BoundaryComponent {
  std::vector<std::size_t> points;
  std::vector<std::size_t> segments;
};

// A side of a triangle resolved to an arc id or a boundary segment id.
struct SideRef {
  SideKind kind = SideKind::Arc;
  std::size_t index = 0;
};

enum class BoundaryType { Type0, Type1, Other };

const char* to_string(BoundaryType type);

struct BoundaryProfile {
  std::size_t component = 0;
  int n_incident = 0;  // marked points on the component touched by an arc
  int m_segments = 0;  // segments of the component with both ends touched
  BoundaryType type = BoundaryType::Other;
};

class TriangulatedSurface {
 public:
  const std::string& name() const { return name_; }
  const std::vector<TriangleSides>& triangles() const { return triangles_; }
  const std::vector<std::array<SideRef, 3>>& triangle_sides() const { return sides_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<BoundarySegment>& boundary_segments() const { return segments_; }
  const std::vector<std::string>& marked_points() const { return points_; }
  const std::vector<BoundaryComponent>& boundary_components() const { return components_; }

  int genus() const { return genus_; }
  int euler_characteristic() const { return euler_; }
  int boundary_count() const { return static_cast<int>(components_.size()); }
  int marked_point_count() const { return static_cast<int>(points_.size()); }

  // Number of arc ends at each marked point (a loop arc counts twice).
  const std::vector<int>& arc_degree() const { return arc_degree_; }

  // Serialized form; build_surface(to_input()) reproduces this surface.
  TriangulationInput to_input() const;

 private:
  friend TriangulatedSurface build_surface(const TriangulationInput& input);

  std::string name_;
  std::vector<TriangleSides> triangles_;
  std::vector<std::array<SideRef, 3>> sides_;
  std::vector<Arc> arcs_;
  std::vector<BoundarySegment> segments_;
  std::vector<std::string> points_;
  std::vector<BoundaryComponent> components_;
  std::vector<int> arc_degree_;
  int genus_ = 0;
  int euler_ = 0;
};

// Validates the gluing and derives the topology. Throws SurfaceError.
TriangulatedSurface build_surface(const TriangulationInput& input);

// Triangles all of whose sides are arcs, in triangle order.
std::vector<std::size_t> internal_triangles(const TriangulatedSurface& s);

// Triangles with exactly one boundary side.
std::size_t sint_count(const TriangulatedSurface& s);

std::vector<BoundaryProfile> classify_boundaries(const TriangulatedSurface& s);

}  // namespace surfhh
