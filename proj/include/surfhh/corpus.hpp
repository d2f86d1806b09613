#pragma once

// Triangulation families for testing and the shipped named fixtures.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "surfhh/surface.hpp"

namespace surfhh {

// All triangulations of a polygon whose sides, read counter-clockwise, are
// `sides` (side i runs from corner i to corner i+1). Sides sharing a label
// are glued, so a cut-open surface yields triangulations of that surface.
// Diagonals are labelled d<i>_<j>. Order is deterministic; the count is
// Catalan(N - 2) for N sides.
std::vector<TriangulationInput> triangulate_polygon(const std::string& name_prefix,
                                                    const std::vector<OrientedSide>& sides);

// Disc with n marked points: corners v0..v<n-1>, boundary sides b<i>.
std::vector<TriangulationInput> generate_polygon_triangulations(int n);
std::size_t catalan(int n);

// Annulus with p and q marked points on its two boundaries, cut along an
// arc c into a polygon with p + q + 2 sides.
std::vector<OrientedSide> annulus_polygon(int p, int q);

// Torus with two boundaries carrying p and q marked points, cut into a
// polygon a b a^-1 b^-1 (p boundary sides) c (q boundary sides) c^-1.
std::vector<OrientedSide> torus_two_holes_polygon(int p, int q);

// Renames arc labels to <prefix>1, <prefix>2, ... in order of first
// appearance. Boundary labels and marked points are kept.
TriangulationInput renumber_arcs(const TriangulationInput& input, const std::string& prefix);

class FixtureCorrupt : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Fixture {
  std::string name;
  std::string description;
  TriangulationInput input;
  nlohmann::json expected;  // {"key": {"value": ..., "basis": ...}}
};

// Shipped fixtures, each validated by build_surface. Throws FixtureCorrupt.
const std::vector<Fixture>& builtin_fixtures();
const Fixture* find_fixture(const std::string& name);

// Parses a fixture document (triangulation plus "description" and
// "expected"); throws FixtureCorrupt if it does not validate.
Fixture load_fixture_text(const std::string& text);

}  // namespace surfhh
