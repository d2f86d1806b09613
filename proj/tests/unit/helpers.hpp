#pragma once

#include <string>
#include <vector>

#include <doctest.h>

#include "surfhh/corpus.hpp"
#include "surfhh/quiver.hpp"
#include "surfhh/surface.hpp"

namespace surfhh::test {

inline TriangulatedSurface fixture(const std::string& name) {
  const auto* f = find_fixture(name);
  REQUIRE_MESSAGE(f != nullptr, "missing fixture " << name);
  return build_surface(f->input);
}

inline GentlePresentation presentation(const std::string& name) { return build_quiver(fixture(name)); }

inline OrientedSide arc(const std::string& label, const std::string& from, const std::string& to) {
  return {label, SideKind::Arc, from, to};
}

inline OrientedSide bnd(const std::string& label, const std::string& from, const std::string& to) {
  return {label, SideKind::Boundary, from, to};
}

// Tail values expected for n >= 2: `value` at n = 0,1 mod period.
inline std::vector<long> hh_table(long h0, long h1, long value, int period, int nmax = 13) {
  std::vector<long> d{h0, h1};
  for (int n = 2; n <= nmax; ++n) d.push_back(n % period <= 1 ? value : 0);
  return d;
}

// Annuli and two-holed tori obtained by triangulating cut polygons. Every
// `stride`-th triangulation is kept.
inline std::vector<TriangulatedSurface> cut_family(const std::vector<OrientedSide>& polygon, const std::string& name,
                                                   std::size_t stride = 1) {
  std::vector<TriangulatedSurface> out;
  const auto all = triangulate_polygon(name, polygon);
  for (std::size_t i = 0; i < all.size(); i += stride) out.push_back(build_surface(all[i]));
  return out;
}

}  // namespace surfhh::test
