// Cross-method and lemma-level properties over families beyond the shipped
// fixtures: annuli and two-holed tori from cut polygons.

#include "helpers.hpp"
#include "surfhh/ag_invariant.hpp"
#include "surfhh/cochain.hpp"
#include "surfhh/geometric.hpp"
#include "surfhh/parallel_pairs.hpp"

using namespace surfhh;

namespace {

constexpr int kNmax = 13;

void check_instance(const TriangulatedSurface& s) {
  CAPTURE(s.name());
  const auto p = build_quiver(s);
  const auto counts = surface_counts(s);
  const auto ag = ag_invariant(s);
  const long q0 = static_cast<long>(p.quiver().vertex_count());
  const long q1 = static_cast<long>(p.quiver().arrow_count());

  CHECK(q0 == 6 * s.genus() + 3 * s.boundary_count() + s.marked_point_count() - 6);
  CHECK(q1 == 3 * counts.internal + counts.sint);
  CHECK(hh1_remark(s) == 1 + counts.type1 + q1 - q0);
  CHECK_FALSE(p.quiver().has_loops());
  CHECK_FALSE(p.quiver().has_two_cycles());

  CHECK(ag(1, 0) == counts.type0);
  CHECK(ag(1, 1) == counts.type1);
  CHECK(ag(0, 3) == counts.internal);
  long nonzero_n = 0;
  for (const auto& [key, mult] : ag.support()) {
    if (key.first == 0) CHECK(key.second == 3);
    if (key.first != 0) nonzero_n += mult;
    if (key.first == 1) CHECK(key.second <= 1);
  }
  CHECK(nonzero_n == s.boundary_count());

  for (int ch : {0, 2}) {
    CAPTURE(ch);
    const FieldSpec field(ch);
    const auto geo = hh_dims_geometric(s, ch, kNmax).table;
    const auto complex = build_complex(p, field, kNmax);
    CHECK(complex_property_holds(complex));
    CHECK(hh_dims_rr(p, ch, kNmax).dims == geo.dims);
    CHECK(hh_dims_oracle(complex).dims == geo.dims);
    CHECK(hh_dims_ladkani(ag, q0, q1, ch, kNmax).dims == geo.dims);
  }

  CHECK(rr_sets(p, 1).loop_pairs.empty());
  for (int n = 2; n <= kNmax; ++n) {
    CAPTURE(n);
    const auto f = rr_sets(p, n);
    CHECK(f.unextendable.empty());
    CHECK(f.empty_incomplete.empty());
    CHECK(static_cast<long>(f.ap.size()) == 3 * counts.internal);
    if (n % 3 == 0) {
      CHECK(f.cycle_pairs == f.gentle_complete);
      CHECK(coinvariant_dim(f, FieldSpec(0)) == counts.internal);
      CHECK(coinvariant_dim(f, FieldSpec(2)) == counts.internal);
    } else {
      CHECK(f.cycle_pairs.empty());
    }
  }
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("annuli") {
    for (int p = 1; p <= 3; ++p)
      for (int q = 1; q <= 3; ++q)
        for (const auto& s : test::cut_family(annulus_polygon(p, q), "annulus")) check_instance(s);
  }

  TEST_CASE("two-holed tori") {
    for (const auto& s : test::cut_family(torus_two_holes_polygon(1, 1), "torus11")) check_instance(s);
    for (const auto& s : test::cut_family(torus_two_holes_polygon(1, 2), "torus12", 3)) check_instance(s);
    for (const auto& s : test::cut_family(torus_two_holes_polygon(2, 2), "torus22", 17)) check_instance(s);
    for (const auto& s : test::cut_family(torus_two_holes_polygon(3, 3), "torus33", 401)) check_instance(s);
  }

  TEST_CASE("large polygons") {
    for (int n : {10, 11})
      for (const auto& t : generate_polygon_triangulations(n)) check_instance(build_surface(t));
  }
}
