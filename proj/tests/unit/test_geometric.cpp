#include "helpers.hpp"
#include "surfhh/geometric.hpp"

using namespace surfhh;

TEST_SUITE("geometric") {
  TEST_CASE("fig8") {
    const auto s = test::fixture("fig8");
    const auto c = surface_counts(s);
    CHECK(c.vertices == 7);
    CHECK(c.arrows == 11);
    CHECK(c.internal == 3);
    CHECK(c.sint == 2);
    CHECK(c.type0 == 1);
    CHECK(c.type1 == 2);

    const auto g0 = hh_dims_geometric(s, 0);
    CHECK(g0.table.dims == test::hh_table(2, 7, 3, 6));
    CHECK(g0.cup_nontrivial);
    CHECK(g0.bracket_nontrivial);
    const auto g2 = hh_dims_geometric(s, 2);
    CHECK(g2.table.dims == test::hh_table(2, 7, 3, 3));
    CHECK(g2.cup_nontrivial);
    CHECK_FALSE(g2.bracket_nontrivial);
    CHECK(hh1_remark(s) == 7);
  }

  TEST_CASE("torus pair") {
    for (const char* name : {"torus-T1", "torus-T2"}) {
      CAPTURE(name);
      const auto s = test::fixture(name);
      CHECK(hh_dims_geometric(s, 0).table.dims == test::hh_table(1, 7, 4, 6));
      CHECK(hh_dims_geometric(s, 2).table.dims == test::hh_table(1, 7, 4, 3));
      // 1 + 0 + 3*4 + 6 - 6 - 6 - 6 + 6
      CHECK(hh1_remark(s) == 7);
    }
  }

  TEST_CASE("square disc") {
    const auto s = test::fixture("square-disc");
    const auto g = hh_dims_geometric(s, 2);
    CHECK(g.table.dims == test::hh_table(1, 0, 0, 3));
    CHECK_FALSE(g.cup_nontrivial);
    CHECK_FALSE(g.bracket_nontrivial);
    CHECK(hh1_remark(s) == 0);
  }

  TEST_CASE("odd characteristic follows char 0") {
    const auto s = test::fixture("fig8");
    CHECK(hh_dims_geometric(s, 3).table.dims == hh_dims_geometric(s, 0).table.dims);
    CHECK(hh_dims_geometric(s, 3).bracket_nontrivial == false);
  }

  TEST_CASE("nmax bounds") {
    const auto s = test::fixture("fig8");
    CHECK(hh_dims_geometric(s, 0, 1).table.dims == std::vector<long>{2, 7});
    CHECK(hh_dims_geometric(s, 0, 40).table.nmax() == 40);
    CHECK_THROWS(hh_dims_geometric(s, 0, 0));
  }
}
