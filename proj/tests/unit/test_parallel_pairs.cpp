#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "surfhh/parallel_pairs.hpp"

using namespace surfhh;

namespace {

bool subset(std::vector<std::size_t> a, std::vector<std::size_t> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_SUITE("parallel_pairs") {
  TEST_CASE("AP_n on fig8") {
    const auto p = test::presentation("fig8");
    CHECK(ap_paths(p, 0).size() == 7);
    CHECK(ap_paths(p, 1).size() == 11);
    const auto ap2 = ap_paths(p, 2);
    REQUIRE(ap2.size() == 9);
    for (const auto& path : ap2) CHECK(p.is_relation(path.arrows[0], path.arrows[1]));
    const auto ap5 = ap_paths(p, 5);
    CHECK(ap5.size() == 9);
    for (const auto& path : ap5) {
      CHECK(path.length() == 5);
      CHECK(path.arrows[0] == path.arrows[3]);
    }
    CHECK_THROWS_AS(ap_paths(p, -1), std::invalid_argument);
  }

  TEST_CASE("fig8 families") {
    const auto p = test::presentation("fig8");
    CHECK(rr_sets(p, 0).loop_vertex_cycles.size() == 1);
    const auto f1 = rr_sets(p, 1);
    CHECK(f1.unextendable.size() == 2);
    CHECK(f1.loop_pairs.empty());
    const auto f4 = rr_sets(p, 4);
    CHECK(f4.unextendable.empty());
    CHECK(f4.empty_incomplete.empty());
    const auto f3 = rr_sets(p, 3);
    CHECK(f3.gentle_complete.size() == 9);
    CHECK(f3.cycle_pairs.size() == 9);
  }

  TEST_CASE("coinvariants on fig8") {
    const auto p = test::presentation("fig8");
    CHECK(coinvariant_dim(p, 3, FieldSpec(0)) == 3);
    CHECK(coinvariant_dim(p, 4, FieldSpec(0)) == 0);
    CHECK(coinvariant_dim(p, 4, FieldSpec(2)) == 0);
    CHECK(coinvariant_dim(p, 6, FieldSpec(2)) == 3);
    CHECK(coinvariant_dim(p, 6, FieldSpec(0)) == 3);
  }

  TEST_CASE("RR dimensions") {
    const auto fig8 = test::presentation("fig8");
    CHECK(hh_dims_rr(fig8, 0, 12).dims == std::vector<long>{2, 7, 0, 0, 0, 0, 3, 3, 0, 0, 0, 0, 3});
    CHECK(hh_dims_rr(fig8, 2, 13).dims[3] == 3);
    CHECK(hh_dims_rr(fig8, 2, 13).dims == test::hh_table(2, 7, 3, 3));
    CHECK(hh_dims_rr(fig8, 5, 13).dims == test::hh_table(2, 7, 3, 6));
    const auto disc = test::presentation("square-disc");
    for (int ch : {0, 2, 3}) CHECK(hh_dims_rr(disc, ch).dims == test::hh_table(1, 0, 0, 6));
    CHECK_THROWS_AS(hh_dims_rr(disc, 4), std::invalid_argument);
  }

  TEST_CASE("rotation is a permutation of C_n with order dividing n") {
    const auto p = test::presentation("torus-T2");
    for (int n = 1; n <= 9; ++n) {
      CAPTURE(n);
      const auto f = rr_sets(p, n);
      std::set<std::size_t> image;
      for (std::size_t k : f.complete) {
        image.insert(f.rotation[k]);
        std::size_t cur = k;
        int order = 0;
        do {
          cur = f.rotation[cur];
          ++order;
        } while (cur != k);
        CHECK(n % order == 0);
        if (n % 3 == 0) CHECK(order == 3);
      }
      CHECK(image == std::set<std::size_t>(f.complete.begin(), f.complete.end()));
    }
  }

  TEST_CASE("family inclusions") {
    for (const auto& fx : builtin_fixtures()) {
      const auto p = build_quiver(build_surface(fx.input));
      for (int n = 1; n <= 7; ++n) {
        CAPTURE(fx.name);
        CAPTURE(n);
        const auto f = rr_sets(p, n);
        std::vector<std::size_t> both = f.complete;
        both.insert(both.end(), f.incomplete.begin(), f.incomplete.end());
        std::sort(both.begin(), both.end());
        CHECK(both == f.cycle_pairs);
        CHECK(subset(f.empty_incomplete, f.incomplete));
        CHECK(subset(f.gentle_complete, f.complete0));
        CHECK(subset(f.complete0, f.complete));
      }
    }
  }

  TEST_CASE("hand-built gentle algebra with a loop pair") {
    // One vertex, one loop x with x^2 = 0: k[x]/(x^2).
    std::vector<Arrow> arrows{{0, 0, std::nullopt, -1}};
    GentlePresentation p(Quiver(1, arrows), {{0, 0}});
    p.attach_basis(enumerate_basis(p));
    CHECK(p.basis().size() == 2);
    const auto f1 = rr_sets(p, 1);
    CHECK(f1.loop_pairs.size() == 1);
    // HH^1 of k[x]/(x^2) is 1 over Q and 2 in characteristic 2.
    CHECK(hh_dims_rr(p, 0, 4).dims[1] == 1);
    CHECK(hh_dims_rr(p, 2, 4).dims[1] == 2);
  }
}
