// Acceptance checks. One line per criterion:
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run only criterion N (repeatable)
//
// Exit status is nonzero iff a selected criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "surfhh/ag_invariant.hpp"
#include "surfhh/cochain.hpp"
#include "surfhh/corpus.hpp"
#include "surfhh/geometric.hpp"
#include "surfhh/parallel_pairs.hpp"
#include "surfhh/quiver.hpp"
#include "surfhh/report.hpp"

using namespace surfhh;

namespace {

constexpr int kNmax = 13;

class Outcome {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  bool passed() const { return failures_.empty(); }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::string out;
    for (std::size_t i = 0; i < failures_.size() && i < 6; ++i) out += (i ? "; " : "") + failures_[i];
    if (failures_.size() > 6) out += "; ... " + std::to_string(failures_.size() - 6) + " more";
    return out;
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<long> periodic(long h0, long h1, long value, int period) {
  std::vector<long> d{h0, h1};
  for (int n = 2; n <= kNmax; ++n) d.push_back(n % period <= 1 ? value : 0);
  return d;
}

std::string show(const std::vector<long>& v) { return format_dims(v); }

TriangulatedSurface fixture(const std::string& name) {
  const auto* f = find_fixture(name);
  if (!f) throw std::runtime_error("missing fixture " + name);
  return build_surface(f->input);
}

// Polygons with 4..9 vertices followed by the shipped fixtures.
const std::vector<TriangulatedSurface>& corpus() {
  static const std::vector<TriangulatedSurface> all = [] {
    std::vector<TriangulatedSurface> out;
    for (int n = 4; n <= 9; ++n)
      for (const auto& t : generate_polygon_triangulations(n)) out.push_back(build_surface(t));
    for (const auto& f : builtin_fixtures()) out.push_back(build_surface(f.input));
    return out;
  }();
  return all;
}

void fig8_example(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto s = fixture("fig8");
  const auto r0 = analyze(s, 0, kNmax);
  const auto r2 = analyze(s, 2, kNmax);
  const double elapsed = seconds_since(t0);
  for (const auto* r : {&r0, &r2}) {
    const auto expected = periodic(2, 7, 3, r->characteristic == 2 ? 3 : 6);
    for (const auto& mt : r->tables)
      o.expect(mt.table.dims == expected, std::string(to_string(mt.method)) + " char " +
                                              std::to_string(r->characteristic) + " gave " + show(mt.table.dims) +
                                              ", expected " + show(expected));
  }
  o.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s >= 1 s");
}

void torus_counterexample(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto s1 = fixture("torus-T1");
  const auto s2 = fixture("torus-T2");
  for (int ch : {0, 2}) {
    const auto r1 = analyze(s1, ch, kNmax);
    const auto r2 = analyze(s2, ch, kNmax);
    const std::string tag = " (char " + std::to_string(ch) + ")";
    o.expect(r1.agree && r2.agree, "methods disagree" + tag);
    const auto& d1 = r1.tables.front().table.dims;
    const auto& d2 = r2.tables.front().table.dims;
    o.expect(d1 == d2, "T1 " + show(d1) + " != T2 " + show(d2) + tag);
    for (const auto* r : {&r1, &r2}) {
      const auto& d = r->tables.front().table.dims;
      o.expect(d[0] == 1, r->name + " HH^0=" + std::to_string(d[0]) + ", expected 1" + tag);
      o.expect(d[1] == 9, r->name + " HH^1=" + std::to_string(d[1]) + ", expected 9" + tag);
      const int period = ch == 2 ? 3 : 6;
      bool tail = true;
      for (int n = 2; n <= kNmax; ++n) tail = tail && d[n] == (n % period <= 1 ? 4 : 0);
      o.expect(tail, r->name + " tail " + show(d) + " is not 4 per period" + tag);
      if (ch == 0) {
        o.expect(r->summary.q0 == 12, r->name + " |Q0|=" + std::to_string(r->summary.q0) + ", expected 12");
        o.expect(r->summary.q1 == 20, r->name + " |Q1|=" + std::to_string(r->summary.q1) + ", expected 20");
      }
    }
  }
  const auto a1 = ag_invariant(s1), a2 = ag_invariant(s2);
  const auto cmp = compare_ag(a1, a2);
  o.expect(a1(3, 3) == 2, "phi_T1(3,3)=" + std::to_string(a1(3, 3)) + ", expected 2");
  o.expect(a2(3, 3) == 0, "phi_T2(3,3)=" + std::to_string(a2(3, 3)) + ", expected 0");
  o.expect(!cmp.equal && cmp.witness.key == AGInvariant::Key{3, 3} && cmp.witness.left == 2 && cmp.witness.right == 0,
           "AG comparison witness is not (3,3): 2 vs 0");
  o.expect(cmp.verdict == "not derived equivalent", "verdict '" + cmp.verdict + "'");
  const double elapsed = seconds_since(t0);
  o.expect(elapsed < 2.0, "runtime " + std::to_string(elapsed) + " s >= 2 s");
}

void four_way(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& all = corpus();
  o.expect(all.size() == 624 + builtin_fixtures().size(), "corpus has " + std::to_string(all.size()) + " instances");
  for (const auto& row : crosscheck(all, kNmax)) {
    o.expect(row.pass_char0, row.name + " disagrees in char 0");
    o.expect(row.pass_char2, row.name + " disagrees in char 2");
  }
  const double elapsed = seconds_since(t0);
  o.expect(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s >= 60 s");
}

void complex_property(Outcome& o) {
  for (const auto& s : corpus()) {
    const auto p = build_quiver(s);
    for (int ch : {0, 2})
      o.expect(complex_property_holds(build_complex(p, FieldSpec(ch), kNmax)),
               s.name() + ": D_{n+1} D_n != 0 in char " + std::to_string(ch));
  }
}

void lemma_suite(Outcome& o) {
  for (const auto& s : corpus()) {
    const auto p = build_quiver(s);
    const long internal = static_cast<long>(internal_triangles(s).size());
    o.expect(rr_sets(p, 1).loop_pairs.empty(), s.name() + ": (Q1//Q0) nonempty");
    for (int n = 2; n <= kNmax; ++n) {
      const auto f = rr_sets(p, n);
      const std::string at = s.name() + " n=" + std::to_string(n) + ": ";
      o.expect(f.unextendable.empty(), at + "(0,0)_n nonempty");
      o.expect(f.empty_incomplete.empty(), at + "E_n nonempty");
      o.expect(static_cast<long>(f.ap.size()) == 3 * internal, at + "|AP_n| != 3|Int|");
      if (n % 3 == 0) {
        o.expect(f.cycle_pairs == f.gentle_complete, at + "(AP_n//Q0) != G_n");
        for (int ch : {0, 2})
          o.expect(coinvariant_dim(f, FieldSpec(ch)) == internal,
                   at + "coinvariants != |Int| in char " + std::to_string(ch));
      } else {
        o.expect(f.cycle_pairs.empty(), at + "(AP_n//Q0) nonempty");
      }
    }
  }
}

void counting_identities(Outcome& o) {
  for (const auto& s : corpus()) {
    const auto p = build_quiver(s);
    const auto c = surface_counts(s);
    const long q0 = static_cast<long>(p.quiver().vertex_count());
    const long q1 = static_cast<long>(p.quiver().arrow_count());
    o.expect(q0 == 6 * s.genus() + 3 * s.boundary_count() + s.marked_point_count() - 6, s.name() + ": |Q0|");
    o.expect(q1 == 3 * c.internal + c.sint, s.name() + ": |Q1| != 3|Int|+|SInt|");
    o.expect(hh1_remark(s) == 1 + c.type1 + q1 - q0, s.name() + ": HH^1 from counts");
  }
}

void annulus_anchor(Outcome& o) {
  const auto s = fixture("annulus-1-1");
  const auto p = build_quiver(s);
  const auto oracle = hh_dims_oracle(build_complex(p, FieldSpec(0), kNmax));
  const auto c = surface_counts(s);
  o.expect(oracle.dims[0] == 1, "oracle HH^0=" + std::to_string(oracle.dims[0]));
  o.expect(oracle.dims[1] == 3, "oracle HH^1=" + std::to_string(oracle.dims[1]));
  o.expect(c.type1 == 2 && c.arrows == 2 && c.vertices == 2, "counts |B1|, |Q1|, |Q0| are not 2, 2, 2");
  o.expect(1 + c.type1 + c.arrows - c.vertices == oracle.dims[1], "geometric HH^1 differs from the oracle");
}

void ag_identities(Outcome& o) {
  for (const auto& s : corpus()) {
    const auto ag = ag_invariant(s);
    const auto c = surface_counts(s);
    o.expect(ag(1, 0) == c.type0, s.name() + ": phi(1,0) != |B0|");
    o.expect(ag(1, 1) == c.type1, s.name() + ": phi(1,1) != |B1|");
    o.expect(ag(0, 3) == c.internal, s.name() + ": phi(0,3) != |Int|");
    long pairs = 0;
    for (const auto& [key, mult] : ag.support()) {
      if (key.first == 0 && key.second != 3) o.expect(false, s.name() + ": phi(0,m) != 0 for m != 3");
      if (key.first != 0) pairs += mult;
    }
    o.expect(pairs == s.boundary_count(), s.name() + ": pairs with n != 0 do not number b");
  }
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "Criterion number (repeatable)")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "fig8 example reproduction", fig8_example},
      {2, "torus counterexample reproduction", torus_counterexample},
      {3, "four-way method agreement on polygons 4..9 and fixtures", four_way},
      {4, "complex property D_{n+1} D_n = 0", complex_property},
      {5, "lemma suite", lemma_suite},
      {6, "counting identities", counting_identities},
      {7, "annulus(1,1) sanity anchor", annulus_anchor},
      {8, "AG identities", ag_identities},
  };
  const std::set<int> wanted(selected.begin(), selected.end());

  bool all_ok = true;
  for (const auto& c : criteria) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    all_ok = all_ok && o.passed();
    std::cout << "criterion " << c.id << ' ' << (o.passed() ? "PASS" : "FAIL") << ": " << c.title << " ("
              << o.checks() << " checks)";
    if (!o.passed()) std::cout << ": " << o.summary();
    std::cout << std::endl;
  }
  return all_ok ? 0 : 1;
}
