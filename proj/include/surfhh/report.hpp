#pragma once

// Per-instance analysis tying the four HH computations together, and the
// text / JSON renderings used by the command-line tool.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "surfhh/ag_invariant.hpp"
#include "surfhh/hh_table.hpp"
#include "surfhh/surface.hpp"

namespace surfhh {

enum class Method { Geometric, RR, Oracle, Ladkani };

const char* to_string(Method m);
std::optional<Method> parse_method(const std::string& name);
const std::vector<Method>& all_methods();

struct SurfaceSummary {
  int genus = 0;
  int boundaries = 0;
  int marked_points = 0;
  long arcs = 0;
  long triangles = 0;
  long internal = 0;
  long sint = 0;
  long type0 = 0;
  long type1 = 0;
  long q0 = 0;
  long q1 = 0;
  long relations = 0;
  long algebra_dim = 0;
  long hh1_remark = 0;
};

struct MethodTable {
  Method method = Method::Geometric;
  HHTable table;
};

struct Report {
  std::string name;
  int characteristic = 0;
  int nmax = kDefaultNmax;
  SurfaceSummary summary;
  std::vector<BoundaryProfile> boundaries;
  std::vector<MethodTable> tables;
  AGInvariant ag;
  std::string tail_note;
  bool cup_nontrivial = false;
  bool bracket_nontrivial = false;
  bool agree = true;  // all requested tables identical
};

Report analyze(const TriangulatedSurface& s, int characteristic, int nmax = kDefaultNmax,
               const std::vector<Method>& methods = all_methods());

std::string render_text(const Report& r);
nlohmann::json render_json(const Report& r);

// One instance run under characteristic 0 and 2 with every method.
struct CrosscheckRow {
  std::string name;
  bool pass_char0 = false;
  bool pass_char2 = false;
  std::string detail;  // rendered reports of the failing characteristics
  bool pass() const { return pass_char0 && pass_char2; }
};

// Fans out over up to `threads` workers (0 = hardware concurrency). Rows
// come back in input order.
std::vector<CrosscheckRow> crosscheck(const std::vector<TriangulatedSurface>& surfaces, int nmax = kDefaultNmax,
                                      unsigned threads = 0);

}  // namespace surfhh
