#include "surfhh/corpus.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <utility>

#include "surfhh/io.hpp"

namespace surfhh {

namespace {

using Tri = std::array<int, 3>;
using Layout = std::vector<Tri>;

// Triangulations of the sub-polygon on corners i..j (j > i + 1), closed by the chord i-j.
class PolygonSplitter {
 public:
  explicit PolygonSplitter(int n) : memo_(static_cast<std::size_t>(n) * n), n_(n) {}

  const std::vector<Layout>& between(int i, int j) {
    auto& slot = memo_[static_cast<std::size_t>(i) * n_ + j];
    if (slot.filled) return slot.layouts;
    slot.filled = true;
    if (j == i + 1) {
      slot.layouts.push_back({});
      return slot.layouts;
    }
    std::vector<Layout> out;
    for (int k = i + 1; k < j; ++k) {
      const auto& left = between(i, k);
      const auto& right = between(k, j);
      for (const auto& l : left)
        for (const auto& r : right) {
          Layout t = l;
          t.insert(t.end(), r.begin(), r.end());
          t.push_back({i, k, j});
          out.push_back(std::move(t));
        }
    }
    slot.layouts = std::move(out);
    return slot.layouts;
  }

 private:
  struct Slot {
    bool filled = false;
    std::vector<Layout> layouts;
  };
  std::vector<Slot> memo_;
  int n_;
};

}  // namespace

std::size_t catalan(int n) {
  std::size_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::vector<TriangulationInput> triangulate_polygon(const std::string& name_prefix,
                                                    const std::vector<OrientedSide>& sides) {
  const int n = static_cast<int>(sides.size());
  if (n < 3) throw std::invalid_argument("polygon needs at least three sides");
  for (int i = 0; i < n; ++i)
    if (sides[i].to != sides[(i + 1) % n].from)
      throw std::invalid_argument("polygon side " + std::to_string(i) + " does not end where the next begins");

  auto corner = [&](int i) -> const std::string& { return sides[i].from; };
  auto edge = [&](int u, int v) -> OrientedSide {
    if (v == u + 1) return sides[u];
    if (u == n - 1 && v == 0) return sides[n - 1];
    const int lo = std::min(u, v), hi = std::max(u, v);
    return {"d" + std::to_string(lo) + "_" + std::to_string(hi), SideKind::Arc, corner(u), corner(v)};
  };

  PolygonSplitter splitter(n);
  std::vector<TriangulationInput> out;
  std::size_t index = 0;
  for (const auto& layout : splitter.between(0, n - 1)) {
    TriangulationInput t;
    t.name = name_prefix + "-" + std::to_string(index++);
    for (const auto& [i, k, j] : layout) t.triangles.push_back({edge(i, k), edge(k, j), edge(j, i)});
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<TriangulationInput> generate_polygon_triangulations(int n) {
  if (n < 3) throw std::invalid_argument("polygon needs n >= 3");
  std::vector<OrientedSide> sides;
  for (int i = 0; i < n; ++i)
    sides.push_back({"b" + std::to_string(i), SideKind::Boundary, "v" + std::to_string(i),
                     "v" + std::to_string((i + 1) % n)});
  return triangulate_polygon("polygon" + std::to_string(n), sides);
}

namespace {

// Boundary path x -> y1 -> ... -> y<k-1> -> x around one hole.
void append_hole(std::vector<OrientedSide>& sides, const std::string& hole, const std::string& base, int k) {
  auto point = [&](int i) { return i == 0 || i == k ? base : hole + "p" + std::to_string(i); };
  for (int i = 0; i < k; ++i)
    sides.push_back({hole + "s" + std::to_string(i), SideKind::Boundary, point(i), point(i + 1)});
}

}  // namespace

std::vector<OrientedSide> annulus_polygon(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("each boundary needs a marked point");
  std::vector<OrientedSide> sides;
  append_hole(sides, "B1", "x", p);
  sides.push_back({"c", SideKind::Arc, "x", "y"});
  append_hole(sides, "B2", "y", q);
  sides.push_back({"c", SideKind::Arc, "y", "x"});
  return sides;
}

std::vector<OrientedSide> torus_two_holes_polygon(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("each boundary needs a marked point");
  std::vector<OrientedSide> sides{
      {"a", SideKind::Arc, "x", "x"},
      {"b", SideKind::Arc, "x", "x"},
      {"a", SideKind::Arc, "x", "x"},
      {"b", SideKind::Arc, "x", "x"},
  };
  append_hole(sides, "B1", "x", p);
  sides.push_back({"c", SideKind::Arc, "x", "y"});
  append_hole(sides, "B2", "y", q);
  sides.push_back({"c", SideKind::Arc, "y", "x"});
  return sides;
}

TriangulationInput renumber_arcs(const TriangulationInput& input, const std::string& prefix) {
  std::map<std::string, std::string> names;
  TriangulationInput out = input;
  for (auto& tri : out.triangles)
    for (auto& side : tri) {
      if (side.kind != SideKind::Arc) continue;
      auto [it, fresh] = names.try_emplace(side.label, prefix + std::to_string(names.size() + 1));
      side.label = it->second;
    }
  return out;
}

// Defined in the generated fixture source.
const std::vector<std::pair<std::string, std::string>>& embedded_fixture_texts();

Fixture load_fixture_text(const std::string& text) {
  Fixture f;
  try {
    const auto doc = nlohmann::json::parse(text);
    f.input = parse_triangulation(doc);
    f.name = f.input.name;
    f.description = doc.value("description", "");
    f.expected = doc.value("expected", nlohmann::json::object());
    build_surface(f.input);
  } catch (const std::exception& e) {
    throw FixtureCorrupt(std::string("fixture does not validate: ") + e.what());
  }
  return f;
}

const std::vector<Fixture>& builtin_fixtures() {
  static std::once_flag once;
  static std::vector<Fixture> fixtures;
  std::call_once(once, [] {
    for (const auto& [file, text] : embedded_fixture_texts()) {
      try {
        fixtures.push_back(load_fixture_text(text));
      } catch (const FixtureCorrupt& e) {
        fixtures.clear();
        throw FixtureCorrupt(file + ": " + e.what());
      }
    }
  });
  return fixtures;
}

const Fixture* find_fixture(const std::string& name) {
  for (const auto& f : builtin_fixtures())
    if (f.name == name) return &f;
  return nullptr;
}

}  // namespace surfhh
