#include "surfhh/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

namespace surfhh {

const char* to_string(SurfaceError::Kind kind) {
  switch (kind) {
    case SurfaceError::Kind::Malformed: return "Malformed";
    case SurfaceError::Kind::CornerInconsistency: return "CornerInconsistency";
    case SurfaceError::Kind::NonManifoldGluing: return "NonManifoldGluing";
    case SurfaceError::Kind::OrientationMismatch: return "OrientationMismatch";
    case SurfaceError::Kind::InteriorVertex: return "InteriorVertex";
    case SurfaceError::Kind::Disconnected: return "Disconnected";
    case SurfaceError::Kind::NoArcs: return "NoArcs";
    case SurfaceError::Kind::NonIntegerGenus: return "NonIntegerGenus";
  }
  return "?";
}

const char* to_string(BoundaryType type) {
  switch (type) {
    case BoundaryType::Type0: return "Type0";
    case BoundaryType::Type1: return "Type1";
    case BoundaryType::Other: return "Other";
  }
  return "?";
}

namespace {

using Kind = SurfaceError::Kind;

[[noreturn]] void fail(Kind kind, const std::string& msg) { throw SurfaceError(kind, msg); }

std::string where(const SideSlot& slot) {
  std::ostringstream os;
  os << "triangle " << slot.triangle << ", side " << slot.position;
  return os.str();
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

TriangulatedSurface build_surface(const TriangulationInput& input) {
  const auto& tris = input.triangles;
  if (tris.empty()) fail(Kind::Malformed, "triangulation has no triangles");

  for (std::size_t t = 0; t < tris.size(); ++t) {
    for (int i = 0; i < 3; ++i) {
      const auto& side = tris[t][i];
      if (side.label.empty() || side.from.empty() || side.to.empty())
        fail(Kind::Malformed, "empty label or vertex name at " + where({t, i}));
    }
    for (int i = 0; i < 3; ++i) {
      const auto& cur = tris[t][i];
      const auto& next = tris[t][(i + 1) % 3];
      if (cur.to != next.from)
        fail(Kind::CornerInconsistency, "side '" + cur.label + "' ends at '" + cur.to +
                                            "' but the next side starts at '" + next.from +
                                            "' (" + where({t, i}) + ")");
    }
  }

  // Group side occurrences by label, preserving first-appearance order.
  std::map<std::string, SideKind> kind_of;
  std::map<std::string, std::vector<SideSlot>> occurrences;
  std::vector<std::string> arc_order;
  std::vector<std::string> boundary_order;
  for (std::size_t t = 0; t < tris.size(); ++t) {
    for (int i = 0; i < 3; ++i) {
      const auto& side = tris[t][i];
      auto [it, inserted] = kind_of.emplace(side.label, side.kind);
      if (!inserted && it->second != side.kind)
        fail(Kind::Malformed, "label '" + side.label + "' used for both an arc and a boundary segment");
      if (inserted) (side.kind == SideKind::Arc ? arc_order : boundary_order).push_back(side.label);
      occurrences[side.label].push_back({t, i});
    }
  }

  auto side_at = [&](const SideSlot& s) -> const OrientedSide& { return tris[s.triangle][s.position]; };

  for (const auto& label : arc_order) {
    const auto& occ = occurrences[label];
    if (occ.size() != 2)
      fail(Kind::NonManifoldGluing, "arc '" + label + "' occurs " + std::to_string(occ.size()) +
                                        " times (expected 2)");
    const auto& a = side_at(occ[0]);
    const auto& b = side_at(occ[1]);
    if (b.from == a.to && b.to == a.from) continue;
    if (b.from == a.from && b.to == a.to)
      fail(Kind::OrientationMismatch, "arc '" + label + "' is glued with equal direction " + a.from +
                                          "->" + a.to + " on both sides");
    fail(Kind::NonManifoldGluing, "arc '" + label + "' has endpoints " + a.from + "->" + a.to +
                                      " and " + b.from + "->" + b.to);
  }
  for (const auto& label : boundary_order) {
    const auto& occ = occurrences[label];
    if (occ.size() != 1)
      fail(Kind::NonManifoldGluing, "boundary segment '" + label + "' occurs " +
                                        std::to_string(occ.size()) + " times (expected 1)");
  }
  if (arc_order.empty()) fail(Kind::NoArcs, "triangulation has no arcs");

  TriangulatedSurface s;
  s.name_ = input.name;
  s.triangles_ = tris;

  std::map<std::string, std::size_t> point_id;
  for (const auto& tri : tris)
    for (const auto& side : tri)
      if (point_id.emplace(side.from, s.points_.size()).second) s.points_.push_back(side.from);

  std::map<std::string, std::size_t> arc_id;
  for (const auto& label : arc_order) {
    const auto& occ = occurrences[label];
    Arc arc;
    arc.label = label;
    arc.slots = {occ[0], occ[1]};
    arc.endpoints = {point_id.at(side_at(occ[0]).from), point_id.at(side_at(occ[0]).to)};
    arc_id[label] = s.arcs_.size();
    s.arcs_.push_back(arc);
  }
  std::map<std::string, std::size_t> segment_id;
  for (const auto& label : boundary_order) {
    const auto& slot = occurrences[label][0];
    BoundarySegment seg;
    seg.label = label;
    seg.slot = slot;
    seg.from = point_id.at(side_at(slot).from);
    seg.to = point_id.at(side_at(slot).to);
    segment_id[label] = s.segments_.size();
    s.segments_.push_back(seg);
  }

  s.sides_.resize(tris.size());
  for (std::size_t t = 0; t < tris.size(); ++t)
    for (int i = 0; i < 3; ++i) {
      const auto& side = tris[t][i];
      s.sides_[t][i] = side.kind == SideKind::Arc ? SideRef{SideKind::Arc, arc_id.at(side.label)}
                                                  : SideRef{SideKind::Boundary, segment_id.at(side.label)};
    }

  // Corner (t, i) sits at the end of side i, between sides i and i+1. Crossing
  // the arc on side i+1 leads to the corner that follows its twin.
  auto twin = [&](const SideSlot& slot) -> SideSlot {
    const auto& arc = s.arcs_[s.sides_[slot.triangle][slot.position].index];
    return arc.slots[0] == slot ? arc.slots[1] : arc.slots[0];
  };
  auto corner_index = [](const SideSlot& c) { return c.triangle * 3 + static_cast<std::size_t>(c.position); };
  auto successor = [&](const SideSlot& c) -> std::optional<SideSlot> {
    SideSlot out{c.triangle, (c.position + 1) % 3};
    if (s.sides_[out.triangle][out.position].kind == SideKind::Boundary) return std::nullopt;
    return twin(out);
  };

  std::vector<char> visited(tris.size() * 3, 0);
  std::vector<int> chains_at(s.points_.size(), 0);
  std::vector<std::optional<std::size_t>> outgoing(s.points_.size());
  std::vector<std::optional<std::size_t>> incoming(s.points_.size());
  for (std::size_t t = 0; t < tris.size(); ++t) {
    for (int i = 0; i < 3; ++i) {
      if (s.sides_[t][i].kind != SideKind::Boundary) continue;
      // Chain of corners around the vertex at the end of this boundary side.
      SideSlot c{t, i};
      const std::size_t p = point_id.at(tris[t][i].to);
      ++chains_at[p];
      incoming[p] = s.sides_[t][i].index;
      while (true) {
        visited[corner_index(c)] = 1;
        auto next = successor(c);
        if (!next) break;
        c = *next;
      }
      outgoing[p] = s.sides_[c.triangle][(c.position + 1) % 3].index;
    }
  }
  for (std::size_t k = 0; k < visited.size(); ++k)
    if (!visited[k]) {
      const auto& side = tris[k / 3][k % 3];
      fail(Kind::InteriorVertex, "marked point '" + side.to +
                                     "' is surrounded by triangles (interior vertex / puncture)");
    }
  for (std::size_t p = 0; p < s.points_.size(); ++p)
    if (chains_at[p] != 1)
      fail(Kind::NonManifoldGluing, "marked point '" + s.points_[p] + "' is glued from " +
                                        std::to_string(chains_at[p]) + " separate vertex fans");

  DisjointSets components(tris.size());
  for (const auto& arc : s.arcs_) components.unite(arc.slots[0].triangle, arc.slots[1].triangle);
  for (std::size_t t = 1; t < tris.size(); ++t)
    if (components.find(t) != components.find(0))
      fail(Kind::Disconnected, "triangle " + std::to_string(t) + " is not connected to triangle 0");

  // Boundary circles: after a segment ending at p comes the one leaving p.
  std::vector<char> used(s.segments_.size(), 0);
  for (std::size_t start = 0; start < s.segments_.size(); ++start) {
    if (used[start]) continue;
    BoundaryComponent comp;
    std::size_t seg = start;
    while (!used[seg]) {
      used[seg] = 1;
      comp.points.push_back(s.segments_[seg].from);
      comp.segments.push_back(seg);
      seg = *outgoing[s.segments_[seg].to];
    }
    s.components_.push_back(std::move(comp));
  }

  const int v = static_cast<int>(s.points_.size());
  const int e = static_cast<int>(s.arcs_.size() + s.segments_.size());
  const int f = static_cast<int>(tris.size());
  s.euler_ = v - e + f;
  const int twice_genus = 2 - s.boundary_count() - s.euler_;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    fail(Kind::NonIntegerGenus, "Euler characteristic " + std::to_string(s.euler_) + " with " +
                                    std::to_string(s.boundary_count()) +
                                    " boundary components gives no valid genus");
  s.genus_ = twice_genus / 2;

  s.arc_degree_.assign(s.points_.size(), 0);
  for (const auto& arc : s.arcs_) {
    ++s.arc_degree_[arc.endpoints[0]];
    ++s.arc_degree_[arc.endpoints[1]];
  }
  return s;
}

TriangulationInput TriangulatedSurface::to_input() const { return {name_, triangles_}; }

std::vector<std::size_t> internal_triangles(const TriangulatedSurface& s) {
  std::vector<std::size_t> out;
  const auto& sides = s.triangle_sides();
  for (std::size_t t = 0; t < sides.size(); ++t)
    if (std::all_of(sides[t].begin(), sides[t].end(), [](const SideRef& r) { return r.kind == SideKind::Arc; }))
      out.push_back(t);
  return out;
}

std::size_t sint_count(const TriangulatedSurface& s) {
  return static_cast<std::size_t>(std::count_if(
      s.triangle_sides().begin(), s.triangle_sides().end(), [](const std::array<SideRef, 3>& tri) {
        return std::count_if(tri.begin(), tri.end(),
                             [](const SideRef& r) { return r.kind == SideKind::Boundary; }) == 1;
      }));
}

std::vector<BoundaryProfile> classify_boundaries(const TriangulatedSurface& s) {
  std::vector<BoundaryProfile> out;
  const auto& degree = s.arc_degree();
  for (std::size_t c = 0; c < s.boundary_components().size(); ++c) {
    const auto& comp = s.boundary_components()[c];
    BoundaryProfile prof;
    prof.component = c;
    for (auto p : comp.points)
      if (degree[p] > 0) ++prof.n_incident;
    for (auto seg : comp.segments) {
      const auto& bs = s.boundary_segments()[seg];
      if (degree[bs.from] > 0 && degree[bs.to] > 0) ++prof.m_segments;
    }
    if (prof.n_incident == 1 && prof.m_segments == 0)
      prof.type = BoundaryType::Type0;
    else if (prof.n_incident == 1 && prof.m_segments == 1)
      prof.type = BoundaryType::Type1;
    out.push_back(prof);
  }
  return out;
}

}  // namespace surfhh
