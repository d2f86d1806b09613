#include "surfhh/quiver.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace surfhh {

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)), out_(vertex_count), in_(vertex_count) {
  for (ArrowId a = 0; a < arrows_.size(); ++a) {
    const auto& arr = arrows_[a];
    if (arr.source >= vertex_count_ || arr.target >= vertex_count_)
      throw std::invalid_argument("arrow " + std::to_string(a) + " has an endpoint outside the quiver");
    out_[arr.source].push_back(a);
    in_[arr.target].push_back(a);
  }
}

bool Quiver::has_loops() const {
  return std::any_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.source == a.target; });
}

bool Quiver::has_two_cycles() const {
  std::set<std::pair<VertexId, VertexId>> edges;
  for (const auto& a : arrows_) edges.emplace(a.source, a.target);
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
    return e.first != e.second && edges.count({e.second, e.first}) > 0;
  });
}

Path trivial_path(VertexId v) { return Path{v, v, {}}; }

Path arrow_path(const Quiver& q, ArrowId a) { return Path{q.arrow(a).source, q.arrow(a).target, {a}}; }

PathBasis::PathBasis(std::vector<Path> paths) : paths_(std::move(paths)) {
  std::sort(paths_.begin(), paths_.end());
  for (std::size_t i = 0; i < paths_.size(); ++i) index_.emplace(std::make_pair(paths_[i].source, paths_[i].arrows), i);
}

std::optional<std::size_t> PathBasis::find(const Path& p) const {
  auto it = index_.find({p.source, p.arrows});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GentlePresentation::GentlePresentation(Quiver quiver, std::vector<Relation> relations,
                                       std::vector<std::array<ArrowId, 3>> potential_cycles)
    : quiver_(std::move(quiver)),
      relations_(std::move(relations)),
      cycles_(std::move(potential_cycles)),
      rel_(quiver_.arrow_count() * quiver_.arrow_count(), 0) {
  std::sort(relations_.begin(), relations_.end());
  relations_.erase(std::unique(relations_.begin(), relations_.end()), relations_.end());
  for (const auto& r : relations_) {
    if (r.first >= quiver_.arrow_count() || r.second >= quiver_.arrow_count())
      throw std::invalid_argument("relation refers to an unknown arrow");
    if (quiver_.arrow(r.first).target != quiver_.arrow(r.second).source)
      throw std::invalid_argument("relation " + std::to_string(r.first) + "*" + std::to_string(r.second) +
                                  " is not a path");
    rel_[r.first * quiver_.arrow_count() + r.second] = 1;
  }
}

const PathBasis& GentlePresentation::basis() const {
  if (!basis_) throw std::logic_error("path basis has not been enumerated");
  return *basis_;
}

std::optional<std::size_t> GentlePresentation::concat(const Path& lhs, const Path& rhs) const {
  if (lhs.target != rhs.source) return std::nullopt;
  if (!lhs.is_trivial() && !rhs.is_trivial() && is_relation(lhs.arrows.back(), rhs.arrows.front()))
    return std::nullopt;
  Path joined{lhs.source, rhs.target, lhs.arrows};
  joined.arrows.insert(joined.arrows.end(), rhs.arrows.begin(), rhs.arrows.end());
  auto idx = basis().find(joined);
  if (!idx) throw std::logic_error("relation-free path missing from the basis");
  return idx;
}

std::optional<std::size_t> GentlePresentation::multiply(std::size_t lhs, std::size_t rhs) const {
  return concat(basis()[lhs], basis()[rhs]);
}

std::optional<std::size_t> GentlePresentation::left_multiply(ArrowId a, std::size_t rhs) const {
  return concat(arrow_path(quiver_, a), basis()[rhs]);
}

std::optional<std::size_t> GentlePresentation::right_multiply(std::size_t lhs, ArrowId a) const {
  return concat(basis()[lhs], arrow_path(quiver_, a));
}

std::vector<GentleViolation> check_gentle(const GentlePresentation& p) {
  std::vector<GentleViolation> out;
  const auto& q = p.quiver();

  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (q.out_arrows(v).size() > 2) {
      std::ostringstream os;
      os << "vertex " << v << " has " << q.out_arrows(v).size() << " outgoing arrows";
      out.push_back({"G1", os.str(), q.out_arrows(v)});
    }
    if (q.in_arrows(v).size() > 2) {
      std::ostringstream os;
      os << "vertex " << v << " has " << q.in_arrows(v).size() << " incoming arrows";
      out.push_back({"G1", os.str(), q.in_arrows(v)});
    }
  }

  // G2 holds by construction: relations are stored as composable arrow pairs.

  for (ArrowId b = 0; b < q.arrow_count(); ++b) {
    std::vector<ArrowId> in_rel, in_free, out_rel, out_free;
    for (ArrowId a : q.in_arrows(q.arrow(b).source)) (p.is_relation(a, b) ? in_rel : in_free).push_back(a);
    for (ArrowId c : q.out_arrows(q.arrow(b).target)) (p.is_relation(b, c) ? out_rel : out_free).push_back(c);
    auto report = [&](const char* cond, const std::vector<ArrowId>& witnesses, const char* what) {
      if (witnesses.size() <= 1) return;
      std::ostringstream os;
      os << "arrow " << b << ": " << witnesses.size() << ' ' << what;
      auto w = witnesses;
      w.insert(w.begin(), b);
      out.push_back({cond, os.str(), std::move(w)});
    };
    report("G3", in_rel, "arrows a with a*b in I");
    report("G3", out_rel, "arrows c with b*c in I");
    report("G4", in_free, "arrows a with a*b not in I");
    report("G4", out_free, "arrows c with b*c not in I");
  }
  return out;
}

PathBasis enumerate_basis(const GentlePresentation& p) {
  const auto& q = p.quiver();
  const std::size_t n = q.arrow_count();

  // A relation-free cycle in the graph "a -> b iff ab is a nonzero path"
  // yields arbitrarily long nonzero paths.
  std::vector<int> colour(n, 0);
  std::function<bool(ArrowId)> has_cycle = [&](ArrowId a) {
    colour[a] = 1;
    for (ArrowId b : q.out_arrows(q.arrow(a).target)) {
      if (p.is_relation(a, b)) continue;
      if (colour[b] == 1) return true;
      if (colour[b] == 0 && has_cycle(b)) return true;
    }
    colour[a] = 2;
    return false;
  };
  for (ArrowId a = 0; a < n; ++a)
    if (colour[a] == 0 && has_cycle(a))
      throw InfiniteDimensional("arrow " + std::to_string(a) + " lies on a relation-free cycle");

  std::vector<Path> all;
  std::vector<Path> frontier;
  for (VertexId v = 0; v < q.vertex_count(); ++v) all.push_back(trivial_path(v));
  for (ArrowId a = 0; a < n; ++a) frontier.push_back(arrow_path(q, a));

  const std::size_t cap = 3 * n + 3;
  while (!frontier.empty()) {
    if (frontier.front().length() > cap)
      throw InfiniteDimensional("nonzero paths longer than " + std::to_string(cap));
    std::vector<Path> next;
    for (const auto& path : frontier) {
      for (ArrowId b : q.out_arrows(path.target)) {
        if (p.is_relation(path.arrows.back(), b)) continue;
        Path longer = path;
        longer.arrows.push_back(b);
        longer.target = q.arrow(b).target;
        next.push_back(std::move(longer));
      }
      all.push_back(path);
    }
    frontier = std::move(next);
  }
  return PathBasis(std::move(all));
}

GentlePresentation build_quiver(const TriangulatedSurface& s) {
  std::vector<Arrow> arrows;
  std::vector<std::array<ArrowId, 3>> cycles;
  std::vector<Relation> relations;
  const auto& sides = s.triangle_sides();
  for (std::size_t t = 0; t < sides.size(); ++t) {
    std::array<std::optional<ArrowId>, 3> at_corner;
    for (int i = 0; i < 3; ++i) {
      const auto& a = sides[t][i];
      const auto& b = sides[t][(i + 1) % 3];
      if (a.kind != SideKind::Arc || b.kind != SideKind::Arc) continue;
      at_corner[i] = arrows.size();
      arrows.push_back(Arrow{a.index, b.index, t, i});
    }
    if (at_corner[0] && at_corner[1] && at_corner[2]) {
      cycles.push_back({*at_corner[0], *at_corner[1], *at_corner[2]});
      for (int i = 0; i < 3; ++i) relations.push_back({*at_corner[i], *at_corner[(i + 1) % 3]});
    }
  }

  GentlePresentation p(Quiver(s.arcs().size(), std::move(arrows)), std::move(relations), std::move(cycles));
  if (auto violations = check_gentle(p); !violations.empty()) {
    std::ostringstream os;
    os << "quiver of '" << s.name() << "' is not gentle:";
    for (const auto& v : violations) os << ' ' << v.condition << " (" << v.message << ')';
    throw GentlenessViolation(os.str());
  }
  p.attach_basis(enumerate_basis(p));
  return p;
}

}  // namespace surfhh
