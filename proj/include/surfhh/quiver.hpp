#pragma once

// Quiver with potential of a triangulated surface and its gentle
// presentation kQ/I, where I is generated by the length-two subpaths of the
// oriented 3-cycles coming from internal triangles.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "surfhh/surface.hpp"

namespace surfhh {

using VertexId = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
  VertexId source = 0;
  VertexId target = 0;
  // Origin inside the triangulation; unset for hand-built quivers.
  std::optional<std::size_t> triangle;
  int corner = -1;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }

  const std::vector<ArrowId>& out_arrows(VertexId v) const { return out_.at(v); }
  const std::vector<ArrowId>& in_arrows(VertexId v) const { return in_.at(v); }

  bool has_loops() const;
  bool has_two_cycles() const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<ArrowId>> out_;
  std::vector<std::vector<ArrowId>> in_;
};

// A path of the quiver. Trivial paths e_v have no arrows.
struct Path {
  VertexId source = 0;
  VertexId target = 0;
  std::vector<ArrowId> arrows;

  std::size_t length() const noexcept { return arrows.size(); }
  bool is_trivial() const noexcept { return arrows.empty(); }

  // Ordering by (length, source, arrow ids).
  auto operator<=>(const Path& o) const {
    if (auto c = length() <=> o.length(); c != 0) return c;
    if (auto c = source <=> o.source; c != 0) return c;
    return arrows <=> o.arrows;
  }
  bool operator==(const Path& o) const = default;
};

Path trivial_path(VertexId v);
Path arrow_path(const Quiver& q, ArrowId a);

class InfiniteDimensional : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GentlenessViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Relation {
  ArrowId first = 0;
  ArrowId second = 0;
  auto operator<=>(const Relation&) const = default;
};

// Basis P of kQ/I for a quadratic monomial ideal: paths without a relation
// as a consecutive subpath.
class PathBasis {
 public:
  PathBasis() = default;
  explicit PathBasis(std::vector<Path> paths);

  std::size_t size() const noexcept { return paths_.size(); }
  const std::vector<Path>& paths() const noexcept { return paths_; }
  const Path& operator[](std::size_t i) const { return paths_.at(i); }

  std::optional<std::size_t> find(const Path& p) const;

 private:
  std::vector<Path> paths_;
  std::map<std::pair<VertexId, std::vector<ArrowId>>, std::size_t> index_;
};

class GentlePresentation {
 public:
  GentlePresentation() = default;
  GentlePresentation(Quiver quiver, std::vector<Relation> relations,
                     std::vector<std::array<ArrowId, 3>> potential_cycles = {});

  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const std::vector<std::array<ArrowId, 3>>& potential_cycles() const noexcept { return cycles_; }

  bool is_relation(ArrowId a, ArrowId b) const { return rel_[a * quiver_.arrow_count() + b] != 0; }

  // Set by build_quiver, or by attach_basis() for hand-built presentations.
  bool has_basis() const noexcept { return basis_.has_value(); }
  const PathBasis& basis() const;
  void attach_basis(PathBasis basis) { basis_ = std::move(basis); }

  // Product of two basis elements inside kQ/I, as a basis index.
  std::optional<std::size_t> multiply(std::size_t lhs, std::size_t rhs) const;
  // Product arrow * basis element and basis element * arrow.
  std::optional<std::size_t> left_multiply(ArrowId a, std::size_t rhs) const;
  std::optional<std::size_t> right_multiply(std::size_t lhs, ArrowId a) const;

 private:
  std::optional<std::size_t> concat(const Path& lhs, const Path& rhs) const;

  Quiver quiver_;
  std::vector<Relation> relations_;
  std::vector<std::array<ArrowId, 3>> cycles_;
  std::vector<char> rel_;
  std::optional<PathBasis> basis_;
};

struct GentleViolation {
  std::string condition;  // "G1".."G4"
  std::string message;
  std::vector<ArrowId> arrows;
};

// Empty iff G1-G4 hold.
std::vector<GentleViolation> check_gentle(const GentlePresentation& p);

// All relation-free paths ordered by (length, source, arrows). Throws
// InfiniteDimensional when a relation-free cycle exists.
PathBasis enumerate_basis(const GentlePresentation& p);

// Vertices are the arcs of s (arc ids), arrows ordered by (triangle, corner).
// Throws GentlenessViolation if G1-G4 fail.
GentlePresentation build_quiver(const TriangulatedSurface& s);

}  // namespace surfhh
