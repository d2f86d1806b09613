#pragma once

// Avella-Alaminos-Geiss derived invariant of a surface Jacobian algebra,
// computed from the triangulation: (0,3) counts internal triangles and each
// boundary component C contributes the pair (n(C), m(C)).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "surfhh/hh_table.hpp"
#include "surfhh/surface.hpp"

namespace surfhh {

class AGInvariant {
 public:
  using Key = std::pair<int, int>;

  void add(Key key, long multiplicity = 1);
  long operator()(int n, int m) const;
  const std::map<Key, long>& support() const noexcept { return support_; }

  // phi(0,d) summed over the divisors d of n.
  long psi(int n) const;

  // Sorted "(n,m): multiplicity" lines.
  std::string to_lines() const;

  bool operator==(const AGInvariant&) const = default;

 private:
  std::map<Key, long> support_;
};

AGInvariant ag_invariant(const TriangulatedSurface& s);

HHTable hh_dims_ladkani(const AGInvariant& ag, long q0, long q1, int characteristic, int nmax = kDefaultNmax);

struct AGDifference {
  AGInvariant::Key key;
  long left = 0;
  long right = 0;
};

struct AGComparison {
  bool equal = true;
  std::vector<AGDifference> differences;  // sorted by key
  AGDifference witness;                   // largest |left - right|; meaningful when !equal
  std::string verdict;
};

// Necessary condition only: Equal never claims derived equivalence.
AGComparison compare_ag(const AGInvariant& a, const AGInvariant& b);

}  // namespace surfhh
