#pragma once

// Hochschild cochain complex of a quadratic monomial algebra A = kQ/I built
// on the parallel-pair bases of Hom_{E-E}(kAP_n, A), with differentials
//
//   F_n(f)(a_1...a_n) = a_1 f(a_2...a_n) + (-1)^n f(a_1...a_{n-1}) a_n,
//
// including n = 1, where F_1(f)(a) = a f(e_t(a)) - f(e_s(a)) a. Cohomology
// dimensions come from exact ranks.

#include <cstddef>
#include <vector>

#include "surfhh/hh_table.hpp"
#include "surfhh/linalg.hpp"
#include "surfhh/quiver.hpp"

namespace surfhh {

struct CochainDegree {
  std::vector<Path> ap;                                   // AP_n
  std::vector<std::pair<std::size_t, std::size_t>> basis;  // (AP_n index, P index)
};

struct CochainComplex {
  FieldSpec field;
  std::vector<CochainDegree> degrees;  // 0 .. top
  // differentials[n - 1] is D_n : C^{n-1} -> C^n, of shape dim C^n x dim C^{n-1}.
  std::vector<IntMatrix> differentials;

  int top_degree() const { return static_cast<int>(degrees.size()) - 1; }
  const IntMatrix& d(int n) const { return differentials.at(static_cast<std::size_t>(n - 1)); }
  std::size_t dim(int n) const { return degrees.at(static_cast<std::size_t>(n)).basis.size(); }
};

// Degrees 0 .. nmax+1. Entries are reduced into [0, p) for characteristic p.
CochainComplex build_complex(const GentlePresentation& p, const FieldSpec& field, int nmax = kDefaultNmax);

// D_{n+1} D_n == 0 in every assembled degree (checked over the field).
bool complex_property_holds(const CochainComplex& c);

// HH^0 .. HH^(top-1).
HHTable hh_dims_oracle(const CochainComplex& c);

}  // namespace surfhh
