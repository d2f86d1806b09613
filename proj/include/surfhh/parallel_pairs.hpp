#pragma once

// Bardzell's AP_n for quadratic monomial algebras and the families of
// parallel pairs used in the Redondo-Roman dimension formula for gentle
// algebras. Every family is found by scanning all of (AP_n // P) against
// its defining predicate.

#include <cstddef>
#include <utility>
#include <vector>

#include "surfhh/hh_table.hpp"
#include "surfhh/linalg.hpp"
#include "surfhh/quiver.hpp"

namespace surfhh {

// AP_0 = trivial paths, AP_1 = arrows, AP_n = arrow chains whose consecutive
// pairs are all relations. Deterministic order (source, arrow ids).
std::vector<Path> ap_paths(const GentlePresentation& p, int n);

// Element (rho, gamma) of (AP_n // P): indices into apPaths and the basis.
struct ParallelPair {
  std::size_t rho = 0;
  std::size_t gamma = 0;
  bool operator==(const ParallelPair&) const = default;
};

struct ParallelPairFamily {
  int degree = 0;
  std::vector<Path> ap;
  std::vector<ParallelPair> pairs;  // all of (AP_n // P)

  // The subsets below hold indices into `pairs`.
  std::vector<std::size_t> loop_vertex_cycles;  // n = 0: (e_r, gamma), |gamma| >= 1, no extension
  std::vector<std::size_t> unextendable;        // n >= 1: (rho, gamma), gamma avoids both ends of rho
  std::vector<std::size_t> cycle_pairs;         // (AP_n // Q0)
  std::vector<std::size_t> complete;            // C_n
  std::vector<std::size_t> incomplete;          // I_n
  std::vector<std::size_t> complete0;           // C_n(0)
  std::vector<std::size_t> gentle_complete;     // G_n
  std::vector<std::size_t> empty_incomplete;    // E_n
  std::vector<std::size_t> loop_pairs;          // n = 1: (Q1 // Q0)

  // Rotation t on C_n, as a map between indices into `pairs`; empty when
  // n == 0. rotation[k] is meaningful for k in `complete`.
  std::vector<std::size_t> rotation;
};

ParallelPairFamily rr_sets(const GentlePresentation& p, int n);

// dim of kG_n / Im(1 - t) over the field. n >= 1.
long coinvariant_dim(const GentlePresentation& p, int n, const FieldSpec& field);
long coinvariant_dim(const ParallelPairFamily& family, const FieldSpec& field);

HHTable hh_dims_rr(const GentlePresentation& p, int characteristic, int nmax = kDefaultNmax);

}  // namespace surfhh
