#ifndef EDGERING_CANONICAL_HPP
#define EDGERING_CANONICAL_HPP

#include <vector>

#include "edgering/errors.hpp"
#include "edgering/hilbert.hpp"
#include "edgering/partition.hpp"
#include "edgering/polytope.hpp"

namespace edgering {

// First appearing interior points grouped by degree offset k >= 0 over the
// base degree ell; these index the minimal generators of the canonical
// module, so sum_k |by_degree[k]| = r(R).
struct CanonicalGenerators {
  long long ell = 0;
  std::vector<std::vector<LatticePoint>> by_degree; // offset k -> points, lex order
  int cap = 0;                                      // highest offset examined (= s + margin)

  long long cm_type() const;
  bool level() const;      // no generator beyond offset 0
  bool gorenstein() const; // cm_type == 1
};

// Offsets are examined up to s + 2; a generator appearing in the two-offset
// safety margin raises integrity_error (it would mean the s-bound on
// generator degrees failed).
CanonicalGenerators canonical_generators(const Partition& p,
                                         const Budget& budget = default_budget());

// The interior points of (ell+k)P° that are not (lower interior point + edges).
// A point is decomposable iff subtracting a single rho(e) lands on an interior
// point one degree down; interior points are closed under adding rho(e), so the
// one-step test realizes the full definition.
std::vector<LatticePoint> first_appearing(const Partition& p, int k,
                                          const Budget& budget = default_budget());

long long cm_type(const Partition& p, const Budget& budget = default_budget());
bool is_level_direct(const Partition& p, const Budget& budget = default_budget());
long long mu_of_c_direct(const Partition& p, const Budget& budget = default_budget());

// Lemma: case A, mu(C) = sum_k sum_{j in [d/2-r_k-1]} C(r_k-1+2j, r_k-1),
// empty inner sum when r_k = d/2 - 1. Rejects non-A cases.
long long mu_of_c_closed(const Partition& p);

// Case A shape test: x (interior at some degree ell+j) is first appearing iff
// some block k has block sum r_k + 2j and every off-block coordinate equal 1.
// Throws std::invalid_argument when x is not interior at any degree.
bool is_first_appearing_shape_a(const Partition& p, const LatticePoint& x,
                                const Budget& budget = default_budget());

bool is_gorenstein_direct(const Partition& p, const Budget& budget = default_budget());

// e(C) == mu(C), with e from the coefficient formula at the true (brute-force)
// ell for n >= 3 and from finite-difference interpolation for n = 2. Also
// applies the h_s short circuit (s >= 2 and h_s >= 2 forces false) and raises
// integrity_error if the short circuit ever disagrees with the equality test.
bool is_almost_gorenstein_direct(const Partition& p, const Budget& budget = default_budget());

} // namespace edgering

#endif
