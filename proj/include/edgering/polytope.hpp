#ifndef EDGERING_POLYTOPE_HPP
#define EDGERING_POLYTOPE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "edgering/errors.hpp"
#include "edgering/partition.hpp"

namespace edgering {

// Integer vector in Z^d; a point of mP has coordinate sum 2m.
using LatticePoint = std::vector<long long>;

long long coordinate_sum(const LatticePoint& x);
std::string point_to_string(const LatticePoint& x);

// The support system Psi = Psi_r (unit forms p_i) ∪ Psi_f (block forms f_k
// with <x, f_k> = sum_{j != k} p_{V_j}(x) - p_{V_k}(x)). These define the
// edge polytope P_{K_{r_1,...,r_n}}: a block form is an implicit equality
// exactly when every edge meets that block, i.e. when n = 2.
class SupportSystem {
public:
  explicit SupportSystem(Partition p);

  const Partition& ambient() const { return part_; }
  int unit_form_count() const { return part_.vertex_count(); }
  int block_form_count() const { return part_.block_count(); }
  bool implicit_equality(int k) const;

  long long unit_form_value(const LatticePoint& x, int i) const;
  long long block_form_value(const LatticePoint& x, int k) const;

  // x in mP (boundary=false: all forms >= 0) resp. x in relint(mP)
  // (interior: unit forms and non-implicit block forms strict, implicit
  // block forms zero). Throws std::invalid_argument on coordinate-sum or
  // length mismatch.
  bool membership(const LatticePoint& x, long long m, bool interior) const;

  // Visit every lattice point of mP (or its relative interior) in
  // lexicographic order. Refuses when the unpruned bound
  // C(2m+d-1, d-1) exceeds budget.max_lattice_bound.
  void enumerate(long long m, bool interior, const Budget& budget,
                 const std::function<void(const LatticePoint&)>& visit) const;

  std::vector<LatticePoint> enumerate_points(long long m, bool interior,
                                             const Budget& budget = default_budget()) const;
  unsigned long long count_points(long long m, bool interior,
                                  const Budget& budget = default_budget()) const;

private:
  Partition part_;
};

LatticePoint rho(const Partition& p, const Edge& e);

// ell = min{m > 0 : relint(mP) has a lattice point}, by direct search.
long long ell_bruteforce(const SupportSystem& s, const Budget& budget = default_budget());
long long ell_bruteforce(const Partition& p, const Budget& budget = default_budget());

// Prop 4.2 closed form: d/2 (case A), (d+1)/2 (case B), r_n+1 (case C).
// Rejects n = 2. Valid under the proposition's hypothesis (n = 3 with
// r_1 >= 2, or n >= 4); K_{1,1,1} falls outside it and has true ell = 3.
long long ell_closed_form(const Partition& p);

} // namespace edgering

#endif
