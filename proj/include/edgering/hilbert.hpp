#ifndef EDGERING_HILBERT_HPP
#define EDGERING_HILBERT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "edgering/errors.hpp"
#include "edgering/partition.hpp"
#include "edgering/polytope.hpp"

namespace edgering {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// C(n, r) with the convention C(n, r) = 0 for r < 0 and for 0 <= n < r.
BigInt binomial(long long n, long long r);
BigInt factorial(int n);

// Exact-rational polynomial in the dilation variable m, degree dim P.
struct EhrhartPolynomial {
  std::vector<BigRat> coefficients; // c_0 ... c_D, c_D != 0
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  BigRat eval_rational(long long m) const;
  BigInt eval(long long m) const; // integrality enforced
  std::string to_string() const;  // "c0 c1 ... cD" exact rationals in degree order
};

// i(P, m) = C(d+2m-1, d-1) - sum_k sum_{1<=i<=j<=r_k} C(j-i+m-1, j-i) C(d-j+m-1, d-j),
// expanded to exact rational coefficients. Degree d-1 (d-2 when bipartite).
EhrhartPolynomial ehrhart_closed_form(const Partition& p);

// H(R, m) = |mP ∩ Z^d| by enumeration (the ring is normal).
unsigned long long hilbert_function_counted(const Partition& p, long long m,
                                            const Budget& budget = default_budget());

struct HilbertData {
  int krull_dim = 0;            // d non-bipartite, d-1 bipartite
  long long ell = 0;            // -a(R)
  int socle_degree = 0;         // s, last nonzero h index
  std::vector<long long> h;     // (h_0, ..., h_s)
  long long h_top() const { return h.back(); }
  std::string to_json() const;  // {"dim":..,"ell":..,"s":..,"h":[..]}
};

// h_i by krull_dim-fold finite differences of counted Hilbert values;
// ell from ell_bruteforce. Integrity-checked: h_0 = 1, h_i >= 0,
// s = dim - ell.
HilbertData h_vector(const Partition& p, const Budget& budget = default_budget());

// (c_{d-1}, c_{d-2}) of the Ehrhart polynomial by the closed forms
//   (d-1)! c_{d-1} = 2^{d-1} - sum_k sum_{j in [r_k]} C(d-1, j-1)
//   (d-2)! c_{d-2} = 2^{d-3} d - sum_k sum_j (C(d-2,j-2) + (d-2)/2 (C(d-3,j-3)+C(d-3,j-1)))
// Rejects n = 2.
std::pair<BigRat, BigRat> leading_coefficients(const Partition& p);

// e(C) = (d-2)! ((d-1) ell c_{d-1} - 2 c_{d-2}) for explicit ell. Rejects n = 2.
long long e_of_c_with_ell(const Partition& p, long long ell);

// e(C) with ell from ell_closed_form; in case A also evaluates the
//   e(C) = sum_k (d/2 - r_k - 1) C(d-2, r_k-1)
// closed form and raises integrity_error if the two disagree or the
// result is negative (the latter only occurs outside Prop 4.2's domain,
// i.e. at K_{1,1,1}).
long long e_of_c(const Partition& p);

// case-A closed form alone; rejects non-A cases
long long e_of_c_lemma_closed(const Partition& p);

// Leading coefficient of H(C, m) = i(P°, m+ell) - i(P, m) from counted
// values, as e(C) = Δ^{dim-2} H(C, ·)(0). Works for n = 2 as well;
// returns 0 for the zero cokernel (Gorenstein).
long long e_of_c_interpolated(const Partition& p, long long ell,
                              const Budget& budget = default_budget());

} // namespace edgering

#endif
