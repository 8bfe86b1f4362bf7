#ifndef EDGERING_HIBI_HPP
#define EDGERING_HIBI_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "edgering/errors.hpp"
#include "edgering/hilbert.hpp"

namespace edgering {

// Finite poset on elements 0..size-1, stored as the reflexive-transitive
// closure of the given cover pairs. Sized for bitmask ideals (<= 24 elements
// under the default budget).
class Poset {
public:
  Poset(int size, const std::vector<std::pair<int, int>>& covers);

  int size() const { return n_; }
  bool leq(int a, int b) const { return (up_[static_cast<std::size_t>(a)] >> b) & 1u; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  std::uint32_t up_set(int a) const { return up_[static_cast<std::size_t>(a)]; }
  std::uint32_t down_set(int a) const { return down_[static_cast<std::size_t>(a)]; }

  // irredundant cover pairs (a, b) with b covering a, sorted
  std::vector<std::pair<int, int>> covers() const;

  // elements comparable to x (the star operator)
  std::vector<int> star(int x) const;

  std::string to_string() const; // the text exchange format

private:
  int n_;
  std::vector<std::uint32_t> up_, down_;
};

// Two disjoint chains p_1<...<p_m and p_{m+1}<...<p_{m+n}; the primed poset
// adds p_1 < p_{m+n}.
Poset pi_poset(int m, int n);
Poset pi_prime_poset(int m, int n);

// Text format: first line the element count, then one "a < b" cover per line
// (1-based element labels).
Poset parse_poset(const std::string& text);

// All poset ideals (downward closed subsets) as bitmasks, including the empty
// set and the whole poset; ascending mask order.
std::vector<std::uint32_t> poset_ideals(const Poset& p, const Budget& budget = default_budget());
unsigned long long count_poset_ideals(const Poset& p, const Budget& budget = default_budget());

// every maximal chain of the poset has the same length
bool is_pure(const Poset& p);

// In the augmented poset: BOTTOM and TOP sentinels for sequence elements.
struct HatElement {
  static constexpr int bottom = -1;
  static constexpr int top = -2;
};

// longest-chain length of [x, y] inside the augmented poset (0-hat/1-hat
// adjoined fresh); x, y are element ids or HatElement sentinels
int rank_interval_hat(const Poset& p, int x, int y);
int rank_hat(const Poset& p);

// Alternating sequence y_1, x_1, ..., y_t, x_t in the augmented poset.
using ConditionNSequence = std::vector<std::pair<int, int>>; // (y_i, x_i)

bool satisfies_condition_n(const Poset& p, const ConditionNSequence& seq);

// r(y_1,x_1,...,y_t,x_t) = sum_i (rank[x_{i-1},y_i] - rank[x_i,y_i]) + rank[x_t,1-hat],
// with x_0 = 0-hat; the empty sequence gives rank of the augmented poset.
// Throws std::invalid_argument when the sequence violates condition N.
long long r_value(const Poset& p, const ConditionNSequence& seq);

// Exhaustive condition-N search; the Hibi ring is level iff the maximum
// r-value over all condition-N sequences is <= rank of the augmented poset.
long long max_condition_n_r(const Poset& p, const Budget& budget = default_budget(),
                            ConditionNSequence* witness = nullptr);
bool is_level_hibi(const Poset& p, const Budget& budget = default_budget());

// Sufficient criterion: if every upper interval [x, 1-hat] is pure, the Hibi
// ring is level.
bool upper_interval_pure_sufficient(const Poset& p);

// H(k[Pi], m) = number of multichains I_1 ⊆ ... ⊆ I_m in I(Pi), by dynamic
// programming over the ideal lattice.
BigInt hibi_hilbert_function(const Poset& p, long long m,
                             const Budget& budget = default_budget());

} // namespace edgering

#endif
