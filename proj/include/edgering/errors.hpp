#ifndef EDGERING_ERRORS_HPP
#define EDGERING_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace edgering {

// Raised when an enumeration or search would exceed its configured budget.
// Budget exhaustion is not a verification verdict: callers must report it
// as "unverified", never as agreement or disagreement.
class budget_exceeded : public std::runtime_error {
public:
  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when two routes that must agree do not, or an internal invariant
// breaks (e.g. socle degree != dim - ell). Always a bug or bad math, never
// an expected runtime condition.
class integrity_error : public std::logic_error {
public:
  explicit integrity_error(const std::string& what) : std::logic_error(what) {}
};

struct Budget {
  // refuse enumerations whose unpruned bound C(2m+d-1, d-1) exceeds this
  std::uint64_t max_lattice_bound = 100'000'000ULL;
  // vertex cap for the backtracking perfect-matching search
  int matching_cap = 14;
  // element cap for poset-wide searches (ideals, condition N)
  int poset_cap = 24;
  // node cap for the condition-N DFS
  std::uint64_t condition_n_nodes = 50'000'000ULL;
};

inline Budget default_budget() { return Budget{}; }

} // namespace edgering

#endif
