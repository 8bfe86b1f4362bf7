#include "edgering/polytope.hpp"

#include <numeric>
#include <sstream>

#include "edgering/hilbert.hpp"

namespace edgering {

long long coordinate_sum(const LatticePoint& x) {
  return std::accumulate(x.begin(), x.end(), 0LL);
}

std::string point_to_string(const LatticePoint& x) {
  std::ostringstream os;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) os << ',';
    os << x[i];
  }
  return os.str();
}

SupportSystem::SupportSystem(Partition p) : part_(std::move(p)) {}

bool SupportSystem::implicit_equality(int k) const {
  (void)k;
  // <rho(e), f_k> = 0 exactly when e meets V_k; every edge meets every block
  // only in the bipartite case
  return part_.bipartite();
}

long long SupportSystem::unit_form_value(const LatticePoint& x, int i) const {
  return x[static_cast<std::size_t>(i)];
}

long long SupportSystem::block_form_value(const LatticePoint& x, int k) const {
  long long block = 0;
  for (int i = part_.block_begin(k); i < part_.block_end(k); ++i)
    block += x[static_cast<std::size_t>(i)];
  return coordinate_sum(x) - 2 * block;
}

bool SupportSystem::membership(const LatticePoint& x, long long m, bool interior) const {
  const int d = part_.vertex_count();
  if (static_cast<int>(x.size()) != d)
    throw std::invalid_argument("lattice point has wrong dimension");
  if (coordinate_sum(x) != 2 * m)
    throw std::invalid_argument("coordinate sum must equal 2m");
  for (long long c : x) {
    if (c < 0) return false;
    if (interior && c < 1) return false;
  }
  for (int k = 0; k < part_.block_count(); ++k) {
    const long long v = block_form_value(x, k);
    if (implicit_equality(k)) {
      if (v != 0) return false;
    } else if (interior ? v <= 0 : v < 0) {
      return false;
    }
  }
  return true;
}

void SupportSystem::enumerate(long long m, bool interior, const Budget& budget,
                              const std::function<void(const LatticePoint&)>& visit) const {
  const int d = part_.vertex_count();
  const int n = part_.block_count();
  if (m < 0) throw std::invalid_argument("dilation must be nonnegative");
  if (m == 0) {
    if (!interior) visit(LatticePoint(static_cast<std::size_t>(d), 0));
    return;
  }
  const long long lo = interior ? 1 : 0;
  const long long target = 2 * m;
  if (interior && target < lo * d) return; // 2m < d: provably empty
  {
    const BigInt bound = binomial(2 * m + d - 1, d - 1);
    if (bound > budget.max_lattice_bound)
      throw budget_exceeded("lattice enumeration bound C(2m+d-1,d-1) = " + bound.str() +
                            " exceeds budget " + std::to_string(budget.max_lattice_bound));
  }
  // per-block sum cap; bipartite block forms are implicit equalities, so both
  // block sums must equal m exactly
  const bool exact_blocks = part_.bipartite();
  const long long cap = (interior && !exact_blocks) ? m - 1 : m;
  for (int k = 0; k < n; ++k) {
    const long long width = part_.part(k);
    if (cap < lo * width) return;               // block cannot fit its minimum
    if (exact_blocks && m < lo * width) return; // equality unreachable
  }

  LatticePoint x(static_cast<std::size_t>(d), 0);
  std::vector<long long> block_used(static_cast<std::size_t>(n), 0);
  // depth-first over coordinates; ascending values give lexicographic output
  auto rec = [&](auto&& self, int i, long long rem) -> void {
    if (i == d) {
      if (rem == 0) visit(x);
      return;
    }
    const int k = part_.block_of(i);
    const int rest = d - i - 1;
    const int rem_in_block = part_.block_end(k) - i - 1;
    const long long used = block_used[static_cast<std::size_t>(k)];
    long long hi = rem - lo * rest;
    const long long block_room = cap - used - lo * rem_in_block;
    if (block_room < hi) hi = block_room;
    long long vlo = lo;
    if (exact_blocks && rem_in_block == 0) {
      // last coordinate of its block: the block sum must land on m exactly
      const long long need = m - used;
      if (need < vlo || need > hi) return;
      vlo = hi = need;
    }
    for (long long v = vlo; v <= hi; ++v) {
      x[static_cast<std::size_t>(i)] = v;
      block_used[static_cast<std::size_t>(k)] = used + v;
      self(self, i + 1, rem - v);
    }
    x[static_cast<std::size_t>(i)] = 0;
    block_used[static_cast<std::size_t>(k)] = used;
  };
  rec(rec, 0, target);
}

std::vector<LatticePoint> SupportSystem::enumerate_points(long long m, bool interior,
                                                          const Budget& budget) const {
  std::vector<LatticePoint> out;
  enumerate(m, interior, budget, [&](const LatticePoint& x) { out.push_back(x); });
  return out;
}

unsigned long long SupportSystem::count_points(long long m, bool interior,
                                               const Budget& budget) const {
  unsigned long long count = 0;
  enumerate(m, interior, budget, [&](const LatticePoint&) { ++count; });
  return count;
}

LatticePoint rho(const Partition& p, const Edge& e) {
  LatticePoint x(static_cast<std::size_t>(p.vertex_count()), 0);
  x[static_cast<std::size_t>(e.u)] += 1;
  x[static_cast<std::size_t>(e.v)] += 1;
  return x;
}

long long ell_bruteforce(const SupportSystem& s, const Budget& budget) {
  const int d = s.ambient().vertex_count();
  for (long long m = 1; m <= d; ++m) {
    bool found = false;
    try {
      s.enumerate(m, true, budget, [&](const LatticePoint&) {
        if (!found) found = true;
      });
    } catch (const budget_exceeded&) {
      throw budget_exceeded("budget exceeded before finding an interior point (m=" +
                            std::to_string(m) + ")");
    }
    if (found) return m;
  }
  throw integrity_error("no interior lattice point up to m = d; graph should be connected");
}

long long ell_bruteforce(const Partition& p, const Budget& budget) {
  return ell_bruteforce(SupportSystem(p), budget);
}

long long ell_closed_form(const Partition& p) {
  const long long d = p.vertex_count();
  switch (case_class(p)) {
    case CaseClass::A: return d / 2;
    case CaseClass::B: return (d + 1) / 2;
    case CaseClass::C: return p.parts().back() + 1;
    case CaseClass::Bipartite:
      throw std::invalid_argument("ell closed form is stated for n >= 3 only");
  }
  throw std::logic_error("unreachable");
}

} // namespace edgering
