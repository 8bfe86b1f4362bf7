#include "edgering/canonical.hpp"

#include <set>

namespace edgering {

long long CanonicalGenerators::cm_type() const {
  long long total = 0;
  for (const auto& level : by_degree) total += static_cast<long long>(level.size());
  return total;
}

bool CanonicalGenerators::level() const {
  for (std::size_t k = 1; k < by_degree.size(); ++k)
    if (!by_degree[k].empty()) return false;
  return true;
}

bool CanonicalGenerators::gorenstein() const { return cm_type() == 1; }

CanonicalGenerators canonical_generators(const Partition& p, const Budget& budget) {
  const SupportSystem sys(p);
  const int dim = p.vertex_count() - (p.bipartite() ? 1 : 0);
  const long long ell = ell_bruteforce(sys, budget);
  const int socle = static_cast<int>(dim - ell);
  const int margin = 2;
  const int cap = socle + margin;

  const std::vector<Edge> es = edges(p);
  CanonicalGenerators gen;
  gen.ell = ell;
  gen.cap = cap;
  std::set<LatticePoint> prev_interior;
  for (int k = 0; k <= cap; ++k) {
    std::vector<LatticePoint> interior = sys.enumerate_points(ell + k, true, budget);
    std::vector<LatticePoint> fresh;
    if (k == 0) {
      fresh = interior;
    } else {
      for (const LatticePoint& x : interior) {
        bool decomposable = false;
        for (const Edge& e : es) {
          if (x[static_cast<std::size_t>(e.u)] < 1 || x[static_cast<std::size_t>(e.v)] < 1)
            continue;
          LatticePoint y = x;
          --y[static_cast<std::size_t>(e.u)];
          --y[static_cast<std::size_t>(e.v)];
          if (prev_interior.count(y)) {
            decomposable = true;
            break;
          }
        }
        if (!decomposable) fresh.push_back(x);
      }
    }
    if (k > socle && !fresh.empty())
      throw integrity_error("canonical generator found beyond the socle bound for " +
                            p.to_string() + " at offset " + std::to_string(k));
    gen.by_degree.push_back(std::move(fresh));
    prev_interior.clear();
    prev_interior.insert(interior.begin(), interior.end());
  }
  return gen;
}

std::vector<LatticePoint> first_appearing(const Partition& p, int k, const Budget& budget) {
  if (k < 0) throw std::invalid_argument("offset must be nonnegative");
  const SupportSystem sys(p);
  const long long ell = ell_bruteforce(sys, budget);
  if (k == 0) return sys.enumerate_points(ell, true, budget);
  const std::vector<LatticePoint> prev = sys.enumerate_points(ell + k - 1, true, budget);
  const std::set<LatticePoint> prev_set(prev.begin(), prev.end());
  const std::vector<Edge> es = edges(p);
  std::vector<LatticePoint> fresh;
  for (const LatticePoint& x : sys.enumerate_points(ell + k, true, budget)) {
    bool decomposable = false;
    for (const Edge& e : es) {
      if (x[static_cast<std::size_t>(e.u)] < 1 || x[static_cast<std::size_t>(e.v)] < 1) continue;
      LatticePoint y = x;
      --y[static_cast<std::size_t>(e.u)];
      --y[static_cast<std::size_t>(e.v)];
      if (prev_set.count(y)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) fresh.push_back(x);
  }
  return fresh;
}

long long cm_type(const Partition& p, const Budget& budget) {
  return canonical_generators(p, budget).cm_type();
}

bool is_level_direct(const Partition& p, const Budget& budget) {
  return canonical_generators(p, budget).level();
}

long long mu_of_c_direct(const Partition& p, const Budget& budget) {
  return cm_type(p, budget) - 1;
}

long long mu_of_c_closed(const Partition& p) {
  if (case_class(p) != CaseClass::A)
    throw std::invalid_argument("mu(C) closed form requires case A");
  const long long d = p.vertex_count();
  BigInt total = 0;
  for (int r : p.parts())
    for (long long j = 1; j <= d / 2 - r - 1; ++j) total += binomial(r - 1 + 2 * j, r - 1);
  return total.convert_to<long long>();
}

bool is_first_appearing_shape_a(const Partition& p, const LatticePoint& x,
                                const Budget& budget) {
  if (case_class(p) != CaseClass::A)
    throw std::invalid_argument("shape test requires case A");
  const SupportSystem sys(p);
  const long long sum = coordinate_sum(x);
  if (sum % 2 != 0) throw std::invalid_argument("coordinate sum must be even");
  const long long m = sum / 2;
  const long long ell = ell_bruteforce(sys, budget);
  if (m < ell || !sys.membership(x, m, true))
    throw std::invalid_argument("point is not interior at any degree ell+j");
  const long long j = m - ell;
  for (int k = 0; k < p.block_count(); ++k) {
    bool off_block_ones = true;
    for (int i = 0; i < p.vertex_count() && off_block_ones; ++i)
      if (p.block_of(i) != k && x[static_cast<std::size_t>(i)] != 1) off_block_ones = false;
    if (!off_block_ones) continue;
    long long block_sum = 0;
    for (int i = p.block_begin(k); i < p.block_end(k); ++i)
      block_sum += x[static_cast<std::size_t>(i)];
    if (block_sum == p.part(k) + 2 * j) return true;
  }
  return false;
}

bool is_gorenstein_direct(const Partition& p, const Budget& budget) {
  return cm_type(p, budget) == 1;
}

bool is_almost_gorenstein_direct(const Partition& p, const Budget& budget) {
  const HilbertData hd = h_vector(p, budget);
  const long long mu = mu_of_c_direct(p, budget);
  const long long e = p.bipartite() ? e_of_c_interpolated(p, hd.ell, budget)
                                    : e_of_c_with_ell(p, hd.ell);
  if (mu > e) throw integrity_error("mu(C) > e(C) for " + p.to_string());
  const bool equal = (e == mu);
  if (hd.socle_degree >= 2 && hd.h_top() >= 2) {
    // h_s >= 2 with s >= 2 rules out almost Gorenstein; the equality test
    // must concur
    if (equal)
      throw integrity_error("h_s short circuit disagrees with e(C)=mu(C) for " + p.to_string());
    return false;
  }
  return equal;
}

} // namespace edgering
