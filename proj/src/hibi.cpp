#include "edgering/hibi.hpp"

#include <algorithm>
#include <sstream>

namespace edgering {

Poset::Poset(int size, const std::vector<std::pair<int, int>>& covers) : n_(size) {
  if (size < 1 || size > 31) throw std::invalid_argument("poset size must be in [1, 31]");
  up_.assign(static_cast<std::size_t>(size), 0);
  down_.assign(static_cast<std::size_t>(size), 0);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(size));
  for (auto [a, b] : covers) {
    if (a < 0 || b < 0 || a >= size || b >= size || a == b)
      throw std::invalid_argument("bad cover pair");
    adj[static_cast<std::size_t>(a)].push_back(b);
  }
  for (int s = 0; s < size; ++s) {
    // DFS closure from s
    std::vector<int> stack{s};
    up_[static_cast<std::size_t>(s)] |= 1u << s;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (!((up_[static_cast<std::size_t>(s)] >> v) & 1u)) {
          up_[static_cast<std::size_t>(s)] |= 1u << v;
          stack.push_back(v);
        }
      }
    }
  }
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      if (a != b && leq(a, b) && leq(b, a))
        throw std::invalid_argument("cover relation contains a cycle");
      if (leq(a, b)) down_[static_cast<std::size_t>(b)] |= 1u << a;
    }
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (!less(a, b)) continue;
      bool direct = true;
      for (int c = 0; c < n_ && direct; ++c)
        if (c != a && c != b && less(a, c) && less(c, b)) direct = false;
      if (direct) out.emplace_back(a, b);
    }
  return out;
}

std::vector<int> Poset::star(int x) const {
  if (x < 0 || x >= n_) throw std::invalid_argument("element out of range");
  std::vector<int> out;
  for (int y = 0; y < n_; ++y)
    if (leq(x, y) || leq(y, x)) out.push_back(y);
  return out;
}

std::string Poset::to_string() const {
  std::ostringstream os;
  os << n_ << '\n';
  for (auto [a, b] : covers()) os << (a + 1) << " < " << (b + 1) << '\n';
  return os.str();
}

Poset pi_poset(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("chain lengths must be positive");
  std::vector<std::pair<int, int>> cov;
  for (int i = 0; i + 1 < m; ++i) cov.emplace_back(i, i + 1);
  for (int i = 0; i + 1 < n; ++i) cov.emplace_back(m + i, m + i + 1);
  return Poset(m + n, cov);
}

Poset pi_prime_poset(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("chain lengths must be positive");
  std::vector<std::pair<int, int>> cov;
  for (int i = 0; i + 1 < m; ++i) cov.emplace_back(i, i + 1);
  for (int i = 0; i + 1 < n; ++i) cov.emplace_back(m + i, m + i + 1);
  cov.emplace_back(0, m + n - 1);
  return Poset(m + n, cov);
}

Poset parse_poset(const std::string& text) {
  std::istringstream is(text);
  int size = 0;
  if (!(is >> size)) throw std::invalid_argument("poset text must start with element count");
  std::vector<std::pair<int, int>> cov;
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    int a = 0, b = 0;
    char lt = 0;
    if (!(ls >> a >> lt >> b) || lt != '<')
      throw std::invalid_argument("bad cover line '" + line + "', expected 'a < b'");
    cov.emplace_back(a - 1, b - 1);
  }
  return Poset(size, cov);
}

std::vector<std::uint32_t> poset_ideals(const Poset& p, const Budget& budget) {
  if (p.size() > budget.poset_cap)
    throw budget_exceeded("poset ideal enumeration capped at " +
                          std::to_string(budget.poset_cap) + " elements");
  const int n = p.size();
  // linear extension: by down-set size, ties by index
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return __builtin_popcount(p.down_set(a)) < __builtin_popcount(p.down_set(b));
  });
  std::vector<std::uint32_t> out;
  auto rec = [&](auto&& self, std::size_t idx, std::uint32_t mask) -> void {
    if (idx == order.size()) {
      out.push_back(mask);
      return;
    }
    const int e = order[idx];
    self(self, idx + 1, mask); // exclude e
    const std::uint32_t strictly_below = p.down_set(e) & ~(1u << e);
    if ((strictly_below & mask) == strictly_below) self(self, idx + 1, mask | (1u << e));
  };
  rec(rec, 0, 0u);
  std::sort(out.begin(), out.end());
  return out;
}

unsigned long long count_poset_ideals(const Poset& p, const Budget& budget) {
  return poset_ideals(p, budget).size();
}

namespace {

// set of maximal-chain lengths reachable upward from each element, as bitmasks
std::vector<std::uint64_t> chain_length_sets(int n, const std::vector<std::pair<int, int>>& covers) {
  std::vector<std::vector<int>> up(static_cast<std::size_t>(n));
  for (auto [a, b] : covers) up[static_cast<std::size_t>(a)].push_back(b);
  std::vector<std::uint64_t> lens(static_cast<std::size_t>(n), 0);
  std::vector<int> state(static_cast<std::size_t>(n), 0); // 0 unseen, 1 done
  auto rec = [&](auto&& self, int v) -> std::uint64_t {
    if (state[static_cast<std::size_t>(v)]) return lens[static_cast<std::size_t>(v)];
    std::uint64_t s = 0;
    if (up[static_cast<std::size_t>(v)].empty()) {
      s = 1; // maximal element: chain of length 0 ends here
    } else {
      for (int w : up[static_cast<std::size_t>(v)]) s |= self(self, w) << 1;
    }
    state[static_cast<std::size_t>(v)] = 1;
    lens[static_cast<std::size_t>(v)] = s;
    return s;
  };
  for (int v = 0; v < n; ++v) rec(rec, v);
  return lens;
}

} // namespace

bool is_pure(const Poset& p) {
  const auto covers = p.covers();
  const auto lens = chain_length_sets(p.size(), covers);
  std::vector<bool> has_lower(static_cast<std::size_t>(p.size()), false);
  for (auto [a, b] : covers) {
    (void)a;
    has_lower[static_cast<std::size_t>(b)] = true;
  }
  std::uint64_t all = 0;
  for (int v = 0; v < p.size(); ++v)
    if (!has_lower[static_cast<std::size_t>(v)]) all |= lens[static_cast<std::size_t>(v)];
  return __builtin_popcountll(all) == 1;
}

namespace {

// augmented poset: hat ids 0..n-1 are the elements, n = 0-hat, n+1 = 1-hat
struct Hat {
  int n;
  std::vector<std::vector<int>> up_covers; // by hat id
  std::vector<std::vector<int>> rank;      // rank[a][b] = longest a->b path, -1 if a !<= b

  explicit Hat(const Poset& p) : n(p.size()) {
    const int total = n + 2;
    const int bottom = n, top = n + 1;
    up_covers.assign(static_cast<std::size_t>(total), {});
    for (auto [a, b] : p.covers()) up_covers[static_cast<std::size_t>(a)].push_back(b);
    for (int v = 0; v < n; ++v) {
      const bool minimal = __builtin_popcount(p.down_set(v)) == 1;
      const bool maximal = __builtin_popcount(p.up_set(v)) == 1;
      if (minimal) up_covers[static_cast<std::size_t>(bottom)].push_back(v);
      if (maximal) up_covers[static_cast<std::size_t>(v)].push_back(top);
    }
    // topological order: bottom, elements by down-set size, top
    std::vector<int> order{bottom};
    std::vector<int> elems(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) elems[static_cast<std::size_t>(i)] = i;
    std::stable_sort(elems.begin(), elems.end(), [&](int a, int b) {
      return __builtin_popcount(p.down_set(a)) < __builtin_popcount(p.down_set(b));
    });
    order.insert(order.end(), elems.begin(), elems.end());
    order.push_back(top);
    rank.assign(static_cast<std::size_t>(total), std::vector<int>(static_cast<std::size_t>(total), -1));
    for (int src = 0; src < total; ++src) {
      auto& dist = rank[static_cast<std::size_t>(src)];
      dist[static_cast<std::size_t>(src)] = 0;
      for (int u : order) {
        if (dist[static_cast<std::size_t>(u)] < 0) continue;
        for (int w : up_covers[static_cast<std::size_t>(u)])
          dist[static_cast<std::size_t>(w)] =
              std::max(dist[static_cast<std::size_t>(w)], dist[static_cast<std::size_t>(u)] + 1);
      }
    }
  }

  bool leq(int a, int b) const { return a == b || rank[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] >= 0; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
};

int to_hat_id(const Poset& p, int element) {
  if (element == HatElement::bottom) return p.size();
  if (element == HatElement::top) return p.size() + 1;
  if (element < 0 || element >= p.size()) throw std::invalid_argument("element out of range");
  return element;
}

} // namespace

int rank_interval_hat(const Poset& p, int x, int y) {
  const Hat hat(p);
  const int a = to_hat_id(p, x), b = to_hat_id(p, y);
  if (!hat.leq(a, b)) throw std::invalid_argument("interval endpoints are not comparable");
  return hat.rank[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

int rank_hat(const Poset& p) {
  return rank_interval_hat(p, HatElement::bottom, HatElement::top);
}

namespace {

bool condition_n_check(const Poset& p, const Hat& hat, const ConditionNSequence& seq,
                       std::string* why) {
  const int bottom = p.size(), top = p.size() + 1;
  std::vector<int> xs, ys;
  for (auto [y, x] : seq) {
    ys.push_back(to_hat_id(p, y));
    xs.push_back(to_hat_id(p, x));
  }
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (xs[i] == bottom && i == 0) return fail("x_1 must differ from the bottom element");
    if (ys[i] == bottom || xs[i] == top) return fail("bottom cannot be a y, top cannot be an x");
    if (!hat.less(xs[i], ys[i])) return fail("y_i must be strictly above x_i");
    if (i > 0 && !hat.less(xs[i - 1], ys[i])) return fail("x_{i-1} must be strictly below y_i");
  }
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (hat.leq(xs[j], ys[i])) return fail("condition (3) violated: y_i >= x_j with i < j");
  return true;
}

} // namespace

bool satisfies_condition_n(const Poset& p, const ConditionNSequence& seq) {
  const Hat hat(p);
  return condition_n_check(p, hat, seq, nullptr);
}

long long r_value(const Poset& p, const ConditionNSequence& seq) {
  const Hat hat(p);
  std::string why;
  if (!condition_n_check(p, hat, seq, &why))
    throw std::invalid_argument("sequence violates condition N: " + why);
  const int bottom = p.size(), top = p.size() + 1;
  long long total = 0;
  int prev_x = bottom;
  for (auto [y, x] : seq) {
    const int hy = to_hat_id(p, y), hx = to_hat_id(p, x);
    total += hat.rank[static_cast<std::size_t>(prev_x)][static_cast<std::size_t>(hy)];
    total -= hat.rank[static_cast<std::size_t>(hx)][static_cast<std::size_t>(hy)];
    prev_x = hx;
  }
  total += hat.rank[static_cast<std::size_t>(prev_x)][static_cast<std::size_t>(top)];
  return total;
}

long long max_condition_n_r(const Poset& p, const Budget& budget,
                            ConditionNSequence* witness) {
  if (p.size() > budget.poset_cap)
    throw budget_exceeded("condition-N search capped at " + std::to_string(budget.poset_cap) +
                          " elements");
  const Hat hat(p);
  const int n = p.size(), bottom = n, top = n + 1;
  long long best = hat.rank[static_cast<std::size_t>(bottom)][static_cast<std::size_t>(top)];
  if (witness) witness->clear(); // empty sequence attains rank of the augmented poset
  std::uint64_t nodes = 0;
  std::vector<int> ys, xs;
  // xs are pairwise distinct (repeating x_j would violate condition (3)), so
  // depth is bounded by |poset|
  auto rec = [&](auto&& self, int last_x, long long partial) -> void {
    if (++nodes > budget.condition_n_nodes)
      throw budget_exceeded("condition-N search exceeded its node budget");
    for (int y = 0; y <= top; ++y) {
      if (y == bottom || !hat.less(last_x, y)) continue;
      for (int x = 0; x < n; ++x) {
        if (!hat.less(x, y)) continue;
        bool ok = true;
        for (int prev_y : ys)
          if (hat.leq(x, prev_y)) { ok = false; break; }
        if (!ok) continue;
        const long long next =
            partial +
            hat.rank[static_cast<std::size_t>(last_x)][static_cast<std::size_t>(y)] -
            hat.rank[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        const long long total =
            next + hat.rank[static_cast<std::size_t>(x)][static_cast<std::size_t>(top)];
        ys.push_back(y);
        xs.push_back(x);
        if (total > best) {
          best = total;
          if (witness) {
            witness->clear();
            for (std::size_t i = 0; i < ys.size(); ++i) {
              const int wy = ys[i] == top ? HatElement::top : ys[i];
              witness->emplace_back(wy, xs[i]);
            }
          }
        }
        self(self, x, next);
        ys.pop_back();
        xs.pop_back();
      }
    }
  };
  rec(rec, bottom, 0);
  return best;
}

bool is_level_hibi(const Poset& p, const Budget& budget) {
  return max_condition_n_r(p, budget) <= rank_hat(p);
}

bool upper_interval_pure_sufficient(const Poset& p) {
  const Hat hat(p);
  const int top = p.size() + 1;
  for (int x = 0; x < p.size(); ++x) {
    // the interval [x, 1-hat]: x is its unique minimum, top its unique maximum
    std::vector<int> elems;
    for (int z = 0; z < p.size(); ++z)
      if (hat.leq(x, z)) elems.push_back(z);
    elems.push_back(top);
    std::vector<int> index(static_cast<std::size_t>(p.size()) + 2, -1);
    for (std::size_t i = 0; i < elems.size(); ++i)
      index[static_cast<std::size_t>(elems[i])] = static_cast<int>(i);
    // covers within the interval
    std::vector<std::pair<int, int>> cov;
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j) {
        if (i == j || !hat.less(elems[i], elems[j])) continue;
        bool direct = true;
        for (std::size_t k = 0; k < elems.size() && direct; ++k)
          if (k != i && k != j && hat.less(elems[i], elems[k]) && hat.less(elems[k], elems[j]))
            direct = false;
        if (direct) cov.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    const auto lens = chain_length_sets(static_cast<int>(elems.size()), cov);
    if (__builtin_popcountll(lens[static_cast<std::size_t>(index[static_cast<std::size_t>(x)])]) != 1)
      return false;
  }
  return true;
}

BigInt hibi_hilbert_function(const Poset& p, long long m, const Budget& budget) {
  if (m < 0) throw std::invalid_argument("degree must be nonnegative");
  if (m == 0) return 1;
  const auto ideals = poset_ideals(p, budget);
  std::vector<BigInt> f(ideals.size(), 1);
  for (long long step = 1; step < m; ++step) {
    std::vector<BigInt> g(ideals.size(), 0);
    for (std::size_t j = 0; j < ideals.size(); ++j)
      for (std::size_t i = 0; i < ideals.size(); ++i)
        if ((ideals[i] & ideals[j]) == ideals[i]) g[j] += f[i];
    f = std::move(g);
  }
  BigInt total = 0;
  for (const BigInt& v : f) total += v;
  return total;
}

} // namespace edgering
