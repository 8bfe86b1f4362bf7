#include <algorithm>
#include <set>

#include "doctest.h"
#include "edgering/canonical.hpp"
#include "edgering/hibi.hpp"
#include "edgering/hilbert.hpp"
#include "edgering/partition.hpp"

using namespace edgering;

namespace {

// Test-side oracle: enumerate condition-N sequences with no pruning beyond
// the definition itself and take the maximum r-value.
long long max_r_oracle(const Poset& p) {
  long long best = r_value(p, {});
  ConditionNSequence seq;
  auto rec = [&](auto&& self) -> void {
    const int n = p.size();
    // candidate next pair (y, x): y in poset or top, x in poset
    for (int y = 0; y <= n; ++y) {
      const int y_enc = (y == n) ? HatElement::top : y;
      for (int x = 0; x < n; ++x) {
        seq.emplace_back(y_enc, x);
        if (satisfies_condition_n(p, seq)) {
          best = std::max(best, r_value(p, seq));
          self(self);
        }
        seq.pop_back();
      }
    }
  };
  rec(rec);
  return best;
}

// multichain count by explicit tuple enumeration
BigInt multichains_oracle(const Poset& p, int m) {
  const auto ideals = poset_ideals(p);
  if (m == 0) return 1;
  BigInt count = 0;
  auto rec = [&](auto&& self, int step, std::uint32_t last) -> void {
    if (step == m) {
      ++count;
      return;
    }
    for (std::uint32_t ideal : ideals)
      if ((last & ideal) == last) self(self, step + 1, ideal);
  };
  rec(rec, 0, 0u);
  return count;
}

} // namespace

TEST_CASE("poset construction and closure") {
  const Poset chain(3, {{0, 1}, {1, 2}});
  CHECK(chain.leq(0, 2));
  CHECK(chain.less(0, 2));
  CHECK_FALSE(chain.leq(2, 0));
  CHECK(rank_hat(chain) == 4);
  CHECK(chain.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  const Poset antichain(2, {});
  CHECK_FALSE(antichain.leq(0, 1));
  CHECK(rank_hat(antichain) == 2);

  CHECK_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(3, {{0, 1}, {1, 2}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("redundant covers are dropped from the canonical cover set") {
  const Poset p(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("two-chain posets") {
  const Poset p11 = pi_poset(1, 1);
  CHECK_FALSE(p11.leq(0, 1));
  CHECK_FALSE(p11.leq(1, 0));

  const Poset p11p = pi_prime_poset(1, 1);
  CHECK(p11p.less(0, 1));

  const Poset p23 = pi_poset(2, 3);
  CHECK(p23.less(0, 1));
  CHECK(p23.less(2, 4));
  CHECK_FALSE(p23.leq(0, 2));
  CHECK_FALSE(p23.leq(1, 4));

  const Poset p23p = pi_prime_poset(2, 3);
  CHECK(p23p.less(0, 4)); // the added relation
  CHECK_FALSE(p23p.leq(1, 4));
}

TEST_CASE("poset text format round trip") {
  const Poset p = pi_prime_poset(2, 3);
  const std::string text = p.to_string();
  CHECK(text == "5\n1 < 2\n1 < 5\n3 < 4\n4 < 5\n");
  const Poset q = parse_poset(text);
  CHECK(q.size() == p.size());
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) CHECK(p.leq(a, b) == q.leq(a, b));
  CHECK_THROWS_AS(parse_poset("2\n1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poset(""), std::invalid_argument);
}

TEST_CASE("poset ideals") {
  // chain with k+1 elements has k+2 ideals
  CHECK(count_poset_ideals(Poset(3, {{0, 1}, {1, 2}})) == 4);
  CHECK(count_poset_ideals(Poset(2, {})) == 4);
  CHECK(count_poset_ideals(pi_poset(1, 1)) == 4);
  CHECK(count_poset_ideals(pi_poset(2, 3)) == 12);  // (m+1)(n+1)
  CHECK(count_poset_ideals(pi_prime_poset(2, 3)) == 11);

  const auto ideals = poset_ideals(pi_prime_poset(1, 2));
  CHECK(ideals.size() == 5);
  for (std::uint32_t mask : ideals)
    for (int e = 0; e < 3; ++e)
      if ((mask >> e) & 1u) {
        const Poset p = pi_prime_poset(1, 2);
        CHECK((p.down_set(e) & ~mask) == 0u);
      }

  Budget tiny;
  tiny.poset_cap = 3;
  CHECK_THROWS_AS(poset_ideals(pi_poset(3, 3), tiny), budget_exceeded);
}

TEST_CASE("purity") {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) CHECK(is_pure(pi_poset(m, n)) == (m == n));
  CHECK_FALSE(is_pure(pi_prime_poset(3, 3)));
  // all three maximal chains of pi'(2,2) have length 1; consistent with
  // k[K_{1,2,2}] being Gorenstein
  CHECK(is_pure(pi_prime_poset(2, 2)));
  CHECK(is_pure(pi_prime_poset(1, 1)));
  CHECK(is_pure(Poset(1, {})));
}

TEST_CASE("interval ranks in the augmented poset") {
  const Poset p = pi_prime_poset(3, 4);
  CHECK(rank_hat(p) == 5);
  CHECK(rank_interval_hat(p, HatElement::bottom, 6) == 4); // up the long chain
  CHECK(rank_interval_hat(p, 0, 6) == 1);                  // p_1 < p_7 is a cover
  CHECK(rank_interval_hat(p, 0, HatElement::top) == 3);
  CHECK(rank_interval_hat(p, 2, 2) == 0);
  CHECK_THROWS_AS(rank_interval_hat(p, 1, 4), std::invalid_argument);
}

TEST_CASE("r-value of the proof's witness sequence") {
  // y_1 = p_{m+n}, x_1 = p_1 gives n-1+m
  for (const auto [m, n] : {std::pair{3, 4}, {3, 3}, {4, 5}, {2, 2}}) {
    const Poset p = pi_prime_poset(m, n);
    const ConditionNSequence seq{{m + n - 1, 0}};
    CHECK(r_value(p, seq) == n - 1 + m);
  }
  CHECK(r_value(pi_prime_poset(3, 4), {{6, 0}}) == 6);
}

TEST_CASE("empty sequence attains the rank of the augmented poset") {
  CHECK(r_value(pi_poset(2, 3), {}) == rank_hat(pi_poset(2, 3)));
  CHECK(r_value(pi_prime_poset(4, 4), {}) == 5);
}

TEST_CASE("condition N validation") {
  const Poset p = pi_prime_poset(3, 3);
  CHECK(satisfies_condition_n(p, {{5, 0}}));
  CHECK_FALSE(satisfies_condition_n(p, {{0, 5}}));          // y not above x
  CHECK_FALSE(satisfies_condition_n(p, {{1, HatElement::bottom}})); // x_1 = 0-hat
  // y_1 = p_2 >= x_2 = p_1 violates (3)
  CHECK_FALSE(satisfies_condition_n(p, {{1, 0}, {5, 0}}));
  CHECK_THROWS_AS(r_value(p, {{0, 5}}), std::invalid_argument);
  // a two-pair sequence that does satisfy condition N, and attains the max
  CHECK(satisfies_condition_n(p, {{5, 0}, {2, 1}}));
  CHECK(r_value(p, {{5, 0}, {2, 1}}) == 5);
}

TEST_CASE("levelness of the two-chain families") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      CHECK(is_level_hibi(pi_poset(m, n)));
      CHECK(is_level_hibi(pi_prime_poset(m, n)) == (std::min(m, n) <= 2));
    }
}

TEST_CASE("frozen max r-values") {
  CHECK(max_condition_n_r(pi_prime_poset(3, 4)) == 6);
  CHECK(rank_hat(pi_prime_poset(3, 4)) == 5);
  CHECK(max_condition_n_r(pi_prime_poset(3, 3)) == 5);
  CHECK(max_condition_n_r(pi_prime_poset(4, 4)) == 7);
  CHECK(max_condition_n_r(pi_prime_poset(4, 2)) == 5); // equals rank: level
  CHECK(max_condition_n_r(pi_prime_poset(5, 5)) == 9);
  CHECK(max_condition_n_r(pi_poset(5, 5)) == 6);
}

TEST_CASE("search maximum matches the unpruned oracle on small posets") {
  const Poset posets[] = {pi_poset(1, 1), pi_poset(2, 2),      pi_poset(1, 3),
                          pi_poset(2, 3), pi_prime_poset(2, 2), pi_prime_poset(3, 3),
                          pi_prime_poset(1, 3), Poset(3, {}),   Poset(4, {{0, 1}, {2, 3}})};
  for (const Poset& p : posets) CHECK(max_condition_n_r(p) == max_r_oracle(p));
}

TEST_CASE("witness sequence is valid and attains the maximum") {
  ConditionNSequence witness;
  const Poset p = pi_prime_poset(3, 4);
  const long long best = max_condition_n_r(p, default_budget(), &witness);
  CHECK(best == 6);
  REQUIRE(!witness.empty());
  CHECK(satisfies_condition_n(p, witness));
  CHECK(r_value(p, witness) == best);
}

TEST_CASE("condition-N node budget") {
  Budget tiny;
  tiny.condition_n_nodes = 2;
  CHECK_THROWS_AS(max_condition_n_r(pi_prime_poset(4, 4), tiny), budget_exceeded);
  tiny.poset_cap = 3;
  CHECK_THROWS_AS(max_condition_n_r(pi_poset(3, 3), tiny), budget_exceeded);
}

TEST_CASE("upper-interval purity is sufficient but not necessary") {
  CHECK(upper_interval_pure_sufficient(pi_poset(2, 3)));
  CHECK(upper_interval_pure_sufficient(pi_prime_poset(2, 4)));
  CHECK(upper_interval_pure_sufficient(pi_prime_poset(1, 5)));
  CHECK_FALSE(upper_interval_pure_sufficient(pi_prime_poset(3, 3)));
  // pi'(4,2) fails the sufficient test yet is level (min chain length 2)
  CHECK_FALSE(upper_interval_pure_sufficient(pi_prime_poset(4, 2)));
  CHECK(is_level_hibi(pi_prime_poset(4, 2)));
}

TEST_CASE("upper-interval purity implies levelness across a corpus") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const Poset& p : {pi_poset(m, n), pi_prime_poset(m, n)})
        if (upper_interval_pure_sufficient(p)) CHECK(is_level_hibi(p));
}

TEST_CASE("star operator") {
  // in pi'(1,n), the top of the long chain is comparable to everything
  const Poset p = pi_prime_poset(1, 4);
  const auto star = p.star(4);
  CHECK(star == std::vector<int>{0, 1, 2, 3, 4});
  const Poset q = pi_poset(2, 2);
  CHECK(q.star(0) == std::vector<int>{0, 1});
}

TEST_CASE("Hibi Hilbert function") {
  const Poset point(1, {});
  for (long long m = 0; m <= 4; ++m) CHECK(hibi_hilbert_function(point, m) == m + 1);

  const Poset p11 = pi_poset(1, 1);
  for (long long m = 0; m <= 4; ++m)
    CHECK(hibi_hilbert_function(p11, m) == (m + 1) * (m + 1));
  CHECK(hibi_hilbert_function(p11, 1) == 4); // = H(k[K_{2,2}], 1)

  CHECK_THROWS_AS(hibi_hilbert_function(point, -1), std::invalid_argument);
}

TEST_CASE("multichain DP equals tuple enumeration") {
  for (const Poset& p : {pi_poset(1, 1), pi_poset(2, 1), pi_poset(2, 2), pi_prime_poset(2, 2)})
    for (int m = 0; m <= 3; ++m) CHECK(hibi_hilbert_function(p, m) == multichains_oracle(p, m));
}

TEST_CASE("Hilbert polynomial has degree |poset|") {
  // (|P|+1)-fold differences vanish, |P|-fold do not
  for (const Poset& p : {pi_poset(1, 2), pi_prime_poset(2, 2), Poset(3, {})}) {
    const int q = p.size();
    std::vector<BigInt> H;
    for (long long m = 0; m <= q + 1; ++m) H.push_back(hibi_hilbert_function(p, m));
    for (int order : {q, q + 1}) {
      BigInt delta = 0;
      for (int j = 0; j <= order; ++j) {
        const BigInt term = binomial(order, j) * H[static_cast<std::size_t>(j)];
        delta += ((order - j) % 2 == 0) ? term : -term;
      }
      if (order == q)
        CHECK(delta != 0);
      else
        CHECK(delta == 0);
    }
  }
}

TEST_CASE("Hibi Hilbert functions match the edge rings") {
  // k[K_{m+1,n+1}] vs pi(m,n) and k[K_{1,m,n}] vs pi'(m,n)
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (long long t = 0; t <= 4; ++t) {
        CHECK(hibi_hilbert_function(pi_poset(m, n), t) ==
              BigInt(hilbert_function_counted(Partition({m + 1, n + 1}), t)));
        CHECK(hibi_hilbert_function(pi_prime_poset(m, n), t) ==
              BigInt(hilbert_function_counted(Partition({1, m, n}), t)));
      }
}

TEST_CASE("purity matches the direct Gorenstein test on the edge-ring side") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      CHECK(is_pure(pi_poset(m, n)) ==
            is_gorenstein_direct(Partition({m + 1, n + 1})));
      CHECK(is_pure(pi_prime_poset(m, n)) ==
            is_gorenstein_direct(Partition({1, m, n})));
    }
}
