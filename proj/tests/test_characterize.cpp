#include <set>

#include "doctest.h"
#include "edgering/canonical.hpp"
#include "edgering/characterize.hpp"

using namespace edgering;

TEST_CASE("Gorenstein characterization") {
  CHECK(gorenstein_characterized(Partition({3, 3})));
  CHECK(gorenstein_characterized(Partition({1, 7})));
  CHECK(gorenstein_characterized(Partition({1, 2, 2})));
  CHECK(gorenstein_characterized(Partition({1, 1, 1, 1})));
  CHECK_FALSE(gorenstein_characterized(Partition({1, 1, 1, 2})));
  CHECK_FALSE(gorenstein_characterized(Partition({2, 3})));
  CHECK_FALSE(gorenstein_characterized(Partition({1, 2, 3})));
}

TEST_CASE("level characterization") {
  CHECK(level_characterized(Partition({1, 2, 5})));
  CHECK(level_characterized(Partition({4, 9})));
  CHECK(level_characterized(Partition({2, 2, 7})));
  CHECK(level_characterized(Partition({3, 3, 3})));
  CHECK(level_characterized(Partition({1, 1, 1, 6})));
  CHECK(level_characterized(Partition({1, 1, 1, 1, 1})));
  CHECK_FALSE(level_characterized(Partition({3, 3, 4})));
  CHECK_FALSE(level_characterized(Partition({1, 1, 1, 1, 1, 1})));
  CHECK_FALSE(level_characterized(Partition({1, 2, 2, 2})));
  CHECK_FALSE(level_characterized(Partition({1, 3, 3})));
}

TEST_CASE("almost Gorenstein characterization") {
  CHECK(almost_gorenstein_characterized(Partition({2, 7})));
  CHECK(almost_gorenstein_characterized(Partition({1, 1, 3, 3})));
  CHECK(almost_gorenstein_characterized(Partition({1, 4, 4})));
  CHECK(almost_gorenstein_characterized(Partition({2, 2, 2})));
  CHECK(almost_gorenstein_characterized(Partition({1, 1, 1, 1, 2}))); // (1,..,1,n-3), n=5
  CHECK(almost_gorenstein_characterized(Partition({1, 1, 1, 1, 1, 1})));
  CHECK_FALSE(almost_gorenstein_characterized(Partition({1, 1, 1, 1, 1})));
  CHECK_FALSE(almost_gorenstein_characterized(Partition({3, 4})));
  CHECK_FALSE(almost_gorenstein_characterized(Partition({2, 2, 3})));
  CHECK_FALSE(almost_gorenstein_characterized(Partition({1, 1, 1, 1, 1, 1, 1})));
}

TEST_CASE("lemma rephrasing") {
  CHECK(lemma_rephrase(Partition({2, 2, 2})));
  CHECK(lemma_rephrase(Partition({1, 1, 3, 3})));
  CHECK_FALSE(lemma_rephrase(Partition({1, 1, 1, 3})));
  CHECK_FALSE(lemma_rephrase(Partition({1, 1, 1, 1, 2, 2})));
  CHECK_THROWS_AS(lemma_rephrase(Partition({2, 2, 3})), std::invalid_argument); // d odd
  CHECK_THROWS_AS(lemma_rephrase(Partition({1, 2, 3})), std::invalid_argument); // n=3, r1=1
  CHECK_THROWS_AS(lemma_rephrase(Partition({3, 5})), std::invalid_argument);    // n=2
}

TEST_CASE("lemma rephrasing equals the characterization on its domain, d <= 14") {
  for (const Partition& p : all_partitions(14)) {
    if (p.vertex_count() % 2 != 0) continue;
    const int n = p.block_count();
    if (!(n >= 4 || (n == 3 && p.parts()[0] >= 2))) continue;
    CHECK(lemma_rephrase(p) == almost_gorenstein_characterized(p));
  }
}

TEST_CASE("level & almost Gorenstein & not Gorenstein set, d <= 14") {
  std::set<std::string> got, expected;
  for (const Partition& p : all_partitions(14)) {
    if (level_characterized(p) && almost_gorenstein_characterized(p) &&
        !gorenstein_characterized(p))
      got.insert(p.to_string());
    const auto& r = p.parts();
    if ((p.block_count() == 2 && r[0] == 2 && r[1] >= 3) ||
        (p.block_count() == 3 && r[0] == 1 && r[1] == 1 && r[2] >= 3))
      expected.insert(p.to_string());
  }
  CHECK(got == expected);
}

TEST_CASE("Gorenstein implies level and almost Gorenstein (predicates, d <= 14)") {
  for (const Partition& p : all_partitions(14)) {
    if (!gorenstein_characterized(p)) continue;
    CHECK(level_characterized(p));
    CHECK(almost_gorenstein_characterized(p));
  }
}

TEST_CASE("cross-check named instances") {
  {
    const CrossCheck c = cross_check(Partition({2, 2, 3}));
    REQUIRE(c.verified());
    CHECK(c.agree());
    CHECK_FALSE(c.characterized.gorenstein);
    CHECK(c.characterized.level);
    CHECK_FALSE(c.characterized.almost_gorenstein);
    CHECK(c.ell == 4);
    CHECK(c.h_top == 4);
  }
  {
    const CrossCheck c = cross_check(Partition({1, 1, 1, 1, 1, 1}));
    REQUIRE(c.verified());
    CHECK(c.agree());
    CHECK_FALSE(c.characterized.gorenstein);
    CHECK_FALSE(c.characterized.level);
    CHECK(c.characterized.almost_gorenstein);
  }
  {
    const CrossCheck c = cross_check(Partition({1, 1, 1, 1}));
    REQUIRE(c.verified());
    CHECK(c.agree());
    CHECK(c.characterized.gorenstein);
    CHECK(c.characterized.level);
    CHECK(c.characterized.almost_gorenstein);
    CHECK(c.cm_type == 1);
  }
}

TEST_CASE("characterized equals direct for every partition with d <= 8") {
  for (const Partition& p : all_partitions(8)) {
    const CrossCheck c = cross_check(p);
    REQUIRE(c.verified());
    CHECK(c.agree());
  }
}

TEST_CASE("budget exhaustion reports unverified, not disagreement") {
  Budget tiny;
  tiny.max_lattice_bound = 5;
  const CrossCheck c = cross_check(Partition({2, 2, 3}), tiny);
  CHECK_FALSE(c.verified());
  CHECK_FALSE(c.agree());
  CHECK(c.describe().find("unverified") != std::string::npos);
}

TEST_CASE("partition sweep order is deterministic: (d, lexicographic parts)") {
  const auto ps = all_partitions(5);
  std::vector<std::string> names;
  for (const Partition& p : ps) names.push_back(p.to_string());
  CHECK(names == std::vector<std::string>{"1,1", "1,1,1", "1,2", "1,1,1,1", "1,1,2", "1,3",
                                          "2,2", "1,1,1,1,1", "1,1,1,2", "1,1,3", "1,2,2",
                                          "1,4", "2,3"});
}

TEST_CASE("sweep CSV shape and spot rows") {
  const std::string csv = sweep_csv(6);
  CHECK(csv.rfind("d,parts,case,ell,s,h_s,cm_type,e_of_c,mu_of_c,gorenstein,level,"
                  "almost_gorenstein,verified\n",
                  0) == 0);
  CHECK(csv.find("6,\"2,2,2\",A,3,3,1,1,0,0,true,true,true,true") != std::string::npos);
  CHECK(csv.find("6,\"1,1,1,1,1,1\",A,3,3,1,7,6,6,false,false,true,true") !=
        std::string::npos);
  // byte determinism
  CHECK(csv == sweep_csv(6));
}

TEST_CASE("sweep CSV at d=7 includes the level witness row") {
  const std::string csv = sweep_csv(7);
  CHECK(csv.find("7,\"2,2,3\",B,4,3,4,4,14,3,false,true,false,true") != std::string::npos);
}

TEST_CASE("verify passes and its exit code reflects budget exhaustion") {
  const VerifyResult ok = verify(6);
  CHECK(ok.exit_code() == 0);
  CHECK(ok.disagreements.empty());
  CHECK(ok.report.find("VERIFY PASS") != std::string::npos);

  Budget tiny;
  tiny.max_lattice_bound = 50;
  const VerifyResult incomplete = verify(6, tiny);
  CHECK(incomplete.exit_code() == 3);
  CHECK(!incomplete.unverified.empty());
  CHECK(incomplete.disagreements.empty());
}
