#ifndef EDGERING_CHARACTERIZE_HPP
#define EDGERING_CHARACTERIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include "edgering/errors.hpp"
#include "edgering/partition.hpp"

namespace edgering {

// The paper's closed characterizations, as pure predicates on the sorted type.

// Gorenstein iff n=2 with (1,m) or (m,m); n=3 with r_3 <= 2; n=4 all ones.
bool gorenstein_characterized(const Partition& p);

// Level iff n=2; n=3 with (1,1,m) or (1,2,m) m>=2 or (2,2,m) m>=2 or (3,3,3);
// n=4 with (1,1,1,m); n=5 all ones.
bool level_characterized(const Partition& p);

// Almost Gorenstein iff n=2 with (1,m),(m,m) or (2,m) m>=2; n=3 with (1,1,m)
// or (1,m,m) or (2,2,2); n=4 with (1,1,m,m); n>=4 with (1,...,1,n-3);
// n even >= 6 all ones.
bool almost_gorenstein_characterized(const Partition& p);

// Lemma rephrasing of Thm 1.3 (iii)-(vi): every r_i in {1, d/2-1}.
// Requires d even and (n=3 with r_1 >= 2, or n >= 4).
bool lemma_rephrase(const Partition& p);

struct Verdict {
  bool gorenstein = false;
  bool level = false;
  bool almost_gorenstein = false;
};

struct CrossCheck {
  Partition partition;
  CaseClass case_class;
  Verdict characterized;
  std::optional<Verdict> direct; // empty: direct side exceeded its budget
  // direct-side profile, when available
  long long ell = -1;
  int socle_degree = -1;
  long long h_top = -1;
  long long cm_type = -1;
  long long e_of_c = -1;
  long long mu_of_c = -1;

  bool verified() const { return direct.has_value(); }
  bool agree() const;
  std::string describe() const;
};

// Runs the characterized and direct verdicts side by side. Budget exhaustion
// on the direct side yields an unverified report, never a disagreement.
CrossCheck cross_check(const Partition& p, const Budget& budget = default_budget());

// All partitions with n >= 2 and 2 <= d <= max_d, ordered by (d, lex parts).
std::vector<Partition> all_partitions(int max_d);

// Sweep CSV, one row per partition:
// d,parts,case,ell,s,h_s,cm_type,e_of_c,mu_of_c,gorenstein,level,almost_gorenstein,verified
std::string sweep_csv(int max_d, const Budget& budget = default_budget());
std::string sweep_json(int max_d, const Budget& budget = default_budget());

struct VerifyResult {
  int partitions_checked = 0;
  int agreements = 0;
  std::vector<std::string> disagreements;
  std::vector<std::string> unverified;
  std::vector<std::string> property_failures;
  std::string report;
  // 0 all verified and agreeing, 2 disagreement/property failure, 3 unverified present
  int exit_code() const;
};

// Full invariant suite: per-partition cross-checks plus the cross-module
// identities (matching lemma, ell, Ehrhart, e/mu closed forms, the graded-ring
// implications, Cor 1.4, Cor 4.3, lemma_rephrase, and the Hibi suite).
VerifyResult verify(int max_d, const Budget& budget = default_budget());

} // namespace edgering

#endif
