#include "edgering/characterize.hpp"

#include <algorithm>
#include <sstream>

#include "edgering/canonical.hpp"
#include "edgering/hibi.hpp"
#include "edgering/hilbert.hpp"
#include "edgering/polytope.hpp"

namespace edgering {

bool gorenstein_characterized(const Partition& p) {
  const auto& r = p.parts();
  switch (p.block_count()) {
    case 2: return r[0] == 1 || r[0] == r[1];
    case 3: return r[2] <= 2;
    case 4: return r[3] == 1;
    default: return false;
  }
}

bool level_characterized(const Partition& p) {
  const auto& r = p.parts();
  switch (p.block_count()) {
    case 2: return true;
    case 3:
      if (r[0] == 1 && r[1] == 1) return true;
      if (r[0] == 1 && r[1] == 2 && r[2] >= 2) return true;
      if (r[0] == 2 && r[1] == 2 && r[2] >= 2) return true;
      return r[0] == 3 && r[1] == 3 && r[2] == 3;
    case 4: return r[0] == 1 && r[1] == 1 && r[2] == 1;
    case 5: return std::all_of(r.begin(), r.end(), [](int x) { return x == 1; });
    default: return false;
  }
}

bool almost_gorenstein_characterized(const Partition& p) {
  const auto& r = p.parts();
  const int n = p.block_count();
  if (n == 2) return r[0] == 1 || r[0] == r[1] || (r[0] == 2 && r[1] >= 2);
  if (n == 3) {
    if (r[0] == 1 && r[1] == 1) return true;
    if (r[0] == 1 && r[1] == r[2]) return true;
    return r[0] == 2 && r[1] == 2 && r[2] == 2;
  }
  if (n == 4 && r[0] == 1 && r[1] == 1 && r[2] == r[3]) return true;
  const bool head_ones = std::all_of(r.begin(), r.end() - 1, [](int x) { return x == 1; });
  if (head_ones && r.back() == n - 3) return true;
  if (n % 2 == 0 && n >= 6 && head_ones && r.back() == 1) return true;
  return false;
}

bool lemma_rephrase(const Partition& p) {
  const int n = p.block_count();
  if (p.vertex_count() % 2 != 0)
    throw std::invalid_argument("lemma rephrasing requires even d");
  if (!(n >= 4 || (n == 3 && p.parts()[0] >= 2)))
    throw std::invalid_argument("lemma rephrasing requires n=3 with r_1>=2 or n>=4");
  const int half = p.vertex_count() / 2;
  return std::all_of(p.parts().begin(), p.parts().end(),
                     [half](int r) { return r == 1 || r == half - 1; });
}

bool CrossCheck::agree() const {
  if (!direct) return false;
  return direct->gorenstein == characterized.gorenstein &&
         direct->level == characterized.level &&
         direct->almost_gorenstein == characterized.almost_gorenstein;
}

std::string CrossCheck::describe() const {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "K_{" << partition.to_string() << "} case " << case_letter(case_class)
     << ": characterized G=" << yn(characterized.gorenstein)
     << " L=" << yn(characterized.level) << " AG=" << yn(characterized.almost_gorenstein);
  if (direct) {
    os << "; direct G=" << yn(direct->gorenstein) << " L=" << yn(direct->level)
       << " AG=" << yn(direct->almost_gorenstein) << " (ell=" << ell << " s=" << socle_degree
       << " h_s=" << h_top << " r=" << cm_type << " e=" << e_of_c << " mu=" << mu_of_c << ") "
       << (agree() ? "AGREE" : "DISAGREE");
  } else {
    os << "; direct side unverified (budget)";
  }
  return os.str();
}

CrossCheck cross_check(const Partition& p, const Budget& budget) {
  CrossCheck out{p, edgering::case_class(p),
                 Verdict{gorenstein_characterized(p), level_characterized(p),
                         almost_gorenstein_characterized(p)},
                 std::nullopt};
  try {
    const HilbertData hd = h_vector(p, budget);
    const CanonicalGenerators gen = canonical_generators(p, budget);
    out.ell = hd.ell;
    out.socle_degree = hd.socle_degree;
    out.h_top = hd.h_top();
    out.cm_type = gen.cm_type();
    out.mu_of_c = gen.cm_type() - 1;
    out.e_of_c = p.bipartite() ? e_of_c_interpolated(p, hd.ell, budget)
                               : e_of_c_with_ell(p, hd.ell);
    Verdict direct;
    direct.gorenstein = gen.gorenstein();
    direct.level = gen.level();
    direct.almost_gorenstein = is_almost_gorenstein_direct(p, budget);
    out.direct = direct;
  } catch (const budget_exceeded&) {
    out.direct.reset(); // unverified, not a disagreement
  }
  return out;
}

std::vector<Partition> all_partitions(int max_d) {
  std::vector<Partition> out;
  std::vector<int> acc;
  auto rec = [&](auto&& self, int remaining, int min_part) -> void {
    if (remaining == 0) {
      if (acc.size() >= 2) out.emplace_back(acc);
      return;
    }
    for (int part = min_part; part <= remaining; ++part) {
      acc.push_back(part);
      self(self, remaining - part, part);
      acc.pop_back();
    }
  };
  for (int d = 2; d <= max_d; ++d) rec(rec, d, 1);
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
    return a.parts() < b.parts();
  });
  return out;
}

namespace {

struct SweepRow {
  CrossCheck check;
};

std::vector<SweepRow> sweep_rows(int max_d, const Budget& budget) {
  std::vector<SweepRow> rows;
  for (const Partition& p : all_partitions(max_d)) rows.push_back(SweepRow{cross_check(p, budget)});
  return rows;
}

} // namespace

std::string sweep_csv(int max_d, const Budget& budget) {
  std::ostringstream os;
  os << "d,parts,case,ell,s,h_s,cm_type,e_of_c,mu_of_c,gorenstein,level,almost_gorenstein,"
        "verified\n";
  for (const SweepRow& row : sweep_rows(max_d, budget)) {
    const CrossCheck& c = row.check;
    auto tf = [](bool b) { return b ? "true" : "false"; };
    os << c.partition.vertex_count() << ",\"" << c.partition.to_string() << "\","
       << case_letter(c.case_class) << ',';
    if (c.direct)
      os << c.ell << ',' << c.socle_degree << ',' << c.h_top << ',' << c.cm_type << ','
         << c.e_of_c << ',' << c.mu_of_c << ',';
    else
      os << ",,,,,,";
    os << tf(c.characterized.gorenstein) << ',' << tf(c.characterized.level) << ','
       << tf(c.characterized.almost_gorenstein) << ',' << tf(c.agree()) << '\n';
  }
  return os.str();
}

std::string sweep_json(int max_d, const Budget& budget) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const SweepRow& row : sweep_rows(max_d, budget)) {
    const CrossCheck& c = row.check;
    if (!first) os << ',';
    first = false;
    auto tf = [](bool b) { return b ? "true" : "false"; };
    os << "\n  {\"d\":" << c.partition.vertex_count() << ",\"parts\":\""
       << c.partition.to_string() << "\",\"case\":\"" << case_letter(c.case_class) << "\"";
    if (c.direct)
      os << ",\"ell\":" << c.ell << ",\"s\":" << c.socle_degree << ",\"h_s\":" << c.h_top
         << ",\"cm_type\":" << c.cm_type << ",\"e_of_c\":" << c.e_of_c
         << ",\"mu_of_c\":" << c.mu_of_c;
    os << ",\"gorenstein\":" << tf(c.characterized.gorenstein)
       << ",\"level\":" << tf(c.characterized.level)
       << ",\"almost_gorenstein\":" << tf(c.characterized.almost_gorenstein)
       << ",\"verified\":" << tf(c.agree()) << "}";
  }
  os << "\n]\n";
  return os.str();
}

int VerifyResult::exit_code() const {
  if (!disagreements.empty() || !property_failures.empty()) return 2;
  if (!unverified.empty()) return 3;
  return 0;
}

namespace {

void check(std::vector<std::string>& failures, bool ok, const std::string& what) {
  if (!ok) failures.push_back(what);
}

} // namespace

VerifyResult verify(int max_d, const Budget& budget) {
  VerifyResult res;
  std::ostringstream os;
  std::vector<CrossCheck> checks;

  for (const Partition& p : all_partitions(max_d)) {
    CrossCheck c = cross_check(p, budget);
    ++res.partitions_checked;
    if (!c.direct)
      res.unverified.push_back(p.to_string());
    else if (c.agree())
      ++res.agreements;
    else
      res.disagreements.push_back(c.describe());
    checks.push_back(std::move(c));
  }
  os << "cross-check: " << res.partitions_checked << " partitions, " << res.agreements
     << " agree, " << res.disagreements.size() << " disagree, " << res.unverified.size()
     << " unverified\n";

  auto& fail = res.property_failures;
  // graded-ring properties over the verified sweep
  for (const CrossCheck& c : checks) {
    if (!c.direct) continue;
    const std::string name = "K_{" + c.partition.to_string() + "}";
    check(fail, c.mu_of_c <= c.e_of_c, name + ": mu(C) > e(C)");
    check(fail, !c.direct->gorenstein || (c.direct->level && c.direct->almost_gorenstein),
          name + ": Gorenstein without level+AG");
    if (c.direct->almost_gorenstein && c.socle_degree >= 2)
      check(fail, c.h_top == 1, name + ": AG with s>=2 but h_s != 1");
    if (c.direct->almost_gorenstein && c.socle_degree == 2)
      check(fail, c.direct->level, name + ": AG with s=2 but not level");
    if (c.direct->level && c.h_top == 1)
      check(fail, c.direct->gorenstein, name + ": level with h_s=1 but not Gorenstein");
    const int n = c.partition.block_count();
    if (c.direct->almost_gorenstein && (n >= 4 || (n == 3 && c.partition.parts()[0] >= 2)))
      check(fail, c.case_class == CaseClass::A, name + ": direct AG outside case A");
  }
  os << "graded-ring properties: " << (fail.empty() ? "ok" : "FAILED") << "\n";

  // matching lemma vs backtracking
  {
    std::size_t before = fail.size();
    for (const Partition& p : all_partitions(std::min(max_d, budget.matching_cap)))
      check(fail, has_perfect_matching(p) == brute_force_matching(p, budget),
            "matching mismatch at K_{" + p.to_string() + "}");
    os << "matching criterion: " << (fail.size() == before ? "ok" : "FAILED") << "\n";
  }

  // ell and h_s facts on the proposition's domain; closed e/mu in case A
  {
    std::size_t before = fail.size();
    for (const CrossCheck& c : checks) {
      if (!c.direct) continue;
      const Partition& p = c.partition;
      const int n = p.block_count();
      const std::string name = "K_{" + p.to_string() + "}";
      if (n >= 4 || (n == 3 && p.parts()[0] >= 2)) {
        check(fail, ell_closed_form(p) == c.ell, name + ": closed-form ell mismatch");
        if (c.case_class == CaseClass::A)
          check(fail, c.h_top == 1, name + ": case A with h_s != 1");
        else
          check(fail, c.h_top >= 2, name + ": case B/C with h_s < 2");
      }
      if (c.case_class == CaseClass::A) {
        check(fail, e_of_c(p) == c.e_of_c, name + ": case-A e(C) closed form mismatch");
        check(fail, mu_of_c_closed(p) == c.mu_of_c, name + ": mu(C) closed form mismatch");
      }
    }
    os << "ell / h_s / case-A closed forms: " << (fail.size() == before ? "ok" : "FAILED")
       << "\n";
  }

  // Ehrhart closed form vs counted, low dilations
  {
    std::size_t before = fail.size();
    for (const Partition& p : all_partitions(std::min(max_d, 9))) {
      const EhrhartPolynomial poly = ehrhart_closed_form(p);
      for (long long m = 0; m <= 4; ++m) {
        try {
          check(fail, poly.eval(m) == hilbert_function_counted(p, m, budget),
                "Ehrhart mismatch at K_{" + p.to_string() + "}, m=" + std::to_string(m));
        } catch (const budget_exceeded&) {
          res.unverified.push_back(p.to_string() + " (ehrhart m=" + std::to_string(m) + ")");
        }
      }
    }
    os << "Ehrhart closed form vs counted: " << (fail.size() == before ? "ok" : "FAILED")
       << "\n";
  }

  // lemma rephrasing == almost-Gorenstein characterization on its domain
  {
    std::size_t before = fail.size();
    for (const Partition& p : all_partitions(std::max(max_d, 14))) {
      const int n = p.block_count();
      if (p.vertex_count() % 2 != 0) continue;
      if (!(n >= 4 || (n == 3 && p.parts()[0] >= 2))) continue;
      check(fail, lemma_rephrase(p) == almost_gorenstein_characterized(p),
            "lemma rephrasing mismatch at K_{" + p.to_string() + "}");
    }
    os << "lemma rephrasing: " << (fail.size() == before ? "ok" : "FAILED") << "\n";
  }

  // Cor 1.4: level and AG but not Gorenstein, predicate side
  {
    std::size_t before = fail.size();
    for (const Partition& p : all_partitions(std::max(max_d, 14))) {
      const bool in_set = level_characterized(p) && almost_gorenstein_characterized(p) &&
                          !gorenstein_characterized(p);
      const auto& r = p.parts();
      const bool expected = (p.block_count() == 2 && r[0] == 2 && r[1] >= 3) ||
                            (p.block_count() == 3 && r[0] == 1 && r[1] == 1 && r[2] >= 3);
      check(fail, in_set == expected, "Cor 1.4 mismatch at K_{" + p.to_string() + "}");
    }
    os << "corollary (level & AG & not Gorenstein): "
       << (fail.size() == before ? "ok" : "FAILED") << "\n";
  }

  // Hibi suite
  {
    std::size_t before = fail.size();
    bool complete = true;
    for (int m = 1; m <= 4; ++m) {
      for (int n = 1; n <= 4; ++n) {
        try {
          const Poset plain = pi_poset(m, n);
          const Poset primed = pi_prime_poset(m, n);
          check(fail, is_level_hibi(plain, budget),
                "pi(" + std::to_string(m) + "," + std::to_string(n) + ") not level");
          check(fail, is_level_hibi(primed, budget) == (std::min(m, n) <= 2),
                "pi'(" + std::to_string(m) + "," + std::to_string(n) + ") levelness mismatch");
          check(fail, is_pure(plain) == (m == n),
                "pi(" + std::to_string(m) + "," + std::to_string(n) + ") purity mismatch");
          if (upper_interval_pure_sufficient(primed))
            check(fail, is_level_hibi(primed, budget),
                  "upper-interval purity unsound at pi'(" + std::to_string(m) + "," +
                      std::to_string(n) + ")");
          for (long long t = 0; t <= 3; ++t) {
            check(fail,
                  hibi_hilbert_function(plain, t, budget) ==
                      BigInt(hilbert_function_counted(Partition({m + 1, n + 1}), t, budget)),
                  "Hibi Hilbert mismatch pi vs K at (" + std::to_string(m) + "," +
                      std::to_string(n) + "), t=" + std::to_string(t));
            check(fail,
                  hibi_hilbert_function(primed, t, budget) ==
                      BigInt(hilbert_function_counted(Partition({1, m, n}), t, budget)),
                  "Hibi Hilbert mismatch pi' vs K at (" + std::to_string(m) + "," +
                      std::to_string(n) + "), t=" + std::to_string(t));
          }
        } catch (const budget_exceeded&) {
          complete = false;
          res.unverified.push_back("pi/pi'(" + std::to_string(m) + "," + std::to_string(n) +
                                   ")");
        }
      }
    }
    os << "Hibi suite: "
       << (fail.size() != before ? "FAILED" : (complete ? "ok" : "incomplete")) << "\n";
  }

  for (const std::string& d : res.disagreements) os << "DISAGREE " << d << "\n";
  for (const std::string& f : res.property_failures) os << "FAIL " << f << "\n";
  for (const std::string& u : res.unverified) os << "UNVERIFIED K_{" << u << "}\n";
  os << (res.exit_code() == 0 ? "VERIFY PASS"
                              : (res.exit_code() == 2 ? "VERIFY FAIL" : "VERIFY INCOMPLETE"))
     << "\n";
  res.report = os.str();
  return res;
}

} // namespace edgering
