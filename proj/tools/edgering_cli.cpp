// Command-line front end. Talks to the library exclusively through the
// C API in edgering.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edgering.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagree = 2;
constexpr int kExitUnverified = 3;

struct StringDeleter {
  void operator()(char* s) const { er_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct PartitionDeleter {
  void operator()(er_partition* p) const { er_partition_free(p); }
};
using OwnedPartition = std::unique_ptr<er_partition, PartitionDeleter>;

struct PosetDeleter {
  void operator()(er_poset* p) const { er_poset_free(p); }
};
using OwnedPoset = std::unique_ptr<er_poset, PosetDeleter>;

[[noreturn]] void die(er_status st) {
  std::cerr << "error: " << er_status_message(st);
  if (er_last_error()[0]) std::cerr << ": " << er_last_error();
  std::cerr << "\n";
  std::exit(st == ER_EBUDGET ? kExitUnverified : kExitUsage);
}

unsigned long long budget_from_env(unsigned long long cli_budget) {
  if (cli_budget > 0) return cli_budget;
  if (const char* env = std::getenv("EDGERING_BUDGET")) {
    const unsigned long long v = std::strtoull(env, nullptr, 10);
    if (v > 0) return v;
  }
  return 0; // library default
}

OwnedPartition parse_partition_or_die(const std::string& text) {
  er_partition* p = nullptr;
  if (er_status st = er_partition_parse(text.c_str(), &p); st != ER_OK) die(st);
  return OwnedPartition(p);
}

const char* case_name(er_case c) {
  switch (c) {
    case ER_CASE_BIPARTITE: return "bipartite";
    case ER_CASE_A: return "A";
    case ER_CASE_B: return "B";
    case ER_CASE_C: return "C";
  }
  return "?";
}

const char* yn(int v) { return v ? "yes" : "no"; }

int cmd_classify(const std::string& parts, bool direct, unsigned long long budget) {
  OwnedPartition p = parse_partition_or_die(parts);
  OwnedString canon;
  {
    char* s = nullptr;
    if (er_status st = er_partition_format(p.get(), &s); st != ER_OK) die(st);
    canon.reset(s);
  }
  const er_case cc = er_partition_case(p.get());
  std::cout << "partition: " << canon.get() << "\n";
  std::cout << "d: " << er_partition_vertex_count(p.get())
            << "  n: " << er_partition_block_count(p.get()) << "  case: " << case_name(cc)
            << "\n";
  std::cout << "edges: " << er_edge_count(p.get()) << "\n";
  if (cc != ER_CASE_BIPARTITE) {
    long long ell = 0;
    if (er_status st = er_ell_closed_form(p.get(), &ell); st != ER_OK) die(st);
    std::cout << "ell (closed form): " << ell
              << "  socle degree: " << er_partition_vertex_count(p.get()) - ell << "\n";
  }
  std::cout << "gorenstein: " << yn(er_gorenstein_characterized(p.get())) << "\n";
  std::cout << "level: " << yn(er_level_characterized(p.get())) << "\n";
  std::cout << "almost-gorenstein: " << yn(er_almost_gorenstein_characterized(p.get()))
            << "\n";
  if (direct) {
    char* report = nullptr;
    int agree = 0, unverified = 0;
    if (er_status st = er_cross_check(p.get(), budget, &report, &agree, &unverified);
        st != ER_OK)
      die(st);
    OwnedString owned(report);
    std::cout << owned.get() << "\n";
    if (unverified) return kExitUnverified;
    if (!agree) return kExitDisagree;
  }
  return kExitOk;
}

int cmd_sweep(int max_d, const std::string& format, const std::string& output,
              unsigned long long budget) {
  char* text = nullptr;
  er_status st = format == "json" ? er_sweep_json(max_d, budget, &text)
                                  : er_sweep_csv(max_d, budget, &text);
  if (st != ER_OK) die(st);
  OwnedString owned(text);
  if (output.empty()) {
    std::cout << owned.get();
  } else {
    std::ofstream os(output, std::ios::binary);
    if (!os) {
      std::cerr << "error: cannot write " << output << "\n";
      return kExitUsage;
    }
    os << owned.get();
  }
  return kExitOk;
}

int cmd_verify(int max_d, unsigned long long budget) {
  char* report = nullptr;
  int code = 0;
  if (er_status st = er_verify(max_d, budget, &report, &code); st != ER_OK) die(st);
  OwnedString owned(report);
  std::cout << owned.get();
  return code;
}

int cmd_ehrhart(const std::string& parts, long long m, bool has_m, bool points,
                bool interior, unsigned long long budget) {
  OwnedPartition p = parse_partition_or_die(parts);
  {
    char* poly = nullptr;
    if (er_status st = er_ehrhart_polynomial(p.get(), &poly); st != ER_OK) die(st);
    OwnedString owned(poly);
    std::cout << "i(P,m) coefficients (degree order): " << owned.get() << "\n";
  }
  if (has_m) {
    char* value = nullptr;
    if (er_status st = er_ehrhart_eval(p.get(), m, &value); st != ER_OK) die(st);
    OwnedString owned(value);
    std::cout << "i(P," << m << ") = " << owned.get() << "\n";
    unsigned long long counted = 0;
    if (er_status st = er_lattice_count(p.get(), m, interior ? 1 : 0, budget, &counted);
        st != ER_OK)
      die(st);
    std::cout << (interior ? "interior " : "") << "count(" << m << ") = " << counted << "\n";
    if (points) {
      auto emit = [](const char* line, void*) { std::cout << line << "\n"; };
      if (er_status st =
              er_enumerate_points(p.get(), m, interior ? 1 : 0, budget, emit, nullptr);
          st != ER_OK)
        die(st);
    }
  }
  return kExitOk;
}

int cmd_canonical(const std::string& parts, bool list_points, unsigned long long budget) {
  OwnedPartition p = parse_partition_or_die(parts);
  er_canonical* c = nullptr;
  if (er_status st = er_canonical_compute(p.get(), budget, &c); st != ER_OK) die(st);
  const long long ell = er_canonical_ell(c);
  std::cout << "ell: " << ell << "\n";
  std::cout << "generators by degree:";
  for (int k = 0; k < er_canonical_offsets(c); ++k) {
    const long long count = er_canonical_generators_at(c, k);
    if (count > 0) std::cout << ' ' << (ell + k) << ':' << count;
  }
  std::cout << "\n";
  std::cout << "cm-type: " << er_canonical_cm_type(c) << "\n";
  std::cout << "mu(C): " << er_canonical_cm_type(c) - 1 << "\n";
  std::cout << "level: " << yn(er_canonical_is_level(c)) << "\n";
  std::cout << "gorenstein: " << yn(er_canonical_is_gorenstein(c)) << "\n";
  if (list_points) {
    for (int k = 0; k < er_canonical_offsets(c); ++k) {
      if (er_canonical_generators_at(c, k) == 0) continue;
      char* text = nullptr;
      if (er_status st = er_canonical_points_at(c, k, &text); st != ER_OK) {
        er_canonical_free(c);
        die(st);
      }
      OwnedString owned(text);
      std::cout << "degree " << (ell + k) << ":\n" << owned.get();
    }
  }
  er_canonical_free(c);
  return kExitOk;
}

int cmd_hibi(const std::string& family, int m, int n, const std::string& file, bool level,
             bool pure, bool upper, bool ideals, bool rank, bool max_r, long long hilbert_t,
             bool has_hilbert, unsigned long long budget) {
  OwnedPoset poset;
  if (!file.empty()) {
    std::ifstream is(file, std::ios::binary);
    if (!is) {
      std::cerr << "error: cannot read " << file << "\n";
      return kExitUsage;
    }
    std::stringstream buffer;
    buffer << is.rdbuf();
    er_poset* p = nullptr;
    if (er_status st = er_poset_parse(buffer.str().c_str(), &p); st != ER_OK) die(st);
    poset.reset(p);
  } else {
    er_poset* p = nullptr;
    if (er_status st = er_poset_chains(m, n, family == "pi-prime" ? 1 : 0, &p); st != ER_OK)
      die(st);
    poset.reset(p);
  }
  std::cout << "elements: " << er_poset_size(poset.get()) << "\n";
  if (rank) std::cout << "rank of augmented poset: " << er_poset_rank_hat(poset.get()) << "\n";
  if (ideals) {
    unsigned long long count = 0;
    if (er_status st = er_poset_ideal_count(poset.get(), &count); st != ER_OK) die(st);
    std::cout << "poset ideals: " << count << "\n";
  }
  if (pure) std::cout << "pure: " << yn(er_poset_is_pure(poset.get())) << "\n";
  if (upper)
    std::cout << "upper intervals pure: " << yn(er_hibi_upper_intervals_pure(poset.get()))
              << "\n";
  if (max_r || level) {
    long long r = 0;
    if (er_status st = er_hibi_max_r(poset.get(), budget, &r); st != ER_OK) die(st);
    const int rk = er_poset_rank_hat(poset.get());
    if (max_r) std::cout << "max condition-N r-value: " << r << " (rank " << rk << ")\n";
    if (level) std::cout << "level: " << yn(r <= rk) << "\n";
  }
  if (has_hilbert) {
    char* value = nullptr;
    if (er_status st = er_hibi_hilbert(poset.get(), hilbert_t, &value); st != ER_OK) die(st);
    OwnedString owned(value);
    std::cout << "H(" << hilbert_t << ") = " << owned.get() << "\n";
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge rings of complete multipartite graphs: classification and verification"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  unsigned long long budget = 0;
  app.add_option("--budget", budget,
                 "enumeration budget (unpruned lattice bound; default 1e8, env EDGERING_BUDGET)")
      ->capture_default_str();

  std::string parts;
  bool direct = false;
  auto* classify = app.add_subcommand("classify", "classify one partition");
  classify->add_option("parts", parts, "comma-separated block sizes, e.g. 2,2,3")->required();
  classify->add_flag("--direct", direct, "also run the direct (enumeration) verdicts");

  int max_d = 8;
  std::string format = "csv", output;
  auto* sweep = app.add_subcommand("sweep", "tabulate all partitions up to a vertex bound");
  sweep->add_option("--max-d", max_d, "largest vertex count")->required();
  sweep->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--output", output, "write to a file instead of stdout");

  int verify_d = 8;
  auto* verify = app.add_subcommand("verify", "run the full cross-check suite");
  verify->add_option("--max-d", verify_d, "largest vertex count (guarded at 12)")->required();

  std::string eparts;
  long long em = 0;
  bool epoints = false, einterior = false;
  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial and lattice counts");
  ehrhart->add_option("parts", eparts, "comma-separated block sizes")->required();
  auto* em_opt = ehrhart->add_option("--m", em, "dilation to evaluate and count");
  ehrhart->add_flag("--points", epoints, "stream the lattice points, one per line");
  ehrhart->add_flag("--interior", einterior, "restrict to the relative interior");

  std::string cparts;
  bool list_points = false;
  auto* canonical = app.add_subcommand("canonical", "canonical module generators");
  canonical->add_option("parts", cparts, "comma-separated block sizes")->required();
  canonical->add_flag("--list-points", list_points, "print the generator points");

  std::string family = "pi", poset_file;
  int hm = 1, hn = 1;
  bool hlevel = false, hpure = false, hupper = false, hideals = false, hrank = false,
       hmaxr = false;
  long long ht = 0;
  auto* hibi = app.add_subcommand("hibi", "Hibi ring queries on the two-chain posets");
  hibi->add_option("family", family, "pi, pi-prime, or file")
      ->check(CLI::IsMember({"pi", "pi-prime", "file"}));
  hibi->add_option("m", hm, "first chain length");
  hibi->add_option("n", hn, "second chain length");
  hibi->add_option("--file", poset_file, "read a poset (count line, then 'a < b' covers)");
  hibi->add_flag("--level", hlevel, "condition-N levelness test");
  hibi->add_flag("--pure", hpure, "purity (Gorenstein) test");
  hibi->add_flag("--upper-pure", hupper, "upper-interval purity (sufficient for level)");
  hibi->add_flag("--ideals", hideals, "count poset ideals");
  hibi->add_flag("--rank", hrank, "rank of the augmented poset");
  hibi->add_flag("--max-r", hmaxr, "maximum condition-N r-value");
  auto* ht_opt = hibi->add_option("--hilbert", ht, "Hilbert function at this degree");

  CLI11_PARSE(app, argc, argv);
  budget = budget_from_env(budget);

  try {
    if (classify->parsed()) return cmd_classify(parts, direct, budget);
    if (sweep->parsed()) return cmd_sweep(max_d, format, output, budget);
    if (verify->parsed()) {
      if (verify_d > 12) {
        std::cerr << "error: verify is guarded at --max-d 12\n";
        return kExitUsage;
      }
      return cmd_verify(verify_d, budget);
    }
    if (ehrhart->parsed())
      return cmd_ehrhart(eparts, em, em_opt->count() > 0, epoints, einterior, budget);
    if (canonical->parsed()) return cmd_canonical(cparts, list_points, budget);
    if (hibi->parsed()) {
      if (family == "file" && poset_file.empty()) {
        std::cerr << "error: hibi file requires --file PATH\n";
        return kExitUsage;
      }
      return cmd_hibi(family, hm, hn, poset_file, hlevel, hpure, hupper, hideals, hrank,
                      hmaxr, ht, ht_opt->count() > 0, budget);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
