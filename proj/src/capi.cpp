#include "edgering.h"

#include <cstring>
#include <new>
#include <string>

#include "edgering/canonical.hpp"
#include "edgering/characterize.hpp"
#include "edgering/hibi.hpp"
#include "edgering/hilbert.hpp"
#include "edgering/partition.hpp"
#include "edgering/polytope.hpp"

using namespace edgering;

struct er_partition {
  Partition value;
};
struct er_poset {
  Poset value;
};
struct er_hilbert_data {
  HilbertData value;
};
struct er_canonical {
  CanonicalGenerators value;
};

namespace {

thread_local std::string g_last_error;

er_status fail(er_status st, const char* what) {
  g_last_error = what ? what : "";
  return st;
}

// exceptions do not cross the C boundary
template <typename Fn>
er_status guarded(Fn&& fn) {
  try {
    fn();
    return ER_OK;
  } catch (const budget_exceeded& e) {
    return fail(ER_EBUDGET, e.what());
  } catch (const integrity_error& e) {
    return fail(ER_EINTEGRITY, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ER_EINVAL, e.what());
  } catch (const std::bad_alloc& e) {
    return fail(ER_ENOMEM, e.what());
  } catch (const std::exception& e) {
    return fail(ER_EINVAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Budget make_budget(unsigned long long enumeration_bound) {
  Budget b;
  if (enumeration_bound > 0) b.max_lattice_bound = enumeration_bound;
  return b;
}

} // namespace

extern "C" {

const char* er_version(void) { return "1.0.0"; }

const char* er_status_message(er_status st) {
  switch (st) {
    case ER_OK: return "ok";
    case ER_EINVAL: return "invalid argument";
    case ER_EBUDGET: return "budget exceeded";
    case ER_EINTEGRITY: return "integrity check failed";
    case ER_ENOMEM: return "out of memory";
  }
  return "unknown status";
}

const char* er_last_error(void) { return g_last_error.c_str(); }

void er_string_free(char* s) { delete[] s; }

/* ---- partition ---- */

er_status er_partition_parse(const char* text, er_partition** out) {
  if (!text || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] { *out = new er_partition{parse_partition(text)}; });
}

er_status er_partition_create(const int* parts, int count, er_partition** out) {
  if (!parts || !out || count < 0) return fail(ER_EINVAL, "null argument");
  return guarded([&] {
    *out = new er_partition{Partition(std::vector<int>(parts, parts + count))};
  });
}

void er_partition_free(er_partition* p) { delete p; }

int er_partition_block_count(const er_partition* p) { return p->value.block_count(); }
int er_partition_vertex_count(const er_partition* p) { return p->value.vertex_count(); }

int er_partition_part(const er_partition* p, int k) {
  if (k < 0 || k >= p->value.block_count()) return -1;
  return p->value.part(k);
}

er_status er_partition_format(const er_partition* p, char** out) {
  if (!p || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] { *out = dup_string(p->value.to_string()); });
}

er_case er_partition_case(const er_partition* p) {
  switch (case_class(p->value)) {
    case CaseClass::Bipartite: return ER_CASE_BIPARTITE;
    case CaseClass::A: return ER_CASE_A;
    case CaseClass::B: return ER_CASE_B;
    case CaseClass::C: return ER_CASE_C;
  }
  return ER_CASE_BIPARTITE;
}

long long er_edge_count(const er_partition* p) { return edge_count(p->value); }

int er_has_perfect_matching(const er_partition* p) {
  return has_perfect_matching(p->value) ? 1 : 0;
}

er_status er_perfect_matching_bruteforce(const er_partition* p, int cap, int* out) {
  if (!p || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] {
    Budget b;
    if (cap > 0) b.matching_cap = cap;
    *out = brute_force_matching(p->value, b) ? 1 : 0;
  });
}

/* ---- polytope / hilbert ---- */

er_status er_ell_closed_form(const er_partition* p, long long* out) {
  if (!p || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] { *out = ell_closed_form(p->value); });
}

er_status er_ell_bruteforce(const er_partition* p, unsigned long long budget, long long* out) {
  if (!p || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] { *out = ell_bruteforce(p->value, make_budget(budget)); });
}

er_status er_lattice_count(const er_partition* p, long long m, int interior,
                           unsigned long long budget, unsigned long long* out) {
  if (!p || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] {
    *out = SupportSystem(p->value).count_points(m, interior != 0, make_budget(budget));
  });
}

er_status er_enumerate_points(const er_partition* p, long long m, int interior,
                              unsigned long long budget,
                              void (*visit)(const char*, void*), void* user) {
  if (!p || !visit) return fail(ER_EINVAL, "null argument");
  return guarded([&] {
    SupportSystem(p->value).enumerate(m, interior != 0, make_budget(budget),
                                      [&](const LatticePoint& x) {
                                        visit(point_to_string(x).c_str(), user);
                                      });
  });
}

er_status er_ehrhart_polynomial(const er_partition* p, char** out) {
  if (!p || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] { *out = dup_string(ehrhart_closed_form(p->value).to_string()); });
}

er_status er_ehrhart_eval(const er_partition* p, long long m, char** out) {
  if (!p || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] { *out = dup_string(ehrhart_closed_form(p->value).eval(m).str()); });
}

er_status er_hilbert_compute(const er_partition* p, unsigned long long budget,
                             er_hilbert_data** out) {
  if (!p || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] { *out = new er_hilbert_data{h_vector(p->value, make_budget(budget))}; });
}

void er_hilbert_free(er_hilbert_data* h) { delete h; }

int er_hilbert_krull_dim(const er_hilbert_data* h) { return h->value.krull_dim; }
long long er_hilbert_ell(const er_hilbert_data* h) { return h->value.ell; }
int er_hilbert_socle_degree(const er_hilbert_data* h) { return h->value.socle_degree; }
int er_hilbert_h_length(const er_hilbert_data* h) {
  return static_cast<int>(h->value.h.size());
}
long long er_hilbert_h_at(const er_hilbert_data* h, int i) {
  if (i < 0 || i >= static_cast<int>(h->value.h.size())) return -1;
  return h->value.h[static_cast<std::size_t>(i)];
}

er_status er_hilbert_json(const er_hilbert_data* h, char** out) {
  if (!h || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] { *out = dup_string(h->value.to_json()); });
}

er_status er_e_of_c_closed(const er_partition* p, long long* out) {
  if (!p || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] { *out = e_of_c(p->value); });
}

er_status er_mu_of_c_closed(const er_partition* p, long long* out) {
  if (!p || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] { *out = mu_of_c_closed(p->value); });
}

/* ---- canonical ---- */

er_status er_canonical_compute(const er_partition* p, unsigned long long budget,
                               er_canonical** out) {
  if (!p || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] {
    *out = new er_canonical{canonical_generators(p->value, make_budget(budget))};
  });
}

void er_canonical_free(er_canonical* c) { delete c; }

long long er_canonical_ell(const er_canonical* c) { return c->value.ell; }
int er_canonical_offsets(const er_canonical* c) {
  return static_cast<int>(c->value.by_degree.size());
}
long long er_canonical_generators_at(const er_canonical* c, int offset) {
  if (offset < 0 || offset >= static_cast<int>(c->value.by_degree.size())) return -1;
  return static_cast<long long>(c->value.by_degree[static_cast<std::size_t>(offset)].size());
}
long long er_canonical_cm_type(const er_canonical* c) { return c->value.cm_type(); }
int er_canonical_is_level(const er_canonical* c) { return c->value.level() ? 1 : 0; }
int er_canonical_is_gorenstein(const er_canonical* c) { return c->value.gorenstein() ? 1 : 0; }

er_status er_canonical_points_at(const er_canonical* c, int offset, char** out) {
  if (!c || !out) return fail(ER_EINVAL, "null argument");
  if (offset < 0 || offset >= static_cast<int>(c->value.by_degree.size()))
    return fail(ER_EINVAL, "offset out of range");
  return guarded([&] {
    std::string text;
    for (const LatticePoint& x : c->value.by_degree[static_cast<std::size_t>(offset)]) {
      text += point_to_string(x);
      text += '\n';
    }
    *out = dup_string(text);
  });
}

er_status er_almost_gorenstein_direct(const er_partition* p, unsigned long long budget,
                                      int* out) {
  if (!p || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] {
    *out = is_almost_gorenstein_direct(p->value, make_budget(budget)) ? 1 : 0;
  });
}

/* ---- characterizations ---- */

int er_gorenstein_characterized(const er_partition* p) {
  return gorenstein_characterized(p->value) ? 1 : 0;
}
int er_level_characterized(const er_partition* p) {
  return level_characterized(p->value) ? 1 : 0;
}
int er_almost_gorenstein_characterized(const er_partition* p) {
  return almost_gorenstein_characterized(p->value) ? 1 : 0;
}

er_status er_lemma_rephrase(const er_partition* p, int* out) {
  if (!p || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] { *out = lemma_rephrase(p->value) ? 1 : 0; });
}

er_status er_cross_check(const er_partition* p, unsigned long long budget, char** report,
                         int* agree, int* unverified) {
  if (!p || !report || !agree || !unverified) return fail(ER_EINVAL, "null argument");
  return guarded([&] {
    const CrossCheck c = cross_check(p->value, make_budget(budget));
    *report = dup_string(c.describe());
    *agree = c.agree() ? 1 : 0;
    *unverified = c.verified() ? 0 : 1;
  });
}

er_status er_sweep_csv(int max_d, unsigned long long budget, char** out) {
  if (!out || max_d < 2) return fail(ER_EINVAL, "max_d must be at least 2");
  return guarded([&] { *out = dup_string(sweep_csv(max_d, make_budget(budget))); });
}

er_status er_sweep_json(int max_d, unsigned long long budget, char** out) {
  if (!out || max_d < 2) return fail(ER_EINVAL, "max_d must be at least 2");
  return guarded([&] { *out = dup_string(sweep_json(max_d, make_budget(budget))); });
}

er_status er_verify(int max_d, unsigned long long budget, char** report, int* exit_code) {
  if (!report || !exit_code || max_d < 2) return fail(ER_EINVAL, "max_d must be at least 2");
  return guarded([&] {
    const VerifyResult res = verify(max_d, make_budget(budget));
    *report = dup_string(res.report);
    *exit_code = res.exit_code();
  });
}

/* ---- hibi ---- */

er_status er_poset_chains(int m, int n, int primed, er_poset** out) {
  if (!out) return fail(ER_EINVAL, "null argument");
  return guarded([&] {
    *out = new er_poset{primed ? pi_prime_poset(m, n) : pi_poset(m, n)};
  });
}

er_status er_poset_parse(const char* text, er_poset** out) {
  if (!text || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] { *out = new er_poset{parse_poset(text)}; });
}

void er_poset_free(er_poset* p) { delete p; }

int er_poset_size(const er_poset* p) { return p->value.size(); }

er_status er_poset_format(const er_poset* p, char** out) {
  if (!p || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] { *out = dup_string(p->value.to_string()); });
}

er_status er_poset_ideal_count(const er_poset* p, unsigned long long* out) {
  if (!p || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] { *out = count_poset_ideals(p->value); });
}

int er_poset_is_pure(const er_poset* p) { return is_pure(p->value) ? 1 : 0; }

int er_poset_rank_hat(const er_poset* p) { return rank_hat(p->value); }

er_status er_hibi_is_level(const er_poset* p, unsigned long long budget, int* out) {
  if (!p || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] {
    Budget b;
    if (budget > 0) b.condition_n_nodes = budget;
    *out = is_level_hibi(p->value, b) ? 1 : 0;
  });
}

er_status er_hibi_max_r(const er_poset* p, unsigned long long budget, long long* out) {
  if (!p || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] {
    Budget b;
    if (budget > 0) b.condition_n_nodes = budget;
    *out = max_condition_n_r(p->value, b);
  });
}

int er_hibi_upper_intervals_pure(const er_poset* p) {
  return upper_interval_pure_sufficient(p->value) ? 1 : 0;
}

er_status er_hibi_hilbert(const er_poset* p, long long degree, char** out) {
  if (!p || !out) return fail(ER_EINVAL, "null argument");
  return guarded([&] { *out = dup_string(hibi_hilbert_function(p->value, degree).str()); });
}

er_status er_hibi_r_value(const er_poset* p, const int* yx, int pairs, long long* out) {
  if (!p || !out || (pairs > 0 && !yx) || pairs < 0) return fail(ER_EINVAL, "null argument");
  return guarded([&] {
    ConditionNSequence seq;
    auto decode = [&](int v) {
      if (v == ER_POSET_BOTTOM) return HatElement::bottom;
      if (v == ER_POSET_TOP) return HatElement::top;
      return v - 1;
    };
    for (int i = 0; i < pairs; ++i)
      seq.emplace_back(decode(yx[2 * i]), decode(yx[2 * i + 1]));
    *out = r_value(p->value, seq);
  });
}

} /* extern "C" */
