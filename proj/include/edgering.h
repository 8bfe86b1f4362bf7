/* edgering — C interface to the edge-ring classification toolkit.
 *
 * All handles are opaque; every fallible call returns an er_status and
 * writes results through out-parameters. Strings returned through char**
 * are heap-allocated and must be released with er_string_free. A budget of
 * 0 selects the library default (enumeration bound 1e8).
 */
#ifndef EDGERING_H
#define EDGERING_H

#include <stddef.h>

#if defined(_WIN32)
#define ER_API __declspec(dllexport)
#elif defined(__GNUC__)
#define ER_API __attribute__((visibility("default")))
#else
#define ER_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum er_status {
  ER_OK = 0,
  ER_EINVAL = 1,       /* bad argument, parse error, precondition violation */
  ER_EBUDGET = 2,      /* enumeration or search budget exhausted */
  ER_EINTEGRITY = 3,   /* two routes that must agree disagreed */
  ER_ENOMEM = 4
} er_status;

typedef enum er_case {
  ER_CASE_BIPARTITE = 0,
  ER_CASE_A = 1,
  ER_CASE_B = 2,
  ER_CASE_C = 3
} er_case;

typedef struct er_partition er_partition;
typedef struct er_poset er_poset;
typedef struct er_hilbert_data er_hilbert_data;
typedef struct er_canonical er_canonical;

ER_API const char* er_version(void);
ER_API const char* er_status_message(er_status st);
/* human-readable detail for the most recent failure on this thread */
ER_API const char* er_last_error(void);
ER_API void er_string_free(char* s);

/* ---- complete multipartite graphs ---- */

ER_API er_status er_partition_parse(const char* text, er_partition** out);
ER_API er_status er_partition_create(const int* parts, int count, er_partition** out);
ER_API void er_partition_free(er_partition* p);
ER_API int er_partition_block_count(const er_partition* p);
ER_API int er_partition_vertex_count(const er_partition* p);
ER_API int er_partition_part(const er_partition* p, int k);
ER_API er_status er_partition_format(const er_partition* p, char** out);
ER_API er_case er_partition_case(const er_partition* p);
ER_API long long er_edge_count(const er_partition* p);
ER_API int er_has_perfect_matching(const er_partition* p);
/* cap <= 0 selects the default vertex cap (14) */
ER_API er_status er_perfect_matching_bruteforce(const er_partition* p, int cap, int* out);

/* ---- edge polytope / Hilbert data ---- */

ER_API er_status er_ell_closed_form(const er_partition* p, long long* out);
ER_API er_status er_ell_bruteforce(const er_partition* p, unsigned long long budget,
                                   long long* out);
ER_API er_status er_lattice_count(const er_partition* p, long long m, int interior,
                                  unsigned long long budget, unsigned long long* out);
/* visits one comma-separated point per call, lexicographic order */
ER_API er_status er_enumerate_points(const er_partition* p, long long m, int interior,
                                     unsigned long long budget,
                                     void (*visit)(const char* point, void* user), void* user);
/* exact rational coefficients "c0 c1 ... cD" in degree order */
ER_API er_status er_ehrhart_polynomial(const er_partition* p, char** out);
ER_API er_status er_ehrhart_eval(const er_partition* p, long long m, char** out);

ER_API er_status er_hilbert_compute(const er_partition* p, unsigned long long budget,
                                    er_hilbert_data** out);
ER_API void er_hilbert_free(er_hilbert_data* h);
ER_API int er_hilbert_krull_dim(const er_hilbert_data* h);
ER_API long long er_hilbert_ell(const er_hilbert_data* h);
ER_API int er_hilbert_socle_degree(const er_hilbert_data* h);
ER_API int er_hilbert_h_length(const er_hilbert_data* h);
ER_API long long er_hilbert_h_at(const er_hilbert_data* h, int i);
/* {"dim":..,"ell":..,"s":..,"h":[..]} */
ER_API er_status er_hilbert_json(const er_hilbert_data* h, char** out);

ER_API er_status er_e_of_c_closed(const er_partition* p, long long* out);
ER_API er_status er_mu_of_c_closed(const er_partition* p, long long* out);

/* ---- canonical module ---- */

ER_API er_status er_canonical_compute(const er_partition* p, unsigned long long budget,
                                      er_canonical** out);
ER_API void er_canonical_free(er_canonical* c);
ER_API long long er_canonical_ell(const er_canonical* c);
ER_API int er_canonical_offsets(const er_canonical* c);
ER_API long long er_canonical_generators_at(const er_canonical* c, int offset);
ER_API long long er_canonical_cm_type(const er_canonical* c);
ER_API int er_canonical_is_level(const er_canonical* c);
ER_API int er_canonical_is_gorenstein(const er_canonical* c);
/* newline-separated generator points at the given offset */
ER_API er_status er_canonical_points_at(const er_canonical* c, int offset, char** out);

ER_API er_status er_almost_gorenstein_direct(const er_partition* p, unsigned long long budget,
                                             int* out);

/* ---- closed characterizations and verification ---- */

ER_API int er_gorenstein_characterized(const er_partition* p);
ER_API int er_level_characterized(const er_partition* p);
ER_API int er_almost_gorenstein_characterized(const er_partition* p);
ER_API er_status er_lemma_rephrase(const er_partition* p, int* out);

/* report: one-line description; agree/unverified as 0/1 flags */
ER_API er_status er_cross_check(const er_partition* p, unsigned long long budget,
                                char** report, int* agree, int* unverified);
ER_API er_status er_sweep_csv(int max_d, unsigned long long budget, char** out);
ER_API er_status er_sweep_json(int max_d, unsigned long long budget, char** out);
/* exit code: 0 all verified, 2 disagreement or property failure, 3 unverified */
ER_API er_status er_verify(int max_d, unsigned long long budget, char** report,
                           int* exit_code);

/* ---- posets and Hibi rings ---- */

/* sequence elements: 1..size for poset elements, ER_POSET_BOTTOM / ER_POSET_TOP
 * for the adjoined extremes of the augmented poset */
#define ER_POSET_BOTTOM 0
#define ER_POSET_TOP (-1)

ER_API er_status er_poset_chains(int m, int n, int primed, er_poset** out);
/* text format: element count on the first line, then "a < b" covers, 1-based */
ER_API er_status er_poset_parse(const char* text, er_poset** out);
ER_API void er_poset_free(er_poset* p);
ER_API int er_poset_size(const er_poset* p);
ER_API er_status er_poset_format(const er_poset* p, char** out);
ER_API er_status er_poset_ideal_count(const er_poset* p, unsigned long long* out);
ER_API int er_poset_is_pure(const er_poset* p);
ER_API int er_poset_rank_hat(const er_poset* p);
ER_API er_status er_hibi_is_level(const er_poset* p, unsigned long long budget, int* out);
ER_API er_status er_hibi_max_r(const er_poset* p, unsigned long long budget, long long* out);
ER_API int er_hibi_upper_intervals_pure(const er_poset* p);
/* decimal string: values outgrow fixed-width integers quickly */
ER_API er_status er_hibi_hilbert(const er_poset* p, long long degree, char** out);
/* yx: pairs (y_1, x_1, ..., y_t, x_t) in the encoding above */
ER_API er_status er_hibi_r_value(const er_poset* p, const int* yx, int pairs, long long* out);

#ifdef __cplusplus
}
#endif

#endif /* EDGERING_H */
