/*
 * bcast: broadcast-rate toolkit for side-information broadcast networks.
 *
 * C interface over the C++ core. All functions return a bc_status; every
 * handle produced by a bc_* call must be released with the matching
 * bc_*_free, and every string output with bc_string_free. Functions never
 * throw across this boundary; bc_last_error() describes the most recent
 * failure on the calling thread.
 */
#ifndef BCAST_H
#define BCAST_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bc_status {
  BC_OK = 0,
  BC_EINVAL = 1,
  BC_EPARSE = 2,
  BC_ETARGET_IN_KNOWN = 3,
  BC_EINDEX = 4,
  BC_EEMPTY_NETWORK = 5,
  BC_ESIZE_LIMIT = 6,
  BC_EFIELD_TOO_SMALL = 7,
  BC_EIMPROPER_BASE = 8,
  BC_EUNKNOWN_CONSTRUCTION = 9,
  BC_EUNSUPPORTED_FIELD = 10,
  BC_ESEARCH_SPACE = 11,
  BC_EVERIFY = 12,
  BC_EOVERFLOW = 13,
  BC_EIO = 14,
  BC_EBUDGET = 15,
  BC_ENOMEM = 16
} bc_status;

typedef struct bc_hypergraph bc_hypergraph; /* broadcast network H */
typedef struct bc_cayley bc_cayley;         /* Cayley graph over Z2^m */
typedef struct bc_iset bc_iset;             /* independent-set certificate */
typedef struct bc_coloring bc_coloring;     /* coloring certificate */

/* detail message for the last failing call on this thread */
const char* bc_last_error(void);
void bc_string_free(char* s);

/* process-wide overrides for the exact-search vertex limits; 0 keeps the
 * current value (defaults: 2^14 for independence, 2^10 for chromatic) */
bc_status bc_set_exact_limits(uint64_t mis_vertices, uint64_t chi_vertices);

/* ---- broadcast networks (.bhg) ------------------------------------- */

bc_status bc_hypergraph_parse(const char* text, bc_hypergraph** out);
bc_status bc_hypergraph_load(const char* path, bc_hypergraph** out);
bc_status bc_hypergraph_to_text(const bc_hypergraph* h, char** out);
bc_status bc_hypergraph_blocks(const bc_hypergraph* h, int* out);
bc_status bc_hypergraph_edge_count(const bc_hypergraph* h, size_t* out);
bc_status bc_hypergraph_union(const bc_hypergraph* a, const bc_hypergraph* b,
                              bc_hypergraph** out);
bc_status bc_hypergraph_copies(const bc_hypergraph* h, int k, bc_hypergraph** out);
void bc_hypergraph_free(bc_hypergraph* h);

/* ---- instance generators ------------------------------------------- */

bc_status bc_gen_cycle(int n, bc_hypergraph** out);
bc_status bc_gen_antihole(int m, bc_hypergraph** out);
bc_status bc_gen_two_missing(int k, bc_hypergraph** out);
bc_status bc_gen_pair_miss(int k, const uint64_t* generators, size_t count,
                           bc_hypergraph** out);
/* edge-list (.elg) text for the explicit graph families */
bc_status bc_gen_kneser_elg(int k, int s, char** out);
bc_status bc_gen_threshold_elg(int k, int d, char** out);
bc_status bc_gen_antihole_elg(int m, char** out);
/* pair-miss spec (.pms) text */
bc_status bc_gen_pair_miss_pms(int k, const uint64_t* generators, size_t count, char** out);

/* ---- confusion graphs (.gen) ---------------------------------------- */

bc_status bc_confusion(const bc_hypergraph* h, int t, bc_cayley** out);
bc_status bc_antihole_confusion(int m, bc_cayley** out);
bc_status bc_cayley_parse_gen(const char* text, bc_cayley** out);
bc_status bc_cayley_to_gen_text(const bc_cayley* c, char** out);
bc_status bc_cayley_dim(const bc_cayley* c, int* out);
bc_status bc_cayley_generator_count(const bc_cayley* c, size_t* out);
void bc_cayley_free(bc_cayley* c);

/* ---- independent sets (.iset) ---------------------------------------- */

bc_status bc_mis_exact(const bc_cayley* c, bc_iset** out);
/* warm may be NULL; budget counts local-search iterations */
bc_status bc_mis_heuristic(const bc_cayley* c, uint64_t seed, uint64_t budget,
                           const bc_iset* warm, bc_iset** out);
bc_status bc_iset_parse(const char* text, bc_iset** out);
bc_status bc_iset_to_text(const bc_iset* s, char** out);
bc_status bc_iset_size(const bc_iset* s, size_t* out);
bc_status bc_iset_is_exact(const bc_iset* s, int* out);
/* BC_OK when independent; BC_EVERIFY plus a witness line otherwise */
bc_status bc_verify_iset(const bc_cayley* c, const bc_iset* s, int workers, char** witness);
void bc_iset_free(bc_iset* s);

/* ---- colorings (.col) ------------------------------------------------ */

bc_status bc_coloring_load(const char* path, bc_coloring** out);
bc_status bc_coloring_parse(const char* text, const char* base_dir, bc_coloring** out);
bc_status bc_coloring_to_text(const bc_coloring* c, char** out);
bc_status bc_coloring_syndrome(int k, bc_coloring** out);
bc_status bc_coloring_rs(int k, int t, bc_coloring** out);
bc_status bc_coloring_mod3(const char* pms_path, const char* base_col_path, bc_coloring** out);
/* expand a named construction into an explicit table */
bc_status bc_coloring_expand(const bc_coloring* c, int expected_m, bc_coloring** out);
bc_status bc_coloring_color_count(const bc_coloring* c, int expected_m, int* out);
bc_status bc_verify_coloring(const bc_cayley* g, const bc_coloring* c, int workers,
                             int* colors_used, char** witness);
void bc_coloring_free(bc_coloring* c);

/* ---- lifting (odd antiholes) ----------------------------------------- */

bc_status bc_lift_iset(const bc_iset* in, bc_iset** out);
bc_status bc_lift_coloring(const bc_coloring* in, bc_coloring** out);
/* Claim B.2 sweep for n = inner (m-1)/2; BC_OK or BC_EVERIFY */
bc_status bc_mask_check(int n, char** counterexample);

/* ---- exact chromatic ------------------------------------------------- */

/* alpha_hint 0 means: compute it exactly when the graph is small enough */
bc_status bc_chromatic(const bc_cayley* c, int alpha_hint, int* lower, int* upper, int* exact);

/* ---- rates ------------------------------------------------------------ */

bc_status bc_alpha_arrow(const bc_hypergraph* h, int* out);
/* rate report over t = 1..t_max and codeword bounds for each listed k */
bc_status bc_analyze(const bc_hypergraph* h, int t_max, const int* ks, size_t ks_count,
                     uint64_t seed, uint64_t budget, int workers, int as_json, char** out);
bc_status bc_codeword_bounds_json(int n, uint64_t gamma, int k, char** out);
/* exact check: linear_lower / (n - log2 gamma) >= p/q */
bc_status bc_ratio_at_least(int linear_lower, int n, uint64_t gamma, int p, int q, int* holds);

/* ---- min-rank (.mat, .elg) -------------------------------------------- */

bc_status bc_minrank_elg(const char* elg_text, int q, int r_max, int* found, int* rank,
                         char** witness_mat);
/* BC_OK when no rank <= 2 fitting matrix exists for the antihole */
bc_status bc_refute_rank2(int m, int q, char** counterexample_mat);

/* ---- network export ---------------------------------------------------- */

bc_status bc_export_network_json(const bc_hypergraph* h, int64_t capacity, char** out);
bc_status bc_export_network_dot(const bc_hypergraph* h, int64_t capacity, char** out);
bc_status bc_gap_report(int linear_lower, int n, uint64_t gamma, char** out);

/* ---- reproduction commands --------------------------------------------- */

bc_status bc_antihole_table(const int* rows, size_t count, uint64_t seed, uint64_t budget,
                            int workers, int as_json, char** out);
bc_status bc_verify_antihole_coloring(const char* col_path, int m, int* colors_used);

#ifdef __cplusplus
}
#endif

#endif /* BCAST_H */
