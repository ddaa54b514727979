/* C interface to the gaussoid library.
 *
 * Conventions:
 *   - A context holds one ground set size n (2..9); create with
 *     gaussoid_ctx_new, release with gaussoid_ctx_free.
 *   - Functions returning char* give a heap string owned by the caller;
 *     release it with gaussoid_string_free.  NULL signals an error whose
 *     message is available from gaussoid_last_error (thread local).
 *   - Big counts are decimal strings; structured results are JSON.
 */
#ifndef GAUSSOID_C_H
#define GAUSSOID_C_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gaussoid_ctx gaussoid_ctx;

const char* gaussoid_version(void);
const char* gaussoid_last_error(void);
void gaussoid_string_free(char* s);

gaussoid_ctx* gaussoid_ctx_new(int n);
void gaussoid_ctx_free(gaussoid_ctx* ctx);
int gaussoid_ctx_n(const gaussoid_ctx* ctx);
int gaussoid_symbol_count(const gaussoid_ctx* ctx);      /* |P| + |A| */
int gaussoid_a_symbol_count(const gaussoid_ctx* ctx);    /* |A| */

/* which: "square" | "edge" | "all"; format: "text" | "json". */
char* gaussoid_trinomials(gaussoid_ctx* ctx, const char* which, const char* format);

/* line: comma-separated symbols or "#b<bits>"; JSON report with the three
 * checker verdicts. */
char* gaussoid_check_line(gaussoid_ctx* ctx, const char* line);

/* signs: one of +,-,0 per a-symbol in canonical order. */
char* gaussoid_check_oriented(gaussoid_ctx* ctx, const char* signs);

/* valuation_json: { "n":..., "values": {...} }. */
char* gaussoid_check_valuation(gaussoid_ctx* ctx, const char* valuation_json);

/* what: "gaussoids" | "oriented" | "uniform" | "positive".
 * format: "count" for the bare number, "json" for a summary object.
 * extended must be nonzero for any n=5 whole-census run; jobs may shard
 * counting. */
char* gaussoid_census(gaussoid_ctx* ctx, const char* what, const char* format, int extended,
                      int jobs);

/* Newline-separated item listing (gaussoid lines / sign strings).
 * Desk-scale only. */
char* gaussoid_enumerate_lines(gaussoid_ctx* ctx, const char* what);

/* what: "gaussoids" | "uniform" | "positive" | "oriented2" (the
 * two-boolean export of the ternary search). */
char* gaussoid_dimacs(gaussoid_ctx* ctx, const char* what);

/* group: "sn" | "dual_sn" | "hyperoct" | "reorient_sn" (the last acts on
 * sign maps); what: "gaussoids" | "uniform".  include_list adds one entry
 * per orbit. */
char* gaussoid_orbits(gaussoid_ctx* ctx, const char* group, const char* what, int include_list,
                      int extended);

/* Orientations of a fixed gaussoid. */
char* gaussoid_orientations(gaussoid_ctx* ctx, const char* gaussoid_line, int count_only);

/* Quadric space: dimension by rank and by formula, degree, optional
 * vanishing verification and basis listing. */
char* gaussoid_quadrics(gaussoid_ctx* ctx, int verify_trials, int include_list);

/* Gaussoid-vs-quadric compatibility sweep. */
char* gaussoid_compatibility(gaussoid_ctx* ctx);

/* The 35 tropical rays for n=3 with validity and lineality-shift checks. */
char* gaussoid_tropical_rays(void);

/* e-matrix JSON -> valuation JSON of all minors. */
char* gaussoid_minor_valuations(const char* eps_matrix_json, int concentration);

/* matrix JSON -> gaussoid, PD flag, sign vector, partial correlations. */
char* gaussoid_matrix_report(const char* matrix_json);

/* Verify a fixture table (CSV text) of sign classes and realizations. */
char* gaussoid_table1_verify(const char* csv_text);

/* Bi-quadratic final polynomial decision for a uniform sign map. */
char* gaussoid_bfp(gaussoid_ctx* ctx, const char* signs);

/* edges: comma-separated vertex pairs like "12,23"; t: rational. */
char* gaussoid_mmatrix(gaussoid_ctx* ctx, const char* edges, const char* t);

/* Seeded dyadic search for a realization of the sign map. */
char* gaussoid_search_realization(gaussoid_ctx* ctx, const char* signs, long budget,
                                  unsigned seed);

#ifdef __cplusplus
}
#endif

#endif /* GAUSSOID_C_H */
