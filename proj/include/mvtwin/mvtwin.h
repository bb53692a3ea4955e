/* mvtwin: exact-arithmetic toolkit for multi-virtual twin groups.
 *
 * C interface to the core library.  All functions return a status code;
 * MVTWIN_OK means success.  On failure mvtwin_last_error() returns a
 * thread-local message describing the problem.  Strings produced by the
 * library are heap-allocated and must be released with
 * mvtwin_free_string(); handles must be released with the matching
 * *_free function.
 *
 * Word grammar (whitespace-separated tokens, optional trailing '!' for an
 * inverse letter):
 *   s<i>          twin generator s_i
 *   p<i>.<a>      virtual generator rho_i^a (layer a, 0-based)
 *   L<i>.<j>.<b>  pure subgroup generator lambda_{i,j}^b
 *   K<i>.<j>.<b>  semi-pure subgroup generator kappa_{i,j}^b
 *
 * Rationals are written "num/den" or "num".  Task functions emit a JSON
 * report with fields: task, ctx {n, k, group}, family, params, results
 * [{item, pass, detail}], pass, seed, tool_version, data.
 */
#ifndef MVTWIN_H
#define MVTWIN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mvtwin_status {
  MVTWIN_OK = 0,
  MVTWIN_ERR_PARSE = 1,
  MVTWIN_ERR_INDEX = 2,
  MVTWIN_ERR_CONTEXT = 3,
  MVTWIN_ERR_ALPHABET = 4,
  MVTWIN_ERR_DOMAIN = 5,
  MVTWIN_ERR_SCALE = 6,
  MVTWIN_ERR_SINGULAR = 7,
  MVTWIN_ERR_KERNEL = 8,
  MVTWIN_ERR_PARAM = 9,
  MVTWIN_ERR_NOT_APPLICABLE = 10,
  MVTWIN_ERR_USAGE = 11,
  MVTWIN_ERR_INTERNAL = 12
} mvtwin_status;

typedef struct mvtwin_word mvtwin_word;
typedef struct mvtwin_rep mvtwin_rep;

const char* mvtwin_version(void);
const char* mvtwin_last_error(void);
void mvtwin_free_string(char* s);

/* --- words ----------------------------------------------------------- */

/* group is "mvt", "mvpt" or "mvht". */
mvtwin_status mvtwin_word_parse(int n, int k, const char* group, const char* text,
                                mvtwin_word** out);
mvtwin_status mvtwin_word_render(const mvtwin_word* w, char** out);
mvtwin_status mvtwin_word_reduce(const mvtwin_word* w, mvtwin_word** out);
mvtwin_status mvtwin_word_concat(const mvtwin_word* u, const mvtwin_word* v,
                                 mvtwin_word** out);
mvtwin_status mvtwin_word_invert(const mvtwin_word* w, mvtwin_word** out);
void mvtwin_word_free(mvtwin_word* w);

/* --- representations -------------------------------------------------- */

/* family is "z1".."z8"; y_csv is a comma list of k rationals (may be NULL
 * for z1); z, a, b are rationals or NULL when the family does not use
 * them. */
mvtwin_status mvtwin_rep_build(const char* family, int n, int k, const char* y_csv,
                               const char* z, const char* a, const char* b,
                               mvtwin_rep** out);
/* JSON matrix (array of rows of rational strings) of the image of w. */
mvtwin_status mvtwin_rep_eval(const mvtwin_rep* rep, const mvtwin_word* w, char** out_json);
void mvtwin_rep_free(mvtwin_rep* rep);

/* --- task reports ------------------------------------------------------ */

mvtwin_status mvtwin_run_relators(const char* group, int n, int k, char** out_json);
mvtwin_status mvtwin_run_quotient(const char* map, int n, int k, const char* word,
                                  char** out_json);
/* n_csv and k_csv are comma lists for grid runs.  Parameters may be NULL;
 * missing parameters are sampled deterministically from the seed. */
mvtwin_status mvtwin_run_rep_verify(const char* family, const char* n_csv,
                                    const char* k_csv, const char* y_csv, const char* z,
                                    const char* a, const char* b, long long seed,
                                    char** out_json);
mvtwin_status mvtwin_run_rep_system(const char* family, int k, const char* y_csv,
                                    const char* z, const char* a, const char* b,
                                    long long seed, char** out_json);
mvtwin_status mvtwin_run_rep_irreducible(const char* family, int n, int k,
                                         const char* y_csv, const char* z, const char* a,
                                         const char* b, long long seed, char** out_json);
mvtwin_status mvtwin_run_rep_witness(const char* family, int n, int k, const char* y_csv,
                                     const char* z, const char* a, const char* b,
                                     long long seed, char** out_json);
mvtwin_status mvtwin_run_rep_kernel_search(const char* family, int n, int k,
                                           const char* y_csv, const char* z, const char* a,
                                           const char* b, long long seed, int max_len,
                                           long beam, char** out_json);
/* case_id 1 carries eps/delta (+1 or -1); case 2 carries sign and z;
 * case 3 carries a and b.  Unused arguments are ignored and may be NULL. */
mvtwin_status mvtwin_run_rep_mvpt3(int case_id, const char* y0, const char* y1, int eps,
                                   int delta, int sign, const char* z, const char* a,
                                   const char* b, char** out_json);
mvtwin_status mvtwin_run_subgroup_gens(const char* map, int n, int k, char** out_json);
mvtwin_status mvtwin_run_subgroup_relators(const char* map, int n, int k, char** out_json);
mvtwin_status mvtwin_run_subgroup_rewrite(const char* map, int n, int k, const char* word,
                                          char** out_json);
mvtwin_status mvtwin_run_lemma31(int n, int k, const char* conjugator, const char* symbol,
                                 char** out_json);
mvtwin_status mvtwin_run_transversal(int n, char** out_json);
/* constraint: none, all-y-equal, y-distinct, zeta8-boundary+,
 * zeta8-boundary-, zeta8-generic. */
mvtwin_status mvtwin_sample_params(const char* family, int k, const char* constraint,
                                   long long seed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* MVTWIN_H */
