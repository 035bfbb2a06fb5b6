/*
 * symnorm C API: symmetric-norm inequality checks for dense complex matrices.
 *
 * Every function returns a status code; on failure the thread-local message
 * from symnorm_last_error() describes what went wrong.  Matrices are opaque
 * handles released with symnorm_matrix_free(); strings returned through
 * char** out-parameters are owned by the caller and released with
 * symnorm_string_free().
 *
 * Matrix literals, norm selectors ("kyfan:k", "schatten:p", "trace",
 * "operator"), function literals ("power:0.5", "mincap:0.7071", "sqrt",
 * "affine:a,b", "pwl:[t0,v0;...;slope]") and the check / search / repro
 * report documents are all JSON or plain-text formats shared with the CLI.
 */
#ifndef SYMNORM_H
#define SYMNORM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum symnorm_status {
    SYMNORM_OK = 0,
    SYMNORM_ERR_INVALID_ARGUMENT = 1, /* malformed input: dimensions, NaN/Inf, bad parameter */
    SYMNORM_ERR_PRECONDITION = 2,     /* structural precondition violated */
    SYMNORM_ERR_DOMAIN = 3,           /* function evaluated outside its domain */
    SYMNORM_ERR_PARSE = 4,            /* unparsable JSON or literal */
    SYMNORM_ERR_UNKNOWN_ID = 5,       /* unregistered check or search target */
    SYMNORM_ERR_NULL_POINTER = 6,
    SYMNORM_ERR_INTERNAL = 7
} symnorm_status;

typedef struct symnorm_matrix symnorm_matrix;

const char* symnorm_version(void);

/* message describing the most recent failure on this thread; never NULL */
const char* symnorm_last_error(void);

void symnorm_string_free(char* s);

/* ---- matrices ---------------------------------------------------------- */

/* dim in 1..64; re and im are row-major dim*dim arrays; im may be NULL */
symnorm_status symnorm_matrix_create(int dim, const double* re, const double* im,
                                     symnorm_matrix** out);

/* { "dim": n, "re": [[...]], "im": [[...]] }; "im" may be omitted */
symnorm_status symnorm_matrix_from_json(const char* json_text, symnorm_matrix** out);
symnorm_status symnorm_matrix_to_json(const symnorm_matrix* m, char** out_json);

symnorm_status symnorm_matrix_dim(const symnorm_matrix* m, int* out_dim);
symnorm_status symnorm_matrix_entry(const symnorm_matrix* m, int row, int col, double* out_re,
                                    double* out_im);
void symnorm_matrix_free(symnorm_matrix* m);

/* ---- structural predicates (out = 0 or 1) ------------------------------ */

symnorm_status symnorm_is_hermitian(const symnorm_matrix* m, double tol, int* out);
symnorm_status symnorm_is_normal(const symnorm_matrix* m, double tol, int* out);
symnorm_status symnorm_is_psd(const symnorm_matrix* m, double tol, int* out);
symnorm_status symnorm_is_expansive(const symnorm_matrix* m, double tol, int* out);

/* ---- norms and spectra -------------------------------------------------- */

/* out_values must hold dim doubles; filled descending */
symnorm_status symnorm_singular_values(const symnorm_matrix* m, double* out_values);

symnorm_status symnorm_ky_fan(const symnorm_matrix* m, int k, double* out);

/* norm_spec: "kyfan:k" | "schatten:p" | "trace" | "operator" */
symnorm_status symnorm_norm_eval(const symnorm_matrix* m, const char* norm_spec, double* out);

/* f(|A|) for a function literal fn_spec */
symnorm_status symnorm_apply_fn_abs(const symnorm_matrix* m, const char* fn_spec,
                                    symnorm_matrix** out);

/* Ky Fan comparison over all k; out_verdict_json may be NULL */
symnorm_status symnorm_weakly_majorized(const symnorm_matrix* a, const symnorm_matrix* b,
                                        double tol, int* out_holds, char** out_verdict_json);

/* scalar evaluation of a function literal */
symnorm_status symnorm_fn_eval(const char* fn_spec, double t, double* out);

/* ---- check harness ------------------------------------------------------ */

/* registered checks and search targets, as one JSON document */
symnorm_status symnorm_list_checks(char** out_json);

/* config: { "theorem": id, "dims": [..], "trials": n, "seed": u64,
 *           "tol": x, "fn": literal-or-"random" }
 * dims also accepts the string form "2..8"; unknown ids report the
 * registered ones in the error message. */
symnorm_status symnorm_run_check(const char* config_json, char** out_report_json);

/* case_name: "eq2" | "shift3" | "interlace" */
symnorm_status symnorm_run_repro(const char* case_name, char** out_report_json);

/* config: { "target": id, "budget": n, "seed": u64, "dims": [..], "tol": x } */
symnorm_status symnorm_run_search(const char* config_json, char** out_report_json);

#ifdef __cplusplus
}
#endif

#endif /* SYMNORM_H */
