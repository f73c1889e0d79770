/* qschur C API: exact convolution-algebra computations on flag varieties
 * over finite fields.
 *
 * Everything goes through an opaque engine handle holding one enumerated
 * variety (a "fork" D-type model of tail length m, or a "chain" A-type model
 * of length n) over F_q inside a d-dimensional ambient space. Report
 * functions hand back malloc'd JSON (or CSV) strings; release them with
 * qs_string_free. Every function returns a qs_status; on failure,
 * qs_last_error() describes the problem for the calling thread.
 */
#ifndef QSCHUR_H
#define QSCHUR_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qs_status {
  QS_OK = 0,
  QS_ERR_USAGE = 1,      /* bad arguments or precondition violation */
  QS_ERR_RESOURCE = 2,   /* a configured cap was exceeded */
  QS_ERR_ARITHMETIC = 3, /* arithmetic failure (division by zero, bad fit) */
  QS_ERR_INTERNAL = 4
} qs_status;

typedef struct qs_engine qs_engine;

typedef struct qs_limits {
  long max_flags; /* enumeration guard, default 1000000 */
  long max_basis; /* closure basis guard, default 500000 */
} qs_limits;

void qs_limits_default(qs_limits* limits);

/* Engine construction. cache_dir may be NULL; when given, enumerated
 * varieties are cached there as JSON keyed by shape, d, q and format
 * version. */
qs_status qs_engine_create_fork(int m, int d, long q, const qs_limits* limits,
                                const char* cache_dir, qs_engine** out);
qs_status qs_engine_create_chain(int n, int d, long q, const qs_limits* limits,
                                 const char* cache_dir, qs_engine** out);
void qs_engine_destroy(qs_engine* e);

long qs_engine_flag_count(const qs_engine* e);

/* Reports. Each writes a malloc'd JSON string to *json_out. When pass_out
 * is non-NULL it receives 1/0 for reports that verify something. */
qs_status qs_report_enumeration(const qs_engine* e, char** json_out);
qs_status qs_report_relations(const qs_engine* e, int inject_fault,
                              int* pass_out, char** json_out);
qs_status qs_report_weight_action(const qs_engine* e, int* pass_out,
                                  char** json_out);
qs_status qs_report_idempotents(const qs_engine* e, int* pass_out,
                                char** json_out);
qs_status qs_report_dimension_check(const qs_engine* e, int* pass_out,
                                    char** json_out);
qs_status qs_report_counts(const qs_engine* e, int* pass_out, char** json_out);

/* Engine-free reports. kind is "D" or "A". */
qs_status qs_report_pi(const char* kind, int m_or_n, int d, int* pass_out,
                       char** json_out);
qs_status qs_report_strata_csv(int m, int d, const long* primes, int n_primes,
                               long max_flags, char** csv_out);

void qs_string_free(char* s);
const char* qs_status_name(qs_status status);
const char* qs_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* QSCHUR_H */
