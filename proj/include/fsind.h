/* C interface to the indicator library. All report functions write a
 * malloc'd NUL-terminated string to *out on success; release it with
 * fsind_string_free. Return codes: FSIND_OK, FSIND_INPUT_ERROR for
 * unusable input, FSIND_INTEGRITY_ERROR for a violated internal
 * invariant. The last error message is kept on the context. */
#ifndef FSIND_H
#define FSIND_H

#ifdef __cplusplus
extern "C" {
#endif

#define FSIND_OK 0
#define FSIND_INPUT_ERROR 2
#define FSIND_INTEGRITY_ERROR 3

typedef struct fsind_ctx fsind_ctx;

fsind_ctx* fsind_ctx_new(void);
void fsind_ctx_free(fsind_ctx* ctx);

/* Message of the last failing call on this context, or "" if none. Owned
 * by the context; valid until the next call on it. */
const char* fsind_last_error(const fsind_ctx* ctx);

const char* fsind_version(void);

/* Pointed-category indicator report. group_spec e.g. "2,4"; cocycle_path
 * names a .cocyc file; format is "json" or "tsv". */
int fsind_pointed_report(fsind_ctx* ctx, const char* group_spec, const char* cocycle_path,
                         const char* format, char** out);

/* Twisted-double report (JSON): center-simple table, FS exponent and
 * dual-path totals; with_genuineness adds the verdict (abelian-only). */
int fsind_tqd_report(fsind_ctx* ctx, const char* group_spec, const char* cocycle_path,
                     int with_genuineness, char** out);

/* Tambara-Yamagami report (JSON). gram rows are ';'-separated, entries
 * ','-separated; sign_tau is +1 or -1. */
int fsind_ty_report(fsind_ctx* ctx, long p, const char* gram, int sign_tau, char** out);

/* Runs the invariant suite over a directory of .cocyc files; on success
 * *out is a plain-text summary. */
int fsind_verify_corpus(fsind_ctx* ctx, const char* dir, char** out);

void fsind_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* FSIND_H */
