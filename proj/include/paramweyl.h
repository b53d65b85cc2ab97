#ifndef PARAMWEYL_H
#define PARAMWEYL_H

/* C interface to the paramweyl library.
 *
 * Every entry point takes a pw_context first; on failure, functions that
 * return a pointer return NULL and record a status and message on the
 * context (pw_last_status / pw_last_error), while int-returning functions
 * return the status directly. All returned objects are owned by the caller
 * and released with the matching *_free function. Strings returned by
 * pw_operator_print are released with pw_string_free; strings returned by
 * accessors (pw_last_error, pw_result_output, ...) are owned by the queried
 * object and valid until it is freed or reused. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pw_context pw_context;
typedef struct pw_operator pw_operator;
typedef struct pw_document pw_document;
typedef struct pw_options pw_options;
typedef struct pw_result pw_result;

enum {
    PW_OK = 0,
    PW_VERIFY_FAIL = 1,
    PW_PARSE_ERROR = 2,
    PW_INVALID_ARGUMENT = 3,
    PW_LIMIT_EXCEEDED = 4,
    PW_INTERNAL_ERROR = 5
};

const char* pw_version(void);

pw_context* pw_context_new(void);
void pw_context_free(pw_context* ctx);
/* Message for the most recent failure on this context; "" after success. */
const char* pw_last_error(const pw_context* ctx);
int pw_last_status(const pw_context* ctx);

/* Operators. n counts the x/d pairs, p the s variables. */
pw_operator* pw_operator_parse(pw_context* ctx, const char* text, size_t n,
                               size_t p);
pw_operator* pw_operator_add(pw_context* ctx, const pw_operator* a,
                             const pw_operator* b);
pw_operator* pw_operator_mul(pw_context* ctx, const pw_operator* a,
                             const pw_operator* b);
/* Substitutes s_i by the i-th coordinate of `point` ("a1,a2,..."); the
 * result lives in the parameter-free ring (p = 0). */
pw_operator* pw_operator_specialize(pw_context* ctx, const pw_operator* op,
                                    const char* point);
/* Canonical text form; release with pw_string_free. */
char* pw_operator_print(pw_context* ctx, const pw_operator* op);
/* 1 if equal, 0 if not, -1 on error (null or mismatched contexts). */
int pw_operator_equal(pw_context* ctx, const pw_operator* a,
                      const pw_operator* b);
void pw_operator_free(pw_operator* op);
void pw_string_free(char* text);

/* Ideal files. */
pw_document* pw_document_parse(pw_context* ctx, const char* text);
pw_document* pw_document_parse_file(pw_context* ctx, const char* path);
/* Variable counts; -1 on null document. */
int pw_document_nvars(const pw_document* doc);
int pw_document_pvars(const pw_document* doc);
void pw_document_free(pw_document* doc);

/* Command options. Keys: ideal, prime, target, point, components, index,
 * samples, max-degree, k-cap, certify, json. Numeric keys take decimal
 * values; certify and json take "true"/"false"/"1"/"0". */
pw_options* pw_options_new(pw_context* ctx);
int pw_options_set(pw_context* ctx, pw_options* opts, const char* key,
                   const char* value);
void pw_options_free(pw_options* opts);

/* Runs one subcommand (gb, eliminate, reduce-gb, h-poly, specialize,
 * fiber-check, dense-open, lemma21, thm22-h, verify-lemma24, oracle-member)
 * against the document. Returns PW_OK with *result populated whenever the
 * command executed, including command-level failures: the process-style
 * outcome is in pw_result_exit_code (0 success, 1 verification or
 * precondition failure, 2 parse or usage error) with text in
 * pw_result_output / pw_result_error. Passing opts = NULL uses defaults. */
int pw_run(pw_context* ctx, const pw_document* doc, const char* command,
           const pw_options* opts, pw_result** result);
int pw_result_exit_code(const pw_result* result);
const char* pw_result_output(const pw_result* result);
const char* pw_result_error(const pw_result* result);
void pw_result_free(pw_result* result);

#ifdef __cplusplus
}
#endif

#endif /* PARAMWEYL_H */
