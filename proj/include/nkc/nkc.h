#ifndef NKC_NKC_H
#define NKC_NKC_H

#include <stddef.h>

#if defined(_WIN32)
#define NKC_API __declspec(dllexport)
#else
#define NKC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nkc_structure nkc_structure;
typedef struct nkc_report nkc_report;

typedef enum nkc_status {
  NKC_OK = 0,
  NKC_ERR_PARSE = 1,
  NKC_ERR_MANIFEST = 2,
  NKC_ERR_PARAMETER_MISMATCH = 3,
  NKC_ERR_INCOMPLETE_ASSIGNMENT = 4,
  NKC_ERR_DOMAIN = 5,
  NKC_ERR_STRUCTURE = 6,
  NKC_ERR_INVALID_ARGUMENT = 7,
  NKC_ERR_INTERNAL = 8
} nkc_status;

typedef enum nkc_format { NKC_FORMAT_JSON = 0, NKC_FORMAT_TEXT = 1 } nkc_format;

typedef enum nkc_check_status {
  NKC_CHECK_HOLDS = 0,
  NKC_CHECK_FAILS = 1,
  NKC_CHECK_NOT_APPLICABLE = 2
} nkc_check_status;

NKC_API const char* nkc_version(void);
NKC_API const char* nkc_status_name(nkc_status status);
/* Message of the last failing call on this thread; "" after a success. */
NKC_API const char* nkc_last_error(void);

/* Strings returned through char** are owned by the caller. */
NKC_API void nkc_string_free(char* s);

NKC_API nkc_status nkc_structure_from_manifest(const char* document, size_t length, nkc_structure** out);
/* lambda may be NULL (symbolic) and is only accepted for the "lambda" label. */
NKC_API nkc_status nkc_structure_from_zoo(const char* label, const char* lambda, nkc_structure** out);
NKC_API void nkc_structure_free(nkc_structure* s);
NKC_API size_t nkc_structure_dimension(const nkc_structure* s);
NKC_API nkc_status nkc_structure_emit_manifest(const nkc_structure* s, char** out);
/* Newline-separated zoo labels. */
NKC_API nkc_status nkc_zoo_labels(char** out);

/* suite: "all", "frame", "nkappa", "gtw" or "concircular". */
NKC_API nkc_status nkc_run_suite(const nkc_structure* s, const char* suite, nkc_report** out);
/* connection: "lc" or "gtw". */
NKC_API nkc_status nkc_curvature(const nkc_structure* s, const char* connection, nkc_report** out);
/* Rational inputs in the expression grammar, e.g. "3/4". */
NKC_API nkc_status nkc_deform(const char* kappa, const char* mu, const char* a, int literal_c, nkc_report** out);
NKC_API nkc_status nkc_boeckx(const char* kappa, const char* mu, nkc_report** out);
/* sign: +1 or -1. */
NKC_API nkc_status nkc_example1(long long n, int sign, nkc_report** out);

NKC_API void nkc_report_free(nkc_report* r);
NKC_API nkc_status nkc_report_emit(const nkc_report* r, nkc_format format, char** out);
NKC_API size_t nkc_report_check_count(const nkc_report* r);
NKC_API size_t nkc_report_fail_count(const nkc_report* r);
/* Borrowed name pointer, valid until the report is freed. */
NKC_API nkc_status nkc_report_check(const nkc_report* r, size_t index, const char** name, nkc_check_status* status);
NKC_API nkc_status nkc_report_find(const nkc_report* r, const char* name, nkc_check_status* status);
NKC_API nkc_status nkc_report_value(const nkc_report* r, const char* name, const char** value);

#ifdef __cplusplus
}
#endif

#endif
