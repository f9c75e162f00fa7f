#ifndef AFFCOX_AFFCOX_H
#define AFFCOX_AFFCOX_H

/* C interface to the affcox library. All functions return an affcox_status;
 * on failure a description is available from affcox_last_error_message()
 * (thread-local, valid until the next call on the same thread). Strings
 * returned through out-parameters are owned by the caller and must be
 * released with affcox_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(AFFCOX_BUILDING_LIBRARY)
#    define AFFCOX_API __declspec(dllexport)
#  else
#    define AFFCOX_API __declspec(dllimport)
#  endif
#else
#  define AFFCOX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum affcox_status {
  AFFCOX_OK = 0,
  AFFCOX_NULL_ARGUMENT = 1,
  AFFCOX_INVALID_ARGUMENT = 2,
  AFFCOX_PARSE_ERROR = 3,
  AFFCOX_BUDGET_EXCEEDED = 4,
  AFFCOX_INTERNAL_ERROR = 5
} affcox_status;

typedef enum affcox_format { AFFCOX_FORMAT_TEXT = 0, AFFCOX_FORMAT_JSON = 1 } affcox_format;

typedef struct affcox_group affcox_group;
typedef struct affcox_element affcox_element;

AFFCOX_API const char* affcox_version(void);
AFFCOX_API const char* affcox_last_error_message(void);
AFFCOX_API const char* affcox_status_string(affcox_status status);
AFFCOX_API void affcox_string_free(char* s);

/* Twisted extended affine Weyl group of the given type ('A'..'G'), rank and
 * diagram automorphism ("id", "flip", "triality", "triality-inverse" or cycle
 * notation such as "(1 3)"; NULL means "id"). */
AFFCOX_API affcox_status affcox_group_create(char type_letter, int rank, const char* twist, affcox_group** out);
AFFCOX_API void affcox_group_destroy(affcox_group* g);
AFFCOX_API affcox_status affcox_group_rank(const affcox_group* g, int* out);
/* Root-system data as JSON. */
AFFCOX_API affcox_status affcox_group_describe_json(const affcox_group* g, char** out);

/* Elements: text form "t[c1,...,cn] s1 s2 d^k" (translation part, word over
 * 0..n, delta power; each part optional, "e" is the identity). */
AFFCOX_API affcox_status affcox_element_parse(const affcox_group* g, const char* text, affcox_element** out);
AFFCOX_API void affcox_element_destroy(affcox_element* x);
AFFCOX_API affcox_status affcox_element_multiply(const affcox_element* a, const affcox_element* b, affcox_element** out);
AFFCOX_API affcox_status affcox_element_inverse(const affcox_element* x, affcox_element** out);
AFFCOX_API affcox_status affcox_element_power(const affcox_element* x, uint64_t n, affcox_element** out);
AFFCOX_API affcox_status affcox_element_length(const affcox_element* x, int* out);
AFFCOX_API affcox_status affcox_element_equal(const affcox_element* a, const affcox_element* b, int* out);
AFFCOX_API affcox_status affcox_element_to_text(const affcox_element* x, char** out);
AFFCOX_API affcox_status affcox_element_to_json(const affcox_element* x, char** out);

typedef struct affcox_run_options {
  const char* type;         /* type letter; NULL: every type (tables only) */
  int rank;                 /* 0: unspecified */
  const char* twist;        /* NULL: "id" (tables: every automorphism) */
  int delta_pow;            /* < 0: every delta power */
  const char* tau;          /* NULL/"all", "identity" or minuscule node index */
  const char* rep;          /* NULL/"from-table" or element text */
  int conjugates;
  int conj_length;
  uint64_t seed;
  uint64_t node_budget;     /* 0: AFFCOX_NODE_BUDGET or 10^6 */
  int edges;                /* include descent edge logs in JSON */
  int max_rank;
  const char* fixture;      /* tables: type-A fixture path */
  int write_fixture;
  int cross_check;
} affcox_run_options;

AFFCOX_API void affcox_run_options_init(affcox_run_options* opts);

/* Each writes a report (text or JSON) to *report and sets *all_passed to 1
 * iff every emitted check passed. A budget overflow still yields a report
 * (marked partial) together with AFFCOX_BUDGET_EXCEEDED. */
AFFCOX_API affcox_status affcox_run_verify(const affcox_run_options* opts, affcox_format format, char** report, int* all_passed);
AFFCOX_API affcox_status affcox_run_min_elements(const affcox_run_options* opts, affcox_format format, char** report,
                                                 int* all_passed);
AFFCOX_API affcox_status affcox_run_tables(const affcox_run_options* opts, affcox_format format, char** report, int* all_passed);
AFFCOX_API affcox_status affcox_run_classify(const affcox_run_options* opts, affcox_format format, char** report,
                                             int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
