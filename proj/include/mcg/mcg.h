#ifndef MCG_MCG_H
#define MCG_MCG_H

/* C interface to the twist-subgroup engine. Every call returns a status
 * code; text results are heap strings released with mcg_string_free. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MCG_API __declspec(dllexport)
#else
#define MCG_API __attribute__((visibility("default")))
#endif

typedef enum mcg_status {
  MCG_OK = 0,
  MCG_ERR_PARSE = 1,
  MCG_ERR_OUT_OF_RANGE = 2,
  MCG_ERR_GENUS_MISMATCH = 3,
  MCG_ERR_UNKNOWN_NAME = 4,
  MCG_ERR_PRECONDITION = 5,
  MCG_ERR_IO = 6,
  MCG_ERR_VALIDATION = 7,
  MCG_ERR_INTERNAL = 8,
  MCG_ERR_ARGUMENT = 9
} mcg_status;

typedef enum mcg_format { MCG_FORMAT_TEXT = 0, MCG_FORMAT_STRUCTURED = 1 } mcg_format;

/* Session for one surface N_{g,n}: data file paths and, once needed, the
 * loaded registry and twist table. */
typedef struct mcg_context mcg_context;

typedef struct mcg_config {
  int genus;
  int boundary;             /* 0 or 1 */
  const char* data_dir;     /* NULL: $MCG_DATA_DIR or the build default */
  const char* registry;     /* NULL: <data_dir>/registry.txt */
  const char* twist_table;  /* NULL: <data_dir>/twists/g<genus>.tbl */
  const char* certificates; /* NULL: <data_dir>/certificates.txt */
  int strict_handedness;    /* nonzero: never flip arrows at load time */
} mcg_config;

MCG_API mcg_status mcg_context_create(const mcg_config* config, mcg_context** out);
MCG_API void mcg_context_destroy(mcg_context* ctx);

/* Message of the last failed call on this context. With ctx NULL: the last
 * failed context-free call (create, word utilities) on this thread. */
MCG_API const char* mcg_last_error(const mcg_context* ctx);
MCG_API const char* mcg_status_name(mcg_status status);
MCG_API void mcg_string_free(char* s);

MCG_API mcg_status mcg_verify_theorem(mcg_context* ctx, uint64_t seed, mcg_format format,
                                      int* passed, char** report);
/* *equal is 1 when both expressions evaluate to the same automorphism. */
MCG_API mcg_status mcg_relation(mcg_context* ctx, const char* lhs, const char* rhs,
                                mcg_format format, int* equal, char** report);
MCG_API mcg_status mcg_apply_curve(mcg_context* ctx, const char* expr, const char* curve,
                                   mcg_format format, char** report);
MCG_API mcg_status mcg_homology(mcg_context* ctx, const char* expr, mcg_format format,
                                char** report);
/* curves: names, ranges alpha1..alpha4, or X0; drop may be NULL. */
MCG_API mcg_status mcg_complement(mcg_context* ctx, const char* curves, const char* drop,
                                  mcg_format format, int* has_non_disk, char** report);
MCG_API mcg_status mcg_validate_data(mcg_context* ctx, mcg_format format, int* valid,
                                     char** report);
/* Twist table derived from the registry, in the twist-table file format. */
MCG_API mcg_status mcg_export_table(mcg_context* ctx, char** table);

/* Free-group utilities. */
MCG_API mcg_status mcg_word_reduce(int genus, const char* word, char** reduced);
MCG_API mcg_status mcg_word_is_conjugate(int genus, const char* u, const char* v,
                                         int* conjugate);

#ifdef __cplusplus
}
#endif

#endif
