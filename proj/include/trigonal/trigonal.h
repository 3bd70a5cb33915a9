#ifndef TRIGONAL_TRIGONAL_H
#define TRIGONAL_TRIGONAL_H

/*
 * C interface to the trigonal Hurwitz-Hodge / crepant resolution engine.
 *
 * Every function returns a trg_status.  On failure trg_last_error() describes the problem
 * (per thread, valid until the next call on that thread).  Strings returned through char**
 * are owned by the caller and released with trg_string_free.  Rationals are written "p/q".
 */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TRG_API __declspec(dllexport)
#else
#define TRG_API __attribute__((visibility("default")))
#endif

typedef enum trg_status {
  TRG_OK = 0,
  TRG_ERR_INVALID_ARGUMENT = 1,
  TRG_ERR_ARITHMETIC = 2,
  TRG_ERR_SINGULAR_SYSTEM = 3,
  TRG_ERR_INCONSISTENT_SYSTEM = 4,
  TRG_ERR_INVALID_LABEL = 5,
  TRG_ERR_DEGREE_OVERFLOW = 6,
  TRG_ERR_ORDER_MISMATCH = 7,
  TRG_ERR_INTERNAL = 8
} trg_status;

typedef enum trg_format { TRG_FORMAT_TEXT = 0, TRG_FORMAT_JSON = 1, TRG_FORMAT_CSV = 2 } trg_format;

/* Hurwitz-Hodge values up to a maximal genus.  Immutable; safe to share across threads. */
typedef struct trg_table trg_table;

TRG_API const char* trg_version(void);
TRG_API const char* trg_last_error(void);
TRG_API const char* trg_status_name(trg_status status);
TRG_API void trg_string_free(char* s);

/* max_genus >= 1. */
TRG_API trg_status trg_table_create(int max_genus, trg_table** out);
TRG_API void trg_table_destroy(trg_table* table);
TRG_API trg_status trg_table_max_genus(const trg_table* table, int* out);
/* quantity is one of "B", "Abullet", "A", "gamma", "delta". */
TRG_API trg_status trg_table_value(const trg_table* table, const char* quantity, int genus, char** out);
/* A_genus^l; l is normalized, a label violating the parity rule gives TRG_ERR_INVALID_LABEL. */
TRG_API trg_status trg_table_component(const trg_table* table, int genus, int l, char** out);
TRG_API trg_status trg_table_export(const trg_table* table, trg_format format, char** out);

/* Reports.  *all_pass (optional) is set to 1 when every check in the report holds. */
TRG_API trg_status trg_components(const trg_table* table, int genus, trg_format format, char** out, int* all_pass);
TRG_API trg_status trg_verify_recursions(const trg_table* table, trg_format format, char** out, int* all_pass);
TRG_API trg_status trg_verify_theta(int order, trg_format format, char** out, int* all_pass);
/* The table must reach genus max(1, order - 2). */
TRG_API trg_status trg_verify_crc(const trg_table* table, int order, trg_format format, char** out, int* all_pass);
TRG_API trg_status trg_localization(trg_format format, char** out);
TRG_API trg_status trg_duval(int n, trg_format format, char** out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif
