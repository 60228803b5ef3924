#ifndef REALSPHER_REALSPHER_H
#define REALSPHER_REALSPHER_H

/* C interface to the realspher core. Every call returns an rs_status; on
   failure rs_last_error() holds a message for the calling thread. Strings
   returned through char** are heap allocated, release them with
   rs_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RS_API __declspec(dllexport)
#else
#define RS_API __attribute__((visibility("default")))
#endif

typedef enum rs_status {
  RS_OK = 0,
  RS_INVALID_SPEC,
  RS_AMBIENT_MISMATCH,
  RS_NOT_IRREDUCIBLE,
  RS_NOT_APPLICABLE,
  RS_INVALID_DATUM,
  RS_INCOMPLETE_DATUM,
  RS_DATUM_UNAVAILABLE,
  RS_CONTRADICTION,
  RS_PARSE,
  RS_SCHEMA,
  RS_IO,
  RS_ARGUMENT, /* null pointer or bad enum value */
  RS_INTERNAL
} rs_status;

typedef enum rs_tri { RS_NO = 0, RS_YES = 1, RS_UNKNOWN = 2 } rs_tri;

typedef enum rs_format { RS_FORMAT_TSV = 0, RS_FORMAT_JSON = 1 } rs_format;

typedef struct rs_rootsys rs_rootsys;
typedef struct rs_verdict rs_verdict;
typedef struct rs_catalog rs_catalog;
typedef struct rs_report rs_report;

RS_API const char* rs_version(void);
RS_API const char* rs_status_name(rs_status s);
RS_API const char* rs_last_error(void);
RS_API void rs_string_free(char* s);

/* Root systems: "A3", "BC2", "E8". */
RS_API rs_status rs_rootsys_new(const char* text, rs_rootsys** out);
RS_API void rs_rootsys_free(rs_rootsys* rs);
RS_API rs_status rs_rootsys_rank(const rs_rootsys* rs, int* out);
RS_API rs_status rs_rootsys_ambient_dim(const rs_rootsys* rs, int* out);
RS_API rs_status rs_rootsys_weyl_order(const rs_rootsys* rs, char** out);
/* c(Delta), the smallest nonzero W-orbit, as a decimal string. */
RS_API rs_status rs_rootsys_min_orbit(const rs_rootsys* rs, char** out);
/* weight: comma separated rationals ("1,0,0,0", "1/2,-1/2"), one per ambient
   coordinate; projected onto the span of the roots first. */
RS_API rs_status rs_rootsys_orbit_size(const rs_rootsys* rs, const char* weight, char** out);
/* 1-based fundamental weight indices, comma separated. */
RS_API rs_status rs_rootsys_minimal_rays(const rs_rootsys* rs, char** out);

/* Pair specs. */
RS_API rs_status rs_spec_canonical(const char* text, char** out);
/* family keyword ("upq", "rank1", ...); field NULL or "" for all, else one of
   R C H (or a ugl variant). Newline separated canonical specs. */
RS_API rs_status rs_enumerate(const char* family, int bound, const char* field, char** out);

RS_API rs_status rs_classify(const char* spec, rs_verdict** out);
RS_API void rs_verdict_free(rs_verdict* v);
RS_API rs_status rs_verdict_flags(const rs_verdict* v, rs_tri* qp, rs_tri* pp, rs_tri* bb);
RS_API rs_status rs_verdict_format(const rs_verdict* v, rs_format fmt, char** out);

/* Catalogs. */
RS_API rs_status rs_catalog_load(const char* path, rs_catalog** out);
RS_API rs_status rs_catalog_parse(const char* json, rs_catalog** out);
RS_API void rs_catalog_free(rs_catalog* c);
RS_API rs_status rs_catalog_size(const rs_catalog* c, int* out);
RS_API rs_status rs_catalog_dump(const rs_catalog* c, char** out);

/* Reports. */
RS_API rs_status rs_verify(const rs_catalog* c, int bound, rs_report** out);
RS_API rs_status rs_table_report(int bound, rs_report** out);
RS_API void rs_report_free(rs_report* r);
RS_API rs_status rs_report_counts(const rs_report* r, int* lines, int* mismatches, int* unknowns);
RS_API rs_status rs_report_format(const rs_report* r, rs_format fmt, char** out);

#ifdef __cplusplus
}
#endif

#endif
