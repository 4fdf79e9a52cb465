#ifndef MCSL_MCSL_H
#define MCSL_MCSL_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MCSL_API __declspec(dllexport)
#else
#define MCSL_API __attribute__((visibility("default")))
#endif

/* Opaque handles. Every handle returned through an out-parameter is owned by
   the caller and released with the matching *_free function. */
typedef struct mcsl_document mcsl_document;
typedef struct mcsl_result mcsl_result;

typedef enum mcsl_status {
    MCSL_OK = 0,                /* every requested check holds */
    MCSL_FALSE = 1,             /* the result was produced and some check fails */
    MCSL_ERR_INPUT = 2,         /* malformed input, unknown label, axiom violation in an explicit block */
    MCSL_ERR_GUARD = 3,         /* a size guard was exceeded */
    MCSL_ERR_PRECONDITION = 4,  /* an operation's precondition does not hold */
    MCSL_ERR_INTERNAL = 5,
    MCSL_ERR_ARGUMENT = 6       /* null pointer or out-of-range argument */
} mcsl_status;

/* Size guards. Limits count elements (see the README for each field). */
typedef struct mcsl_guard {
    int carrier;
    int enum_semilattice;
    int enum_nonzero;
    int powerset_points;
    int enum_expansion;
} mcsl_guard;

typedef enum mcsl_embedding_mode { MCSL_MODE_OVERLAP = 0, MCSL_MODE_SMALLEST = 1 } mcsl_embedding_mode;

MCSL_API mcsl_guard mcsl_guard_defaults(void);
MCSL_API const char* mcsl_version(void);

/* Message of the last failing call on this thread; "" when none. */
MCSL_API const char* mcsl_last_error(void);

MCSL_API mcsl_status mcsl_document_parse(const char* text, mcsl_document** out);
/* A file path, or "catalog:<name>". Parsing checks syntax and labels; the
   remaining validation happens in the command that uses the document. */
MCSL_API mcsl_status mcsl_document_load(const char* source, mcsl_document** out);
/* Canonical DSL text; owned by the document. */
MCSL_API const char* mcsl_document_text(const mcsl_document* doc);
MCSL_API void mcsl_document_free(mcsl_document* doc);

/* guard may be NULL for the defaults. Row counts below their minimum are argument errors. */
MCSL_API mcsl_status mcsl_check(const mcsl_document* doc, int m1_plus_rows, int m2_rows, const mcsl_guard* guard,
                                mcsl_result** out);
MCSL_API mcsl_status mcsl_embed(const mcsl_document* doc, mcsl_embedding_mode mode, int bounded,
                                const mcsl_guard* guard, mcsl_result** out);
/* kind: semilattices, multicontacts, weak-contacts, preclosures, event-structures, expansions.
   base may be NULL when size is given. */
MCSL_API mcsl_status mcsl_enumerate(const char* kind, int size, const mcsl_document* base, int up_to_iso,
                                    const mcsl_guard* guard, mcsl_result** out);
/* name NULL lists the entries; emit makes the text the DSL source. */
MCSL_API mcsl_status mcsl_catalog(const char* name, int emit, mcsl_result** out);
/* theorem NULL runs every harness plus the catalog regressions. threads 0: one per hardware thread. */
MCSL_API mcsl_status mcsl_verify_theorems(const char* theorem, int max_n, int up_to_iso, int threads,
                                          const mcsl_guard* guard, mcsl_result** out);
/* to: "event-structure" or "multicontact". */
MCSL_API mcsl_status mcsl_convert(const mcsl_document* doc, const char* to, mcsl_result** out);

/* Strings are owned by the result. */
MCSL_API const char* mcsl_result_json(const mcsl_result* result);
MCSL_API const char* mcsl_result_text(const mcsl_result* result);
/* 0 pass, 1 fail. */
MCSL_API int mcsl_result_verdict(const mcsl_result* result);
MCSL_API void mcsl_result_free(mcsl_result* result);

#ifdef __cplusplus
}
#endif

#endif
