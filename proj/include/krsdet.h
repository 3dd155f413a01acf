/* C interface to the krsdet library. All functionality is reached through
 * JSON requests evaluated by krsdet_eval; results are returned through an
 * opaque handle that must be released with krsdet_result_free. */

#ifndef KRSDET_H
#define KRSDET_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct krsdet_result krsdet_result;

enum {
    KRSDET_OK = 0,
    KRSDET_ERR_VERIFY = 1,   /* a verification suite reported failures */
    KRSDET_ERR_USAGE = 2,    /* malformed request or invalid input */
    KRSDET_ERR_INTERNAL = 3
};

/* Library version string; storage owned by the library. */
const char* krsdet_version(void);

/* Evaluates a JSON request, e.g.
 *   {"command": "hilbert", "m": 3, "n": 3, "t": 2}
 * Never returns NULL; inspect the result code. */
krsdet_result* krsdet_eval(const char* request_json);

/* One of the KRSDET_* codes. */
int krsdet_result_code(const krsdet_result* result);

/* Response JSON, or NULL when no output was produced. Owned by the result. */
const char* krsdet_result_json(const krsdet_result* result);

/* Error message, or NULL on success. Owned by the result. */
const char* krsdet_result_error(const krsdet_result* result);

void krsdet_result_free(krsdet_result* result);

#ifdef __cplusplus
}
#endif

#endif /* KRSDET_H */
