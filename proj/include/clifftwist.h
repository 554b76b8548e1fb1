/* clifftwist: exact-arithmetic engine for real Clifford algebras Cl(p,q),
 * their idempotent/stabilizer group lattice, spinor bases and the
 * classification of spinor scalar products.
 *
 * Plain C interface over the C++ core: opaque handles, integer status codes,
 * strings allocated by the library and released with ct_string_free().
 * All functions are thread-safe; ct_last_error() is thread-local.
 */
#ifndef CLIFFTWIST_H
#define CLIFFTWIST_H

#include <stdint.h>

#if defined(_WIN32)
#define CLIFFTWIST_API __declspec(dllexport)
#else
#define CLIFFTWIST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ct_status {
  CT_OK = 0,
  CT_ERR_ARGUMENT = 1, /* bad p/q/signs/format/product string */
  CT_ERR_LIMIT = 2,    /* beyond the 32-generator engine ceiling */
  CT_ERR_INTERNAL = 3, /* engine invariant violation */
} ct_status;

/* A Clifford algebra Cl(p,q) together with a chosen primitive idempotent. */
typedef struct ct_algebra ct_algebra;

/* signs: optional string over '+'/'-' of length k overriding the default
 * all-plus idempotent factor signs; pass NULL for the default. */
CLIFFTWIST_API ct_status ct_algebra_new(int p, int q, const char* signs,
                                        ct_algebra** out);
CLIFFTWIST_API void ct_algebra_free(ct_algebra* a);

CLIFFTWIST_API int ct_algebra_p(const ct_algebra* a);
CLIFFTWIST_API int ct_algebra_q(const ct_algebra* a);
/* Number of idempotent factors k = q - r_{q-p}. */
CLIFFTWIST_API int ct_algebra_k(const ct_algebra* a);

/* format: "text" | "json" | "markdown" | "csv". */
CLIFFTWIST_API ct_status ct_clidata(const ct_algebra* a, const char* format,
                                    char** out);
CLIFFTWIST_API ct_status ct_groups(const ct_algebra* a, const char* format,
                                   char** out);

/* Runs the full verification for one algebra; *all_pass is set to 1/0. */
CLIFFTWIST_API ct_status ct_verify(const ct_algebra* a, uint64_t seed,
                                   const char* format, int* all_pass,
                                   char** out);
/* Verification sweep over every signature with p+q <= max_n. jobs <= 0 means
 * CLIFFTWIST_JOBS or the hardware default. */
CLIFFTWIST_API ct_status ct_verify_sweep(int max_n, uint64_t seed, int jobs,
                                         const char* format, int* all_pass,
                                         char** out);

/* product: "tp" | "beta+" | "beta-". */
CLIFFTWIST_API ct_status ct_tables(int max_n, const char* product,
                                   const char* format, int jobs, char** out);

CLIFFTWIST_API void ct_string_free(char* s);
CLIFFTWIST_API const char* ct_status_name(ct_status s);
/* Detail message for the most recent failing call on this thread. */
CLIFFTWIST_API const char* ct_last_error(void);

CLIFFTWIST_API int ct_abi_version(void);

#ifdef __cplusplus
}
#endif

#endif /* CLIFFTWIST_H */
