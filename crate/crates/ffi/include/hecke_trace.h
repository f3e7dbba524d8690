/* C ABI for the hecke-trace library.
 *
 * Every operation returns an opaque ht_result handle carrying either the
 * canonical text output or an error message. Status codes mirror the CLI
 * exit codes: 0 ok, 1 invalid arguments (NULL / non-UTF-8), 2 domain or
 * parse error, 3 unsupported case. The caller owns each handle and must
 * release it with ht_result_free(). All strings are NUL-terminated UTF-8;
 * pointers returned by the accessors stay valid until the handle is freed.
 */

#ifndef HECKE_TRACE_H
#define HECKE_TRACE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define HT_OK 0
#define HT_ERR_ARGS 1
#define HT_ERR_DOMAIN 2
#define HT_ERR_UNSUPPORTED 3

typedef struct HtResult ht_result;

int ht_result_status(const ht_result *res);
const char *ht_result_output(const ht_result *res);
const char *ht_result_error(const ht_result *res);
void ht_result_free(ht_result *res);

/* Satake transform of the Kottwitz function f_{n,alpha,s}. */
ht_result *ht_satake(size_t n, size_t alpha, size_t s);

/* Tadic expansion of Speh(x,y)(char); char like "eps|0". */
ht_result *ht_speh_expand(size_t x, size_t y, const char *char_);

/* Defs 5.2/5.3 classification: "TypeI" | "TypeII" | "Neither". */
ht_result *ht_classify(const char *rep, size_t p1, size_t p2);

/* Minimal double-coset representatives, one one-line permutation per line.
 * shape and type are comma-separated compositions, e.g. "2,1". */
ht_result *ht_min_reps(const char *shape, const char *type);

/* Engine-path truncated trace. lambda like "1/2:2,0:1"; rep a canonical
 * descriptor such as "St(4;eps|0)" or "Speh(2,3;eps|0)". */
ht_result *ht_trace_engine(const char *lambda, const char *rep, size_t alpha);

/* Closed-form trace (Prop 5.3 case 1..6). char2 may be NULL unless the case
 * takes two characters; statement_sign != 0 applies the statement signs. */
ht_result *ht_trace_closed_form(uint8_t case_, const char *lambda,
                                const char *char1, const char *char2,
                                size_t alpha, int statement_sign);

/* Theorem 6.1 aggregation over an in-memory spectrum JSON document. */
ht_result *ht_aggregate(const char *spectrum_json, size_t alpha,
                        const char *lambda);

#ifdef __cplusplus
}
#endif

#endif /* HECKE_TRACE_H */
