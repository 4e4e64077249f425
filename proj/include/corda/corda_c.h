#ifndef CORDA_C_H
#define CORDA_C_H

/* C interface of the corda shared library.
 *
 * Every function returns a corda_status; out-parameters are written only on
 * CORDA_OK.  Strings returned through char** are heap copies owned by the
 * caller and released with corda_string_free.  After a failure,
 * corda_last_error() describes it (thread-local, valid until the next corda
 * call on the same thread).
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum corda_status {
  CORDA_OK = 0,
  CORDA_INVALID_ARGUMENT = 1,
  CORDA_UNSUPPORTED = 2,
  CORDA_BUDGET_EXHAUSTED = 3,
  CORDA_PARSE_ERROR = 4,
  CORDA_INTERNAL = 5
} corda_status;

const char* corda_version(void);
const char* corda_status_name(int status);
const char* corda_last_error(void);
void corda_string_free(char* s);

/* Evaluates one "corda/v1" request document and returns the result document.
 * An honest UNKNOWN verdict is CORDA_OK; only malformed or out-of-contract
 * requests fail.  Output is byte-deterministic for identical inputs.
 */
corda_status corda_eval_json(const char* request, char** out_result);

/* Opaque circular orders on groups whose elements are single integers. */
typedef struct corda_order corda_order;

/* The rotation-by-k order on Z/n: g sits at (k g mod n)/n.  gcd(k, n) = 1. */
corda_status corda_order_cyclic(int64_t n, int64_t k, corda_order** out);

/* The circular order induced by the standard linear order on Z. */
corda_status corda_order_integers(corda_order** out);

const char* corda_order_tag(const corda_order* o);

/* Left-invariant circular orientation of the triple (a, b, c): -1, 0 or +1. */
corda_status corda_order_eval(const corda_order* o, int64_t a, int64_t b, int64_t c,
                              int* out_sign);

/* Checks the circular order axioms on the sample (on the whole group when
 * len == 0 and the group is finite).  On CORDA_OK, *out_ok reports the
 * verdict and *out_violation (optional) the first violation, or NULL.
 */
corda_status corda_order_validate(const corda_order* o, const int64_t* sample, size_t len,
                                  int* out_ok, char** out_violation);

/* Rotation number of g in the dynamical realization.  *out_exact reports
 * whether *out_value ("p/q") is exact or the midpoint of the bracketing
 * interval of width 1/iterations (iterations <= 0 picks the default).
 */
corda_status corda_order_rot(const corda_order* o, int64_t g, int64_t iterations,
                             int* out_exact, char** out_value);

void corda_order_free(corda_order* o);

#ifdef __cplusplus
}
#endif

#endif /* CORDA_C_H */
