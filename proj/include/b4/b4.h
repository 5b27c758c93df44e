/* b4.h -- C interface to the B4 machine library.
 *
 * All functions return a b4_status. On failure a description of the last
 * error on the calling thread is available from b4_last_error(). Strings
 * returned through char** out-parameters are heap allocated and must be
 * released with b4_string_free(); machine handles with b4_machine_free().
 *
 * Infinite words use the "u(v)" syntax ("(1)" is 1^ω, "00(1)" is 001^ω);
 * group elements are words over p, q, a (α), e (ε).
 */
#ifndef B4_H_
#define B4_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define B4_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define B4_API __attribute__((visibility("default")))
#else
#  define B4_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum b4_status {
    B4_OK = 0,
    B4_ERR_PARSE = 1,
    B4_ERR_INVALID = 2,
    B4_ERR_IO = 3,
    B4_ERR_NULL = 4,
    B4_ERR_INTERNAL = 5
} b4_status;

/* A machine, optionally with a start state. */
typedef struct b4_machine b4_machine;

B4_API const char* b4_version(void);
B4_API const char* b4_last_error(void);
B4_API void b4_string_free(char* s);

/* "builtin:b4" or a path to a machine description file. */
B4_API b4_status b4_machine_load(const char* source, b4_machine** out);
B4_API b4_status b4_machine_parse(const char* text, b4_machine** out);
B4_API void b4_machine_free(b4_machine* m);
B4_API b4_status b4_machine_state_count(const b4_machine* m, size_t* out);
/* Machine description text. */
B4_API b4_status b4_machine_format(const b4_machine* m, char** out);
B4_API b4_status b4_machine_save(const b4_machine* m, const char* path);

/* Image of an infinite word; `state` may be NULL to use the start state. */
B4_API b4_status b4_transduce(const b4_machine* m, const char* state, const char* word, char** out);
/* Both machines need start states. */
B4_API b4_status b4_compose(const b4_machine* first, const b4_machine* second, b4_machine** out);
B4_API b4_status b4_minimize(const b4_machine* m, b4_machine** out);
B4_API b4_status b4_equivalent(const b4_machine* m1, const b4_machine* m2, int* out);

/* *exceeds is set to 1 (and *order to 0) when the order is larger than cap. */
B4_API b4_status b4_order(const char* element, uint64_t cap, uint64_t* order, int* exceeds);
/* Normal form in generator syntax ("b" is αq), "I" for the identity. */
B4_API b4_status b4_normal_form(const char* element, char** out);
B4_API b4_status b4_element_equal(const char* w1, const char* w2, int* out);
/* Image of an infinite word under a group element. */
B4_API b4_status b4_apply(const char* element, const char* word, char** out);

/* Exact distance, "0" or "2^-m". */
B4_API b4_status b4_metric(const char* x, const char* y, char** out);

/* Called once per orbit record; a nonzero return stops the iteration. */
typedef int (*b4_orbit_cb)(uint64_t k, const char* prefix, const char* tail, void* user);
/* Records k = 1..steps of the orbit of `start` under ξ, split after prefix_len letters. */
B4_API b4_status b4_orbit(const char* start, uint64_t steps, size_t prefix_len, b4_orbit_cb cb, void* user);

/* Called once per check. */
typedef void (*b4_check_cb)(const char* name, int passed, const char* detail, void* user);
/* Runs a verification suite; *all_passed is 1 when no check failed. */
B4_API b4_status b4_verify(const char* suite, size_t max, b4_check_cb cb, void* user, int* all_passed);

/* counts must hold max_len + 1 entries; counts[L] = distinct elements of length <= L. */
B4_API b4_status b4_enumerate(size_t max_len, uint64_t* counts);

#ifdef __cplusplus
}
#endif

#endif /* B4_H_ */
