#ifndef HAIRPIN_H
#define HAIRPIN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Exact hairpin completion/deletion distance toolkit: strands over involution
 * alphabets, shortest-path solves on the substring-state graph, the
 * LCS-to-hairpin-distance gadget construction, and batch verification.
 *
 * All functions return hp_status; outputs are written through pointers.
 * Strings returned through char** are heap-allocated; release them with
 * hp_string_free. On any non-HP_OK status, hp_last_error() describes the
 * failure for the calling thread. */

typedef enum {
    HP_OK = 0,
    HP_ERR_PARSE = 1,
    HP_ERR_INVALID_STEP = 2,
    HP_ERR_PRECONDITION = 3,
    HP_ERR_PATTERN = 4,
    HP_ERR_OVERFLOW = 5,
    HP_ERR_NON_INTEGRAL = 6,
    HP_ERR_WITNESS = 7,
    HP_ERR_REPLAY = 8,
    HP_ERR_MID = 9,
    HP_ERR_BUDGET = 10,
    HP_ERR_ARGUMENT = 11,
    HP_ERR_UNKNOWN = 99
} hp_status;

typedef enum { HP_SEM_MODIFIED = 0, HP_SEM_ORIGINAL = 1 } hp_semantics;

/* Opaque immutable strand handle. */
typedef struct hp_strand hp_strand;

/* alphabet: "binary" ({0,1}) or "quad" ({0,1,2,3} with 3 the inverse of 2). */
hp_status hp_strand_parse(const char* alphabet, const char* text, hp_strand** out);
void hp_strand_free(hp_strand* s);
int64_t hp_strand_size(const hp_strand* s);
hp_status hp_strand_text(const hp_strand* s, char** out);

void hp_string_free(char* s);

/* Description of the last failure on this thread; empty string if none. */
const char* hp_last_error(void);

/* Shortest hairpin-deletion distance from x to (any occurrence of) y.
 * max_states = 0 selects the default budget, overridable through the
 * HAIRPIN_MAX_STATES environment variable. json_out holds
 * {"distance": n|null, "witness": ["L 3", ...], "start": [i,j],
 *  "goal": [i,j], "stats": {...}}. */
hp_status hp_solve(const hp_strand* x, const hp_strand* y, hp_semantics sem,
                   uint64_t max_states, char** json_out);

/* Gadget construction for ternary inputs S, T over {0,1,2}. json_out holds
 * {"S","T","x","y","left_p","right_p","left_i","right_i","predicted_hdd"}. */
hp_status hp_reduce(const char* S, const char* T, char** json_out);

hp_status hp_predicted_hdd(const char* S, const char* T, int64_t* out);
hp_status hp_lcs_length(const char* S, const char* T, int64_t* out);

hp_status hp_fib(int64_t n, int64_t* out);
/* Least y with fib(y) * den >= num. */
hp_status hp_fib_inverse(int64_t num, int64_t den, int64_t* out);
hp_status hp_is_fibonacci_regular(int64_t a, int* out);

/* The 4-symbol lift; requires a unique 1100 center in s. */
hp_status hp_lift(const hp_strand* s, hp_strand** lifted, int64_t* mid);

/* Receives one output line (JSON or CSV record) per call; line excludes the
 * trailing newline. */
typedef void (*hp_line_cb)(const char* line, void* user);

/* Batch predictor-vs-solver verification over an exhaustive ternary grid
 * and/or seeded random instances. Emits one JSON record per instance, in
 * instance order. all_ok is set to 1 iff every record checks out. */
hp_status hp_verify(int exhaustive, int max_len_s, int max_len_t, int random_count,
                    int random_min_len, int random_max_len, uint64_t seed, int jobs,
                    uint64_t max_states, hp_line_cb cb, void* user, int* all_ok);

/* Runs every per-lemma solver check; one JSON line per check. */
hp_status hp_lemmas(hp_line_cb cb, void* user, int* all_pass);

/* Benchmark solves on random instances: sizes_s/sizes_t are parallel arrays
 * of (|S|, |T|) pairs. Emits a CSV header line followed by one CSV record
 * per instance. */
hp_status hp_bench(const int* sizes_s, const int* sizes_t, size_t n_sizes,
                   int repetitions, uint64_t seed, uint64_t max_states, hp_line_cb cb,
                   void* user);

#ifdef __cplusplus
}
#endif

#endif /* HAIRPIN_H */
