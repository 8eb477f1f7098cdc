/* C interface to the listheap library: List Heaps (runs-adaptive and
 * Enc-adaptive), a binary heap baseline, disorder measures and the benchmark
 * workloads.
 *
 * Every fallible call returns an lh_status. On failure a human-readable
 * message is available from lh_last_error() on the same thread until the next
 * failing call. Objects are opaque and owned by the caller; destroy them with
 * the matching *_destroy function. A single object must not be used from two
 * threads at once; distinct objects are independent.
 */
#ifndef LISTHEAP_H
#define LISTHEAP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LH_API __declspec(dllexport)
#else
#define LH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lh_status {
  LH_OK = 0,
  LH_ERR_EMPTY = 1,
  LH_ERR_DUPLICATE_KEY = 2,
  LH_ERR_INVALID_HANDLE = 3,
  LH_ERR_KEY_INCREASE = 4,
  LH_ERR_INVALID_ARGUMENT = 5,
  LH_ERR_KEY_KIND = 6,
  LH_ERR_INFEASIBLE = 7,
  LH_ERR_PARSE = 8,
  LH_ERR_IO = 9,
  LH_ERR_BUFFER_TOO_SMALL = 10,
  LH_ERR_INVARIANT = 11,
  LH_ERR_NO_MEMORY = 12,
  LH_ERR_INTERNAL = 13
} lh_status;

typedef enum lh_heap_kind { LH_HEAP_RA = 0, LH_HEAP_EA = 1, LH_HEAP_BINARY = 2 } lh_heap_kind;

typedef enum lh_key_kind { LH_KEY_I64 = 0, LH_KEY_F64 = 1 } lh_key_kind;

typedef enum lh_order {
  LH_ORDER_RANDOM = 0,
  LH_ORDER_INCREASING = 1,
  LH_ORDER_DECREASING = 2,
  LH_ORDER_RUNS = 3, /* param = run count */
  LH_ORDER_SUS = 4   /* param = SUS */
} lh_order;

/* Stable reference to a stored item; invalid once the item is deleted. */
typedef uint64_t lh_handle;

typedef struct lh_heap lh_heap;
typedef struct lh_graph lh_graph;

typedef struct lh_run_stats {
  uint64_t total_cmps;
  uint64_t max_delmin_cmps;
  uint64_t delmin_cmps; /* comparisons spent inside delete_min calls */
  /* List count after inserting (sort) or peak list count (Dijkstra). */
  uint64_t final_k;
  int has_final_k; /* 0 for the binary heap */
  uint64_t wall_ns;
  uint64_t inserts;
  uint64_t delete_mins;
  uint64_t decrease_keys;
} lh_run_stats;

LH_API const char* lh_version(void);
LH_API const char* lh_status_name(lh_status status);
LH_API const char* lh_last_error(void);

/* ---- heaps ---------------------------------------------------------------- */

LH_API lh_status lh_heap_create(lh_heap_kind kind, lh_key_kind key_kind, lh_heap** out);
LH_API void lh_heap_destroy(lh_heap* heap);

LH_API lh_status lh_heap_insert_i64(lh_heap* heap, int64_t key, lh_handle* out);
LH_API lh_status lh_heap_insert_f64(lh_heap* heap, double key, lh_handle* out);
LH_API lh_status lh_heap_find_min(const lh_heap* heap, lh_handle* out);
LH_API lh_status lh_heap_key_i64(const lh_heap* heap, lh_handle handle, int64_t* out);
LH_API lh_status lh_heap_key_f64(const lh_heap* heap, lh_handle handle, double* out);
/* key_out and handle_out may be NULL. */
LH_API lh_status lh_heap_delete_min_i64(lh_heap* heap, int64_t* key_out, lh_handle* handle_out);
LH_API lh_status lh_heap_delete_min_f64(lh_heap* heap, double* key_out, lh_handle* handle_out);
LH_API lh_status lh_heap_decrease_key_i64(lh_heap* heap, lh_handle handle, int64_t key);
LH_API lh_status lh_heap_decrease_key_f64(lh_heap* heap, lh_handle handle, double key);

LH_API size_t lh_heap_size(const lh_heap* heap);
/* Number of lists; 0 for the binary heap. */
LH_API size_t lh_heap_list_count(const lh_heap* heap);
LH_API uint64_t lh_heap_comparisons(const lh_heap* heap);
LH_API void lh_heap_reset_comparisons(lh_heap* heap);
/* LH_ERR_INVARIANT if any structural invariant is broken. */
LH_API lh_status lh_heap_validate(const lh_heap* heap);
/* Writes a NUL-terminated rendering of the heap layout, e.g. "[1 3] [4 14 15]"
 * for list heaps (one bracket per list, array order) or "[1 4 2]" for the
 * binary heap. *needed receives the required buffer size including the NUL;
 * LH_ERR_BUFFER_TOO_SMALL if cap is below it. buf may be NULL when cap is 0. */
LH_API lh_status lh_heap_describe(const lh_heap* heap, char* buf, size_t cap, size_t* needed);

/* ---- disorder measures (keys must be unique) ------------------------------ */

LH_API lh_status lh_runs_count(const int64_t* keys, size_t n, size_t* out);
LH_API lh_status lh_sus_count(const int64_t* keys, size_t n, size_t* out);
LH_API lh_status lh_enc_count(const int64_t* keys, size_t n, size_t* out);
/* run_lengths has room for n entries; *count receives the number of runs. */
LH_API lh_status lh_runs_partition(const int64_t* keys, size_t n, size_t* run_lengths, size_t* count);
/* Sequences are written back to back into flat (room for n keys); lengths has
 * room for n entries; *count receives the number of sequences. */
LH_API lh_status lh_enc_build(const int64_t* keys, size_t n, int64_t* flat, size_t* lengths, size_t* count);
LH_API lh_status lh_melsort(const int64_t* keys, size_t n, int64_t* out);

/* ---- workloads ------------------------------------------------------------ */

/* out has room for n keys. */
LH_API lh_status lh_gen_sequence(size_t n, lh_order order, size_t param, uint64_t seed, int64_t* out);
/* *keys is allocated by the library; release it with lh_free. */
LH_API lh_status lh_sequence_read(const char* path, int64_t** keys, size_t* n);
LH_API lh_status lh_sequence_write(const char* path, const int64_t* keys, size_t n);
LH_API void lh_free(void* p);

LH_API lh_status lh_graph_generate(size_t n, size_t m, uint64_t seed, lh_graph** out);
LH_API lh_status lh_graph_read_dimacs(const char* path, lh_graph** out);
LH_API lh_status lh_graph_write_dimacs(const lh_graph* graph, const char* path);
LH_API void lh_graph_destroy(lh_graph* graph);
LH_API size_t lh_graph_vertex_count(const lh_graph* graph);
LH_API size_t lh_graph_edge_count(const lh_graph* graph);

/* ---- benchmark drivers ---------------------------------------------------- */

/* n inserts then n delete_mins on a fresh 64-bit-key heap. sorted_out (room
 * for n keys) may be NULL. */
LH_API lh_status lh_run_sort(lh_heap_kind kind, const int64_t* keys, size_t n, int64_t* sorted_out,
                             lh_run_stats* stats);
/* source is 0-based. dist_out has room for lh_graph_vertex_count entries and
 * receives -1 for unreachable vertices; it may be NULL. */
LH_API lh_status lh_run_dijkstra(const lh_graph* graph, size_t source, lh_heap_kind kind, int64_t* dist_out,
                                 lh_run_stats* stats);

#ifdef __cplusplus
}
#endif

#endif /* LISTHEAP_H */
