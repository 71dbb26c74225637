/*
 * C interface to the simplepaths engine: simple path, cycle and Hamiltonian
 * counting on weighted directed graphs.
 *
 * Handles are opaque. Every fallible call returns an sp_status; on failure
 * sp_last_error() describes the problem (thread-local, valid until the next
 * call on the same thread). Strings returned by the library are owned by the
 * handle they came from.
 */
#ifndef SIMPLEPATHS_H
#define SIMPLEPATHS_H

#include <stddef.h>

#if defined(SP_BUILDING_LIBRARY)
#define SP_API __attribute__((visibility("default")))
#else
#define SP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sp_graph sp_graph;
typedef struct sp_report sp_report;

/* Values match the CLI exit codes for the first five. */
typedef enum sp_status {
  SP_OK = 0,
  SP_E_USAGE = 1,
  SP_E_PARSE = 2,
  SP_E_LIMIT = 3,
  SP_E_MISMATCH = 4,
  SP_E_CAPABILITY = 5,
  SP_E_SELF_CHECK = 6,
  SP_E_CANCELLED = 7,
  SP_E_IO = 8,
  SP_E_INTERNAL = 9
} sp_status;

typedef enum sp_ring { SP_RING_BIGINT = 0, SP_RING_FLOAT = 1, SP_RING_WORD = 2 } sp_ring;
typedef enum sp_kind { SP_KIND_PATHS = 0, SP_KIND_CYCLES = 1, SP_KIND_BOTH = 2, SP_KIND_HAMILTONIAN = 3 } sp_kind;
typedef enum sp_method { SP_METHOD_CONNECTED = 0, SP_METHOD_ALL_SUBSETS = 1, SP_METHOD_ORACLE = 2 } sp_method;
typedef enum sp_format { SP_FORMAT_JSON = 0, SP_FORMAT_CSV = 1 } sp_format;

/* Bench method selection bits. */
#define SP_BENCH_CONNECTED (1u << 0)
#define SP_BENCH_ALL_SUBSETS (1u << 1)
#define SP_BENCH_ORACLE (1u << 2)

typedef struct sp_options {
  size_t max_length;     /* 0: n */
  sp_kind kind;
  sp_method method;
  sp_format format;
  size_t threads;        /* >= 1 */
  size_t limit_n;        /* all-subsets reference limit */
  size_t max_size;       /* subgraphs: 0 means n */
  size_t list_limit;     /* subgraphs: list sets when at most this many (0: never) */
  int dominating;        /* subgraphs: also count connected dominating sets */
  size_t word_path_cap;  /* word ring: omit tables with more terms */
  int timing;            /* include wall-clock fields */
  double deadline_s;     /* 0: none; exceeding it yields SP_E_CANCELLED */
  unsigned bench_methods;  /* SP_BENCH_* bits, run in connected, all-subsets, oracle order */
  int inject_mismatch;   /* bench: corrupt the last method's result (tests only) */
} sp_options;

/* Fills defaults: max_length 0, kind both, connected, JSON, 1 thread, limit_n 20, timing on, all bench methods. */
SP_API void sp_options_init(sp_options* opts);

SP_API sp_status sp_graph_parse(const char* text, size_t len, int directed, sp_ring ring, sp_graph** out);
SP_API sp_status sp_graph_load(const char* path, int directed, sp_ring ring, sp_graph** out);
SP_API void sp_graph_free(sp_graph* g);
SP_API size_t sp_graph_vertex_count(const sp_graph* g);
SP_API size_t sp_graph_arc_count(const sp_graph* g);

SP_API sp_status sp_count(const sp_graph* g, const sp_options* opts, sp_report** out);
SP_API sp_status sp_hamiltonian(const sp_graph* g, const sp_options* opts, sp_report** out);
SP_API sp_status sp_subgraphs(const sp_graph* g, const sp_options* opts, sp_report** out);
/* On SP_E_MISMATCH the report is still produced and describes the disagreement. */
SP_API sp_status sp_bench(const sp_graph* g, const sp_options* opts, sp_report** out);

SP_API const char* sp_report_text(const sp_report* r);
SP_API size_t sp_report_size(const sp_report* r);
SP_API void sp_report_free(sp_report* r);

SP_API const char* sp_last_error(void);
SP_API const char* sp_status_name(sp_status s);
SP_API const char* sp_version(void);

#ifdef __cplusplus
}
#endif

#endif /* SIMPLEPATHS_H */
