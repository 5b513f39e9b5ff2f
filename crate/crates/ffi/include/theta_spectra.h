#ifndef THETA_SPECTRA_H
#define THETA_SPECTRA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TsStatus {
  TS_STATUS_OK = 0,
  TS_STATUS_NULL_POINTER = 1,
  TS_STATUS_INVALID_ARGUMENT = 2,
  TS_STATUS_INVALID_UTF8 = 3,
  TS_STATUS_NUMERIC_FAILURE = 4,
  TS_STATUS_PANIC = 5,
} TsStatus;

// Opaque signed complete graph.
typedef struct TsSignedGraph TsSignedGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// (K_n, θ₁(s,t)).
//
// # Safety
// `out` must be valid for writing a pointer.
enum TsStatus ts_theta1_new(size_t n, size_t s, size_t t, struct TsSignedGraph **out);

// (K_n, θ₂(0,k−5)).
//
// # Safety
// `out` must be valid for writing a pointer.
enum TsStatus ts_theta2_new(size_t n, size_t k, struct TsSignedGraph **out);

// Signed K_n whose negative edges are the graph6 graph; `n` of 0 means the
// graph's own order.
//
// # Safety
// `graph6` must be a nul-terminated string and `out` valid for writing.
enum TsStatus ts_graph_from_graph6(const char *graph6, size_t n, struct TsSignedGraph **out);

// Releases a handle; null is ignored.
//
// # Safety
// `g` must come from a constructor here and not be used afterwards.
void ts_graph_free(struct TsSignedGraph *g);

// # Safety
// `g` must be a live handle, `order` and `negative_edges` writable.
enum TsStatus ts_graph_size(const struct TsSignedGraph *g, size_t *order, size_t *negative_edges);

// Largest adjacency eigenvalue. When `vector` is non-null it receives the
// sign-normalized unit eigenvector and must hold `order` doubles.
//
// # Safety
// `g` must be a live handle, `lambda1` writable, `vector` null or writable
// for `order` doubles.
enum TsStatus ts_graph_index(const struct TsSignedGraph *g, double *lambda1, double *vector);

// graph6 of the negative edges on all `order` vertices.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum TsStatus ts_graph_negative_graph6(const struct TsSignedGraph *g, char **out);

// Exact characteristic polynomial as a JSON array of decimal strings,
// ascending degree.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum TsStatus ts_graph_char_poly_json(const struct TsSignedGraph *g, char **out);

// Message for the last failed call on this thread; empty after success.
// Valid until the next call on the same thread.
const char *ts_last_error(void);

// # Safety
// `s` must come from this library and not be used afterwards.
void ts_string_free(char *s);

// Library version, static storage.
const char *ts_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* THETA_SPECTRA_H */
