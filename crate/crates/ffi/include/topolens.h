#ifndef TOPOLENS_H
#define TOPOLENS_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TlStatus {
  TL_STATUS_OK = 0,
  TL_STATUS_NULL_POINTER = 1,
  TL_STATUS_INVALID_ARGUMENT = 2,
  TL_STATUS_PARSE = 3,
  TL_STATUS_IO = 4,
  TL_STATUS_EMPTY_GRAPH = 5,
  TL_STATUS_INVALID_NODE = 6,
  TL_STATUS_DEGENERATE = 7,
  TL_STATUS_INSUFFICIENT_DATA = 8,
  TL_STATUS_INVALID_KMIN = 9,
  TL_STATUS_UNDEFINED_MIXING = 10,
  TL_STATUS_DISCONNECTED_GRAPH = 11,
  TL_STATUS_EMPTY_CLUB = 12,
  TL_STATUS_NO_PERIPHERAL_PAIRS = 13,
  TL_STATUS_BUFFER_TOO_SMALL = 14,
  TL_STATUS_PANIC = 15,
} TlStatus;

typedef enum TlFormat {
  /**
   * Pick from the file name: `*.as-rel*` is as-rel, anything else pairs.
   */
  TL_FORMAT_AUTO = 0,
  TL_FORMAT_PAIRS = 1,
  TL_FORMAT_AS_REL = 2,
} TlFormat;

typedef enum TlFitMethod {
  TL_FIT_METHOD_MLE = 0,
  TL_FIT_METHOD_OLS_CCDF = 1,
} TlFitMethod;

typedef enum TlStrategy {
  TL_STRATEGY_TARGETED_DEGREE = 0,
  TL_STRATEGY_RANDOM = 1,
} TlStrategy;

/**
 * Opaque graph handle.
 */
typedef struct TlGraph TlGraph;

typedef struct TlPowerLawFit {
  double gamma;
  double c;
  size_t kmin;
  /**
   * Kolmogorov-Smirnov distance of the fitted tail.
   */
  double ks;
  size_t tail_count;
} TlPowerLawFit;

typedef struct TlRichClubRow {
  size_t k;
  size_t n_geq;
  size_t e_geq;
  /**
   * NaN when fewer than two nodes have degree >= k.
   */
  double phi;
} TlRichClubRow;

typedef struct TlTransitSummary {
  size_t club_size;
  size_t peripheral_nodes;
  uint64_t pairs;
  double mean_hops;
  double interior_in_club;
  double strict_pattern;
  /**
   * NaN when not computed (graphs above the size limit).
   */
  double optimistic_interior_in_club;
  bool sampled;
} TlTransitSummary;

typedef struct TlRemovalPoint {
  size_t removed;
  size_t giant_nodes;
  double giant_share;
  /**
   * NaN when the remaining giant has fewer than two nodes.
   */
  double mean_path;
} TlRemovalPoint;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next call on the same thread.
 */
const char *tl_last_error_message(void);

/**
 * Load an edge list from `path`.
 */
enum TlStatus tl_graph_from_file(const char *path, enum TlFormat format, struct TlGraph **out);

/**
 * Build a graph on nodes `0..node_count` from `pair_count` (u, v) pairs
 * stored flat in `pairs`. Self-loops and duplicates are dropped.
 */
enum TlStatus tl_graph_from_edges(size_t node_count,
                                  const size_t *pairs,
                                  size_t pair_count,
                                  struct TlGraph **out);

enum TlStatus tl_generate_er(size_t n, size_t links, uint64_t seed, struct TlGraph **out);

enum TlStatus tl_generate_ba(size_t n, size_t m, uint64_t seed, struct TlGraph **out);

enum TlStatus tl_generate_plconfig(size_t n,
                                   double gamma,
                                   size_t kmin,
                                   uint64_t seed,
                                   struct TlGraph **out);

/**
 * Release a handle. NULL is ignored.
 */
void tl_graph_free(struct TlGraph *g);

enum TlStatus tl_graph_node_count(const struct TlGraph *g, size_t *out);

enum TlStatus tl_graph_edge_count(const struct TlGraph *g, size_t *out);

enum TlStatus tl_graph_degree(const struct TlGraph *g, size_t node, size_t *out);

enum TlStatus tl_average_degree(const struct TlGraph *g, double *out);

enum TlStatus tl_density(const struct TlGraph *g, double *out);

enum TlStatus tl_assortativity(const struct TlGraph *g, double *out);

enum TlStatus tl_fit_power_law(const struct TlGraph *g,
                               size_t kmin,
                               enum TlFitMethod method,
                               struct TlPowerLawFit *out);

/**
 * Mean shortest path of a connected graph. `samples == 0` means every
 * node is a source.
 */
enum TlStatus tl_mean_shortest_path(const struct TlGraph *g,
                                    size_t samples,
                                    uint64_t seed,
                                    double *out);

/**
 * Copy the rich-club curve into `rows`. `*len` receives the number of
 * rows; if it exceeds `capacity` nothing is copied and
 * `BufferTooSmall` is returned. Pass `capacity == 0` to query the size.
 */
enum TlStatus tl_rich_club(const struct TlGraph *g,
                           struct TlRichClubRow *rows,
                           size_t capacity,
                           size_t *len);

/**
 * Transit decomposition for the `club_top` highest-degree nodes.
 */
enum TlStatus tl_transit(const struct TlGraph *g,
                         size_t club_top,
                         size_t samples,
                         uint64_t seed,
                         struct TlTransitSummary *out);

/**
 * Remove a `fraction` of nodes and report the remaining giant component.
 * `samples` BFS sources estimate its mean path.
 */
enum TlStatus tl_remove_nodes(const struct TlGraph *g,
                              enum TlStrategy strategy,
                              double fraction,
                              uint64_t seed,
                              size_t samples,
                              struct TlRemovalPoint *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TOPOLENS_H */
