/* C interface to the divmax library. All functions are thread-safe on
 * distinct handles; instances are immutable and may be shared. On failure a
 * function returns a nonzero status and divmax_last_error() describes it for
 * the calling thread. */
#ifndef DIVMAX_DIVMAX_H
#define DIVMAX_DIVMAX_H

#include <stddef.h>
#include <stdint.h>

#if defined(DIVMAX_BUILDING_LIBRARY)
#define DIVMAX_API __attribute__((visibility("default")))
#else
#define DIVMAX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum divmax_status {
  DIVMAX_OK = 0,
  DIVMAX_INVALID_ARGUMENT = 1,
  DIVMAX_OUT_OF_RANGE = 2,
  DIVMAX_PARSE_ERROR = 3,
  DIVMAX_CAP_EXCEEDED = 4,
  DIVMAX_BUDGET_EXCEEDED = 5,
  DIVMAX_IO_ERROR = 6,
  DIVMAX_LOGIC_ERROR = 7,
  DIVMAX_INTERNAL_ERROR = 8
} divmax_status;

typedef enum divmax_objective {
  DIVMAX_CLIQUE = 0,
  DIVMAX_STAR = 1,
  DIVMAX_BIPARTITION = 2
} divmax_objective;

typedef enum divmax_norm { DIVMAX_L1 = 0, DIVMAX_L2 = 1, DIVMAX_LINF = 2 } divmax_norm;

typedef struct divmax_instance divmax_instance;
typedef struct divmax_solution divmax_solution;

typedef struct divmax_options {
  uint64_t budget;          /* rounded candidates per run */
  uint64_t enumeration_cap; /* subsets enumerated by brute force */
  unsigned threads;         /* 0: all hardware threads */
  int exact_farthest_pair;  /* greedy start from the true farthest pair */
  double bisection_eps;     /* accuracy of bipartition evaluation past k = 16 */
} divmax_options;

typedef struct divmax_ksum_verdict {
  int zero_sum_exists;
  double max_value;
  double gap_bound;
  int equivalence_ok;
  int gap_ok;
} divmax_ksum_verdict;

DIVMAX_API void divmax_options_init(divmax_options* opts);
DIVMAX_API const char* divmax_last_error(void);
DIVMAX_API const char* divmax_status_name(divmax_status status);
DIVMAX_API const char* divmax_objective_name(divmax_objective obj);
DIVMAX_API divmax_status divmax_parse_objective(const char* name,
                                                divmax_objective* out);

/* Instances. q is the distance exponent (>= 1). */
DIVMAX_API divmax_status divmax_instance_from_points(
    const double* coords, size_t n, size_t dim, divmax_norm norm, double q,
    divmax_instance** out);
DIVMAX_API divmax_status divmax_instance_from_matrix(
    const double* entries, size_t n, double q, int validate,
    divmax_instance** out);
DIVMAX_API divmax_status divmax_instance_parse(const char* text, double q,
                                               int validate,
                                               divmax_instance** out);
DIVMAX_API divmax_status divmax_instance_load(const char* path, double q,
                                              int validate,
                                              divmax_instance** out);
DIVMAX_API divmax_status divmax_instance_save(const divmax_instance* inst,
                                              const char* path);
/* Writes the file representation into buf (NUL-terminated, truncated to
 * cap) and its full length without the NUL into *needed. */
DIVMAX_API divmax_status divmax_instance_to_text(const divmax_instance* inst,
                                                 char* buf, size_t cap,
                                                 size_t* needed);
DIVMAX_API divmax_status divmax_instance_with_q(const divmax_instance* inst,
                                                double q,
                                                divmax_instance** out);
DIVMAX_API void divmax_instance_free(divmax_instance* inst);
DIVMAX_API size_t divmax_instance_size(const divmax_instance* inst);
DIVMAX_API size_t divmax_instance_dimension(const divmax_instance* inst);
DIVMAX_API double divmax_instance_q(const divmax_instance* inst);
DIVMAX_API divmax_status divmax_instance_distance(const divmax_instance* inst,
                                                  size_t u, size_t v,
                                                  double* out);
DIVMAX_API divmax_status divmax_instance_diameter_estimate(
    const divmax_instance* inst, double* out);

/* Objective value of a subset (indices may repeat). opts may be NULL. */
DIVMAX_API divmax_status divmax_evaluate(const divmax_instance* inst,
                                         divmax_objective obj,
                                         const size_t* subset, size_t len,
                                         const divmax_options* opts,
                                         double* out);

/* Solvers. opts may be NULL for defaults. */
DIVMAX_API divmax_status divmax_solve_brute(const divmax_instance* inst,
                                            divmax_objective obj, size_t k,
                                            const divmax_options* opts,
                                            divmax_solution** out);
DIVMAX_API divmax_status divmax_solve_greedy(const divmax_instance* inst,
                                             size_t k,
                                             const divmax_options* opts,
                                             divmax_solution** out);
DIVMAX_API divmax_status divmax_solve_ptas(const divmax_instance* inst,
                                           divmax_objective obj, size_t k,
                                           double eps,
                                           const divmax_options* opts,
                                           divmax_solution** out);
DIVMAX_API divmax_status divmax_solve_fast_clique(const divmax_instance* inst,
                                                  size_t k, double eps,
                                                  const divmax_options* opts,
                                                  divmax_solution** out);
/* Approximate minimum balanced cut of a multiset; the solution holds the
 * left half and the cut value. */
DIVMAX_API divmax_status divmax_min_bisection(const divmax_instance* inst,
                                              const size_t* points, size_t len,
                                              double eps,
                                              const divmax_options* opts,
                                              divmax_solution** out);

/* Solution accessors. Pointers stay valid until divmax_solution_free. */
DIVMAX_API void divmax_solution_free(divmax_solution* sol);
DIVMAX_API size_t divmax_solution_size(const divmax_solution* sol);
DIVMAX_API const size_t* divmax_solution_indices(const divmax_solution* sol);
DIVMAX_API double divmax_solution_value(const divmax_solution* sol);
DIVMAX_API double divmax_solution_guarantee(const divmax_solution* sol);
DIVMAX_API const char* divmax_solution_algo(const divmax_solution* sol);
DIVMAX_API uint64_t divmax_solution_candidates(const divmax_solution* sol);
DIVMAX_API size_t divmax_solution_cells(const divmax_solution* sol);
/* Returns 1 and fills center/scale when the solution records a guess. */
DIVMAX_API int divmax_solution_guess(const divmax_solution* sol,
                                     size_t* center, double* scale);

/* Generators. */
DIVMAX_API divmax_status divmax_gen_uniform(size_t n, size_t dim,
                                            uint64_t seed,
                                            divmax_instance** out);
DIVMAX_API divmax_status divmax_gen_clustered(size_t n_cluster, double radius,
                                              const double* outliers,
                                              size_t n_outliers, size_t dim,
                                              uint64_t seed,
                                              divmax_instance** out);
DIVMAX_API divmax_status divmax_gen_graph12(const uint8_t* adjacency, size_t n,
                                            int validate,
                                            divmax_instance** out);
DIVMAX_API divmax_status divmax_gen_ksum(const int64_t* values, size_t len,
                                         size_t k, int64_t t,
                                         divmax_instance** out);
DIVMAX_API divmax_status divmax_verify_ksum(const int64_t* values, size_t len,
                                            size_t k, int64_t t,
                                            const divmax_instance* inst,
                                            divmax_ksum_verdict* out);

#ifdef __cplusplus
}
#endif

#endif
