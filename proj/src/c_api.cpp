#include "divmax/divmax.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "baselines.hpp"
#include "bisection.hpp"
#include "diversity.hpp"
#include "error.hpp"
#include "fast_clique.hpp"
#include "instance_io.hpp"
#include "instances.hpp"
#include "metric.hpp"
#include "ptas.hpp"
#include "solution.hpp"

struct divmax_instance {
  divmax::MetricInstance inst;
};

struct divmax_solution {
  divmax::Solution sol;
};

namespace {

thread_local std::string last_error;

divmax_status status_of(divmax::ErrorCode code) {
  using divmax::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return DIVMAX_INVALID_ARGUMENT;
    case ErrorCode::kOutOfRange: return DIVMAX_OUT_OF_RANGE;
    case ErrorCode::kParse: return DIVMAX_PARSE_ERROR;
    case ErrorCode::kCapExceeded: return DIVMAX_CAP_EXCEEDED;
    case ErrorCode::kBudgetExceeded: return DIVMAX_BUDGET_EXCEEDED;
    case ErrorCode::kIo: return DIVMAX_IO_ERROR;
    case ErrorCode::kLogic: return DIVMAX_LOGIC_ERROR;
  }
  return DIVMAX_INTERNAL_ERROR;
}

template <typename F>
divmax_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return DIVMAX_OK;
  } catch (const divmax::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return DIVMAX_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DIVMAX_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown error";
    return DIVMAX_INTERNAL_ERROR;
  }
}

void need(const void* p, const char* what) {
  divmax::require(p != nullptr, std::string(what) + " is null");
}

divmax::Objective objective_of(divmax_objective obj) {
  switch (obj) {
    case DIVMAX_CLIQUE: return divmax::Objective::kClique;
    case DIVMAX_STAR: return divmax::Objective::kStar;
    case DIVMAX_BIPARTITION: return divmax::Objective::kBipartition;
  }
  divmax::fail(divmax::ErrorCode::kInvalidArgument, "unknown objective");
}

divmax::Norm norm_of(divmax_norm norm) {
  switch (norm) {
    case DIVMAX_L1: return divmax::Norm::kL1;
    case DIVMAX_L2: return divmax::Norm::kL2;
    case DIVMAX_LINF: return divmax::Norm::kLInf;
  }
  divmax::fail(divmax::ErrorCode::kInvalidArgument, "unknown norm");
}

divmax::SolveOptions solve_options(const divmax_options* opts) {
  divmax::SolveOptions out;
  if (opts != nullptr) {
    out.budget = opts->budget;
    out.enumeration_cap = opts->enumeration_cap;
    out.threads = opts->threads;
    out.exact_farthest_pair = opts->exact_farthest_pair != 0;
  }
  return out;
}

divmax::EvalOptions eval_options(const divmax_options* opts) {
  divmax::EvalOptions out;
  if (opts != nullptr) {
    out.budget = opts->budget;
    out.bisection_eps = opts->bisection_eps;
  }
  return out;
}

void emit(divmax::MetricInstance inst, divmax_instance** out) {
  need(out, "output handle");
  *out = new divmax_instance{std::move(inst)};
}

void emit(divmax::Solution sol, divmax_solution** out) {
  *out = new divmax_solution{std::move(sol)};
}

divmax::KSumInstance ksum_of(const int64_t* values, size_t len, size_t k,
                             int64_t t) {
  if (len > 0) need(values, "values");
  divmax::KSumInstance ks;
  ks.values.assign(values, values + len);
  ks.k = k;
  ks.t = t;
  return ks;
}

}  // namespace

extern "C" {

void divmax_options_init(divmax_options* opts) {
  if (opts == nullptr) return;
  const divmax::SolveOptions solve;
  const divmax::EvalOptions eval;
  opts->budget = solve.budget;
  opts->enumeration_cap = solve.enumeration_cap;
  opts->threads = solve.threads;
  opts->exact_farthest_pair = solve.exact_farthest_pair ? 1 : 0;
  opts->bisection_eps = eval.bisection_eps;
}

const char* divmax_last_error(void) { return last_error.c_str(); }

const char* divmax_status_name(divmax_status status) {
  switch (status) {
    case DIVMAX_OK: return "ok";
    case DIVMAX_INVALID_ARGUMENT: return "invalid argument";
    case DIVMAX_OUT_OF_RANGE: return "out of range";
    case DIVMAX_PARSE_ERROR: return "parse error";
    case DIVMAX_CAP_EXCEEDED: return "cap exceeded";
    case DIVMAX_BUDGET_EXCEEDED: return "budget exceeded";
    case DIVMAX_IO_ERROR: return "i/o error";
    case DIVMAX_LOGIC_ERROR: return "logic error";
    case DIVMAX_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* divmax_objective_name(divmax_objective obj) {
  switch (obj) {
    case DIVMAX_CLIQUE: return "clique";
    case DIVMAX_STAR: return "star";
    case DIVMAX_BIPARTITION: return "bipartition";
  }
  return "unknown";
}

divmax_status divmax_parse_objective(const char* name, divmax_objective* out) {
  return guarded([&] {
    need(name, "name");
    need(out, "output");
    switch (divmax::parse_objective(name)) {
      case divmax::Objective::kClique: *out = DIVMAX_CLIQUE; break;
      case divmax::Objective::kStar: *out = DIVMAX_STAR; break;
      case divmax::Objective::kBipartition: *out = DIVMAX_BIPARTITION; break;
    }
  });
}

divmax_status divmax_instance_from_points(const double* coords, size_t n,
                                          size_t dim, divmax_norm norm,
                                          double q, divmax_instance** out) {
  return guarded([&] {
    need(coords, "coords");
    emit(divmax::MetricInstance::from_points(
             std::vector<double>(coords, coords + n * dim), dim,
             norm_of(norm), q),
         out);
  });
}

divmax_status divmax_instance_from_matrix(const double* entries, size_t n,
                                          double q, int validate,
                                          divmax_instance** out) {
  return guarded([&] {
    need(entries, "entries");
    emit(divmax::MetricInstance::from_matrix(
             std::vector<double>(entries, entries + n * n), n, q,
             validate != 0),
         out);
  });
}

divmax_status divmax_instance_parse(const char* text, double q, int validate,
                                    divmax_instance** out) {
  return guarded([&] {
    need(text, "text");
    emit(divmax::parse_instance(text, q, validate != 0), out);
  });
}

divmax_status divmax_instance_load(const char* path, double q, int validate,
                                   divmax_instance** out) {
  return guarded([&] {
    need(path, "path");
    emit(divmax::load_instance(path, q, validate != 0), out);
  });
}

divmax_status divmax_instance_save(const divmax_instance* inst,
                                   const char* path) {
  return guarded([&] {
    need(inst, "instance");
    need(path, "path");
    divmax::save_instance(inst->inst, path);
  });
}

divmax_status divmax_instance_to_text(const divmax_instance* inst, char* buf,
                                      size_t cap, size_t* needed) {
  return guarded([&] {
    need(inst, "instance");
    const std::string text = divmax::format_instance(inst->inst);
    if (needed != nullptr) *needed = text.size();
    if (buf != nullptr && cap > 0) {
      const size_t len = text.size() < cap - 1 ? text.size() : cap - 1;
      std::memcpy(buf, text.data(), len);
      buf[len] = '\0';
    }
  });
}

divmax_status divmax_instance_with_q(const divmax_instance* inst, double q,
                                     divmax_instance** out) {
  return guarded([&] {
    need(inst, "instance");
    emit(inst->inst.with_q(q), out);
  });
}

void divmax_instance_free(divmax_instance* inst) { delete inst; }

size_t divmax_instance_size(const divmax_instance* inst) {
  return inst == nullptr ? 0 : inst->inst.size();
}

size_t divmax_instance_dimension(const divmax_instance* inst) {
  return inst == nullptr ? 0 : inst->inst.dimension();
}

double divmax_instance_q(const divmax_instance* inst) {
  return inst == nullptr ? 0.0 : inst->inst.q();
}

divmax_status divmax_instance_distance(const divmax_instance* inst, size_t u,
                                       size_t v, double* out) {
  return guarded([&] {
    need(inst, "instance");
    need(out, "output");
    *out = inst->inst.dist(u, v);
  });
}

divmax_status divmax_instance_diameter_estimate(const divmax_instance* inst,
                                                double* out) {
  return guarded([&] {
    need(inst, "instance");
    need(out, "output");
    *out = divmax::diameter_estimate(inst->inst);
  });
}

divmax_status divmax_evaluate(const divmax_instance* inst,
                              divmax_objective obj, const size_t* subset,
                              size_t len, const divmax_options* opts,
                              double* out) {
  return guarded([&] {
    need(inst, "instance");
    need(subset, "subset");
    need(out, "output");
    const std::vector<divmax::PointIndex> pts(subset, subset + len);
    *out = divmax::objective_value(inst->inst, objective_of(obj), pts,
                                   eval_options(opts));
  });
}

divmax_status divmax_solve_brute(const divmax_instance* inst,
                                 divmax_objective obj, size_t k,
                                 const divmax_options* opts,
                                 divmax_solution** out) {
  return guarded([&] {
    need(inst, "instance");
    need(out, "output");
    emit(divmax::brute_force_opt(inst->inst, objective_of(obj), k,
                                 solve_options(opts)),
         out);
  });
}

divmax_status divmax_solve_greedy(const divmax_instance* inst, size_t k,
                                  const divmax_options* opts,
                                  divmax_solution** out) {
  return guarded([&] {
    need(inst, "instance");
    need(out, "output");
    emit(divmax::greedy_clique(inst->inst, k, solve_options(opts)), out);
  });
}

divmax_status divmax_solve_ptas(const divmax_instance* inst,
                                divmax_objective obj, size_t k, double eps,
                                const divmax_options* opts,
                                divmax_solution** out) {
  return guarded([&] {
    need(inst, "instance");
    need(out, "output");
    emit(divmax::solve(inst->inst, objective_of(obj), k, eps,
                       solve_options(opts)),
         out);
  });
}

divmax_status divmax_solve_fast_clique(const divmax_instance* inst, size_t k,
                                       double eps, const divmax_options* opts,
                                       divmax_solution** out) {
  return guarded([&] {
    need(inst, "instance");
    need(out, "output");
    emit(divmax::solve_fast(inst->inst, k, eps, solve_options(opts)), out);
  });
}

divmax_status divmax_min_bisection(const divmax_instance* inst,
                                   const size_t* points, size_t len,
                                   double eps, const divmax_options* opts,
                                   divmax_solution** out) {
  return guarded([&] {
    need(inst, "instance");
    need(points, "points");
    need(out, "output");
    const std::vector<divmax::PointIndex> pts(points, points + len);
    const divmax::BisectionResult r = divmax::min_bisection(
        inst->inst, pts, eps,
        opts != nullptr ? opts->budget : divmax::kDefaultBudget);
    divmax::Solution sol;
    sol.subset = r.left;
    sol.value = r.value;
    sol.algo = "min-bisection";
    sol.guarantee = 1.0 + eps;
    sol.candidates = r.candidates;
    sol.cells = r.cells_used;
    emit(std::move(sol), out);
  });
}

void divmax_solution_free(divmax_solution* sol) { delete sol; }

size_t divmax_solution_size(const divmax_solution* sol) {
  return sol == nullptr ? 0 : sol->sol.subset.size();
}

const size_t* divmax_solution_indices(const divmax_solution* sol) {
  return sol == nullptr ? nullptr : sol->sol.subset.data();
}

double divmax_solution_value(const divmax_solution* sol) {
  return sol == nullptr ? 0.0 : sol->sol.value;
}

double divmax_solution_guarantee(const divmax_solution* sol) {
  return sol == nullptr ? 0.0 : sol->sol.guarantee;
}

const char* divmax_solution_algo(const divmax_solution* sol) {
  return sol == nullptr ? "" : sol->sol.algo.c_str();
}

uint64_t divmax_solution_candidates(const divmax_solution* sol) {
  return sol == nullptr ? 0 : sol->sol.candidates;
}

size_t divmax_solution_cells(const divmax_solution* sol) {
  return sol == nullptr ? 0 : sol->sol.cells;
}

int divmax_solution_guess(const divmax_solution* sol, size_t* center,
                          double* scale) {
  if (sol == nullptr || !sol->sol.guess) return 0;
  if (center != nullptr) *center = sol->sol.guess->center;
  if (scale != nullptr) *scale = sol->sol.guess->scale;
  return 1;
}

divmax_status divmax_gen_uniform(size_t n, size_t dim, uint64_t seed,
                                 divmax_instance** out) {
  return guarded([&] { emit(divmax::gen_uniform(n, dim, seed), out); });
}

divmax_status divmax_gen_clustered(size_t n_cluster, double radius,
                                   const double* outliers, size_t n_outliers,
                                   size_t dim, uint64_t seed,
                                   divmax_instance** out) {
  return guarded([&] {
    if (n_outliers > 0) need(outliers, "outliers");
    std::vector<double> pts;
    if (n_outliers > 0) pts.assign(outliers, outliers + n_outliers * dim);
    emit(divmax::gen_clustered(n_cluster, radius, pts, dim, seed), out);
  });
}

divmax_status divmax_gen_graph12(const uint8_t* adjacency, size_t n,
                                 int validate, divmax_instance** out) {
  return guarded([&] {
    need(adjacency, "adjacency");
    emit(divmax::gen_graph_12metric(
             std::vector<std::uint8_t>(adjacency, adjacency + n * n), n,
             validate != 0),
         out);
  });
}

divmax_status divmax_gen_ksum(const int64_t* values, size_t len, size_t k,
                              int64_t t, divmax_instance** out) {
  return guarded([&] {
    emit(divmax::gen_ksum_reduction(ksum_of(values, len, k, t)), out);
  });
}

divmax_status divmax_verify_ksum(const int64_t* values, size_t len, size_t k,
                                 int64_t t, const divmax_instance* inst,
                                 divmax_ksum_verdict* out) {
  return guarded([&] {
    need(inst, "instance");
    need(out, "output");
    const divmax::ReductionVerdict v =
        divmax::verify_reduction(ksum_of(values, len, k, t), inst->inst);
    out->zero_sum_exists = v.zero_sum_exists ? 1 : 0;
    out->max_value = v.max_value;
    out->gap_bound = v.gap_bound;
    out->equivalence_ok = v.equivalence_ok ? 1 : 0;
    out->gap_ok = v.gap_ok ? 1 : 0;
  });
}

}  // extern "C"
