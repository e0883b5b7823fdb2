// divmax command-line front end: solve, gen and bench subcommands on top of
// the C interface.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "divmax/divmax.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitMismatch = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RuntimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceDeleter {
  void operator()(divmax_instance* p) const { divmax_instance_free(p); }
};
struct SolutionDeleter {
  void operator()(divmax_solution* p) const { divmax_solution_free(p); }
};
using Instance = std::unique_ptr<divmax_instance, InstanceDeleter>;
using Solution = std::unique_ptr<divmax_solution, SolutionDeleter>;

void check(divmax_status status, const std::string& context) {
  if (status == DIVMAX_OK) return;
  throw RuntimeError(context + ": " + divmax_status_name(status) + ": " +
                     divmax_last_error());
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

Instance load(const std::string& path, double q) {
  divmax_instance* raw = nullptr;
  check(divmax_instance_load(path.c_str(), q, 1, &raw), "loading " + path);
  return Instance(raw);
}

double evaluate(const divmax_instance* inst, divmax_objective obj,
                const std::vector<std::size_t>& subset,
                const divmax_options& opts) {
  double v = 0.0;
  check(divmax_evaluate(inst, obj, subset.data(), subset.size(), &opts, &v),
        "re-evaluating the reported subset");
  return v;
}

bool same_value(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
}

Solution run_algo(const std::string& algo, const divmax_instance* inst,
                  divmax_objective obj, std::size_t k, double eps,
                  const divmax_options& opts) {
  divmax_solution* raw = nullptr;
  divmax_status st = DIVMAX_OK;
  if (algo == "brute") {
    st = divmax_solve_brute(inst, obj, k, &opts, &raw);
  } else if (algo == "greedy") {
    st = divmax_solve_greedy(inst, k, &opts, &raw);
  } else if (algo == "ptas") {
    st = divmax_solve_ptas(inst, obj, k, eps, &opts, &raw);
  } else {
    st = divmax_solve_fast_clique(inst, k, eps, &opts, &raw);
  }
  check(st, algo);
  return Solution(raw);
}

std::vector<std::size_t> indices(const divmax_solution* sol) {
  const std::size_t* p = divmax_solution_indices(sol);
  return std::vector<std::size_t>(p, p + divmax_solution_size(sol));
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string in;
  std::string objective = "clique";
  double q = 1.0;
  std::size_t k = 0;
  std::string algo = "ptas";
  double eps = 0.3;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  bool oracle = false;
  unsigned threads = 0;
  bool exact_pair = false;
};

int cmd_solve(const SolveArgs& a) {
  divmax_objective obj{};
  if (divmax_parse_objective(a.objective.c_str(), &obj) != DIVMAX_OK)
    throw UsageError(divmax_last_error());
  if ((a.algo == "greedy" || a.algo == "fast-clique") && obj != DIVMAX_CLIQUE)
    throw UsageError("--algo " + a.algo + " requires --objective clique");
  if (a.algo == "fast-clique" && a.q != 1.0)
    throw UsageError("--algo fast-clique requires --q 1");
  const bool uses_eps = a.algo == "ptas" || a.algo == "fast-clique";
  if (uses_eps && !(a.eps > 0.0 && a.eps < 1.0))
    throw UsageError("--eps must lie in (0, 1)");

  divmax_options opts;
  divmax_options_init(&opts);
  if (a.budget > 0) opts.budget = a.budget;
  opts.threads = a.threads;
  opts.exact_farthest_pair = a.exact_pair ? 1 : 0;
  if (uses_eps) opts.bisection_eps = a.eps;

  const Instance inst = load(a.in, a.q);
  const auto start = std::chrono::steady_clock::now();
  const Solution sol = run_algo(a.algo, inst.get(), obj, a.k, a.eps, opts);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  const std::vector<std::size_t> subset = indices(sol.get());
  const double value = divmax_solution_value(sol.get());
  const double check_value = evaluate(inst.get(), obj, subset, opts);
  bool verified = subset.size() == a.k && same_value(check_value, value);
  for (std::size_t i = 1; i < subset.size(); ++i)
    verified = verified && subset[i - 1] < subset[i];

  std::ostringstream line;
  line << "algo=" << divmax_solution_algo(sol.get())
       << " objective=" << divmax_objective_name(obj) << " q=" << fmt(a.q)
       << " k=" << a.k << " n=" << divmax_instance_size(inst.get());
  if (uses_eps) line << " eps=" << fmt(a.eps);
  line << " seed=" << a.seed << " value=" << fmt(check_value) << " subset=";
  for (std::size_t i = 0; i < subset.size(); ++i)
    line << (i ? "," : "") << subset[i];
  line << " guarantee=" << fmt(divmax_solution_guarantee(sol.get()))
       << " candidates=" << divmax_solution_candidates(sol.get())
       << " cells=" << divmax_solution_cells(sol.get());
  double ratio = 1.0;
  if (a.oracle) {
    const Solution opt = run_algo("brute", inst.get(), obj, a.k, a.eps, opts);
    const double best = divmax_solution_value(opt.get());
    ratio = best > 0.0 ? check_value / best : 1.0;
    line << " oracle=" << fmt(best) << " ratio=" << fmt(ratio);
    verified = verified && ratio <= 1.0 + 1e-9;
  }
  line << " verified=" << (verified ? 1 : 0);
  std::cout << line.str() << '\n';

  std::cerr << a.algo << " on " << a.in << ": value " << fmt(check_value)
            << " with k=" << a.k;
  if (a.oracle) std::cerr << ", ratio " << fmt(ratio);
  std::cerr << ", " << fmt(seconds) << " s\n";
  if (!verified) {
    std::cerr << "error: reported solution failed re-verification (solver "
              << fmt(value) << ", evaluated " << fmt(check_value) << ")\n";
    return kExitMismatch;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string out;
  std::uint64_t seed = 0;
  std::size_t n = 100;
  std::size_t dim = 2;
  double radius = 0.01;
  std::string outliers;
  std::string values;
  std::size_t big_k = 2;
  std::int64_t t = 0;
  std::string edges;
  double p = -1.0;
};

void write_instance(const divmax_instance* inst, const std::string& out,
                    const std::string& what) {
  std::size_t needed = 0;
  check(divmax_instance_to_text(inst, nullptr, 0, &needed), "formatting");
  std::string text(needed + 1, '\0');
  check(divmax_instance_to_text(inst, text.data(), text.size(), &needed),
        "formatting");
  text.resize(needed);
  if (out.empty() || out == "-") {
    std::cout << text;
    std::cerr << what << '\n';
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw RuntimeError("cannot open " + out + " for writing");
  file << text;
  if (!file) throw RuntimeError("failed writing " + out);
  std::cout << out << ": " << what << '\n';
}

int cmd_gen_uniform(const GenArgs& a) {
  divmax_instance* raw = nullptr;
  check(divmax_gen_uniform(a.n, a.dim, a.seed, &raw), "gen uniform");
  const Instance inst(raw);
  write_instance(inst.get(), a.out,
                 std::to_string(a.n) + " uniform points in [0,1]^" +
                     std::to_string(a.dim));
  return kExitOk;
}

int cmd_gen_clustered(const GenArgs& a) {
  std::vector<double> coords;
  std::size_t dim = a.dim;
  std::size_t rows = 0;
  if (!a.outliers.empty()) {
    std::size_t width = 0;
    for (const std::string& row : split(a.outliers, ';')) {
      const auto cells = split(row, ',');
      if (width == 0) width = cells.size();
      if (cells.size() != width || width == 0)
        throw UsageError("outliers must all have the same dimension");
      for (const std::string& c : cells) coords.push_back(parse_real(c));
      ++rows;
    }
    dim = width;
  }
  divmax_instance* raw = nullptr;
  check(divmax_gen_clustered(a.n, a.radius, coords.data(), rows, dim, a.seed,
                             &raw),
        "gen clustered");
  const Instance inst(raw);
  write_instance(inst.get(), a.out,
                 std::to_string(a.n) + " cluster points of radius " +
                     fmt(a.radius) + " plus " + std::to_string(rows) +
                     " outliers, " + std::to_string(a.n + rows) + " points");
  return kExitOk;
}

int cmd_gen_ksum(const GenArgs& a) {
  std::vector<std::int64_t> values;
  for (const std::string& v : split(a.values, ',')) values.push_back(parse_int(v));
  if (values.empty()) throw UsageError("--m needs at least one integer");
  std::int64_t t = a.t;
  if (t == 0)
    for (std::int64_t v : values) t = std::max<std::int64_t>(t, v < 0 ? -v : v);
  t = std::max<std::int64_t>(t, 1);
  divmax_instance* raw = nullptr;
  check(divmax_gen_ksum(values.data(), values.size(), a.big_k, t, &raw),
        "gen ksum");
  const Instance inst(raw);
  write_instance(inst.get(), a.out,
                 std::to_string(2 * values.size()) +
                     " unit vectors in R^3 for K=" + std::to_string(a.big_k) +
                     ", t=" + std::to_string(t));
  return kExitOk;
}

int cmd_gen_graph12(const GenArgs& a) {
  const std::size_t n = a.n;
  std::vector<std::uint8_t> adj(n * n, 0);
  std::size_t edge_count = 0;
  if (!a.edges.empty()) {
    for (const std::string& e : split(a.edges, ',')) {
      const auto ends = split(e, '-');
      if (ends.size() != 2) throw UsageError("edge '" + e + "' is not u-v");
      const auto u = static_cast<std::size_t>(parse_int(ends[0]));
      const auto v = static_cast<std::size_t>(parse_int(ends[1]));
      if (u >= n || v >= n || u == v)
        throw UsageError("edge '" + e + "' is out of range or a loop");
      if (!adj[u * n + v]) ++edge_count;
      adj[u * n + v] = adj[v * n + u] = 1;
    }
  } else if (a.p >= 0.0) {
    if (a.p > 1.0) throw UsageError("--p must lie in [0, 1]");
    std::mt19937_64 rng(a.seed);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < a.p) {
          adj[u * n + v] = adj[v * n + u] = 1;
          ++edge_count;
        }
  }
  divmax_instance* raw = nullptr;
  check(divmax_gen_graph12(adj.data(), n, 1, &raw), "gen graph12");
  const Instance inst(raw);
  write_instance(inst.get(), a.out,
                 "(1,2)-metric on " + std::to_string(n) + " vertices with " +
                     std::to_string(edge_count) + " edges");
  return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string suite;
  std::string out;
  std::string fixtures;
  std::vector<std::size_t> sizes{10000, 20000, 40000, 80000};
  std::size_t k = 4;
  double eps = 0.5;
  std::size_t dim = 1;
  std::size_t reps = 3;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw RuntimeError("cannot open " + path + " for writing");
  return file;
}

int bench_scaling(const BenchArgs& a) {
  divmax_options opts;
  divmax_options_init(&opts);
  opts.threads = a.threads;
  std::ofstream file;
  std::ostream& out = open_out(a.out, file);
  out << "n\tD\tk\teps\tseconds\ttime_ratio\tvalue\tgreedy\tcells\n";
  double prev = 0.0;
  for (std::size_t n : a.sizes) {
    divmax_instance* raw = nullptr;
    check(divmax_gen_uniform(n, a.dim, a.seed, &raw), "gen uniform");
    const Instance inst(raw);
    std::vector<double> times;
    double value = 0.0;
    std::size_t cells = 0;
    for (std::size_t r = 0; r < std::max<std::size_t>(a.reps, 1); ++r) {
      const auto start = std::chrono::steady_clock::now();
      const Solution sol =
          run_algo("fast-clique", inst.get(), DIVMAX_CLIQUE, a.k, a.eps, opts);
      times.push_back(std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count());
      value = divmax_solution_value(sol.get());
      cells = divmax_solution_cells(sol.get());
    }
    std::sort(times.begin(), times.end());
    const double median = times[times.size() / 2];
    const Solution greedy =
        run_algo("greedy", inst.get(), DIVMAX_CLIQUE, a.k, a.eps, opts);
    out << n << '\t' << a.dim << '\t' << a.k << '\t' << fmt(a.eps) << '\t'
        << fmt(median) << '\t' << (prev > 0.0 ? fmt(median / prev) : "-")
        << '\t' << fmt(value) << '\t'
        << fmt(divmax_solution_value(greedy.get())) << '\t' << cells << '\n';
    prev = median;
  }
  return kExitOk;
}

struct Fixture {
  std::string name;
  Instance inst;
};

std::vector<Fixture> load_fixtures(const BenchArgs& a) {
  std::vector<Fixture> fixtures;
  if (a.fixtures.empty()) {
    for (std::uint64_t s = 0; s < 6; ++s) {
      divmax_instance* raw = nullptr;
      const std::size_t dim = 1 + s % 3;
      check(divmax_gen_uniform(10, dim, a.seed + s, &raw), "gen uniform");
      fixtures.push_back({"uniform-D" + std::to_string(dim) + "-seed" +
                              std::to_string(a.seed + s),
                          Instance(raw)});
    }
    return fixtures;
  }
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(a.fixtures, ec))
    throw RuntimeError("fixture directory " + a.fixtures + " does not exist");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.fixtures))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty())
    throw RuntimeError("fixture directory " + a.fixtures + " is empty");
  for (const auto& f : files)
    fixtures.push_back({f.filename().string(), load(f.string(), 1.0)});
  return fixtures;
}

int bench_ratios(const BenchArgs& a) {
  divmax_options opts;
  divmax_options_init(&opts);
  opts.threads = a.threads;
  const std::vector<Fixture> fixtures = load_fixtures(a);
  std::ofstream file;
  std::ostream& out = open_out(a.out, file);
  out << "fixture\tobjective\tq\tk\talgo\teps\tvalue\topt\tratio\tbound\tok\n";
  std::size_t failures = 0;
  const divmax_objective objectives[] = {DIVMAX_CLIQUE, DIVMAX_STAR,
                                         DIVMAX_BIPARTITION};
  for (const Fixture& fx : fixtures) {
    for (double q : {1.0, 2.0}) {
      divmax_instance* raw = nullptr;
      check(divmax_instance_with_q(fx.inst.get(), q, &raw), "with_q");
      const Instance inst(raw);
      const std::size_t k = std::min(a.k, divmax_instance_size(inst.get()));
      for (divmax_objective obj : objectives) {
        if (obj == DIVMAX_BIPARTITION && k % 2 != 0) continue;
        const Solution opt = run_algo("brute", inst.get(), obj, k, 0.0, opts);
        const double best = divmax_solution_value(opt.get());
        auto row = [&](const std::string& algo, double eps, double bound) {
          const Solution sol = run_algo(algo, inst.get(), obj, k, eps, opts);
          const double v = evaluate(inst.get(), obj, indices(sol.get()), opts);
          const double ratio = best > 0.0 ? v / best : 1.0;
          const bool ok = ratio >= bound - 1e-9 && ratio <= 1.0 + 1e-9;
          failures += ok ? 0 : 1;
          out << fx.name << '\t' << divmax_objective_name(obj) << '\t'
              << fmt(q) << '\t' << k << '\t' << algo << '\t'
              << (eps > 0.0 ? fmt(eps) : "-") << '\t' << fmt(v) << '\t'
              << fmt(best) << '\t' << fmt(ratio) << '\t' << fmt(bound) << '\t'
              << (ok ? "yes" : "NO") << '\n';
        };
        for (double eps : {0.2, 0.5}) row("ptas", eps, 1.0 - eps);
        if (obj == DIVMAX_CLIQUE) {
          row("greedy", 0.0, q == 1.0 ? 0.49 : 0.0);
          if (q == 1.0)
            for (double eps : {0.05, 0.1}) row("fast-clique", eps, 1.0 - 8 * eps);
        }
      }
    }
  }
  if (failures > 0) {
    std::cerr << "error: " << failures << " rows below their bound\n";
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diversity maximization: exact, greedy and approximation-scheme "
               "solvers, instance generators and benchmarks"};
  app.require_subcommand(1);

  SolveArgs sa;
  CLI::App* solve = app.add_subcommand("solve", "Run a solver on an instance file");
  solve->add_option("--in", sa.in, "Instance file")->required();
  solve->add_option("--objective", sa.objective, "clique, star or bipartition")
      ->capture_default_str();
  solve->add_option("--q", sa.q, "Distance exponent, at least 1")
      ->capture_default_str();
  solve->add_option("--k", sa.k, "Subset size")->required();
  solve->add_option("--algo", sa.algo, "brute, greedy, ptas or fast-clique")
      ->check(CLI::IsMember({"brute", "greedy", "ptas", "fast-clique"}))
      ->capture_default_str();
  solve->add_option("--eps", sa.eps, "Accuracy in (0, 1)")->capture_default_str();
  solve->add_option("--seed", sa.seed, "Recorded in the output; solvers are deterministic");
  solve->add_option("--budget", sa.budget, "Candidate budget (0 keeps the default)");
  solve->add_flag("--oracle", sa.oracle, "Also run brute force and report the ratio");
  solve->add_option("--threads", sa.threads, "Worker threads (0: all cores)")
      ->capture_default_str();
  solve->add_flag("--exact-pair", sa.exact_pair,
                  "Greedy starts from the exact farthest pair");

  GenArgs ga;
  CLI::App* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", ga.out, "Output file (default: stdout)");
    sub->add_option("--seed", ga.seed, "Random seed")->capture_default_str();
  };
  CLI::App* uniform = gen->add_subcommand("uniform", "Uniform points in [0,1]^D");
  common(uniform);
  uniform->add_option("--n", ga.n, "Number of points")->capture_default_str();
  uniform->add_option("--d", ga.dim, "Dimension")->capture_default_str();
  CLI::App* clustered =
      gen->add_subcommand("clustered", "A small ball of points plus outliers");
  common(clustered);
  clustered->add_option("--n", ga.n, "Cluster points")->capture_default_str();
  clustered->add_option("--radius", ga.radius, "Cluster radius")->capture_default_str();
  clustered->add_option("--outliers", ga.outliers, "Points as \"x,y;x,y\"");
  clustered->add_option("--d", ga.dim, "Dimension when there are no outliers")
      ->capture_default_str();
  CLI::App* ksum = gen->add_subcommand("ksum", "K-SUM hardness reduction");
  common(ksum);
  ksum->add_option("--m", ga.values, "Integers as \"a,b,c\"")->required();
  ksum->add_option("--k", ga.big_k, "K")->capture_default_str();
  ksum->add_option("--t", ga.t, "Bound on |m| (default: max |m|)");
  CLI::App* graph12 = gen->add_subcommand("graph12", "(1,2)-metric of a graph");
  common(graph12);
  graph12->add_option("--n", ga.n, "Vertices")->required();
  graph12->add_option("--edges", ga.edges, "Edges as \"0-1,1-2\"");
  graph12->add_option("--p", ga.p, "Random edge probability");

  BenchArgs ba;
  CLI::App* bench = app.add_subcommand("bench", "Benchmark tables");
  bench->add_option("--suite", ba.suite, "scaling or ratios")
      ->required()
      ->check(CLI::IsMember({"scaling", "ratios"}));
  bench->add_option("--out", ba.out, "Table file (default: stdout)");
  bench->add_option("--fixtures", ba.fixtures, "Directory of instance files (ratios)");
  bench->add_option("--sizes", ba.sizes, "Instance sizes (scaling)")->delimiter(',');
  bench->add_option("--k", ba.k, "Subset size")->capture_default_str();
  bench->add_option("--eps", ba.eps, "Accuracy (scaling)")->capture_default_str();
  bench->add_option("--d", ba.dim, "Dimension (scaling)")->capture_default_str();
  bench->add_option("--reps", ba.reps, "Repetitions, median reported")
      ->capture_default_str();
  bench->add_option("--seed", ba.seed, "Random seed")->capture_default_str();
  bench->add_option("--threads", ba.threads, "Worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(sa);
    if (*uniform) return cmd_gen_uniform(ga);
    if (*clustered) return cmd_gen_clustered(ga);
    if (*ksum) return cmd_gen_ksum(ga);
    if (*graph12) return cmd_gen_graph12(ga);
    if (*bench) return ba.suite == "scaling" ? bench_scaling(ba) : bench_ratios(ba);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const RuntimeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
