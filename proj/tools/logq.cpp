#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "logq/analytic.hpp"
#include "logq/encoding.hpp"
#include "logq/graph.hpp"
#include "logq/laplacian.hpp"
#include "logq/optimize.hpp"
#include "logq/oracle.hpp"
#include "logq/pauli.hpp"
#include "logq/state.hpp"

namespace {

constexpr const char* kArtifactVersion = "0.1.0";
constexpr double kPi = std::numbers::pi;

using ordered_json = nlohmann::ordered_json;

std::string iso_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::istringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    out.push_back(std::stoi(token));
  }
  return out;
}

// Shared graph source flags: a file path or --gnp n density seed.
struct GraphSource {
  std::string file;
  std::vector<double> gnp;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--graph", file, "edge-list file (\"n m\" header, then \"u v w\" lines)");
    auto* gflag = cmd->add_option("--gnp", gnp, "random G(n,p): n density seed")
                      ->expected(3);
    f->excludes(gflag);
  }

  bool configured() const { return !file.empty() || !gnp.empty(); }

  logq::Graph load() const {
    if (!file.empty()) return logq::load_edge_list_file(file);
    if (gnp.size() == 3) {
      const int n = static_cast<int>(gnp[0]);
      if (n != gnp[0])
        throw CLI::ValidationError("--gnp", "n must be an integer");
      return logq::gnp_random_graph(n, gnp[1],
                                    static_cast<std::uint64_t>(gnp[2]));
    }
    throw CLI::ValidationError("graph", "need --graph FILE or --gnp n density seed");
  }

  std::string describe() const {
    if (!file.empty()) return "file:" + file;
    std::ostringstream os;
    os << "gnp:" << gnp[0] << "," << gnp[1] << "," << gnp[2];
    return os.str();
  }
};

struct EncodingFlags {
  std::string kind = "distorted";
  double lambda = 5.0;
  double kappa = 0.2;
  double gamma = 0.6;
  bool kind_given = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--encoding", kind, "R function: step|sigmoid|distorted")
        ->check(CLI::IsMember({"step", "sigmoid", "distorted"}))
        ->each([this](const std::string&) { kind_given = true; });
    cmd->add_option("--lambda", lambda, "sigmoid steepness");
    cmd->add_option("--kappa", kappa, "edge distortion offset");
    cmd->add_option("--gamma", gamma, "domain extension fraction");
  }

  logq::EncodingSpec spec() const {
    logq::EncodingSpec enc;
    if (kind == "step")
      enc.kind = logq::EncodingKind::Step;
    else if (kind == "sigmoid")
      enc.kind = logq::EncodingKind::Sigmoid;
    else
      enc.kind = logq::EncodingKind::DistortedSigmoid;
    enc.lambda = lambda;
    enc.kappa = kappa;
    enc.gamma = gamma;
    if (enc.kind != logq::EncodingKind::Step) enc.validate();
    return enc;
  }
};

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

void write_laplacian_csv(const logq::LaplacianMatrix& lap, std::ostream& out) {
  for (int i = 0; i < lap.dim(); ++i) {
    for (int j = 0; j < lap.dim(); ++j) {
      if (j) out << ",";
      out << fmt_double(lap.entries(i, j));
    }
    out << "\n";
  }
}

void write_pauli_csv(const logq::PauliDecomposition& d, std::ostream& out) {
  for (const logq::PauliTerm& t : d.terms)
    out << t.letters << "," << fmt_double(t.coefficient) << "\n";
}

ordered_json make_manifest(const std::string& command, std::uint64_t seed,
                           const ordered_json& config) {
  ordered_json m;
  m["command"] = command;
  m["artifact_version"] = kArtifactVersion;
  m["seed"] = seed;
  m["timestamp"] = iso_timestamp();
  m["config"] = config;
  return m;
}

void write_solve_outputs(const std::string& out_prefix,
                         const ordered_json& doc,
                         const logq::SolveResult& result) {
  {
    std::ofstream js(out_prefix + ".json");
    if (!js) throw std::runtime_error("cannot write " + out_prefix + ".json");
    js << doc.dump(2) << "\n";
  }
  std::ofstream tr(out_prefix + "_trace.csv");
  if (!tr)
    throw std::runtime_error("cannot write " + out_prefix + "_trace.csv");
  tr << "eval,cost,best\n";
  for (const logq::TracePoint& p : result.cost_trace)
    tr << p.eval_index << "," << fmt_double(p.cost) << ","
       << fmt_double(p.best_cost) << "\n";
}

int run_solve(const GraphSource& src, const EncodingFlags& encf,
              std::string method, logq::GaConfig ga, logq::GradConfig grad,
              std::uint64_t seed, const std::string& out_prefix,
              const std::string& dump_lap, const std::string& dump_pauli,
              int threads) {
  const logq::Graph g = src.load();

  EncodingFlags ef = encf;
  if (!ef.kind_given) ef.kind = method == "ga" ? "step" : "distorted";
  const logq::EncodingSpec enc = ef.spec();

  ga.seed = seed;
  grad.seed = seed;
  const logq::SolveResult result =
      method == "ga" ? solve_ga(g, enc, ga) : solve_grad(g, enc, grad);

  if (!dump_lap.empty()) {
    std::ofstream file;
    write_laplacian_csv(logq::build_laplacian(g), open_sink(dump_lap, file));
  }
  if (!dump_pauli.empty()) {
    std::ofstream file;
    write_pauli_csv(logq::decompose(logq::build_laplacian(g), 1e-12, threads),
                    open_sink(dump_pauli, file));
  }

  std::cout << "graph: " << src.describe() << " (n=" << g.n_vertices()
            << ", m=" << g.n_edges() << ")\n"
            << "method: " << method << "\n"
            << "cut value: " << fmt_double(result.cut_value) << "\n"
            << "final cost: " << fmt_double(result.final_cost) << "\n"
            << "convergence diag: " << fmt_double(result.convergence_diag)
            << "\n"
            << "objective calls: " << result.objective_calls << "\n"
            << "qubits: " << result.complexity.n_qubits
            << "  parameters: " << result.complexity.n_params
            << "  cnot estimate: " << result.complexity.cnot_estimate
            << "  pauli terms: " << result.complexity.pauli_terms << "\n";

  if (!out_prefix.empty()) {
    ordered_json config;
    config["graph"] = src.describe();
    config["method"] = method;
    config["encoding"] = ef.kind;
    config["lambda"] = ef.lambda;
    config["kappa"] = ef.kappa;
    config["gamma"] = ef.gamma;
    if (method == "ga") {
      config["population_size"] = ga.population_size;
      config["generations"] = ga.generations;
      config["mutation_rate"] = ga.mutation_rate;
      config["crossover_rate"] = ga.crossover_rate;
      config["elite_count"] = ga.elite_count;
    } else {
      config["multistarts"] = grad.multistarts;
      config["max_evals"] = grad.max_evals;
      config["rhobeg_initial"] = grad.rhobeg_initial;
      config["post_lambda"] = grad.post_lambda;
      config["rhoend"] = grad.rhoend;
    }

    ordered_json doc;
    doc["manifest"] = make_manifest("solve", seed, config);
    doc["n_vertices"] = g.n_vertices();
    doc["n_edges"] = g.n_edges();
    doc["cut_value"] = result.cut_value;
    doc["final_cost"] = result.final_cost;
    doc["convergence_diag"] = result.convergence_diag;
    doc["objective_calls"] = result.objective_calls;
    doc["n_qubits"] = result.complexity.n_qubits;
    doc["n_params"] = result.complexity.n_params;
    doc["cnot_estimate"] = result.complexity.cnot_estimate;
    doc["pauli_terms"] = result.complexity.pauli_terms;
    doc["assignment"] = result.assignment;
    doc["best_theta"] = result.best_theta;
    write_solve_outputs(out_prefix, doc, result);
  }
  return 0;
}

struct BenchDefaults {
  int grad_evals(int n) const {
    if (n <= 50) return 250;
    if (n <= 128) return 500;
    return 750;
  }
  std::pair<int, int> ga_pop_gens(int n) const {
    if (n <= 50) return {20, 20};
    if (n <= 128) return {25, 20};
    return {25, 30};
  }
};

int run_bench(const std::vector<int>& sizes, double density,
              const std::vector<int>& seeds, const GraphSource& src,
              int grad_evals_override, int ga_pop_override,
              int ga_gens_override, const std::string& out) {
  std::ofstream file;
  std::ostream& os = open_sink(out, file);
  os << "# logq bench v" << kArtifactVersion << " density=" << density << "\n";
  os << "n,density,seed,method,final_cost,cut_value,objective_calls,"
        "wall_time_s\n";

  const BenchDefaults defaults;
  struct Instance {
    logq::Graph graph;
    int n;
    double density;
    int seed;
  };
  std::vector<Instance> instances;
  if (src.configured()) {
    for (int seed : seeds) {
      logq::Graph g = src.load();
      instances.push_back({g, g.n_vertices(), 0.0, seed});
    }
  } else {
    for (int n : sizes)
      for (int seed : seeds)
        instances.push_back(
            {logq::gnp_random_graph(n, density, seed), n, density, seed});
  }

  for (const Instance& inst : instances) {
    logq::EncodingSpec grad_enc;  // distorted, lambda from schedule
    logq::GradConfig gc;
    gc.max_evals = grad_evals_override > 0 ? grad_evals_override
                                           : defaults.grad_evals(inst.n);
    gc.seed = inst.seed;

    logq::EncodingSpec ga_enc;
    ga_enc.kind = logq::EncodingKind::Step;
    logq::GaConfig ac;
    const auto [pop, gens] = defaults.ga_pop_gens(inst.n);
    ac.population_size = ga_pop_override > 0 ? ga_pop_override : pop;
    ac.generations = ga_gens_override > 0 ? ga_gens_override : gens;
    ac.seed = inst.seed;

    for (const std::string& method : {std::string("grad"), std::string("ga")}) {
      const auto t0 = std::chrono::steady_clock::now();
      const logq::SolveResult r = method == "grad"
                                      ? solve_grad(inst.graph, grad_enc, gc)
                                      : solve_ga(inst.graph, ga_enc, ac);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      os << inst.n << "," << density << "," << inst.seed << "," << method
         << "," << fmt_double(r.final_cost) << "," << fmt_double(r.cut_value)
         << "," << r.objective_calls << "," << fmt_double(secs) << "\n";
    }
  }
  return 0;
}

int run_oracle(const GraphSource& src, int threads) {
  const logq::Graph g = src.load();
  const logq::BruteForceResult r = logq::brute_force_maxcut(g, threads);
  std::cout << fmt_double(r.best_value) << "\n";
  for (std::size_t i = 0; i < r.assignment.size(); ++i)
    std::cout << (i ? " " : "") << (r.assignment[i] > 0 ? "+1" : "-1");
  std::cout << "\n";
  return 0;
}

int run_analytic(double alpha, double beta, const EncodingFlags& encf,
                 const std::vector<double>& grid, const std::string& out) {
  logq::SliceRequest req;
  req.alpha = alpha;
  req.beta = beta;
  req.enc = encf.spec();
  if (grid.size() == 3) {
    req.start = grid[0];
    req.stop = grid[1];
    req.points = static_cast<int>(grid[2]);
  } else {
    req.start = -req.enc.gamma * kPi;
    req.stop = (2.0 + req.enc.gamma) * kPi;
    req.points = 2001;
  }
  const std::vector<logq::SlicePoint> pts = slice(req);

  std::ofstream file;
  std::ostream& os = open_sink(out, file);
  os << "# logq analytic v" << kArtifactVersion << " alpha=" << alpha
     << " beta=" << beta << " encoding=" << encf.kind
     << " lambda=" << encf.lambda << " kappa=" << encf.kappa
     << " gamma=" << encf.gamma << " points=" << req.points << "\n";
  os << "theta0,f\n";
  for (const logq::SlicePoint& p : pts)
    os << fmt_double(p.theta0) << "," << fmt_double(p.f) << "\n";
  return 0;
}

int run_dump(const std::string& what, const GraphSource& src,
             const std::string& out, int threads) {
  const logq::Graph g = src.load();
  const logq::LaplacianMatrix lap = logq::build_laplacian(g);
  std::ofstream file;
  std::ostream& os = open_sink(out, file);
  if (what == "laplacian")
    write_laplacian_csv(lap, os);
  else
    write_pauli_csv(logq::decompose(lap, 1e-12, threads), os);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"logq: log-qubit phase-encoded MaxCut/QUBO solver"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file");

  int threads = 1;
  app.add_option("--threads", threads, "worker cap for parallel sections")
      ->envname("LOGQ_THREADS");

  // --- solve ---
  auto* solve = app.add_subcommand("solve", "optimize one instance");
  GraphSource solve_src;
  solve_src.attach(solve);
  EncodingFlags solve_enc;
  solve_enc.attach(solve);
  std::string method = "grad";
  solve->add_option("--method", method, "ga|grad")
      ->check(CLI::IsMember({"ga", "grad"}));
  logq::GaConfig ga;
  solve->add_option("--pop", ga.population_size, "GA population size");
  solve->add_option("--gens", ga.generations, "GA generations");
  solve->add_option("--mutation-rate", ga.mutation_rate, "GA per-gene rate");
  solve->add_option("--crossover-rate", ga.crossover_rate, "GA pair rate");
  solve->add_option("--elite", ga.elite_count, "GA elite count");
  logq::GradConfig grad;
  solve->add_option("--multistarts", grad.multistarts, "random initializations");
  solve->add_option("--max-evals", grad.max_evals,
                    "objective budget (0: 100 per parameter)");
  solve->add_option("--rhobeg", grad.rhobeg_initial, "initial trust radius");
  solve->add_option("--post-lambda", grad.post_lambda, "refinement lambda");
  solve->add_option("--rhoend", grad.rhoend, "trust radius cutoff");
  std::uint64_t seed = 0;
  solve->add_option("--seed", seed, "optimizer seed");
  std::string out_prefix, dump_lap_path, dump_pauli_path;
  solve->add_option("--out", out_prefix, "write PREFIX.json and PREFIX_trace.csv");
  solve->add_option("--dump-laplacian", dump_lap_path, "CSV file or - for stdout")
      ->expected(0, 1)->default_str("-");
  solve->add_option("--dump-pauli", dump_pauli_path, "CSV file or - for stdout")
      ->expected(0, 1)->default_str("-");

  // --- bench ---
  auto* bench = app.add_subcommand("bench", "grad vs GA comparison table");
  std::string sizes_csv = "50,128";
  std::string seeds_csv = "0,1,2,3,4";
  double density = 0.3;
  GraphSource bench_src;
  bench_src.attach(bench);
  bench->add_option("--sizes", sizes_csv,
                    "comma-separated instance sizes (empty for none)");
  bench->add_option("--density", density, "G(n,p) density");
  bench->add_option("--seeds", seeds_csv, "comma-separated seeds");
  int bench_grad_evals = 0, bench_ga_pop = 0, bench_ga_gens = 0;
  bench->add_option("--grad-evals", bench_grad_evals,
                    "override grad budget (default per size)");
  bench->add_option("--ga-pop", bench_ga_pop, "override GA population");
  bench->add_option("--ga-gens", bench_ga_gens, "override GA generations");
  std::string bench_out = "-";
  bench->add_option("--out", bench_out, "CSV file or - for stdout");

  // --- oracle ---
  auto* oracle = app.add_subcommand("oracle", "brute-force MaxCut (n <= 24)");
  GraphSource oracle_src;
  oracle_src.attach(oracle);

  // --- analytic ---
  auto* analytic =
      app.add_subcommand("analytic", "landscape slice f_{alpha,beta}(theta0)");
  double alpha = 0.0, beta = 0.0;
  analytic->add_option("--alpha", alpha, "stands in for R(theta_1)");
  analytic->add_option("--beta", beta, "stands in for R(theta_2)");
  EncodingFlags analytic_enc;
  analytic_enc.attach(analytic);
  std::vector<double> grid;
  analytic->add_option("--grid", grid, "start stop points")->expected(3);
  std::string analytic_out = "-";
  analytic->add_option("--out", analytic_out, "CSV file or - for stdout");

  // --- dump ---
  auto* dump = app.add_subcommand("dump", "emit laplacian or pauli CSV");
  std::string dump_what;
  dump->add_option("what", dump_what, "laplacian|pauli")
      ->required()
      ->check(CLI::IsMember({"laplacian", "pauli"}));
  GraphSource dump_src;
  dump_src.attach(dump);
  std::string dump_out = "-";
  dump->add_option("--out", dump_out, "CSV file or - for stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return run_solve(solve_src, solve_enc, method, ga, grad, seed,
                       out_prefix, dump_lap_path, dump_pauli_path, threads);
    if (bench->parsed())
      return run_bench(parse_int_list(sizes_csv), density,
                       parse_int_list(seeds_csv), bench_src, bench_grad_evals,
                       bench_ga_pop, bench_ga_gens, bench_out);
    if (oracle->parsed()) return run_oracle(oracle_src, threads);
    if (analytic->parsed())
      return run_analytic(alpha, beta, analytic_enc, grid, analytic_out);
    if (dump->parsed()) return run_dump(dump_what, dump_src, dump_out, threads);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
