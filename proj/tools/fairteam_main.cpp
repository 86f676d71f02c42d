#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairteam/approx_submodular.hpp"
#include "fairteam/exact.hpp"
#include "fairteam/fairness.hpp"
#include "fairteam/fptas_additive.hpp"
#include "fairteam/instances.hpp"
#include "fairteam/json_io.hpp"

namespace {

using fairteam::Instance;
using fairteam::SolveResult;
using nlohmann::json;

struct SolveOptions {
  double gamma = 0.2;
  fairteam::SubmodApproxParams submod;
  int cap = fairteam::kDefaultEnumCap;
};

SolveResult run_algorithm(const Instance& inst, const std::string& algorithm,
                          const SolveOptions& opts) {
  if (algorithm == "exact") return fairteam::optimal_fair_bruteforce(inst, opts.cap);
  if (algorithm == "exact-nd") {
    return fairteam::optimal_nondiscriminatory_bruteforce(inst, opts.cap);
  }
  if (algorithm == "nd-greedy") return fairteam::nondiscriminatory_additive(inst);
  if (algorithm == "fptas") return fairteam::fptas(inst, opts.gamma);
  if (algorithm == "submodular-approx") {
    auto params = opts.submod;
    params.enum_cap = opts.cap;
    return fairteam::constant_approx(inst, params);
  }
  throw fairteam::PreconditionError("unknown algorithm '" + algorithm + "'");
}

void print_warnings(const Instance& inst) {
  for (const auto& w : inst.warnings()) std::cerr << "warning: " << w << "\n";
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int run_gen(const std::string& kind, const std::string& out_path, int n,
            std::uint64_t seed, double cost_scale,
            const std::vector<std::int64_t>& weights, int k) {
  json metadata = {{"name", kind}};
  Instance inst = [&]() -> Instance {
    if (kind == "e1") return fairteam::worked_example(fairteam::WorkedExample::kE1);
    if (kind == "e2") return fairteam::worked_example(fairteam::WorkedExample::kE2);
    if (kind == "e3") return fairteam::worked_example(fairteam::WorkedExample::kE3);
    if (kind == "additive" || kind == "coverage") {
      metadata["seed"] = seed;
      metadata["cost_scale"] = cost_scale;
      return fairteam::random_instance(kind == "additive"
                                           ? fairteam::RandomKind::kAdditive
                                           : fairteam::RandomKind::kCoverage,
                                       n, seed, cost_scale);
    }
    if (kind == "subset-sum") {
      fairteam::SubsetSumSpec spec{weights, k};
      auto built = fairteam::subset_sum_instance(spec);
      metadata["weights"] = weights;
      metadata["k"] = k;
      metadata["threshold"] = built.threshold;
      return built.instance;
    }
    throw fairteam::PreconditionError("unknown generator kind '" + kind + "'");
  }();
  fairteam::save_instance_file(out_path, inst, metadata);
  print_warnings(inst);
  return 0;
}

struct BenchJob {
  std::string id;
  std::string algorithm;
  int n = 0;
  std::uint64_t seed = 0;
  std::string kind;
};

int run_bench(const std::string& kinds_csv, const std::string& sizes_csv,
              const std::string& seeds_csv, const std::string& algos_csv,
              const std::string& out_path, double cost_scale,
              const SolveOptions& opts) {
  std::vector<BenchJob> jobs;
  for (const auto& kind : split_list(kinds_csv)) {
    for (const auto& size : split_list(sizes_csv)) {
      for (const auto& seed : split_list(seeds_csv)) {
        const int n = std::stoi(size);
        const auto s = static_cast<std::uint64_t>(std::stoull(seed));
        for (const auto& algo : split_list(algos_csv)) {
          jobs.push_back({kind + "-n" + size + "-s" + seed, algo, n, s, kind});
        }
      }
    }
  }
  std::sort(jobs.begin(), jobs.end(), [](const BenchJob& a, const BenchJob& b) {
    return std::tie(a.id, a.algorithm) < std::tie(b.id, b.algorithm);
  });

  std::ifstream probe(out_path);
  const bool need_header = !probe.good() || probe.peek() == std::ifstream::traits_type::eof();
  probe.close();
  std::ofstream out(out_path, std::ios::app);
  if (!out) throw fairteam::SchemaError("cannot write benchmark file: " + out_path);
  if (need_header) {
    out << "instance,n,algorithm,revenue,exact_opt,ratio,wall_time_ms,params\n";
  }

  std::string last_id;
  double exact_opt = 0.0;
  bool have_exact = false;
  for (const auto& job : jobs) {
    const Instance inst = fairteam::random_instance(
        job.kind == "additive" ? fairteam::RandomKind::kAdditive
                               : fairteam::RandomKind::kCoverage,
        job.n, job.seed, cost_scale);
    if (job.id != last_id) {
      last_id = job.id;
      have_exact = job.n <= opts.cap;
      if (have_exact) exact_opt = fairteam::optimal_fair_bruteforce(inst, opts.cap).revenue;
    }

    const auto start = std::chrono::steady_clock::now();
    const SolveResult result = run_algorithm(inst, job.algorithm, opts);
    const auto stop = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(stop - start)
            .count();

    std::string params;
    for (const auto& [key, value] : result.params) {
      if (!params.empty()) params += ";";
      std::ostringstream kv;
      kv << key << "=" << value;
      params += kv.str();
    }
    std::ostringstream row;
    row.precision(17);
    row << job.id << "," << job.n << "," << job.algorithm << "," << result.revenue << ",";
    if (have_exact) row << exact_opt;
    row << ",";
    if (have_exact && exact_opt > 0.0) row << result.revenue / exact_opt;
    row << "," << ms << "," << params << "\n";
    out << row.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair team contracts: solvers, checkers and instance tools"};
  app.require_subcommand(1);

  std::string input_path, contract_path, out_path, algorithm, kind;
  std::string kinds = "additive", sizes = "6", seeds = "1", algorithms = "exact";
  bool pessimistic = false, pretty = false;
  int n = 6, k = 1;
  std::uint64_t seed = 1;
  double cost_scale = 0.5;
  std::vector<std::int64_t> weights;
  SolveOptions opts;

  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("--input", input_path, "Instance JSON file")->required();
  solve->add_option("--algorithm", algorithm,
                    "exact | exact-nd | nd-greedy | fptas | submodular-approx")
      ->required();
  solve->add_option("--gamma", opts.gamma, "FPTAS accuracy parameter in (0,1]");
  solve->add_option("--tau", opts.submod.tau, "Small-share threshold scale");
  solve->add_option("--delta", opts.submod.delta, "Large-singleton threshold scale");
  solve->add_option("--eta", opts.submod.eta, "Reward ladder ratio");
  solve->add_option("--beta", opts.submod.beta, "Share ladder ratio");
  solve->add_flag("--rescore", opts.submod.rescore,
                  "Pick the branch by fair revenue instead of g");
  solve->add_option("--cap", opts.cap, "Enumeration cap (agents)");
  solve->add_flag("--pretty", pretty, "Indent the JSON output");

  auto* verify = app.add_subcommand("verify", "Check fairness of a contract");
  verify->add_option("--input", input_path, "Instance JSON file")->required();
  verify->add_option("--contract", contract_path, "Contract JSON file")->required();
  verify->add_flag("--pessimistic", pessimistic,
                   "Require every post-swap equilibrium to be envy-free");
  verify->add_option("--cap", opts.cap, "Enumeration cap (agents)");
  verify->add_flag("--pretty", pretty, "Indent the JSON output");

  auto* gen = app.add_subcommand("gen", "Write an instance file");
  gen->add_option("--kind", kind, "e1 | e2 | e3 | additive | coverage | subset-sum")
      ->required();
  gen->add_option("--out", out_path, "Output path")->required();
  gen->add_option("--n", n, "Agent count for random kinds");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--cost-scale", cost_scale, "Cost scale for random kinds");
  gen->add_option("--weights", weights, "Subset-sum weights");
  gen->add_option("--k", k, "Subset-sum subset size");

  auto* bench = app.add_subcommand("bench", "Sweep random instances into a CSV");
  bench->add_option("--kinds", kinds, "Comma-separated: additive,coverage");
  bench->add_option("--sizes", sizes, "Comma-separated agent counts");
  bench->add_option("--seeds", seeds, "Comma-separated seeds");
  bench->add_option("--algorithms", algorithms, "Comma-separated algorithm names");
  bench->add_option("--out", out_path, "CSV output path")->required();
  bench->add_option("--gamma", opts.gamma, "FPTAS accuracy parameter");
  bench->add_option("--cost-scale", cost_scale, "Cost scale for random kinds");
  bench->add_option("--cap", opts.cap, "Enumeration cap (agents)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      const auto file = fairteam::load_instance_file(input_path);
      print_warnings(file.instance);
      const SolveResult result = run_algorithm(file.instance, algorithm, opts);
      const json j = fairteam::result_to_json(result);
      std::cout << (pretty ? fairteam::canonical_dump(j) : j.dump() + "\n");
      return 0;
    }
    if (verify->parsed()) {
      const auto file = fairteam::load_instance_file(input_path);
      print_warnings(file.instance);
      const auto contract = fairteam::load_contract_file(contract_path, file.instance);
      const auto semantics = pessimistic ? fairteam::FairnessSemantics::kPessimistic
                                         : fairteam::FairnessSemantics::kOptimistic;
      const auto verdict =
          fairteam::is_fair_definitional(file.instance, contract, semantics, opts.cap);
      const json j = fairteam::verdict_to_json(verdict, semantics);
      std::cout << (pretty ? fairteam::canonical_dump(j) : j.dump() + "\n");
      return 0;
    }
    if (gen->parsed()) return run_gen(kind, out_path, n, seed, cost_scale, weights, k);
    if (bench->parsed()) {
      return run_bench(kinds, sizes, seeds, algorithms, out_path, cost_scale, opts);
    }
  } catch (const fairteam::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const fairteam::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const fairteam::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
