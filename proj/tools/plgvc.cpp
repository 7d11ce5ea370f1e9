// plgvc: power-law graph vertex cover toolkit.
//
// Subcommands: degseq, gen, lp, round, exact, bounds, sweep, experiment.
// Exit codes: 0 success, 2 invalid parameters, 3 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plgvc/bounds.hpp"
#include "plgvc/degree_model.hpp"
#include "plgvc/exact.hpp"
#include "plgvc/experiment.hpp"
#include "plgvc/generator.hpp"
#include "plgvc/graph.hpp"
#include "plgvc/lp_half.hpp"
#include "plgvc/rounding.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScaleArgs {
  std::optional<double> alpha;
  std::optional<double> e_alpha;

  void attach(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "log of graph scale");
    cmd->add_option("--e-alpha", e_alpha, "graph scale e^alpha directly");
  }

  plgvc::PlgParams params(double beta) const {
    if (alpha && e_alpha)
      throw std::invalid_argument("give either --alpha or --e-alpha, not both");
    if (e_alpha) return plgvc::plg_params_from_scale(*e_alpha, beta);
    if (alpha) return plgvc::plg_params(*alpha, beta);
    throw std::invalid_argument("one of --alpha or --e-alpha is required");
  }
};

plgvc::MultiGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return plgvc::read_graph(in);
}

std::vector<plgvc::GenSeed> load_seeds(const std::vector<std::uint64_t>& inline_seeds,
                                       const std::string& seeds_file) {
  std::vector<plgvc::GenSeed> seeds;
  for (std::uint64_t s : inline_seeds) seeds.push_back({s});
  if (!seeds_file.empty()) {
    std::ifstream in(seeds_file);
    if (!in) throw IoError("cannot open " + seeds_file);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      seeds.push_back({std::stoull(line)});
    }
  }
  if (seeds.empty()) throw std::invalid_argument("no seeds given (--seed or --seeds)");
  return seeds;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw IoError("cannot open " + path);
  return file;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

int run(int argc, char** argv) {
  CLI::App app{"power-law graph vertex cover toolkit"};
  app.require_subcommand(1);

  // degseq
  auto* degseq = app.add_subcommand("degseq", "print the model degree sequence");
  ScaleArgs degseq_scale;
  degseq_scale.attach(degseq);
  double degseq_beta = 0.0;
  degseq->add_option("--beta", degseq_beta, "power-law exponent")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "sample a multigraph");
  ScaleArgs gen_scale;
  gen_scale.attach(gen);
  double gen_beta = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--beta", gen_beta)->required();
  gen->add_option("--seed", gen_seed)->required();
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // lp
  auto* lp = app.add_subcommand("lp", "half-integral LP optimum and NT partition");
  std::string lp_in;
  bool lp_json = false;
  lp->add_option("--in", lp_in)->required();
  lp->add_flag("--json", lp_json);

  // round
  auto* round = app.add_subcommand("round", "LP plus deterministic rounding");
  std::string round_in;
  bool round_json = false;
  round->add_option("--in", round_in)->required();
  round->add_flag("--json", round_json);

  // exact
  auto* exact = app.add_subcommand("exact", "exact minimum vertex cover");
  std::string exact_in;
  long long exact_budget = 10'000'000;
  exact->add_option("--in", exact_in)->required();
  exact->add_option("--budget", exact_budget, "node budget");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "analytic bound report");
  double bounds_beta = 0.0;
  ScaleArgs bounds_scale;
  bounds_scale.attach(bounds);
  bool bounds_json = false;
  bounds->add_option("--beta", bounds_beta)->required();
  bounds->add_flag("--json", bounds_json);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "rho / rho' as functions of beta, CSV");
  double sweep_min = 2.05, sweep_max = 4.0, sweep_step = 0.01;
  std::string sweep_out;
  sweep->add_option("--beta-min", sweep_min);
  sweep->add_option("--beta-max", sweep_max);
  sweep->add_option("--step", sweep_step);
  sweep->add_option("--out", sweep_out, "output CSV (default stdout)");

  // experiment
  auto* exp = app.add_subcommand("experiment", "seeded end-to-end experiment runs");
  ScaleArgs exp_scale;
  exp_scale.attach(exp);
  double exp_beta = 0.0;
  std::vector<std::uint64_t> exp_seeds;
  std::string exp_seeds_file, exp_out;
  bool exp_json = false;
  int exp_threads = 1, exp_exact_limit = 0;
  long long exp_budget = 10'000'000;
  exp->add_option("--beta", exp_beta)->required();
  exp->add_option("--seed", exp_seeds, "seed (repeatable)");
  exp->add_option("--seeds", exp_seeds_file, "file with one seed per line");
  exp->add_option("--out", exp_out, "output file (default stdout)");
  exp->add_flag("--json", exp_json);
  exp->add_option("--threads", exp_threads);
  exp->add_option("--exact-limit", exp_exact_limit, "run exact solver when n <= limit");
  exp->add_option("--budget", exp_budget, "exact solver node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  if (degseq->parsed()) {
    const auto p = degseq_scale.params(degseq_beta);
    const auto seq = plgvc::build_degree_sequence(p);
    for (int i = 1; i <= seq.max_degree(); ++i)
      std::cout << i << ' ' << seq.counts[static_cast<std::size_t>(i - 1)] << '\n';
    std::cout << "# n=" << seq.total_vertices << " D=" << seq.total_degree << '\n';
    return kExitOk;
  }

  if (gen->parsed()) {
    const auto p = gen_scale.params(gen_beta);
    const auto g = plgvc::generate(plgvc::build_degree_sequence(p), {gen_seed});
    std::ofstream file;
    plgvc::write_graph(open_output(file, gen_out), g);
    return kExitOk;
  }

  if (lp->parsed()) {
    const auto sg = plgvc::simplify(load_graph(lp_in));
    const auto x = plgvc::solve_half_integral(sg);
    const auto nt = plgvc::nt_partition(sg, x);
    if (lp_json) {
      nlohmann::json j;
      j["cost_halves"] = x.cost_halves();
      j["cost"] = x.cost();
      j["x"] = x.halves;
      j["P"] = nt.P;
      j["Q"] = nt.Q;
      j["R"] = nt.R;
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "cost_halves " << x.cost_halves() << '\n'
                << "cost " << fmt(x.cost()) << '\n'
                << "P " << nt.P.size() << '\n'
                << "Q " << nt.Q.size() << '\n'
                << "R " << nt.R.size() << '\n';
    }
    return kExitOk;
  }

  if (round->parsed()) {
    const auto sg = plgvc::simplify(load_graph(round_in));
    const auto x = plgvc::solve_half_integral(sg);
    const auto y = plgvc::round_half_integral(sg, x);
    const auto rd = plgvc::ratio_decomposition(sg, x, y);
    if (round_json) {
      nlohmann::json j;
      j["cost_y"] = y.cost();
      j["y_vstar"] = rd.y_vstar;
      j["x_vstar_halves"] = rd.x_halves_vstar;
      j["cost_halves"] = x.cost_halves();
      j["ratio_vstar"] = rd.vstar ? nlohmann::json(*rd.vstar) : nlohmann::json();
      j["ratio_rest"] = rd.rest ? nlohmann::json(*rd.rest) : nlohmann::json();
      j["ratio_composite"] = rd.composite ? nlohmann::json(*rd.composite) : nlohmann::json();
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "cost_y " << y.cost() << '\n'
                << "y_vstar " << rd.y_vstar << '\n'
                << "x_vstar_halves " << rd.x_halves_vstar << '\n'
                << "ratio_vstar " << (rd.vstar ? fmt(*rd.vstar) : "undefined") << '\n'
                << "ratio_rest " << (rd.rest ? fmt(*rd.rest) : "undefined") << '\n'
                << "ratio_composite " << (rd.composite ? fmt(*rd.composite) : "undefined")
                << '\n';
    }
    return kExitOk;
  }

  if (exact->parsed()) {
    const auto sg = plgvc::simplify(load_graph(exact_in));
    const auto res = plgvc::exact_vc(sg, exact_budget);
    std::cout << "opt " << res.opt_size << '\n'
              << "nodes " << res.nodes_explored << '\n'
              << "timed_out " << (res.timed_out ? "true" : "false") << '\n';
    return kExitOk;
  }

  if (bounds->parsed()) {
    std::optional<double> alpha;
    if (bounds_scale.alpha) alpha = *bounds_scale.alpha;
    if (bounds_scale.e_alpha) alpha = std::log(*bounds_scale.e_alpha);
    const auto r = plgvc::make_bound_report(bounds_beta, alpha);
    if (bounds_json) {
      nlohmann::json j;
      j["beta"] = r.beta;
      j["alpha"] = r.alpha ? nlohmann::json(*r.alpha) : nlohmann::json();
      j["zeta_beta"] = r.zeta_beta;
      j["zeta_beta_minus1"] = r.zeta_beta_minus1;
      j["rho_first"] = r.rho_first;
      j["rho_refined_finite"] =
          r.rho_refined_finite ? nlohmann::json(*r.rho_refined_finite) : nlohmann::json();
      j["rho_refined_asymptotic"] =
          r.rho_refined_asymptotic ? nlohmann::json(*r.rho_refined_asymptotic) : nlohmann::json();
      j["delta0"] = r.delta0;
      j["ex_vstar_lower"] =
          r.ex_vstar_lower ? nlohmann::json(*r.ex_vstar_lower) : nlohmann::json();
      j["xv_upper"] = r.xv_upper ? nlohmann::json(*r.xv_upper) : nlohmann::json();
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "beta " << fmt(r.beta) << '\n';
      if (r.alpha) std::cout << "alpha " << fmt(*r.alpha) << '\n';
      std::cout << "zeta_beta " << fmt(r.zeta_beta) << '\n'
                << "zeta_beta_minus1 " << fmt(r.zeta_beta_minus1) << '\n'
                << "rho_first " << fmt(r.rho_first) << '\n';
      if (r.rho_refined_finite) std::cout << "rho_refined_finite " << fmt(*r.rho_refined_finite) << '\n';
      if (r.rho_refined_asymptotic)
        std::cout << "rho_refined_asymptotic " << fmt(*r.rho_refined_asymptotic) << '\n';
      std::cout << "delta0 " << r.delta0 << '\n';
      if (r.ex_vstar_lower) std::cout << "ex_vstar_lower " << fmt(*r.ex_vstar_lower) << '\n';
      if (r.xv_upper) std::cout << "xv_upper " << fmt(*r.xv_upper) << '\n';
    }
    return kExitOk;
  }

  if (sweep->parsed()) {
    const auto rows = plgvc::sweep_beta(sweep_min, sweep_max, sweep_step);
    std::ofstream file;
    plgvc::write_sweep_csv(open_output(file, sweep_out), rows);
    return kExitOk;
  }

  if (exp->parsed()) {
    const auto p = exp_scale.params(exp_beta);
    const auto seeds = load_seeds(exp_seeds, exp_seeds_file);
    plgvc::ExperimentOptions opts;
    opts.threads = exp_threads;
    opts.exact_limit = exp_exact_limit;
    opts.exact_budget = exp_budget;
    const auto records = plgvc::run_experiment(p, seeds, opts);
    std::ofstream file;
    std::ostream& out = open_output(file, exp_out);
    if (exp_json)
      out << plgvc::records_to_json(records).dump(2) << '\n';
    else
      plgvc::write_records_csv(out, records);
    return kExitOk;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}
