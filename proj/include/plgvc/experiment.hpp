#pragma once

// End-to-end experiment pipeline: generate -> simplify -> LP -> round ->
// measure, with optional exact optima on small instances, plus CSV/JSON
// emission and the beta sweep behind the rho comparison plot. Output is
// byte-stable for fixed input: fixed column order, 12 significant digits,
// records assembled in seed order regardless of worker count.

#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "plgvc/bounds.hpp"
#include "plgvc/degree_model.hpp"
#include "plgvc/exact.hpp"
#include "plgvc/generator.hpp"
#include "plgvc/graph.hpp"
#include "plgvc/lp_half.hpp"
#include "plgvc/rounding.hpp"

namespace plgvc {

struct ExperimentOptions {
  int exact_limit = 0;  // run exact_vc when the vertex count is at most this
  long long exact_budget = 10'000'000;
  int threads = 1;
};

struct ExperimentRecord {
  std::uint64_t seed = 0;
  double alpha = 0.0;
  double beta = 0.0;
  long long n = 0;
  long long m_multi = 0;
  long long m_simple = 0;
  long long loops = 0;
  long long parallels = 0;
  long long x_v_halves = 0;
  long long x_vstar_halves = 0;
  long long y_v = 0;
  long long y_vstar = 0;
  double ratio_lp = 0.0;  // y(V) / x(V)
  std::optional<double> ratio_vstar;
  double composite_bound = 0.0;  // 2 - x(V*) / (2 x(V))
  std::optional<long long> exact_opt;
  std::optional<double> ratio_exact;
  double bound_rho_first = 0.0;
  std::optional<double> bound_rho_refined;
  long long vstar_witness = 0;
  bool failed = false;
  std::string error;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

namespace detail {

inline ExperimentRecord run_single(const PlgParams& p, const DegreeSequence& seq, GenSeed seed,
                                   const ExperimentOptions& opts, double rho1,
                                   std::optional<double> rho2) {
  ExperimentRecord rec;
  rec.seed = seed.value;
  rec.alpha = p.alpha;
  rec.beta = p.beta;
  try {
    const MultiGraph mg = generate(seq, seed);
    rec.n = mg.n;
    rec.m_multi = static_cast<long long>(mg.edges.size());
    for (const auto& [u, v] : mg.edges)
      if (u == v) rec.loops++;
    const SimpleGraph sg = simplify(mg);
    rec.m_simple = sg.edge_count();
    rec.parallels = rec.m_multi - rec.loops - rec.m_simple;

    const HalfAssignment x = solve_half_integral(sg);
    const CoverAssignment y = round_half_integral(sg, x);
    const RatioDecomposition rd = ratio_decomposition(sg, x, y);

    rec.x_v_halves = x.cost_halves();
    rec.x_vstar_halves = rd.x_halves_vstar;
    rec.y_v = y.cost();
    rec.y_vstar = rd.y_vstar;
    rec.ratio_lp = rec.x_v_halves > 0
                       ? 2.0 * static_cast<double>(rec.y_v) / static_cast<double>(rec.x_v_halves)
                       : std::numeric_limits<double>::quiet_NaN();
    rec.ratio_vstar = rd.vstar;
    rec.composite_bound =
        rec.x_v_halves > 0
            ? 2.0 - 0.5 * static_cast<double>(rec.x_vstar_halves) / static_cast<double>(rec.x_v_halves)
            : std::numeric_limits<double>::quiet_NaN();
    rec.vstar_witness = vstar_lower_bound_witness(sg);
    rec.bound_rho_first = rho1;
    rec.bound_rho_refined = rho2;

    if (opts.exact_limit > 0 && sg.n <= opts.exact_limit) {
      const ExactResult er = exact_vc(sg, opts.exact_budget);
      if (!er.timed_out) {
        rec.exact_opt = er.opt_size;
        rec.ratio_exact = er.opt_size > 0
                              ? static_cast<double>(rec.y_v) / static_cast<double>(er.opt_size)
                              : std::numeric_limits<double>::quiet_NaN();
      }
    }
  } catch (const std::exception& e) {
    rec.failed = true;
    rec.error = e.what();
  }
  return rec;
}

inline std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace detail

inline std::vector<ExperimentRecord> run_experiment(const PlgParams& p,
                                                    const std::vector<GenSeed>& seeds,
                                                    const ExperimentOptions& opts = {}) {
  const DegreeSequence seq = build_degree_sequence(p);
  const double rho1 = rho_first(p.beta);
  std::optional<double> rho2;
  if (p.beta > kRhoRefinedBetaMin) rho2 = rho_refined_asymptotic(p.beta);

  std::vector<ExperimentRecord> records(seeds.size());
  const int threads = std::max(1, opts.threads);
  if (threads == 1 || seeds.size() <= 1) {
    for (std::size_t i = 0; i < seeds.size(); ++i)
      records[i] = detail::run_single(p, seq, seeds[i], opts, rho1, rho2);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t]() {
        for (std::size_t i = static_cast<std::size_t>(t); i < seeds.size();
             i += static_cast<std::size_t>(threads))
          records[i] = detail::run_single(p, seq, seeds[i], opts, rho1, rho2);
      });
    for (auto& th : pool) th.join();
  }
  return records;
}

inline const char* kRecordCsvHeader =
    "seed,alpha,beta,n,m_multi,m_simple,loops,parallels,x_v_halves,x_vstar_halves,"
    "y_v,y_vstar,ratio_lp,ratio_vstar,composite_bound,exact_opt,ratio_exact,"
    "rho_first,rho_refined,vstar_witness,status";

inline void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << kRecordCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.seed << ',' << detail::fmt_double(r.alpha) << ',' << detail::fmt_double(r.beta) << ',';
    if (r.failed) {
      out << ",,,,,,,,,,,,,,,,,failed\n";
      continue;
    }
    out << r.n << ',' << r.m_multi << ',' << r.m_simple << ',' << r.loops << ',' << r.parallels
        << ',' << r.x_v_halves << ',' << r.x_vstar_halves << ',' << r.y_v << ',' << r.y_vstar
        << ',' << detail::fmt_double(r.ratio_lp) << ','
        << (r.ratio_vstar ? detail::fmt_double(*r.ratio_vstar) : "") << ','
        << detail::fmt_double(r.composite_bound) << ','
        << (r.exact_opt ? std::to_string(*r.exact_opt) : "") << ','
        << (r.ratio_exact ? detail::fmt_double(*r.ratio_exact) : "") << ','
        << detail::fmt_double(r.bound_rho_first) << ','
        << (r.bound_rho_refined ? detail::fmt_double(*r.bound_rho_refined) : "") << ','
        << r.vstar_witness << ",ok\n";
  }
}

inline nlohmann::json record_to_json(const ExperimentRecord& r) {
  nlohmann::json j;
  j["seed"] = r.seed;
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["n"] = r.n;
  j["m_multi"] = r.m_multi;
  j["m_simple"] = r.m_simple;
  j["loops"] = r.loops;
  j["parallels"] = r.parallels;
  j["x_v_halves"] = r.x_v_halves;
  j["x_vstar_halves"] = r.x_vstar_halves;
  j["y_v"] = r.y_v;
  j["y_vstar"] = r.y_vstar;
  j["ratio_lp"] = r.ratio_lp;
  j["ratio_vstar"] = r.ratio_vstar ? nlohmann::json(*r.ratio_vstar) : nlohmann::json();
  j["composite_bound"] = r.composite_bound;
  j["exact_opt"] = r.exact_opt ? nlohmann::json(*r.exact_opt) : nlohmann::json();
  j["ratio_exact"] = r.ratio_exact ? nlohmann::json(*r.ratio_exact) : nlohmann::json();
  j["rho_first"] = r.bound_rho_first;
  j["rho_refined"] = r.bound_rho_refined ? nlohmann::json(*r.bound_rho_refined) : nlohmann::json();
  j["vstar_witness"] = r.vstar_witness;
  j["status"] = r.failed ? "failed" : "ok";
  j["error"] = r.error;
  return j;
}

inline nlohmann::json records_to_json(const std::vector<ExperimentRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) arr.push_back(record_to_json(r));
  return arr;
}

inline ExperimentRecord record_from_json(const nlohmann::json& j) {
  ExperimentRecord r;
  r.seed = j.at("seed").get<std::uint64_t>();
  r.alpha = j.at("alpha").get<double>();
  r.beta = j.at("beta").get<double>();
  r.n = j.at("n").get<long long>();
  r.m_multi = j.at("m_multi").get<long long>();
  r.m_simple = j.at("m_simple").get<long long>();
  r.loops = j.at("loops").get<long long>();
  r.parallels = j.at("parallels").get<long long>();
  r.x_v_halves = j.at("x_v_halves").get<long long>();
  r.x_vstar_halves = j.at("x_vstar_halves").get<long long>();
  r.y_v = j.at("y_v").get<long long>();
  r.y_vstar = j.at("y_vstar").get<long long>();
  r.ratio_lp = j.at("ratio_lp").get<double>();
  if (!j.at("ratio_vstar").is_null()) r.ratio_vstar = j.at("ratio_vstar").get<double>();
  r.composite_bound = j.at("composite_bound").get<double>();
  if (!j.at("exact_opt").is_null()) r.exact_opt = j.at("exact_opt").get<long long>();
  if (!j.at("ratio_exact").is_null()) r.ratio_exact = j.at("ratio_exact").get<double>();
  r.bound_rho_first = j.at("rho_first").get<double>();
  if (!j.at("rho_refined").is_null()) r.bound_rho_refined = j.at("rho_refined").get<double>();
  r.vstar_witness = j.at("vstar_witness").get<long long>();
  r.failed = j.at("status").get<std::string>() == "failed";
  r.error = j.at("error").get<std::string>();
  return r;
}

inline std::vector<ExperimentRecord> records_from_json(const nlohmann::json& arr) {
  std::vector<ExperimentRecord> records;
  records.reserve(arr.size());
  for (const auto& j : arr) records.push_back(record_from_json(j));
  return records;
}

enum class EmitFormat { csv, json };

inline void emit(const std::vector<ExperimentRecord>& records, EmitFormat format,
                 const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit: cannot open " + path);
  if (format == EmitFormat::csv)
    write_records_csv(out, records);
  else
    out << records_to_json(records).dump(2) << '\n';
  if (!out) throw std::runtime_error("emit: write failed on " + path);
}

struct SweepRow {
  double beta = 0.0;
  double rho_first = 0.0;
  std::optional<double> rho_refined_asymptotic;  // populated only for beta > 2.424
};

inline std::vector<SweepRow> sweep_beta(double beta_min, double beta_max, double step) {
  if (!(beta_min > 2.0) || !(step > 0.0) || beta_max < beta_min)
    throw std::invalid_argument("sweep_beta: need 2 < beta_min <= beta_max and step > 0");
  std::vector<SweepRow> rows;
  for (int k = 0;; ++k) {
    const double beta = beta_min + k * step;
    if (beta > beta_max + step * 1e-9) break;
    SweepRow row;
    row.beta = beta;
    row.rho_first = rho_first(beta);
    if (beta > kRhoRefinedBetaMin) row.rho_refined_asymptotic = rho_refined_asymptotic(beta);
    rows.push_back(row);
  }
  return rows;
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "beta,rho_first,rho_refined_asymptotic\n";
  for (const auto& r : rows) {
    out << detail::fmt_double(r.beta) << ',' << detail::fmt_double(r.rho_first) << ','
        << (r.rho_refined_asymptotic ? detail::fmt_double(*r.rho_refined_asymptotic) : "")
        << '\n';
  }
}

}  // namespace plgvc
