// Command-line front end: analyze | solve | sweep | normalize | simulate.
// Exit codes: 0 success, 2 parse error, 3 solver error, 4 verification failure.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oracle_games/errors.hpp"
#include "oracle_games/game.hpp"
#include "oracle_games/io.hpp"
#include "oracle_games/nodes.hpp"
#include "oracle_games/oracle_fn.hpp"
#include "oracle_games/solver.hpp"
#include "oracle_games/verify.hpp"

namespace og = oracle_games;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitSolver = 3;
constexpr int kExitVerify = 4;

std::string fmt(double v) { return og::format_number(v); }

std::string strategy_str(const og::MixedStrategy& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += fmt(s[i]);
  }
  return out + ")";
}

json strategy_json(const og::MixedStrategy& s) {
  json j = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) j.push_back(s[i]);
  return j;
}

json equilibrium_json(const og::OracleEquilibrium& eq) {
  json j;
  j["s_a"] = strategy_json(eq.s_a);
  j["s_b"] = strategy_json(eq.s_b);
  j["x"] = eq.x;
  j["i_val"] = eq.i_val;
  j["case"] = og::to_string(eq.case_label);
  j["e_a"] = eq.e_a;
  j["e_b"] = eq.e_b;
  j["v_at_eq"] = eq.v_at_eq;
  j["x_multiplicity"] = {eq.x_multiplicity_lo, eq.x_multiplicity_hi};
  return j;
}

void print_equilibrium(const og::OracleEquilibrium& eq) {
  std::cout << "case:  " << og::to_string(eq.case_label) << "\n"
            << "s_a:   " << strategy_str(eq.s_a) << "\n"
            << "s_b:   " << strategy_str(eq.s_b) << "\n"
            << "x:     " << fmt(eq.x) << "   I(x): " << fmt(eq.i_val) << "\n"
            << "E_a:   " << fmt(eq.e_a) << "   E_b:  " << fmt(eq.e_b) << "\n"
            << "V:     " << fmt(eq.v_at_eq) << "\n";
  if (eq.x_multiplicity_hi > eq.x_multiplicity_lo + 1e-12)
    std::cout << "x set: [" << fmt(eq.x_multiplicity_lo) << ", "
              << fmt(eq.x_multiplicity_hi) << "]\n";
}

unsigned default_jobs() {
  if (const char* env = std::getenv("ORACLE_GAMES_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

int run_analyze(const std::string& game_path, const std::string& oracle_path,
                const std::string& json_out) {
  const og::GameSpec spec = og::load_game_spec(game_path);
  std::optional<og::OracleFunction> oracle;
  if (!oracle_path.empty()) oracle = og::load_oracle_spec(oracle_path);

  const og::BimatrixGame r = og::maximal_matrix(spec.game);
  const auto nodes =
      og::find_nodes(spec.game, r, oracle ? &*oracle : nullptr);
  const auto intervals = og::interval_profile(spec.game, r, nodes);

  std::cout << "maximal matrix R (per column: payoff pair at A's best response):\n";
  for (std::size_t j = 0; j < r.cols(); ++j)
    std::cout << "  col " << j << ": (" << fmt(r.at(0, j).a) << ", "
              << fmt(r.at(0, j).b) << ")\n";

  std::cout << "nodes: " << nodes.size() << "\n";
  for (const auto& n : nodes) {
    std::cout << "  I = " << fmt(n.i_star) << "  strategy B_" << n.strategy + 1
              << (n.direction == og::NodeDirection::becomes_dominated
                      ? "  becomes dominated"
                      : "  becomes undominated");
    if (oracle && n.x_star == n.x_star) std::cout << "  (x = " << fmt(n.x_star) << ")";
    std::cout << "\n";
  }

  std::cout << "intervals:\n";
  for (const auto& iv : intervals) {
    std::cout << "  I in (" << fmt(iv.i_lo) << ", " << fmt(iv.i_hi) << ")"
              << "  s_b = " << strategy_str(iv.s_b) << "  V = " << fmt(iv.v) << "\n";
    for (std::size_t i = 0; i < iv.s_a_coeffs.size(); ++i)
      std::cout << "    s_a[" << i << "](I) = (" << fmt(iv.s_a_coeffs[i].a) << " + "
                << fmt(iv.s_a_coeffs[i].b) << "*I) / (" << fmt(iv.s_a_coeffs[i].c)
                << "*(1-I))\n";
  }

  if (!json_out.empty()) {
    json j;
    json jr = json::array();
    for (std::size_t jc = 0; jc < r.cols(); ++jc)
      jr.push_back({r.at(0, jc).a, r.at(0, jc).b});
    j["maximal_matrix_columns"] = std::move(jr);
    j["nodes"] = json::array();
    for (const auto& n : nodes) {
      json jn;
      jn["i_star"] = n.i_star;
      if (n.x_star == n.x_star) jn["x_star"] = n.x_star;
      jn["strategy"] = n.strategy;
      jn["direction"] = n.direction == og::NodeDirection::becomes_dominated
                            ? "becomes_dominated"
                            : "becomes_undominated";
      j["nodes"].push_back(std::move(jn));
    }
    j["intervals"] = json::array();
    for (const auto& iv : intervals) {
      json ji;
      ji["i_lo"] = iv.i_lo;
      ji["i_hi"] = iv.i_hi;
      ji["s_b"] = strategy_json(iv.s_b);
      ji["v"] = iv.v;
      ji["s_a_coeffs"] = json::array();
      for (const auto& co : iv.s_a_coeffs)
        ji["s_a_coeffs"].push_back({co.a, co.b, co.c});
      j["intervals"].push_back(std::move(ji));
    }
    std::ofstream out(json_out);
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

int run_solve(const std::string& game_path, const std::string& oracle_path, bool verify,
              std::uint64_t trials, std::uint64_t seed) {
  const og::GameSpec spec = og::load_game_spec(game_path);
  const og::OracleFunction oracle = og::load_oracle_spec(oracle_path);
  const og::OracleEquilibrium eq = og::solve_oracle_game(spec.game, oracle);
  print_equilibrium(eq);
  if (!verify) return kExitOk;

  const og::BimatrixGame r = og::maximal_matrix(spec.game);
  const og::DeviationCertificate cert = og::deviation_check(spec.game, r, oracle, eq);
  std::cout << "deviation check: " << (cert.passed ? "passed" : "FAILED")
            << "  (A strategy " << fmt(cert.max_gain_a_strategy) << ", A payment "
            << fmt(cert.max_gain_a_payment) << ", B " << fmt(cert.max_gain_b) << ")\n";
  if (!cert.passed) std::cout << "worst deviation: " << cert.worst_deviation << "\n";

  const og::SimulationResult sim =
      og::simulate(spec.game, oracle, eq.s_a, eq.s_b, eq.x, trials, seed);
  std::cout << "simulation (" << sim.trials << " trials, seed " << sim.seed
            << "): E_a = " << fmt(sim.mean_e_a) << " +- " << fmt(sim.std_err_a)
            << ", E_b = " << fmt(sim.mean_e_b) << " +- " << fmt(sim.std_err_b)
            << ", response rate = " << fmt(sim.response_rate) << "\n";
  const bool sim_ok = std::abs(sim.mean_e_a - eq.e_a) <= 5.0 * sim.std_err_a &&
                      std::abs(sim.mean_e_b - eq.e_b) <= 5.0 * sim.std_err_b;
  return cert.passed && sim_ok ? kExitOk : kExitVerify;
}

int run_sweep(const std::string& game_path, const std::string& family, double k_from,
              double k_to, std::size_t steps, const std::string& out_path,
              unsigned jobs) {
  if (steps < 2) throw og::EmptyInput("sweep needs at least 2 steps");
  const og::GameSpec spec = og::load_game_spec(game_path);

  auto make_oracle = [&family](double k) {
    if (family == "sqrt_k") return og::OracleFunction::sqrt_k(k);
    if (family == "linear_slope") return og::OracleFunction::linear_slope(k);
    if (family == "sqrt_shift") return og::OracleFunction::sqrt_shift(k);
    throw og::ParseError("unknown sweep family: " + family);
  };
  make_oracle(k_from);  // validate the family name before spawning workers

  const og::GameAnalysis analysis = og::analyze_game(spec.game);
  struct Row {
    double k = 0.0;
    std::optional<og::OracleEquilibrium> eq;
    std::string error;
  };
  std::vector<Row> rows(steps);
  for (std::size_t s = 0; s < steps; ++s)
    rows[s].k = k_from + (k_to - k_from) * static_cast<double>(s) /
                             static_cast<double>(steps - 1);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t s = next.fetch_add(1);
      if (s >= steps) return;
      try {
        rows[s].eq = og::solve_oracle_game(spec.game, make_oracle(rows[s].k), &analysis);
      } catch (const og::Error& e) {
        rows[s].error = e.what();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::ostringstream csv;
  csv << "k,case,x_e,I_xe,E_a,E_b,V,error\n";
  for (const Row& row : rows) {
    csv << fmt(row.k) << ",";
    if (row.eq) {
      csv << og::to_string(row.eq->case_label) << "," << fmt(row.eq->x) << ","
          << fmt(row.eq->i_val) << "," << fmt(row.eq->e_a) << "," << fmt(row.eq->e_b)
          << "," << fmt(row.eq->v_at_eq) << ",";
    } else {
      std::string msg = row.error;
      for (char& c : msg)
        if (c == ',' || c == '\n') c = ';';
      csv << ",,,,,," << msg;
    }
    csv << "\n";
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << csv.str();
  } else {
    std::ofstream out(out_path);
    out << csv.str();
  }
  return kExitOk;
}

int run_normalize(const std::string& oracle_path, const std::string& game_path,
                  const std::string& out_path, const std::string& plot_path) {
  const og::OracleFunction oracle = og::load_oracle_spec(oracle_path);
  const og::NormalizationReport rep = og::normalize(oracle);

  og::OracleFunction normalized_fn = rep.concave;
  if (rep.shifted_game_required) {
    if (game_path.empty()) {
      std::cout << "oracle has I(0) = " << fmt(rep.shift_c)
                << " > 0; supply --game to emit the shifted game\n";
    } else {
      const og::GameSpec spec = og::load_game_spec(game_path);
      auto [shifted, j] = og::shift_to_zero(spec.game, rep.concave);
      normalized_fn = j;
      const std::string shifted_path =
          (out_path.empty() || out_path == "-")
              ? std::string("shifted_game.json")
              : out_path + ".shifted_game.json";
      std::ofstream out(shifted_path);
      out << og::serialize_game_spec({shifted, spec.declared});
      std::cout << "shifted game written to " << shifted_path << "\n";
    }
  }

  const std::string oracle_out = serialize_oracle_spec(normalized_fn);
  if (out_path.empty() || out_path == "-") {
    std::cout << oracle_out;
  } else {
    std::ofstream out(out_path);
    out << oracle_out;
  }

  if (!plot_path.empty()) {
    std::ofstream out(plot_path);
    out << "x,I_original,J1_envelope,J_final\n";
    const double hi = std::max({rep.original.saturation_x(), rep.concave.saturation_x(),
                                1.0});
    const std::size_t n = 512;
    for (std::size_t s = 0; s <= n; ++s) {
      const double x = hi * static_cast<double>(s) / static_cast<double>(n);
      out << fmt(x) << "," << fmt(rep.original.eval(x)) << ","
          << fmt(rep.envelope.eval(x)) << "," << fmt(normalized_fn.eval(x)) << "\n";
    }
  }
  return kExitOk;
}

int run_simulate(const std::string& game_path, const std::string& oracle_path,
                 std::uint64_t trials, std::uint64_t seed) {
  const og::GameSpec spec = og::load_game_spec(game_path);
  const og::OracleFunction oracle = og::load_oracle_spec(oracle_path);
  const og::OracleEquilibrium eq = og::solve_oracle_game(spec.game, oracle);
  const og::SimulationResult sim =
      og::simulate(spec.game, oracle, eq.s_a, eq.s_b, eq.x, trials, seed);
  std::cout << "equilibrium " << og::to_string(eq.case_label) << " at x = " << fmt(eq.x)
            << "\n"
            << "analytic  E_a = " << fmt(eq.e_a) << ", E_b = " << fmt(eq.e_b) << "\n"
            << "simulated E_a = " << fmt(sim.mean_e_a) << " +- " << fmt(sim.std_err_a)
            << ", E_b = " << fmt(sim.mean_e_b) << " +- " << fmt(sim.std_err_b) << "\n"
            << "response rate = " << fmt(sim.response_rate) << " vs I(x) = "
            << fmt(eq.i_val) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibrium analysis of two-player games with a purchasable oracle"};
  app.require_subcommand(1);

  std::string game_path, oracle_path, json_out, out_path, plot_path;
  std::string family = "sqrt_k";
  bool verify = false;
  std::uint64_t trials = 100000, seed = 1;
  double k_from = 0.1, k_to = 5.0;
  std::size_t steps = 100;
  unsigned jobs = default_jobs();

  auto* analyze = app.add_subcommand("analyze", "Nodes, intervals, and value profile");
  analyze->add_option("game", game_path, "game JSON file")->required();
  analyze->add_option("oracle", oracle_path, "oracle JSON file (optional, adds x positions)");
  analyze->add_option("--json", json_out, "write a machine-readable report");

  auto* solve = app.add_subcommand("solve", "Full oracle-game equilibrium");
  solve->add_option("game", game_path)->required();
  solve->add_option("oracle", oracle_path)->required();
  solve->add_flag("--verify", verify, "run deviation check and simulation");
  solve->add_option("--trials", trials, "simulation trials");
  solve->add_option("--seed", seed, "simulation seed");

  auto* sweep = app.add_subcommand("sweep", "Equilibrium vs oracle parameter k (CSV)");
  sweep->add_option("game", game_path)->required();
  sweep->add_option("--family", family, "sqrt_k | linear_slope | sqrt_shift");
  sweep->add_option("--k-from", k_from)->required();
  sweep->add_option("--k-to", k_to)->required();
  sweep->add_option("--steps", steps)->required();
  sweep->add_option("--out", out_path, "CSV path ('-' for stdout)");
  sweep->add_option("--jobs", jobs, "parallel workers (env ORACLE_GAMES_JOBS)");

  auto* normalize = app.add_subcommand("normalize", "Monotone + concave oracle rewrite");
  normalize->add_option("oracle", oracle_path)->required();
  normalize->add_option("--game", game_path, "game file, needed when I(0) > 0");
  normalize->add_option("--out", out_path, "normalized oracle path ('-' for stdout)");
  normalize->add_option("--plot-data", plot_path, "3-series CSV of I, J1, J");

  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo play of the equilibrium");
  simulate->add_option("game", game_path)->required();
  simulate->add_option("oracle", oracle_path)->required();
  simulate->add_option("--trials", trials);
  simulate->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(game_path, oracle_path, json_out);
    if (*solve) return run_solve(game_path, oracle_path, verify, trials, seed);
    if (*sweep)
      return run_sweep(game_path, family, k_from, k_to, steps, out_path, jobs);
    if (*normalize) return run_normalize(oracle_path, game_path, out_path, plot_path);
    if (*simulate) return run_simulate(game_path, oracle_path, trials, seed);
  } catch (const og::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const og::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
  return kExitOk;
}
