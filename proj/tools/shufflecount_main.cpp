// Copyright 2026 The shufflecount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: graph generation and manipulation, exact counts,
// private estimator runs with CSV output, bound calculators, and the
// amplification budget inverter.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "shufflecount/bounds.hpp"
#include "shufflecount/estimators.hpp"
#include "shufflecount/exact.hpp"
#include "shufflecount/graph.hpp"
#include "shufflecount/harness.hpp"
#include "shufflecount/privacy.hpp"

namespace {

using shufflecount::Graph;

Graph load_graph(const std::string& path) { return shufflecount::load_edge_list_file(path); }

// Prints a bound value in scientific notation, switching to the log-space
// evaluation when the direct value overflows.
void print_bound(double value, double log10_value) {
  if (std::isinf(value)) {
    std::cout << shufflecount::format_from_log10(log10_value) << "\n";
  } else {
    std::cout << shufflecount::format_double_scientific(value) << "\n";
  }
}

// Flip probability from either a direct --q style flag or an --eps style
// budget; exactly one of the two must be given.
double resolve_flip(CLI::Option* q_opt, double q, CLI::Option* eps_opt, double eps,
                    const std::string& what) {
  const bool has_q = q_opt->count() > 0;
  const bool has_eps = eps_opt->count() > 0;
  if (has_q == has_eps) {
    throw std::invalid_argument(what + ": give exactly one of the flip probability or the budget");
  }
  return has_q ? q : shufflecount::flip_probability(eps);
}

int run_cli(int argc, char** argv) {
  CLI::App app{"one-round private triangle / 4-cycle counting over shuffled wedge bits"};
  app.require_subcommand(1);

  // --- gen-ba ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen-ba", "generate a preferential-attachment graph");
  uint32_t gen_n = 0, gen_m = 0;
  uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--n", gen_n, "node count")->required();
  gen->add_option("--m", gen_m, "edges per new node")->required();
  gen->add_option("--seed", gen_seed, "generator seed")->required();
  gen->add_option("--out", gen_out, "output edge-list file")->required();

  // --- bipartite ------------------------------------------------------------
  auto* bip = app.add_subcommand("bipartite", "randomly bipartition and drop intra-group edges");
  std::string bip_graph, bip_out;
  uint64_t bip_seed = 0;
  bip->add_option("--graph", bip_graph, "input edge-list file")->required();
  bip->add_option("--seed", bip_seed, "partition seed")->required();
  bip->add_option("--out", bip_out, "output edge-list file")->required();

  // --- subsample --------------------------------------------------------------
  auto* sub = app.add_subcommand("subsample", "induced subgraph on a random node subset");
  std::string sub_graph, sub_out;
  uint32_t sub_n = 0;
  uint64_t sub_seed = 0;
  sub->add_option("--graph", sub_graph, "input edge-list file")->required();
  sub->add_option("--n", sub_n, "subset size")->required();
  sub->add_option("--seed", sub_seed, "subset seed")->required();
  sub->add_option("--out", sub_out, "output edge-list file")->required();

  // --- stats ------------------------------------------------------------------
  auto* stats_cmd = app.add_subcommand("stats", "degree statistics of a graph");
  std::string stats_graph;
  stats_cmd->add_option("--graph", stats_graph, "input edge-list file")->required();

  // --- exact ------------------------------------------------------------------
  auto* exact_cmd = app.add_subcommand("exact", "exact subgraph counts");
  std::string exact_graph, exact_metric, exact_pair;
  exact_cmd->add_option("--graph", exact_graph, "input edge-list file")->required();
  exact_cmd->add_option("--metric", exact_metric, "triangles|four-cycles|two-stars|clustering")
      ->required();
  exact_cmd->add_option("--pair", exact_pair, "I,J: restrict to one endpoint pair (triangles only)");

  // --- run --------------------------------------------------------------------
  auto* run_cmd = app.add_subcommand("run", "run a private estimator and write CSV");
  std::string run_graph, run_algo, run_out, run_re_denom = "max";
  shufflecount::ExperimentConfig cfg;
  run_cmd->add_option("--graph", run_graph, "input edge-list file")->required();
  run_cmd
      ->add_option("--algo", run_algo,
                   "wshuffle-tri|wshuffle-tri-vr|wlocal-tri|arr-tri|wshuffle-c4|wlocal-c4|two-star|clustering")
      ->required();
  run_cmd->add_option("--eps", cfg.eps, "privacy budget")->required();
  run_cmd->add_option("--delta", cfg.delta, "amplification delta (default 1e-8)");
  run_cmd->add_option("--t", cfg.t, "pair count (default floor(n/2))");
  run_cmd->add_option("--c", cfg.c, "degree-threshold multiplier (default 1)");
  run_cmd->add_option("--p0", cfg.p0, "asymmetric sampling probability (default 1)");
  run_cmd->add_option("--reps", cfg.reps, "repetitions (default 20)");
  run_cmd->add_option("--seed", cfg.seed, "master seed (default 0)");
  run_cmd->add_option("--out", run_out, "output CSV file")->required();
  run_cmd->add_option("--workers", cfg.workers, "worker threads (default 1)");
  run_cmd->add_option("--eta", cfg.eta_clip, "degree-clipping offset (default 150)");
  run_cmd->add_flag("--timing", cfg.timing, "fill the runtime_ms column (breaks byte determinism)");
  run_cmd->add_option("--re-denom", run_re_denom, "relative-error floor: max (default) or min (audit)")
      ->check(CLI::IsMember({"max", "min"}));

  // --- bound ------------------------------------------------------------------
  auto* bound_cmd = app.add_subcommand("bound", "closed-form variance/bias ceilings");
  std::string bound_kind;
  bound_cmd
      ->add_option("--kind", bound_kind,
                   "wsle|triangle|triangle-vr-bias|triangle-vr-var|four-cycle|amplification")
      ->required();
  double b_n = 0, b_dmax = 0, b_davg = 0, b_t = 0, b_q = 0, b_qw = 0, b_eps = 0, b_eps_local = 0,
         b_delta = 0, b_c = 0, b_alpha = 0, b_eps1 = 0, b_err = 0, b_sum_d2 = 0;
  bound_cmd->add_option("--n", b_n, "user count");
  bound_cmd->add_option("--d-max", b_dmax, "maximum degree");
  bound_cmd->add_option("--d-avg", b_davg, "average degree");
  bound_cmd->add_option("--t", b_t, "pair count");
  auto* opt_q = bound_cmd->add_option("--q", b_q, "edge-report flip probability");
  auto* opt_qw = bound_cmd->add_option("--q-l", b_qw, "wedge-bit flip probability");
  auto* opt_eps = bound_cmd->add_option("--eps", b_eps, "edge-report budget (alternative to --q)");
  auto* opt_eps_local =
      bound_cmd->add_option("--eps-local", b_eps_local, "wedge-bit budget (alternative to --q-l)");
  bound_cmd->add_option("--delta", b_delta, "amplification delta");
  bound_cmd->add_option("--c", b_c, "degree-threshold multiplier");
  bound_cmd->add_option("--alpha", b_alpha, "degree tail exponent");
  bound_cmd->add_option("--eps1", b_eps1, "degree-release budget");
  bound_cmd->add_option("--err", b_err, "per-pair variance ceiling value");
  auto* opt_sum_d2 =
      bound_cmd->add_option("--sum-d2", b_sum_d2, "sum of squared degrees (tighter leading term)");

  // --- budget -----------------------------------------------------------------
  auto* budget_cmd = app.add_subcommand("budget", "invert the amplification bound");
  double budget_n = 0, budget_eps = 0, budget_delta = 0;
  budget_cmd->add_option("--n", budget_n, "shuffled report count")->required();
  budget_cmd->add_option("--eps", budget_eps, "target central epsilon")->required();
  budget_cmd->add_option("--delta", budget_delta, "amplification delta")->required();

  CLI11_PARSE(app, argc, argv);

  if (*gen) {
    shufflecount::save_edge_list_file(shufflecount::generate_ba(gen_n, gen_m, gen_seed), gen_out);
    return 0;
  }
  if (*bip) {
    shufflecount::save_edge_list_file(shufflecount::bipartite_split(load_graph(bip_graph), bip_seed),
                                      bip_out);
    return 0;
  }
  if (*sub) {
    shufflecount::save_edge_list_file(shufflecount::subsample(load_graph(sub_graph), sub_n, sub_seed),
                                      sub_out);
    return 0;
  }
  if (*stats_cmd) {
    const Graph g = load_graph(stats_graph);
    const shufflecount::DegreeStats s = shufflecount::degree_stats(g);
    std::cout << "n " << g.node_count() << "\n";
    std::cout << "edges " << g.edge_count() << "\n";
    std::cout << "d_avg " << shufflecount::format_double(s.d_avg) << "\n";
    std::cout << "d_max " << s.d_max << "\n";
    return 0;
  }
  if (*exact_cmd) {
    const Graph g = load_graph(exact_graph);
    if (!exact_pair.empty()) {
      if (exact_metric != "triangles") {
        throw std::invalid_argument("--pair is only supported with --metric triangles");
      }
      uint32_t i = 0, j = 0;
      char comma = 0;
      std::istringstream pair_in(exact_pair);
      if (!(pair_in >> i >> comma >> j) || comma != ',') {
        throw std::invalid_argument("--pair expects I,J");
      }
      std::cout << shufflecount::triangles_involving_pair(g, i, j) << "\n";
      return 0;
    }
    if (exact_metric == "triangles") {
      std::cout << shufflecount::count_triangles(g) << "\n";
    } else if (exact_metric == "four-cycles") {
      std::cout << shufflecount::count_four_cycles(g) << "\n";
    } else if (exact_metric == "two-stars") {
      std::cout << shufflecount::count_two_stars(g) << "\n";
    } else if (exact_metric == "clustering") {
      std::cout << shufflecount::format_double(shufflecount::clustering_coefficient_exact(g)) << "\n";
    } else {
      throw std::invalid_argument("unknown metric: " + exact_metric);
    }
    return 0;
  }
  if (*run_cmd) {
    cfg.algo = run_algo;
    cfg.re_denominator_min = run_re_denom == "min";
    const Graph g = load_graph(run_graph);
    const shufflecount::RunSummary summary = shufflecount::run_experiment(g, cfg);
    std::ofstream out(run_out);
    if (!out) throw std::runtime_error("cannot open output file: " + run_out);
    shufflecount::write_csv(g, cfg, summary, out);
    out.flush();
    if (!out) throw std::runtime_error("failed writing CSV: " + run_out);
    return 0;
  }
  if (*bound_cmd) {
    if (bound_kind == "wsle") {
      const double q = resolve_flip(opt_q, b_q, opt_eps, b_eps, "--q/--eps");
      const double qw = resolve_flip(opt_qw, b_qw, opt_eps_local, b_eps_local, "--q-l/--eps-local");
      print_bound(shufflecount::err_wsle(b_n, b_dmax, q, qw),
                  shufflecount::err_wsle_log10(b_n, b_dmax, q, qw));
    } else if (bound_kind == "triangle") {
      const double q = resolve_flip(opt_q, b_q, opt_eps, b_eps, "--q/--eps");
      const double qw = resolve_flip(opt_qw, b_qw, opt_eps_local, b_eps_local, "--q-l/--eps-local");
      print_bound(shufflecount::triangle_mse_bound(b_n, b_dmax, b_t, q, qw),
                  shufflecount::triangle_mse_bound_log10(b_n, b_dmax, b_t, q, qw));
    } else if (bound_kind == "triangle-vr-bias") {
      print_bound(shufflecount::vr_bias_bound(b_n, b_davg, b_c, b_alpha, b_eps1),
                  shufflecount::vr_bias_bound_log10(b_n, b_davg, b_c, b_alpha, b_eps1));
    } else if (bound_kind == "triangle-vr-var") {
      if (opt_sum_d2->count() > 0) {
        const double value =
            shufflecount::vr_variance_bound_tight(b_sum_d2, b_n, b_dmax, b_t, b_alpha, b_err);
        std::cout << shufflecount::format_double_scientific(value) << "\n";
      } else {
        print_bound(shufflecount::vr_variance_bound(b_n, b_dmax, b_t, b_alpha, b_err),
                    shufflecount::vr_variance_bound_log10(b_n, b_dmax, b_t, b_alpha, b_err));
      }
    } else if (bound_kind == "four-cycle") {
      const double qw = resolve_flip(opt_qw, b_qw, opt_eps_local, b_eps_local, "--q-l/--eps-local");
      print_bound(shufflecount::fourcycle_mse_bound(b_n, b_dmax, b_t, qw),
                  shufflecount::fourcycle_mse_bound_log10(b_n, b_dmax, b_t, qw));
    } else if (bound_kind == "amplification") {
      if (opt_eps_local->count() == 0) {
        throw std::invalid_argument("amplification needs --eps-local");
      }
      const double value = shufflecount::amplification_epsilon_closed(b_n, b_eps_local, b_delta);
      std::cout << shufflecount::format_double_scientific(value) << "\n";
    } else {
      throw std::invalid_argument("unknown bound kind: " + bound_kind);
    }
    return 0;
  }
  if (*budget_cmd) {
    const shufflecount::LocalBudget result =
        shufflecount::local_privacy_budget(budget_n, budget_eps, budget_delta);
    if (result.clamped) {
      std::cerr << "warning: the requested central epsilon exceeds what " << budget_n
                << " reports can amplify at this delta; using the cap (stronger privacy than requested)\n";
    }
    std::cout << shufflecount::format_double(result.eps_local) << "\n";
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
