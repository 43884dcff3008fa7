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

#include "shufflecount/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "shufflecount/exact.hpp"
#include "shufflecount/rng.hpp"

namespace shufflecount {

namespace {

double eta_floor(uint64_t n) { return static_cast<double>(n) / 1000.0; }

// The exact reference value the relative error is scored against.
double exact_value_for(const Graph& g, const std::string& algo) {
  if (algo == "wshuffle-tri" || algo == "wshuffle-tri-vr" || algo == "wlocal-tri" ||
      algo == "arr-tri") {
    return static_cast<double>(count_triangles(g));
  }
  if (algo == "wshuffle-c4" || algo == "wlocal-c4") {
    return static_cast<double>(count_four_cycles(g));
  }
  if (algo == "two-star") return static_cast<double>(count_two_stars(g));
  if (algo == "clustering") return clustering_coefficient_exact(g);
  throw std::invalid_argument("unknown algorithm id: " + algo);
}

EstimateRecord dispatch(const Graph& g, const ExperimentConfig& cfg, uint64_t t, uint64_t seed) {
  if (cfg.algo == "wshuffle-tri") return shuffle_triangle_count(g, cfg.eps, cfg.delta, t, seed);
  if (cfg.algo == "wshuffle-tri-vr") {
    VrParams vr;
    vr.eps1 = cfg.eps / 10.0;
    vr.eps2 = cfg.eps - cfg.eps / 10.0;
    vr.c = cfg.c;
    vr.t = t;
    return shuffle_triangle_count_vr(g, vr, cfg.delta, seed);
  }
  if (cfg.algo == "wlocal-tri") return local_triangle_count(g, cfg.eps, t, seed);
  if (cfg.algo == "arr-tri") return arr_triangle_count(g, cfg.eps, cfg.p0, seed);
  if (cfg.algo == "wshuffle-c4") return shuffle_fourcycle_count(g, cfg.eps, cfg.delta, t, seed);
  if (cfg.algo == "wlocal-c4") return local_fourcycle_count(g, cfg.eps, t, seed);
  if (cfg.algo == "two-star") {
    return two_star_count_estimate(g, cfg.eps / 10.0, cfg.eps - cfg.eps / 10.0, cfg.eta_clip, seed);
  }
  if (cfg.algo == "clustering") {
    return clustering_pipeline_estimate(g, cfg.eps, cfg.delta, t, cfg.eta_clip, seed);
  }
  throw std::invalid_argument("unknown algorithm id: " + cfg.algo);
}

void append_column(std::string& row, const std::string& value) {
  row.push_back(',');
  row.append(value);
}

std::string format_u64(uint64_t value) {
  char buf[24];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

// NaN marks an inapplicable field, rendered as an empty CSV cell.
std::string format_optional(double value) {
  return std::isnan(value) ? std::string() : format_double(value);
}

}  // namespace

double relative_error(double true_value, double estimate, uint64_t n) {
  if (n < 1) throw std::invalid_argument("relative_error: requires n >= 1");
  return std::abs(true_value - estimate) / std::max(true_value, eta_floor(n));
}

double relative_error_min_denominator(double true_value, double estimate, uint64_t n) {
  if (n < 1) throw std::invalid_argument("relative_error: requires n >= 1");
  return std::abs(true_value - estimate) / std::min(true_value, eta_floor(n));
}

SummaryStats summarize(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("summarize: requires at least one value");
  SummaryStats stats;
  double sum = 0.0;
  for (double v : values) sum += v;
  stats.mean = sum / static_cast<double>(values.size());
  if (values.size() == 1) return stats;  // stderr 0 by convention
  double ss = 0.0;
  for (double v : values) ss += (v - stats.mean) * (v - stats.mean);
  const double sample_var = ss / static_cast<double>(values.size() - 1);
  stats.stderr_mean = std::sqrt(sample_var / static_cast<double>(values.size()));
  return stats;
}

EstimateRecord run_single_rep(const Graph& g, const ExperimentConfig& cfg, uint64_t rep) {
  const uint64_t t = cfg.t != 0 ? cfg.t : g.node_count() / 2;
  const uint64_t rep_seed = fold_in(cfg.seed, rep);
  const auto start = std::chrono::steady_clock::now();
  EstimateRecord rec = dispatch(g, cfg, t, rep_seed);
  const auto stop = std::chrono::steady_clock::now();
  rec.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return rec;
}

RunSummary run_experiment(const Graph& g, const ExperimentConfig& cfg) {
  if (cfg.reps < 1) throw std::invalid_argument("run_experiment: requires reps >= 1");
  RunSummary summary;
  summary.true_value = exact_value_for(g, cfg.algo);
  summary.reps.resize(cfg.reps);

  // Reps are independent and derive their own seeds, so any number of
  // workers produces the same records; rows are stored by rep index.
  const unsigned workers = std::max(1u, cfg.workers);
  std::atomic<uint64_t> next_rep{1};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&]() {
    for (;;) {
      const uint64_t rep = next_rep.fetch_add(1);
      if (rep > cfg.reps) return;
      try {
        EstimateRecord rec = run_single_rep(g, cfg, rep);
        const double re = cfg.re_denominator_min
                              ? relative_error_min_denominator(summary.true_value, rec.estimate,
                                                               g.node_count())
                              : relative_error(summary.true_value, rec.estimate, g.node_count());
        summary.reps[rep - 1] = RepResult{rep, std::move(rec), re};
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<double> estimates, rel_errs, runtimes;
  estimates.reserve(cfg.reps);
  rel_errs.reserve(cfg.reps);
  runtimes.reserve(cfg.reps);
  for (const RepResult& r : summary.reps) {
    estimates.push_back(r.record.estimate);
    rel_errs.push_back(r.rel_err);
    runtimes.push_back(r.record.runtime_ms);
  }
  summary.estimate_stats = summarize(estimates);
  summary.rel_err_stats = summarize(rel_errs);
  summary.runtime_stats = summarize(runtimes);
  return summary;
}

void write_csv(const Graph& g, const ExperimentConfig& cfg, const RunSummary& summary,
               std::ostream& out) {
  out << "algo,n,eps,eps1,eps2,delta,t,c,p0,rep,seed,estimate,true,rel_err,runtime_ms\n";
  const std::string n_text = format_u64(g.node_count());
  const std::string true_text = format_double(summary.true_value);
  auto param_prefix = [&](const EstimateRecord& rec) {
    std::string row = rec.algo;
    append_column(row, n_text);
    append_column(row, format_optional(rec.eps));
    append_column(row, format_optional(rec.eps1));
    append_column(row, format_optional(rec.eps2));
    append_column(row, format_optional(rec.delta));
    append_column(row, rec.t != 0 ? format_u64(rec.t) : std::string());
    append_column(row, format_optional(rec.c));
    append_column(row, format_optional(rec.p0));
    return row;
  };
  for (const RepResult& r : summary.reps) {
    std::string row = param_prefix(r.record);
    append_column(row, format_u64(r.rep));
    append_column(row, format_u64(r.record.seed));
    append_column(row, format_double(r.record.estimate));
    append_column(row, true_text);
    append_column(row, format_double(r.rel_err));
    append_column(row, cfg.timing ? format_double(r.record.runtime_ms) : std::string());
    out << row << '\n';
  }
  const EstimateRecord& first = summary.reps.front().record;
  auto summary_row = [&](const char* label, double estimate, double rel_err, double runtime) {
    std::string row = param_prefix(first);
    append_column(row, label);
    append_column(row, std::string());  // seed
    append_column(row, format_double(estimate));
    append_column(row, true_text);
    append_column(row, format_double(rel_err));
    append_column(row, cfg.timing ? format_double(runtime) : std::string());
    out << row << '\n';
  };
  summary_row("mean", summary.estimate_stats.mean, summary.rel_err_stats.mean,
              summary.runtime_stats.mean);
  summary_row("stderr", summary.estimate_stats.stderr_mean, summary.rel_err_stats.stderr_mean,
              summary.runtime_stats.stderr_mean);
}

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

std::string format_double_scientific(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::scientific);
  return std::string(buf, end);
}

std::string format_from_log10(double log10_value) {
  if (std::isnan(log10_value)) return "nan";
  if (std::isinf(log10_value)) return log10_value > 0 ? "inf" : "0e+00";
  double exponent = std::floor(log10_value);
  double mantissa = std::pow(10.0, log10_value - exponent);
  // Rounding in the fractional power can land the mantissa on 10.
  if (mantissa >= 10.0) {
    mantissa /= 10.0;
    exponent += 1.0;
  }
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), mantissa, std::chars_format::fixed, 15);
  std::string text(buf, end);
  text.push_back('e');
  if (exponent >= 0) text.push_back('+');
  return text + format_double(exponent);
}

}  // namespace shufflecount
