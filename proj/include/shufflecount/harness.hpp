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

#ifndef SHUFFLECOUNT_HARNESS_HPP_
#define SHUFFLECOUNT_HARNESS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "shufflecount/estimators.hpp"
#include "shufflecount/graph.hpp"

namespace shufflecount {

// Experiment orchestration: repeated estimator runs with derived per-rep
// seeds, relative-error scoring, and CSV emission. Identical (config, seed)
// inputs produce byte-identical CSV regardless of worker count.

// |true - estimate| / max(true, n/1000). The floor keeps the metric finite
// when the true count is tiny or zero.
double relative_error(double true_value, double estimate, uint64_t n);

// Audit-only variant with the floor applied as min(true, n/1000); may divide
// by zero when the true count is 0. Selected by `run --re-denom min`.
double relative_error_min_denominator(double true_value, double estimate, uint64_t n);

struct SummaryStats {
  double mean = 0.0;
  double stderr_mean = 0.0;  // sample stddev (ddof=1) / sqrt(count); 0 for a single value
};

// Mean and standard error of the mean. Requires at least one value.
SummaryStats summarize(const std::vector<double>& values);

struct ExperimentConfig {
  std::string algo;
  double eps = 0.0;
  double delta = 1e-8;
  uint64_t t = 0;  // 0 = default floor(n/2)
  double c = 1.0;
  double p0 = 1.0;
  double eta_clip = 150.0;
  uint64_t reps = 20;
  uint64_t seed = 0;
  unsigned workers = 1;
  // Off by default: wall-clock times vary run to run, so the runtime_ms
  // column stays empty unless explicitly requested.
  bool timing = false;
  bool re_denominator_min = false;
};

struct RepResult {
  uint64_t rep = 0;  // 1-based
  EstimateRecord record;
  double rel_err = 0.0;
};

struct RunSummary {
  double true_value = 0.0;
  std::vector<RepResult> reps;
  SummaryStats estimate_stats;
  SummaryStats rel_err_stats;
  SummaryStats runtime_stats;
};

// Runs one estimator rep at the given 1-based index; the rep seed is derived
// as fold_in(master seed, rep). Exposed for tests that pin single reps.
EstimateRecord run_single_rep(const Graph& g, const ExperimentConfig& cfg, uint64_t rep);

// Computes the exact count once, executes cfg.reps independent reps (across
// cfg.workers threads; results are identical for any worker count), and
// summarizes. Unknown algorithm ids raise std::invalid_argument.
RunSummary run_experiment(const Graph& g, const ExperimentConfig& cfg);

// CSV schema: algo,n,eps,eps1,eps2,delta,t,c,p0,rep,seed,estimate,true,rel_err,runtime_ms
// One row per rep (rep = 1..R), then summary rows with rep = "mean" and
// "stderr". Inapplicable fields are empty. Doubles use shortest round-trip
// formatting.
void write_csv(const Graph& g, const ExperimentConfig& cfg, const RunSummary& summary,
               std::ostream& out);

// Shortest round-trip decimal text for a double ("nan" and "inf" spelled out).
std::string format_double(double value);

// Scientific-notation text, e.g. "8.145777117193299e+17".
std::string format_double_scientific(double value);

// Scientific-notation text for a value given as log10(value); exact enough
// for magnitudes far beyond double range.
std::string format_from_log10(double log10_value);

}  // namespace shufflecount

#endif  // SHUFFLECOUNT_HARNESS_HPP_
