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

#ifndef SHUFFLECOUNT_BOUNDS_HPP_
#define SHUFFLECOUNT_BOUNDS_HPP_

#include "shufflecount/graph.hpp"

namespace shufflecount {

// Closed-form variance/bias ceilings for the estimators, used as
// documentation output and as ceilings in the empirical variance tests.
// Flip probabilities q (edge reports) and q_w (wedge bits) must lie in
// [0, 1/2); exactly 1/2 makes every denominator vanish (singularity error).
// Values are computed in extended precision; the *_log10 twins evaluate the
// same expressions in log space for magnitudes beyond double range.

// Per-pair variance ceiling of the triangle estimate:
//   (n q_w + q (1-2 q_w)^2 d_max^2) / ((1-2q)^2 (1-2 q_w)^2).
double err_wsle(double n, double d_max, double q, double q_w);
double err_wsle_log10(double n, double d_max, double q, double q_w);

// Whole-graph triangle MSE ceiling:
//   n^4/(36 t) * err_wsle + n^3/(36 t) * d_max^3.
double triangle_mse_bound(double n, double d_max, double t, double q, double q_w);
double triangle_mse_bound_log10(double n, double d_max, double t, double q, double q_w);

// Bias ceiling of the variance-reduced triangle estimate when at most
// n^alpha users have degree above lambda * d_avg and c >= lambda:
//   n c^2 d_avg^2 / 3 + 4 n^alpha / (3 eps1^2).
double vr_bias_bound(double n, double d_avg, double c, double alpha, double eps1);
double vr_bias_bound_log10(double n, double d_avg, double c, double alpha, double eps1);

// Variance ceiling of the variance-reduced triangle estimate:
//   n^2 d_max^4 / 9 + 2 n^(2+2 alpha)/(9 t) * err + n^(2+alpha) d_max^3/(36 t),
// with err the err_wsle value for the run's budgets. The first term uses the
// stated n^2 d_max^4 form; pass sum_d2 = sum of squared degrees to
// vr_variance_bound_tight for the sharper (sum d_i^2)^2 / 9 variant.
double vr_variance_bound(double n, double d_max, double t, double alpha, double err);
double vr_variance_bound_log10(double n, double d_max, double t, double alpha, double err);
double vr_variance_bound_tight(double sum_d2, double n, double d_max, double t, double alpha,
                               double err);

// Whole-graph 4-cycle MSE ceiling:
//   9 n^5 q_w (d_max + n q_w)^2 / (16 t (1-2 q_w)^4) + n^3 d_max^6 / (64 t).
double fourcycle_mse_bound(double n, double d_max, double t, double q_w);
double fourcycle_mse_bound_log10(double n, double d_max, double t, double q_w);

// Smallest tail exponent alpha such that at most n^alpha users have degree
// strictly above lambda * d_avg: log_n(max(1, count)). Requires n >= 2 and
// lambda >= 0.
double measure_tail(const Graph& g, double lambda);

}  // namespace shufflecount

#endif  // SHUFFLECOUNT_BOUNDS_HPP_
