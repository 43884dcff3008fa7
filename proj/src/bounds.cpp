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

#include "shufflecount/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <stdexcept>

namespace shufflecount {

namespace {

void check_flip(double q, const char* name) {
  if (q == 0.5) throw std::domain_error(std::string(name) + " = 1/2 is a singularity of the bound");
  if (!(q >= 0.0 && q < 0.5)) throw std::invalid_argument(std::string(name) + " must lie in [0, 1/2)");
}

void check_positive(double v, const char* name) {
  if (!(v > 0.0)) throw std::invalid_argument(std::string(name) + " must be > 0");
}

void check_nonnegative(double v, const char* name) {
  if (!(v >= 0.0)) throw std::invalid_argument(std::string(name) + " must be >= 0");
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in [0, 1)");
}

// log10 of a sum of terms given their log10 values (log-sum-exp in base 10).
// Terms at -infinity (zero terms) are skipped.
double log10_sum(std::initializer_list<double> log_terms) {
  double peak = -std::numeric_limits<double>::infinity();
  for (double lt : log_terms) peak = std::max(peak, lt);
  if (std::isinf(peak)) return peak;
  double scaled = 0.0;
  for (double lt : log_terms) {
    if (!std::isinf(lt)) scaled += std::pow(10.0, lt - peak);
  }
  return peak + std::log10(scaled);
}

// log10 that maps 0 to -infinity instead of raising.
double log10z(double v) {
  return v == 0.0 ? -std::numeric_limits<double>::infinity() : std::log10(v);
}

}  // namespace

double err_wsle(double n, double d_max, double q, double q_w) {
  check_positive(n, "n");
  check_nonnegative(d_max, "d_max");
  check_flip(q, "q");
  check_flip(q_w, "q_w");
  const long double dn = n;
  const long double dd = d_max;
  const long double lq = q;
  const long double lqw = q_w;
  const long double one_w = 1.0L - 2.0L * lqw;
  const long double one_e = 1.0L - 2.0L * lq;
  const long double numerator = dn * lqw + lq * one_w * one_w * dd * dd;
  return static_cast<double>(numerator / (one_e * one_e * one_w * one_w));
}

double err_wsle_log10(double n, double d_max, double q, double q_w) {
  check_positive(n, "n");
  check_nonnegative(d_max, "d_max");
  check_flip(q, "q");
  check_flip(q_w, "q_w");
  const double log_denom = 2.0 * log10z(1.0 - 2.0 * q) + 2.0 * log10z(1.0 - 2.0 * q_w);
  const double term1 = log10z(n) + log10z(q_w);
  const double term2 = log10z(q) + 2.0 * log10z(1.0 - 2.0 * q_w) + 2.0 * log10z(d_max);
  return log10_sum({term1, term2}) - log_denom;
}

double triangle_mse_bound(double n, double d_max, double t, double q, double q_w) {
  check_positive(t, "t");
  const long double err = err_wsle(n, d_max, q, q_w);
  const long double dn = n;
  const long double dd = d_max;
  const long double n4 = dn * dn * dn * dn;
  const long double n3 = dn * dn * dn;
  return static_cast<double>(n4 / (36.0L * t) * err + n3 / (36.0L * t) * dd * dd * dd);
}

double triangle_mse_bound_log10(double n, double d_max, double t, double q, double q_w) {
  check_positive(t, "t");
  check_positive(n, "n");
  check_nonnegative(d_max, "d_max");
  const double log_t36 = std::log10(36.0) + log10z(t);
  const double term1 = 4.0 * log10z(n) - log_t36 + err_wsle_log10(n, d_max, q, q_w);
  const double term2 = 3.0 * log10z(n) - log_t36 + 3.0 * log10z(d_max);
  return log10_sum({term1, term2});
}

double vr_bias_bound(double n, double d_avg, double c, double alpha, double eps1) {
  check_positive(n, "n");
  check_nonnegative(d_avg, "d_avg");
  check_nonnegative(c, "c");
  check_alpha(alpha);
  check_positive(eps1, "eps1");
  const long double dn = n;
  const long double term1 = dn * static_cast<long double>(c) * c * static_cast<long double>(d_avg) * d_avg / 3.0L;
  const long double term2 = 4.0L * powl(dn, alpha) / (3.0L * static_cast<long double>(eps1) * eps1);
  return static_cast<double>(term1 + term2);
}

double vr_bias_bound_log10(double n, double d_avg, double c, double alpha, double eps1) {
  check_positive(n, "n");
  check_nonnegative(d_avg, "d_avg");
  check_nonnegative(c, "c");
  check_alpha(alpha);
  check_positive(eps1, "eps1");
  const double term1 = log10z(n) + 2.0 * log10z(c) + 2.0 * log10z(d_avg) - std::log10(3.0);
  const double term2 = std::log10(4.0) + alpha * log10z(n) - std::log10(3.0) - 2.0 * log10z(eps1);
  return log10_sum({term1, term2});
}

double vr_variance_bound(double n, double d_max, double t, double alpha, double err) {
  check_positive(n, "n");
  check_nonnegative(d_max, "d_max");
  check_positive(t, "t");
  check_alpha(alpha);
  check_nonnegative(err, "err");
  const long double dn = n;
  const long double dd = d_max;
  const long double term1 = dn * dn * dd * dd * dd * dd / 9.0L;
  const long double term2 = 2.0L * powl(dn, 2.0L + 2.0L * alpha) / (9.0L * t) * err;
  const long double term3 = powl(dn, 2.0L + alpha) * dd * dd * dd / (36.0L * t);
  return static_cast<double>(term1 + term2 + term3);
}

double vr_variance_bound_log10(double n, double d_max, double t, double alpha, double err) {
  check_positive(n, "n");
  check_nonnegative(d_max, "d_max");
  check_positive(t, "t");
  check_alpha(alpha);
  check_nonnegative(err, "err");
  const double term1 = 2.0 * log10z(n) + 4.0 * log10z(d_max) - std::log10(9.0);
  const double term2 = std::log10(2.0) + (2.0 + 2.0 * alpha) * log10z(n) - std::log10(9.0) -
                       log10z(t) + log10z(err);
  const double term3 = (2.0 + alpha) * log10z(n) + 3.0 * log10z(d_max) - std::log10(36.0) - log10z(t);
  return log10_sum({term1, term2, term3});
}

double vr_variance_bound_tight(double sum_d2, double n, double d_max, double t, double alpha,
                               double err) {
  check_nonnegative(sum_d2, "sum_d2");
  // Replace the n^2 d_max^4 / 9 leading term with (sum d_i^2)^2 / 9.
  const double stated = vr_variance_bound(n, d_max, t, alpha, err);
  const long double dn = n;
  const long double dd = d_max;
  const long double loose_first = dn * dn * dd * dd * dd * dd / 9.0L;
  const long double tight_first = static_cast<long double>(sum_d2) * sum_d2 / 9.0L;
  return static_cast<double>(stated - loose_first + tight_first);
}

double fourcycle_mse_bound(double n, double d_max, double t, double q_w) {
  check_positive(n, "n");
  check_nonnegative(d_max, "d_max");
  check_positive(t, "t");
  check_flip(q_w, "q_w");
  const long double dn = n;
  const long double dd = d_max;
  const long double lqw = q_w;
  const long double one_w = 1.0L - 2.0L * lqw;
  const long double centered = dd + dn * lqw;
  const long double n5 = dn * dn * dn * dn * dn;
  const long double n3 = dn * dn * dn;
  const long double term1 = 9.0L * n5 * lqw * centered * centered / (16.0L * t * one_w * one_w * one_w * one_w);
  const long double term2 = n3 * dd * dd * dd * dd * dd * dd / (64.0L * t);
  return static_cast<double>(term1 + term2);
}

double fourcycle_mse_bound_log10(double n, double d_max, double t, double q_w) {
  check_positive(n, "n");
  check_nonnegative(d_max, "d_max");
  check_positive(t, "t");
  check_flip(q_w, "q_w");
  const double log_centered = log10_sum({log10z(d_max), log10z(n) + log10z(q_w)});
  const double term1 = std::log10(9.0) + 5.0 * log10z(n) + log10z(q_w) + 2.0 * log_centered -
                       std::log10(16.0) - log10z(t) - 4.0 * log10z(1.0 - 2.0 * q_w);
  const double term2 = 3.0 * log10z(n) + 6.0 * log10z(d_max) - std::log10(64.0) - log10z(t);
  return log10_sum({term1, term2});
}

double measure_tail(const Graph& g, double lambda) {
  const uint32_t n = g.node_count();
  if (n < 2) throw std::invalid_argument("measure_tail: requires n >= 2");
  check_nonnegative(lambda, "lambda");
  const DegreeStats stats = degree_stats(g);
  uint64_t heavy = 0;
  for (uint64_t d : stats.degrees) {
    if (static_cast<double>(d) > lambda * stats.d_avg) ++heavy;
  }
  return std::log(static_cast<double>(std::max<uint64_t>(heavy, 1))) / std::log(static_cast<double>(n));
}

}  // namespace shufflecount
