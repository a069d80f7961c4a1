// Copyright 2026 The vaguescore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VAGUESCORE_STATS_H_
#define VAGUESCORE_STATS_H_

#include <span>

namespace vaguescore::stats {

struct Summary {
  double min = 0.0;
  double median = 0.0;
  double mean = 0.0;
  double max = 0.0;
};

// Min, median (mean of the two central values for even sizes), mean and max.
// All zero for an empty sample.
Summary summarize(std::span<const double> values);

double mean(std::span<const double> values);
// Unbiased (n - 1) variance; 0 for fewer than two values.
double sample_variance(std::span<const double> values);

// Regularized incomplete beta I_x(a, b) by Lentz's continued fraction.
double incomplete_beta(double a, double b, double x);

// CDF of Student's t with `df` (possibly fractional) degrees of freedom.
double student_t_cdf(double t, double df);

struct WelchResult {
  double mean_a = 0.0;
  double mean_b = 0.0;
  double t = 0.0;
  double df = 0.0;  // Welch-Satterthwaite
  double p = 1.0;   // two-tailed
};

// Unequal-variance two-sample t-test. Both samples need at least two values.
// With zero variance in both samples the statistic is 0 and p = 1 for equal
// means, and +-infinity with p = 0 otherwise.
WelchResult welch_t_test(std::span<const double> a, std::span<const double> b);

}  // namespace vaguescore::stats

#endif  // VAGUESCORE_STATS_H_
