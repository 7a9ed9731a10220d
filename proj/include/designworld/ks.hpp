#pragma once

#include <vector>

namespace designworld {

struct KSResult {
  double d = 0.0;      // sup |ECDF_x - ECDF_y|
  double p = 1.0;      // asymptotic two-sample p-value, in (0, 1]
  int direction = 0;   // sign of mean(x) - mean(y)
};

// Two-sample Kolmogorov-Smirnov test. The p-value uses the asymptotic
// series 2 * sum_k (-1)^(k-1) exp(-2 k^2 n_e d^2) with effective size
// n_e = |x||y| / (|x| + |y|). Throws std::invalid_argument when either
// sample has fewer than two values.
KSResult ks_two_sample(const std::vector<double>& x, const std::vector<double>& y);

// P-value for a given statistic and effective sample size; exposed for
// threshold computations.
double ks_asymptotic_p(double d, double effective_n);

// Smallest d that is significant at `alpha` for samples of size n and m,
// found by inverting the asymptotic series.
double ks_critical_d(double alpha, std::size_t n, std::size_t m);

}  // namespace designworld
