#pragma once

#include <cstdint>
#include <span>

#include "pqchain/errors.hpp"

namespace pqchain {

/// Regularized lower incomplete gamma P(a, x); series for x < a + 1,
/// continued fraction otherwise. Relative accuracy ~1e-12 for the degrees of
/// freedom used here (df <= 1024).
double regularized_gamma_lower(double a, double x);

/// Q(a, x) = 1 - P(a, x).
double regularized_gamma_upper(double a, double x);

/// Survival function of the chi-square distribution: Q(df/2, x/2).
double chi_square_p_value(double statistic, double degrees_of_freedom);

struct ChiSquareResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

/// Pearson statistic against the uniform distribution over counts.size()
/// buckets, with p-value at counts.size()-1 degrees of freedom. Requires at
/// least two buckets; throws DegenerateInput when all counts are zero.
ChiSquareResult chi_square_uniform(std::span<const std::uint64_t> counts);

}  // namespace pqchain
