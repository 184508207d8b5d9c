#pragma once

#include "tscycle/series.hpp"

namespace tsc {

/**
 * @brief Summary statistics (Table-2 layout).
 *
 * Skewness and excess kurtosis use central moments with 1/n weighting over
 * a denominator built from the unbiased (n-1) variance, i.e.
 * skew = (sum c^3 / n) / var^1.5 and kurt = (sum c^4 / n) / var^2 - 3.
 * Quartiles use the continuous type-7 rule; the 95% mean CI uses Student-t.
 */
struct SummaryStats {
    Eigen::Index nobs = 0;
    Eigen::Index na_count = 0;
    double minimum = 0, maximum = 0;
    double q1 = 0, q3 = 0;
    double mean = 0, median = 0, sum = 0;
    double se_mean = 0, lcl_mean = 0, ucl_mean = 0;
    double variance = 0, stdev = 0;
    double skewness = 0, kurtosis_excess = 0;
    bool moments_defined = true;  ///< false when variance is zero
};

/**
 * @brief Compute summary statistics for one series.
 * @throws DataError if length < 2
 */
[[nodiscard]] SummaryStats basic_stats(const MonthlySeries& s);

}  // namespace tsc
