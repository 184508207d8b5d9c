#pragma once

#include "tscycle/series.hpp"

namespace tsc {

/// Long-range-dependence estimates.
struct LongMemoryEstimates {
    double gph_d = 0.0;        ///< log-periodogram estimate of d
    int bandwidth_m = 0;       ///< number of low frequencies used
    double rs_simple = 0.0;    ///< log(R/S of the whole series)/log(n)
    double rs_corrected = 0.0; ///< empirical slope minus theoretical slope + 0.5
    double rs_empirical = 0.0; ///< slope of log2 mean R/S on log2 block size
    double rs_corrected_empirical = 0.0;  ///< Anis-Lloyd corrected slope
    double rs_theoretical = 0.0;          ///< slope of log2 expected R/S
    double ml_hurst = 0.0;     ///< 0.5 + ML estimate of d
};

/**
 * @brief GPH log-periodogram regression estimate of d.
 *
 * Uses periodogram ordinates j = 1..m with regressor
 * -log(4 sin^2(lambda_j / 2)).  m < 0 selects floor(1 + n^0.8).
 */
[[nodiscard]] double gph_estimate(const MonthlySeries& s, int m = -1);

/**
 * @brief Rescaled-range Hurst estimates (fills the five rs_* fields).
 *
 * The series is truncated to the smallest length in [0.99 n, n] with the
 * most divisors >= min_block; block sizes are those divisors.  rs_simple is
 * the single whole-series statistic; the slope variants regress
 * log2(mean R/S) on log2(block size); rs_theoretical uses the small-sample
 * expected-R/S formula and depends only on n.
 *
 * @throws NumericError on constant input
 */
[[nodiscard]] LongMemoryEstimates hurst_rs(const MonthlySeries& s, int min_block = 50);

/**
 * @brief 0.5 + d where d maximizes the exact Gaussian profile likelihood of
 * fractionally differenced noise, d constrained to [0, 0.5].
 *
 * The likelihood is evaluated with Durbin-Levinson innovations on the
 * demeaned series; golden-section search to 1e-7.
 */
[[nodiscard]] double hurst_ml(const MonthlySeries& s);

/// Convenience: run all long-memory estimators.
[[nodiscard]] LongMemoryEstimates long_memory(const MonthlySeries& s);

}  // namespace tsc
