#pragma once

#include "tscycle/series.hpp"

#include <array>
#include <vector>

namespace tsc {

/// Empirical fluctuation process variants (intercept-only model).
enum class EfpType { ols_cusum, ols_mosum, rec_cusum, rec_mosum };

[[nodiscard]] const char* to_string(EfpType t);

struct EfpResult {
    EfpType process_type = EfpType::ols_cusum;
    Eigen::VectorXd path;      ///< scaled fluctuation process
    double statistic = 0.0;    ///< sup-norm of the (boundary-scaled) process
    double p_value = 1.0;
    bool p_clamped = false;
    double bandwidth = 0.15;   ///< MOSUM window fraction
};

/**
 * @brief EFP significance test for one process type.
 *
 * CUSUM p-values use the analytic boundary-crossing series; MOSUM p-values
 * interpolate an embedded critical-value table (clamped to 0.01).
 *
 * @throws ConfigError if bandwidth outside (0, 0.5]
 */
[[nodiscard]] EfpResult efp_test(const MonthlySeries& s, EfpType type,
                                 double bandwidth = 0.15);

/// One break with its 95% confidence interval, all in decimal years.
struct BreakInterval {
    double lower = 0, point = 0, upper = 0;
};

struct BreakpointSet {
    int chosen_m = 0;
    std::vector<Eigen::Index> break_indices;  ///< 0-based last index of segment
    std::vector<double> break_dates;          ///< decimal years
    std::vector<BreakInterval> conf_intervals;
    std::vector<double> rss_by_m;  ///< m = 0..max_breaks
    std::vector<double> bic_by_m;
    Eigen::Index min_segment = 0;  ///< h
};

/**
 * @brief Bai-Perron dating of mean shifts by exact dynamic programming.
 *
 * Minimizes segmented RSS for each m <= max_breaks over segments of at
 * least h = floor(min_seg_frac * n) observations; m chosen by BIC with
 * 2m + 2 parameters.  Ties break toward the earliest feasible index.
 */
[[nodiscard]] BreakpointSet breakpoints(const MonthlySeries& s,
                                        double min_seg_frac = 0.15,
                                        int max_breaks = 5);

/**
 * @brief 95% confidence intervals from Bai's asymptotic break-date
 * distribution (argmax of two-sided drifted Brownian motion), using
 * segment-wise residual variances and the mean-shift magnitude.
 *
 * @throws NumericError when an adjacent-segment mean difference is ~0
 */
void break_confint(const MonthlySeries& s, BreakpointSet& bp, double level = 0.95);

/**
 * @brief CDF of the argmax of V(s) = W1(-s) - |s|/2 (s <= 0),
 * v W2(s) - |s|/2 (s > 0); v is the ratio of post- to pre-break
 * innovation standard deviations.  Exposed for validation against the
 * closed-form symmetric case.
 */
[[nodiscard]] double break_argmax_cdf(double x, double v);

}  // namespace tsc
