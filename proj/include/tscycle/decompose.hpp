#pragma once

#include "tscycle/series.hpp"

#include <cstdint>
#include <string>

namespace tsc {

/// Additive decomposition into seasonal + trend + remainder.
struct Decomposition {
    std::string method;  ///< "stl" or "rmaf"
    Eigen::VectorXd seasonal;
    Eigen::VectorXd trend;
    Eigen::VectorXd remainder;
};

/**
 * @brief Cleveland-style STL with loess smoothing.
 *
 * Seasonal span is forced to the next odd integer; 2 inner loops, 0
 * robustness loops.  Components sum to the input exactly (the remainder is
 * defined as the residual).
 *
 * @throws ConfigError if s_window < 3
 * @throws DataError   if length < 2*frequency + 1
 */
[[nodiscard]] Decomposition stl_decompose(const MonthlySeries& s, int s_window = 12);

/**
 * @brief Refined moving-average filter decomposition.
 *
 * Seasonal component: period-position means, centered to sum to zero.
 * Trend: symmetric (2q+1)-point moving average of the deseasonalized series
 * with a data-driven window half-width q (plug-in bandwidth from a cubic
 * polynomial pilot fit), refined at both boundaries with the one-sided
 * linear-in-position kernels so the trend has full length n.
 *
 * @throws ConfigError if period < 2
 * @throws DataError   if length < 3*period
 */
[[nodiscard]] Decomposition rmaf_decompose(const MonthlySeries& s, int period = 12);

/// CEEMDAN output: IMFs by column, residual last.
struct ImfSet {
    Eigen::MatrixXd imfs;       ///< n x k, last column is the residual
    int ensemble_size = 250;
    double noise_strength = 0.2;  ///< fraction of input stdev
    int s_number = 4;
    int max_siftings = 50;
    std::uint64_t seed = 0;
    bool early_termination = false;  ///< fewer than 4 extrema at some stage
};

/**
 * @brief Complete ensemble EMD with adaptive noise (Torres et al. scheme).
 *
 * EMD core: sifting with natural-cubic-spline envelopes through extrema,
 * mirror-extension boundary handling and S-number stopping.  Stage k adds
 * EMD mode k of seeded white noise, extracts the ensemble-mean first IMF and
 * subtracts; floor(log2 n) columns total including the trailing residual.
 * Per-member RNG
 * streams derive deterministically from (seed, member index); accumulation
 * is index-ordered so results are bit-identical across thread counts.
 *
 * @throws DataError   if length < 64
 * @throws ConfigError on invalid parameters
 */
[[nodiscard]] ImfSet ceemdan(const MonthlySeries& s, int ensemble_size = 250,
                             double noise_strength = 0.2, int s_number = 4,
                             int max_siftings = 50, std::uint64_t seed = 42,
                             int threads = 1);

/// Number of extrema (maxima + minima) and zero crossings of a vector.
struct ExtremaCount {
    int extrema = 0;
    int zero_crossings = 0;
};
[[nodiscard]] ExtremaCount count_extrema(const Eigen::VectorXd& x);

}  // namespace tsc
