#pragma once

#include "tscycle/series.hpp"

#include <vector>

namespace tsc {

/// Morlet wavelet power spectrum.
struct WaveletSpectrum {
    Eigen::VectorXd periods;    ///< years, log-spaced by dj
    Eigen::VectorXd times;      ///< decimal years, one per observation
    Eigen::MatrixXd power;      ///< period x time, |W|^2 / scale
    Eigen::VectorXd avg_power;  ///< time-mean power per period
    Eigen::VectorXd coi;        ///< cone-of-influence period per time
    double dt = 1.0 / 12.0;
    double dj = 0.01;
};

/**
 * @brief Continuous wavelet transform with a Morlet mother (omega0 = 6).
 *
 * Computed by frequency-domain multiplication on the zero-padded (next power
 * of two) demeaned series; period = scale * 4*pi/(6 + sqrt(38)); power is
 * bias-corrected by dividing |W|^2 by scale.
 *
 * @throws ConfigError if dj <= 0 or dt <= 0
 * @throws DataError   if length < 32
 */
[[nodiscard]] WaveletSpectrum morlet_power(const MonthlySeries& s, double dt = 1.0 / 12.0,
                                           double dj = 0.01);

/**
 * @brief Dominant period in samples from an AR spectrum.
 *
 * Linearly detrends, fits AR by Yule-Walker with AIC order selection,
 * evaluates the AR spectral density on a 500-point grid over [0, 0.5], and
 * returns round(1/argmax frequency); returns 1 when no usable peak exists
 * (flat spectrum, zero-frequency maximum with no interior rise, or peak
 * power below the detection threshold).
 */
[[nodiscard]] int find_frequency(const MonthlySeries& s);

/// A strict local maximum with its surrounding extent.
struct Peak {
    double value = 0.0;
    Eigen::Index index = 0;  ///< 0-based
    Eigen::Index left = 0;   ///< extent endpoints (surrounding minima)
    Eigen::Index right = 0;
};

/**
 * @brief Local-maxima detection by strict sign change of first differences.
 *
 * Extents grow to the nearest surrounding local minima; peaks below
 * min_height or with prominence above extent endpoints below threshold are
 * dropped; the top npeaks by value are reported in index order
 * (npeaks <= 0 keeps all).
 */
[[nodiscard]] std::vector<Peak> find_peaks(const Eigen::VectorXd& values, int npeaks = 0,
                                           double threshold = 0.0,
                                           double min_height = -1e308);

}  // namespace tsc
