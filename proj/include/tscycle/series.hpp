#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace tsc {

/// Error categories used across the toolkit; each maps to a CLI exit code.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * @brief Calendar-anchored monthly time series.
 *
 * The unit of all analysis: a named sequence of finite reals anchored to a
 * (start_year, start_month) calendar position with a fixed sampling
 * frequency (samples per year, 12 for monthly data).
 */
struct MonthlySeries {
    std::string name;
    Eigen::VectorXd values;
    int start_year = 1976;
    int start_month = 5;   ///< 1..12
    int frequency = 12;

    [[nodiscard]] Eigen::Index size() const { return values.size(); }
};

/// The three fixture series; total[i] == pmn[i] + pma[i] for every i.
struct SeriesBundle {
    MonthlySeries pmn;
    MonthlySeries pma;
    MonthlySeries total;
};

/**
 * @brief Decimal-year position of an observation.
 *
 * Matches the break-date convention: index 0 of a series anchored at
 * (1976, 5) maps to 1976 + 4/12.
 */
[[nodiscard]] double decimal_year(const MonthlySeries& s, Eigen::Index index);

/// "Mon YYYY" label (English three-letter month) for an observation.
[[nodiscard]] std::string month_label(const MonthlySeries& s, Eigen::Index index);

/// Result of the sample autocorrelation function.
struct AcfResult {
    int max_lag = 0;
    Eigen::VectorXd rho;        ///< rho[0..max_lag], rho[0] == 1
    double ci_halfwidth = 0.0;  ///< 1.96 / sqrt(n)
};

/**
 * @brief Sample ACF: rho_k = sum (x_t - m)(x_{t+k} - m) / sum (x_t - m)^2.
 *
 * @throws NumericError on constant input (degenerate variance)
 * @throws ConfigError  if max_lag >= length
 */
[[nodiscard]] AcfResult acf(const MonthlySeries& s, int max_lag);

}  // namespace tsc
