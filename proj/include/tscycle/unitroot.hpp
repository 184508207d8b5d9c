#pragma once

#include "tscycle/series.hpp"

#include <string>
#include <vector>

namespace tsc {

/// Deterministic component of a unit-root regression.
enum class Deterministic { none, drift, drift_trend };

[[nodiscard]] const char* to_string(Deterministic d);

/// One row of a unit-root table.
struct UnitRootRow {
    Deterministic type = Deterministic::none;
    int lag = 0;
    double statistic = 0.0;
    double p_value = 1.0;
    bool p_clamped_low = false;   ///< p reported as <= lower table bound
    bool p_clamped_high = false;  ///< p reported as >= upper table bound
};

struct UnitRootTable {
    std::string test_name;
    std::vector<UnitRootRow> rows;
};

/**
 * @brief Augmented Dickey-Fuller tests over the (type x lag) grid.
 *
 * For each deterministic type and lag 0..max_lag, regresses diff(x) on the
 * lagged level, lagged differences and deterministic terms, and reports the
 * t statistic of the lagged level.  p-values interpolate the embedded
 * Dickey-Fuller tau table (clamped to [0.01, 0.99]).
 */
[[nodiscard]] UnitRootTable adf_test(const MonthlySeries& s, int max_lag = 5);

/**
 * @brief KPSS tests (stationarity null) for the three deterministic types.
 *
 * The LM statistic uses partial sums of the residuals from the first-order
 * autoregression y_t on [deterministic terms, y_{t-1}] and a Bartlett
 * long-run variance with bandwidth floor(3*sqrt(n)/13).  p-values
 * interpolate the embedded critical-value rows, clamped to [0.01, 0.10].
 */
[[nodiscard]] UnitRootTable kpss_test(const MonthlySeries& s);

/**
 * @brief Phillips-Perron Z_rho tests for the three deterministic types.
 *
 * Serial-correlation correction uses a Bartlett window with bandwidth
 * floor(4*(n/100)^0.25).  p-values interpolate the embedded normalized-bias
 * table, clamped to [0.01, 0.99].
 */
[[nodiscard]] UnitRootTable pp_test(const MonthlySeries& s);

}  // namespace tsc
