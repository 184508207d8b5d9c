#pragma once

#include "tscycle/series.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace tsc {

/// Canonical economic-cycle bands (years).
enum class CycleBand { seasonal_yearly, kitchin, juglar, kuznets, kondratieff, unclassified };

[[nodiscard]] const char* to_string(CycleBand b);

struct CycleClassification {
    double period_years = 0.0;
    CycleBand band = CycleBand::unclassified;
    double band_lo = 0.0, band_hi = 0.0;
};

/**
 * @brief Map a period in years onto the canonical cycle bands:
 * seasonal/yearly [0.2, 1.5), kitchin [2.5, 4.5), juglar [4.5, 11),
 * kuznets [15, 25], kondratieff [40, 60]; gaps are unclassified.
 *
 * @throws ConfigError on non-positive period
 */
[[nodiscard]] CycleClassification classify_cycles(double period_years);

/// Full-pipeline configuration.
struct AnalysisConfig {
    std::string input_path;
    std::string column;  ///< empty = all three series
    int start_year = 1976;
    int start_month = 5;
    int frequency = 12;
    std::uint64_t seed = 42;
    double alpha = 0.01;
    std::string out_path;       ///< empty = stdout
    std::string emit_csv_dir;   ///< empty = no CSV side files
    // per-module overrides
    int max_lag = 5;
    double min_seg_frac = 0.15;
    int max_breaks = 5;
    int ensemble_size = 250;
    double noise_strength = 0.2;
    double dj = 0.01;
    int s_window = 12;
    int period = 12;
    bool skip_ceemdan = false;  ///< fast mode for smoke runs
};

/**
 * @brief Run every module on the configured series and write the JSON
 * report (stable key order) plus optional CSV side files.
 *
 * @return the report as a JSON string
 * @throws ConfigError / DataError / NumericError with module context
 */
std::string run_report(const AnalysisConfig& config);

}  // namespace tsc
