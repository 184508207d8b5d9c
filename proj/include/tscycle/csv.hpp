#pragma once

#include "tscycle/series.hpp"

#include <string>

namespace tsc {

/**
 * @brief Parse the PMN,PMA,TotalMD monthly CSV into a SeriesBundle.
 *
 * Expects a header row naming the three columns (an optional leading date
 * column is accepted and ignored for values).  Every data cell must parse as
 * a non-negative number and every row must satisfy total == pmn + pma.
 *
 * @throws DataError on malformed cells (with row/column), sum violations
 *         (naming the row), or fewer than 24 data rows
 */
[[nodiscard]] SeriesBundle ingest_csv(const std::string& content, int start_year,
                                      int start_month, int frequency);

/// Read a file into memory and ingest_csv it.
[[nodiscard]] SeriesBundle ingest_csv_file(const std::string& path, int start_year,
                                           int start_month, int frequency);

/// Serialize a bundle back to the canonical three-column CSV text.
[[nodiscard]] std::string to_csv(const SeriesBundle& b);

}  // namespace tsc
