#include "tscycle/series.hpp"

#include "tscycle/stats.hpp"

#include <array>
#include <cmath>

namespace tsc {

double decimal_year(const MonthlySeries& s, Eigen::Index index) {
    if (index < 0 || index >= s.size()) throw ConfigError("decimal_year: index out of range");
    return s.start_year +
           (s.start_month - 1 + static_cast<double>(index)) / static_cast<double>(s.frequency);
}

std::string month_label(const MonthlySeries& s, Eigen::Index index) {
    if (index < 0 || index >= s.size()) throw ConfigError("month_label: index out of range");
    static constexpr std::array<const char*, 12> kMonths = {
        "Jan", "Feb", "Mar", "Apr", "May", "Jun",
        "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
    long months = s.start_month - 1 + index;
    long year = s.start_year + months / 12;
    return std::string(kMonths[months % 12]) + " " + std::to_string(year);
}

AcfResult acf(const MonthlySeries& s, int max_lag) {
    const Eigen::Index n = s.size();
    if (max_lag < 0 || max_lag >= n) throw ConfigError("acf: max_lag out of range");
    double m = s.values.mean();
    Eigen::VectorXd c = s.values.array() - m;
    double denom = c.squaredNorm();
    if (denom <= 0.0) throw NumericError("acf: constant series");
    AcfResult r;
    r.max_lag = max_lag;
    r.rho.resize(max_lag + 1);
    for (int k = 0; k <= max_lag; ++k)
        r.rho[k] = c.head(n - k).dot(c.tail(n - k)) / denom;
    r.ci_halfwidth = 1.96 / std::sqrt(static_cast<double>(n));
    return r;
}

}  // namespace tsc
