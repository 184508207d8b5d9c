#include "tscycle/descriptive.hpp"

#include "tscycle/stats.hpp"

#include <cmath>

namespace tsc {

SummaryStats basic_stats(const MonthlySeries& s) {
    const Eigen::Index n = s.size();
    if (n < 2) throw DataError("basic_stats: need at least 2 observations");
    const Eigen::VectorXd& x = s.values;

    SummaryStats r;
    r.nobs = n;
    r.na_count = 0;
    r.minimum = x.minCoeff();
    r.maximum = x.maxCoeff();
    r.sum = x.sum();
    r.mean = x.mean();
    r.q1 = stats::quantile_type7(x, 0.25);
    r.median = stats::quantile_type7(x, 0.50);
    r.q3 = stats::quantile_type7(x, 0.75);
    r.variance = stats::var(x);
    r.stdev = std::sqrt(r.variance);
    r.se_mean = r.stdev / std::sqrt(static_cast<double>(n));
    double tq = stats::t_ppf(0.975, static_cast<double>(n - 1));
    r.lcl_mean = r.mean - tq * r.se_mean;
    r.ucl_mean = r.mean + tq * r.se_mean;

    if (r.variance <= 0.0) {
        r.moments_defined = false;
        r.skewness = r.kurtosis_excess = std::nan("");
        return r;
    }
    Eigen::ArrayXd c = x.array() - r.mean;
    double m3 = c.cube().sum() / static_cast<double>(n);
    double m4 = c.square().square().sum() / static_cast<double>(n);
    r.skewness = m3 / std::pow(r.variance, 1.5);
    r.kurtosis_excess = m4 / (r.variance * r.variance) - 3.0;
    return r;
}

}  // namespace tsc
