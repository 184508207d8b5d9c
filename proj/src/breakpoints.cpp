#include "tscycle/structural.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace tsc {

BreakpointSet breakpoints(const MonthlySeries& s, double min_seg_frac, int max_breaks) {
    const Eigen::Index n = s.size();
    if (min_seg_frac <= 0.0 || min_seg_frac > 0.5)
        throw ConfigError("breakpoints: min_seg_frac must lie in (0, 0.5]");
    const int h = static_cast<int>(std::floor(min_seg_frac * static_cast<double>(n)));
    if (h < 2) throw DataError("breakpoints: minimum segment shorter than 2 observations");
    if (max_breaks < 0) throw ConfigError("breakpoints: max_breaks must be non-negative");
    max_breaks = std::min<int>(max_breaks, static_cast<int>(n) / h - 1);

    const Eigen::VectorXd& x = s.values;
    std::vector<double> ps(n + 1, 0.0), ps2(n + 1, 0.0);
    for (Eigen::Index i = 0; i < n; ++i) {
        ps[i + 1] = ps[i] + x[i];
        ps2[i + 1] = ps2[i] + x[i] * x[i];
    }
    // RSS of the constant fit over observations i..j inclusive.
    auto rss = [&](int i, int j) {
        double len = static_cast<double>(j - i + 1);
        double sum = ps[j + 1] - ps[i];
        return ps2[j + 1] - ps2[i] - sum * sum / len;
    };

    const double inf = std::numeric_limits<double>::infinity();
    const int N = static_cast<int>(n);
    // dp[m][j]: best RSS of observations 0..j split into m+1 segments;
    // arg[m][j]: last interior break (end of the m-th segment), earliest tie.
    std::vector<std::vector<double>> dp(max_breaks + 1, std::vector<double>(N, inf));
    std::vector<std::vector<int>> arg(max_breaks + 1, std::vector<int>(N, -1));
    for (int j = h - 1; j < N; ++j) dp[0][j] = rss(0, j);
    for (int m = 1; m <= max_breaks; ++m) {
        for (int j = (m + 1) * h - 1; j < N; ++j) {
            for (int t = m * h - 1; t <= j - h; ++t) {
                if (dp[m - 1][t] == inf) continue;
                double cand = dp[m - 1][t] + rss(t + 1, j);
                if (cand < dp[m][j]) {
                    dp[m][j] = cand;
                    arg[m][j] = t;
                }
            }
        }
    }

    BreakpointSet out;
    out.min_segment = h;
    const double dn = static_cast<double>(n);
    double best_bic = inf;
    for (int m = 0; m <= max_breaks; ++m) {
        double r = dp[m][N - 1];
        if (r == inf) break;
        // Gaussian likelihood BIC with m breaks, m+1 means and one variance.
        double ll = -0.5 * dn * (std::log(r / dn) + 1.0 + std::log(2.0 * M_PI));
        double bic = -2.0 * ll + std::log(dn) * (2.0 * m + 2.0);
        out.rss_by_m.push_back(r);
        out.bic_by_m.push_back(bic);
        if (bic < best_bic) {
            best_bic = bic;
            out.chosen_m = m;
        }
    }

    // Backtrack the chosen partition.
    std::vector<int> idx;
    int j = N - 1;
    for (int m = out.chosen_m; m >= 1; --m) {
        int t = arg[m][j];
        idx.push_back(t);
        j = t;
    }
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
        out.break_indices.push_back(*it);
        out.break_dates.push_back(decimal_year(s, *it));
    }
    return out;
}

}  // namespace tsc
