#include "tscycle/dist_tests.hpp"

#include "tscycle/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace tsc {

namespace {

/// Average ranks of one block (ties share the mean rank).
std::vector<double> rank_avg(const std::vector<double>& v) {
    const size_t k = v.size();
    std::vector<size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return v[a] < v[b]; });
    std::vector<double> r(k);
    size_t i = 0;
    while (i < k) {
        size_t j = i;
        while (j + 1 < k && v[idx[j + 1]] == v[idx[i]]) ++j;
        double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (size_t t = i; t <= j; ++t) r[idx[t]] = avg;
        i = j + 1;
    }
    return r;
}

}  // namespace

SeasonalitySuite seasonality_suite(const MonthlySeries& s, int freq) {
    const Eigen::Index n = s.size();
    if (n < 3 * freq) throw DataError("seasonality_suite: need at least 3 full cycles");
    const Eigen::VectorXd& x = s.values;
    SeasonalitySuite out;

    // QS: Ljung-Box style statistic at lags freq and 2*freq of diff(x),
    // negative autocorrelations truncated to zero.
    {
        Eigen::VectorXd z = x.tail(n - 1) - x.head(n - 1);
        const double nz = static_cast<double>(z.size());
        Eigen::VectorXd g = stats::acov_biased(z, 2 * freq);
        double stat = 0.0, p = 1.0;
        if (g[0] > 0.0) {
            double r1 = std::max(0.0, g[freq] / g[0]);
            double r2 = std::max(0.0, g[2 * freq] / g[0]);
            stat = nz * (nz + 2.0) *
                   (r1 * r1 / (nz - freq) + r2 * r2 / (nz - 2 * freq));
            p = stats::chi2_sf(stat, 2.0);
        }
        out.qs = {"QS", stat, p, false, "no seasonality (seasonal autocorrelations zero)", {
                      {"df", 2.0}}};
    }

    // Detrend by the centered 2xfreq moving average for the rank/ANOVA tests;
    // freq/2 observations drop from each end.
    Eigen::VectorXd trend = stats::ma_2xp(x, freq);
    Eigen::VectorXd det = x.segment(freq / 2, trend.size()) - trend;
    int month0 = (s.start_month - 1 + freq / 2) % freq;

    // Friedman rank test: consecutive freq-length blocks as years.
    {
        const int blocks = static_cast<int>(det.size()) / freq;
        const int k = freq;
        double A = 0.0;
        Eigen::VectorXd colsum = Eigen::VectorXd::Zero(k);
        for (int b = 0; b < blocks; ++b) {
            std::vector<double> row(k);
            for (int j = 0; j < k; ++j) row[j] = det[b * freq + j];
            std::vector<double> r = rank_avg(row);
            for (int j = 0; j < k; ++j) {
                A += r[j] * r[j];
                colsum[j] += r[j];
            }
        }
        double C = static_cast<double>(blocks) * k * (k + 1.0) * (k + 1.0) / 4.0;
        double stat = 0.0, p = 1.0;
        if (A > C) {
            double ss = (colsum.array() - blocks * (k + 1.0) / 2.0).square().sum();
            stat = (k - 1.0) * ss / (A - C);
            p = stats::chi2_sf(stat, k - 1.0);
        }
        out.friedman = {"Friedman rank", stat, p, false,
                        "no seasonality (equal month ranks)", {{"df", k - 1.0}}};
    }

    // Welch unequal-variance one-way ANOVA across the freq month groups.
    {
        const int k = freq;
        std::vector<std::vector<double>> groups(k);
        for (Eigen::Index i = 0; i < det.size(); ++i)
            groups[(month0 + i) % freq].push_back(det[i]);
        double W = 0.0, mw = 0.0;
        std::vector<double> wi(k), mi(k);
        bool degenerate = false;
        for (int j = 0; j < k; ++j) {
            const auto& g = groups[j];
            double nj = static_cast<double>(g.size());
            double m = std::accumulate(g.begin(), g.end(), 0.0) / nj;
            double v = 0.0;
            for (double u : g) v += (u - m) * (u - m);
            v /= (nj - 1.0);
            if (v <= 0.0) {
                degenerate = true;
                break;
            }
            wi[j] = nj / v;
            mi[j] = m;
            W += wi[j];
            mw += wi[j] * m;
        }
        double stat = 0.0, p = 1.0, df2 = 0.0;
        if (!degenerate) {
            mw /= W;
            double num = 0.0, hsum = 0.0;
            for (int j = 0; j < k; ++j) {
                num += wi[j] * (mi[j] - mw) * (mi[j] - mw);
                double nj = static_cast<double>(groups[j].size());
                double h = (1.0 - wi[j] / W);
                hsum += h * h / (nj - 1.0);
            }
            num /= (k - 1.0);
            double den = 1.0 + 2.0 * (k - 2.0) / (k * k - 1.0) * hsum;
            stat = num / den;
            df2 = 1.0 / (3.0 * hsum / (k * k - 1.0));
            p = stats::f_sf(stat, k - 1.0, df2);
        }
        out.welch = {"Welch ANOVA", stat, p, false,
                     "no seasonality (equal month means)", {{"df1", k - 1.0}, {"df2", df2}}};
    }

    // Combined decision: QS family at 0.01 or rank family at 0.002.
    out.wo_seasonal = out.qs.p_value < 0.01 || out.friedman.p_value < 0.002;
    return out;
}

}  // namespace tsc
