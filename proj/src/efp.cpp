#include "tscycle/structural.hpp"

#include "tscycle/stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace tsc {

const char* to_string(EfpType t) {
    switch (t) {
        case EfpType::ols_cusum: return "OLS-CUSUM";
        case EfpType::ols_mosum: return "OLS-MOSUM";
        case EfpType::rec_cusum: return "Rec-CUSUM";
        default: return "Rec-MOSUM";
    }
}

namespace {

// Simulated critical values of the sup-norm of the limiting moving-sum
// processes: rows are window fractions 0.05..0.50, columns are upper tail
// probabilities 0.20/0.15/0.10/0.05/0.025/0.01 (60000 paths of 4000 steps,
// seed 20260823).
constexpr std::array<double, 6> kAlphas = {0.20, 0.15, 0.10, 0.05, 0.025, 0.01};
constexpr std::array<double, 10> kBands = {0.05, 0.10, 0.15, 0.20, 0.25,
                                           0.30, 0.35, 0.40, 0.45, 0.50};
using MosumTable = std::array<std::array<double, 6>, 10>;

constexpr MosumTable kOlsMosumCrit = {{{0.7091, 0.7317, 0.7607, 0.8065, 0.8494, 0.9031},
                                       {0.9098, 0.9432, 0.9856, 1.0540, 1.1149, 1.1913},
                                       {1.0306, 1.0738, 1.1276, 1.2127, 1.2887, 1.3830},
                                       {1.1092, 1.1585, 1.2225, 1.3245, 1.4129, 1.5249},
                                       {1.1607, 1.2178, 1.2907, 1.4021, 1.4989, 1.6218},
                                       {1.1925, 1.2539, 1.3351, 1.4555, 1.5610, 1.7005},
                                       {1.2115, 1.2747, 1.3606, 1.4889, 1.6012, 1.7431},
                                       {1.2182, 1.2867, 1.3733, 1.5055, 1.6295, 1.7687},
                                       {1.2151, 1.2866, 1.3752, 1.5129, 1.6351, 1.7861},
                                       {1.2097, 1.2788, 1.3688, 1.5024, 1.6293, 1.7809}}};

constexpr MosumTable kRecMosumCrit = {{{0.7249, 0.7479, 0.7781, 0.8257, 0.8700, 0.9219},
                                       {0.9512, 0.9855, 1.0336, 1.1046, 1.1671, 1.2523},
                                       {1.1026, 1.1479, 1.2087, 1.2995, 1.3841, 1.4900},
                                       {1.2191, 1.2735, 1.3427, 1.4547, 1.5552, 1.6740},
                                       {1.3108, 1.3730, 1.4550, 1.5798, 1.6903, 1.8326},
                                       {1.3858, 1.4530, 1.5477, 1.6904, 1.8171, 1.9779},
                                       {1.4433, 1.5205, 1.6224, 1.7798, 1.9264, 2.1027},
                                       {1.4900, 1.5781, 1.6904, 1.8614, 2.0188, 2.2101},
                                       {1.5307, 1.6208, 1.7425, 1.9335, 2.1053, 2.3023},
                                       {1.5601, 1.6587, 1.7898, 1.9947, 2.1681, 2.4012}}};

/// Two-sided Kolmogorov boundary-crossing probability for a Brownian bridge.
double kolmogorov_tail(double lambda) {
    if (lambda <= 0.0) return 1.0;
    double p = 0.0;
    for (int k = 1; k <= 100; ++k) {
        double term = 2.0 * std::exp(-2.0 * k * k * lambda * lambda);
        p += (k % 2 == 1) ? term : -term;
        if (term < 1e-16) break;
    }
    return std::clamp(p, 0.0, 1.0);
}

/// Crossing probability of Brownian motion against the linear boundary
/// lambda*(1 + 2t), two sided.
double rec_cusum_tail(double lambda) {
    if (lambda <= 0.0) return 1.0;
    double p = 2.0 * (1.0 - stats::norm_cdf(3.0 * lambda) +
                      std::exp(-4.0 * lambda * lambda) * stats::norm_cdf(lambda));
    return std::clamp(p, 0.0, 1.0);
}

/// p-value from the MOSUM table at window fraction h, with clamp flags.
void mosum_p(const MosumTable& tbl, double h, double stat, EfpResult& r) {
    std::array<double, 6> row{};
    if (h <= kBands.front()) {
        row = tbl.front();
    } else if (h >= kBands.back()) {
        row = tbl.back();
    } else {
        size_t i = 0;
        while (h > kBands[i + 1]) ++i;
        double w = (h - kBands[i]) / (kBands[i + 1] - kBands[i]);
        for (size_t j = 0; j < 6; ++j) row[j] = (1.0 - w) * tbl[i][j] + w * tbl[i + 1][j];
    }
    if (stat >= row.back()) {
        r.p_value = 0.01;
        r.p_clamped = true;
        return;
    }
    if (stat <= row.front()) {
        r.p_value = 0.20;
        r.p_clamped = true;
        return;
    }
    size_t j = 0;
    while (stat > row[j + 1]) ++j;
    double w = (stat - row[j]) / (row[j + 1] - row[j]);
    r.p_value = (1.0 - w) * kAlphas[j] + w * kAlphas[j + 1];
}

/// Recursive residuals of the intercept-only model, length n-1.
Eigen::VectorXd recursive_residuals(const Eigen::VectorXd& y) {
    const Eigen::Index n = y.size();
    Eigen::VectorXd w(n - 1);
    double csum = y[0];
    for (Eigen::Index t = 1; t < n; ++t) {
        double m = csum / static_cast<double>(t);
        w[t - 1] = (y[t] - m) / std::sqrt(1.0 + 1.0 / static_cast<double>(t));
        csum += y[t];
    }
    return w;
}

}  // namespace

EfpResult efp_test(const MonthlySeries& s, EfpType type, double bandwidth) {
    const Eigen::Index n = s.size();
    if (n < 40) throw DataError("efp_test: need at least 40 observations");
    if (bandwidth <= 0.0 || bandwidth > 0.5)
        throw ConfigError("efp_test: bandwidth must lie in (0, 0.5]");
    const Eigen::VectorXd& y = s.values;

    EfpResult r;
    r.process_type = type;
    r.bandwidth = bandwidth;

    if (type == EfpType::ols_cusum || type == EfpType::ols_mosum) {
        Eigen::VectorXd u = y.array() - y.mean();
        double sig = std::sqrt(u.squaredNorm() / static_cast<double>(n - 1));
        double scale = sig * std::sqrt(static_cast<double>(n));
        Eigen::VectorXd S(n + 1);
        S[0] = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) S[i + 1] = S[i] + u[i];
        if (type == EfpType::ols_cusum) {
            r.path.resize(n + 1);
            for (Eigen::Index i = 0; i <= n; ++i) r.path[i] = S[i] / scale;
            r.statistic = r.path.cwiseAbs().maxCoeff();
            r.p_value = kolmogorov_tail(r.statistic);
        } else {
            const Eigen::Index nh =
                static_cast<Eigen::Index>(std::floor(bandwidth * static_cast<double>(n)));
            r.path.resize(n + 1 - nh);
            r.statistic = 0.0;
            for (Eigen::Index i = 0; i + nh <= n; ++i) {
                r.path[i] = (S[i + nh] - S[i]) / scale;
                r.statistic = std::max(r.statistic, std::abs(r.path[i]));
            }
            mosum_p(kOlsMosumCrit, bandwidth, r.statistic, r);
        }
        return r;
    }

    Eigen::VectorXd w = recursive_residuals(y);
    const Eigen::Index nn = w.size();
    double sigw = stats::sd(w);
    double scale = sigw * std::sqrt(static_cast<double>(nn));
    Eigen::VectorXd W(nn + 1);
    W[0] = 0.0;
    for (Eigen::Index i = 0; i < nn; ++i) W[i + 1] = W[i] + w[i];

    if (type == EfpType::rec_cusum) {
        r.path.resize(nn + 1);
        r.statistic = 0.0;
        for (Eigen::Index i = 0; i <= nn; ++i) {
            r.path[i] = W[i] / scale;
            double t = static_cast<double>(i) / static_cast<double>(nn);
            r.statistic = std::max(r.statistic, std::abs(r.path[i]) / (1.0 + 2.0 * t));
        }
        r.p_value = rec_cusum_tail(r.statistic);
    } else {
        const Eigen::Index nh =
            static_cast<Eigen::Index>(std::floor(bandwidth * static_cast<double>(nn)));
        r.path.resize(nn + 1 - nh);
        r.statistic = 0.0;
        for (Eigen::Index i = 0; i + nh <= nn; ++i) {
            r.path[i] = (W[i + nh] - W[i]) / scale;
            r.statistic = std::max(r.statistic, std::abs(r.path[i]));
        }
        mosum_p(kRecMosumCrit, bandwidth, r.statistic, r);
    }
    return r;
}

}  // namespace tsc
