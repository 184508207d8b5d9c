#include "tscycle/decompose.hpp"

#include "tscycle/stats.hpp"

#include <cmath>

namespace tsc {

namespace {

/// Plug-in moving-average half-width: cubic pilot fit on scaled time, then
/// the AMISE-optimal bandwidth for a local-constant smoother.
int plugin_halfwidth(const Eigen::VectorXd& xt) {
    const Eigen::Index n = xt.size();
    Eigen::MatrixXd X(n, 4);
    for (Eigen::Index i = 0; i < n; ++i) {
        double u = static_cast<double>(i + 1) / static_cast<double>(n);
        X(i, 0) = 1.0;
        X(i, 1) = u;
        X(i, 2) = u * u;
        X(i, 3) = u * u * u;
    }
    auto [b, e] = stats::ols(X, xt);
    double den = 4.0 * b[2] * b[2] + 12.0 * b[2] * b[3] + 12.0 * b[3] * b[3];
    if (den <= 0.0) throw NumericError("rmaf: degenerate pilot curvature");
    double v = stats::var(e);
    double dn = static_cast<double>(n);
    int q = static_cast<int>(std::floor(std::pow(dn, 0.8) * std::pow(4.5, 0.2) *
                                        std::pow(v / den, 0.2)));
    if (q < n)
        q = std::min<int>(q, static_cast<int>(n) - q);
    else
        q = static_cast<int>(std::floor(std::pow(dn, 0.8) / 2.0));
    return q;
}

/// Symmetric (2q+1)-point moving average with exact one-sided boundary
/// kernels (linear-in-position weights), full output length.
Eigen::VectorXd refined_ma(const Eigen::VectorXd& xt, int q) {
    const Eigen::Index n = xt.size();
    Eigen::VectorXd mhat(n);
    for (Eigen::Index j1 = 1; j1 <= n; ++j1) {
        double j = static_cast<double>(j1);
        double qn = q;
        double m;
        if (j1 >= q + 1 && j1 <= n - q) {
            m = xt.segment(j1 - 1 - q, 2 * q + 1).sum() / (2.0 * qn + 1.0);
        } else if (j1 < q + 1) {
            // window 1..q+j with weights affine in the offset (1-j)..q
            double s0 = 0.0, s1 = 0.0;
            for (Eigen::Index t = 0; t < q + j1; ++t) {
                s0 += xt[t];
                s1 += (static_cast<double>(-j1 + 1 + t)) * xt[t];
            }
            m = ((4.0 * qn * qn - 4.0 * qn * j + 6.0 * qn + 4.0 * j * j - 6.0 * j + 2.0) * s0 -
                 6.0 * (qn - j + 1.0) * s1) /
                ((qn + j) * ((qn + j) * (qn + j) - 1.0));
        } else {
            // window (j-q)..n with weights affine in the offset -q..(n-j)
            double s0 = 0.0, s1 = 0.0;
            for (Eigen::Index t = j1 - q - 1; t < n; ++t) {
                s0 += xt[t];
                s1 += (static_cast<double>(-q) + static_cast<double>(t - (j1 - q - 1))) * xt[t];
            }
            double nn = static_cast<double>(n);
            m = ((4.0 * (nn - j) * (nn - j) + 4.0 * qn * (qn + j - nn) + 2.0 * (nn + qn - j)) *
                     s0 +
                 6.0 * (qn - nn + j) * s1) /
                ((nn + qn - j + 2.0) * (nn + qn - j + 1.0) * (nn + qn - j));
        }
        mhat[j1 - 1] = m;
    }
    return mhat;
}

}  // namespace

Decomposition rmaf_decompose(const MonthlySeries& s, int period) {
    const Eigen::Index n = s.size();
    if (period < 2) throw ConfigError("rmaf_decompose: period must be at least 2");
    if (n < 3 * period) throw DataError("rmaf_decompose: need at least 3 full cycles");
    const Eigen::VectorXd& x = s.values;

    // Seasonal: period-position means of the raw series (positions cycle from
    // the first observation), centered to sum to zero over the positions.
    Eigen::VectorXd pos_mean = Eigen::VectorXd::Zero(period);
    Eigen::VectorXi pos_cnt = Eigen::VectorXi::Zero(period);
    for (Eigen::Index i = 0; i < n; ++i) {
        pos_mean[i % period] += x[i];
        pos_cnt[i % period] += 1;
    }
    for (int p = 0; p < period; ++p) pos_mean[p] /= pos_cnt[p];
    Eigen::VectorXd st(n);
    for (Eigen::Index i = 0; i < n; ++i) st[i] = pos_mean[i % period];
    st.array() -= st.mean();
    Eigen::VectorXd xt = x - st;

    int q = plugin_halfwidth(xt);
    if (q < 1) throw NumericError("rmaf_decompose: degenerate bandwidth");

    Decomposition d;
    d.method = "rmaf";
    d.seasonal = st;
    d.trend = refined_ma(xt, q);
    d.remainder = x - st - d.trend;
    return d;
}

}  // namespace tsc
