#include "tscycle/unitroot.hpp"

#include "tscycle/stats.hpp"

#include <array>
#include <cmath>

namespace tsc {

const char* to_string(Deterministic d) {
    switch (d) {
        case Deterministic::none: return "none";
        case Deterministic::drift: return "drift";
        default: return "drift+trend";
    }
}

namespace {

// Dickey-Fuller percentile tables (t statistic and normalized bias), rows at
// sample sizes 25/50/100/250/500 (the 500 row also serves larger samples),
// columns at probabilities 1/2.5/5/10/50/90/95/97.5/99 percent.
constexpr std::array<double, 9> kProbs = {0.01, 0.025, 0.05, 0.10, 0.50,
                                          0.90, 0.95, 0.975, 0.99};
constexpr std::array<double, 5> kRowN = {25, 50, 100, 250, 500};

using Table = std::array<std::array<double, 9>, 5>;

constexpr Table kTauNone = {{{-2.66, -2.26, -1.95, -1.60, -0.47, 0.92, 1.33, 1.70, 2.16},
                             {-2.62, -2.25, -1.95, -1.61, -0.49, 0.91, 1.31, 1.66, 2.08},
                             {-2.60, -2.24, -1.95, -1.61, -0.50, 0.90, 1.29, 1.64, 2.03},
                             {-2.58, -2.23, -1.95, -1.62, -0.50, 0.89, 1.29, 1.63, 2.01},
                             {-2.58, -2.23, -1.95, -1.62, -0.50, 0.89, 1.28, 1.62, 2.00}}};
constexpr Table kTauDrift = {{{-3.75, -3.33, -3.00, -2.63, -1.53, -0.37, 0.00, 0.34, 0.72},
                              {-3.58, -3.22, -2.93, -2.60, -1.55, -0.40, -0.03, 0.29, 0.66},
                              {-3.51, -3.17, -2.89, -2.58, -1.56, -0.42, -0.05, 0.26, 0.63},
                              {-3.46, -3.14, -2.88, -2.57, -1.56, -0.42, -0.06, 0.24, 0.62},
                              {-3.44, -3.13, -2.87, -2.57, -1.57, -0.44, -0.07, 0.24, 0.61}}};
constexpr Table kTauTrend = {{{-4.38, -3.95, -3.60, -3.24, -2.14, -1.14, -0.80, -0.50, -0.15},
                              {-4.15, -3.80, -3.50, -3.18, -2.16, -1.19, -0.87, -0.58, -0.24},
                              {-4.04, -3.73, -3.45, -3.15, -2.17, -1.22, -0.90, -0.62, -0.28},
                              {-3.99, -3.69, -3.43, -3.13, -2.18, -1.23, -0.92, -0.64, -0.31},
                              {-3.98, -3.68, -3.42, -3.13, -2.18, -1.24, -0.93, -0.65, -0.32}}};

constexpr Table kRhoNone = {{{-11.9, -9.3, -7.3, -5.3, -0.82, 1.01, 1.40, 1.79, 2.28},
                             {-12.9, -9.9, -7.7, -5.5, -0.84, 0.97, 1.35, 1.70, 2.16},
                             {-13.3, -10.2, -7.9, -5.6, -0.85, 0.95, 1.31, 1.65, 2.09},
                             {-13.6, -10.3, -8.0, -5.7, -0.86, 0.93, 1.28, 1.62, 2.04},
                             {-13.7, -10.4, -8.0, -5.7, -0.87, 0.93, 1.28, 1.61, 2.04}}};
constexpr Table kRhoDrift = {{{-17.2, -14.6, -12.5, -10.2, -4.22, -0.76, 0.01, 0.65, 1.40},
                              {-18.9, -15.7, -13.3, -10.7, -4.29, -0.81, -0.07, 0.53, 1.22},
                              {-19.8, -16.3, -13.7, -11.0, -4.32, -0.83, -0.10, 0.47, 1.14},
                              {-20.3, -16.6, -13.9, -11.2, -4.34, -0.84, -0.12, 0.43, 1.09},
                              {-20.5, -16.8, -14.0, -11.2, -4.35, -0.84, -0.13, 0.42, 1.06}}};
constexpr Table kRhoTrend = {{{-22.5, -19.9, -17.9, -15.6, -8.49, -3.65, -2.51, -1.53, -0.43},
                              {-25.7, -22.4, -19.8, -16.8, -8.80, -3.71, -2.60, -1.66, -0.65},
                              {-27.4, -23.6, -20.7, -17.5, -8.96, -3.74, -2.62, -1.73, -0.75},
                              {-28.4, -24.4, -21.3, -18.0, -9.05, -3.75, -2.64, -1.78, -0.82},
                              {-28.9, -24.8, -21.5, -18.1, -9.08, -3.76, -2.65, -1.78, -0.84}}};

/// Interpolate the table at sample size n, then the statistic; clamp to
/// [0.01, 0.99] and report which bound was hit.
void table_p(const Table& tbl, double n, double stat, UnitRootRow& row) {
    std::array<double, 9> knots{};
    if (n <= kRowN.front()) {
        knots = tbl.front();
    } else if (n >= kRowN.back()) {
        knots = tbl.back();
    } else {
        size_t i = 0;
        while (n > kRowN[i + 1]) ++i;
        double w = (n - kRowN[i]) / (kRowN[i + 1] - kRowN[i]);
        for (size_t j = 0; j < 9; ++j)
            knots[j] = (1.0 - w) * tbl[i][j] + w * tbl[i + 1][j];
    }
    if (stat <= knots.front()) {
        row.p_value = kProbs.front();
        row.p_clamped_low = true;
        return;
    }
    if (stat >= knots.back()) {
        row.p_value = kProbs.back();
        row.p_clamped_high = true;
        return;
    }
    size_t j = 0;
    while (stat > knots[j + 1]) ++j;
    double w = (stat - knots[j]) / (knots[j + 1] - knots[j]);
    row.p_value = (1.0 - w) * kProbs[j] + w * kProbs[j + 1];
}

/// Deterministic design columns for a sample of size N starting at 1-based
/// time index t0 (intercept, then trend).
Eigen::MatrixXd det_design(Deterministic type, Eigen::Index N, double t0) {
    int k = type == Deterministic::none ? 0 : (type == Deterministic::drift ? 1 : 2);
    Eigen::MatrixXd D(N, k);
    if (k >= 1) D.col(0).setOnes();
    if (k == 2)
        for (Eigen::Index i = 0; i < N; ++i) D(i, 1) = t0 + static_cast<double>(i);
    return D;
}

/// Bartlett long-run variance of e with bandwidth q (denominator m).
double bartlett_lrv(const Eigen::VectorXd& e, int q) {
    const double m = static_cast<double>(e.size());
    double lrv = e.squaredNorm() / m;
    for (int j = 1; j <= q; ++j) {
        double g = e.head(e.size() - j).dot(e.tail(e.size() - j)) / m;
        lrv += 2.0 * (1.0 - static_cast<double>(j) / (q + 1.0)) * g;
    }
    return lrv;
}

}  // namespace

UnitRootTable adf_test(const MonthlySeries& s, int max_lag) {
    const Eigen::Index n = s.size();
    if (max_lag < 0 || n < max_lag + 20) throw DataError("adf_test: series too short");
    const Eigen::VectorXd& x = s.values;
    Eigen::VectorXd z = x.tail(n - 1) - x.head(n - 1);
    const Eigen::Index nz = z.size();

    UnitRootTable out;
    out.test_name = "Augmented Dickey-Fuller";
    const Table* tables[3] = {&kTauNone, &kTauDrift, &kTauTrend};
    const Deterministic types[3] = {Deterministic::none, Deterministic::drift,
                                    Deterministic::drift_trend};
    for (int ti = 0; ti < 3; ++ti) {
        for (int lag = 0; lag <= max_lag; ++lag) {
            // Sample: 1-based z indices t = lag+1 .. nz.
            const Eigen::Index N = nz - lag;
            Eigen::VectorXd Y = z.tail(N);
            Eigen::MatrixXd D = det_design(types[ti], N, static_cast<double>(lag + 1));
            Eigen::Index k = D.cols();
            Eigen::MatrixXd X(N, k + 1 + lag);
            X.leftCols(k) = D;
            for (Eigen::Index i = 0; i < N; ++i) X(i, k) = x[lag + i];  // level x_t
            for (int j = 1; j <= lag; ++j) X.col(k + j) = z.segment(lag - j, N);
            auto [b, e] = stats::ols(X, Y);
            double s2 = e.squaredNorm() / static_cast<double>(N - X.cols());
            Eigen::MatrixXd xtx_inv = (X.transpose() * X).inverse();
            double se = std::sqrt(s2 * xtx_inv(k, k));
            UnitRootRow row;
            row.type = types[ti];
            row.lag = lag;
            row.statistic = b[k] / se;
            table_p(*tables[ti], static_cast<double>(n), row.statistic, row);
            out.rows.push_back(row);
        }
    }
    return out;
}

UnitRootTable kpss_test(const MonthlySeries& s) {
    const Eigen::Index n = s.size();
    if (n < 30) throw DataError("kpss_test: series too short");
    const Eigen::VectorXd& x = s.values;
    const int q = static_cast<int>(std::floor(3.0 * std::sqrt(static_cast<double>(n)) / 13.0));

    // Critical rows at alpha = 0.10 / 0.05 / 0.025 / 0.01 for the statistic
    // computed on residuals of the first-order autoregression.
    constexpr std::array<double, 4> alphas = {0.10, 0.05, 0.025, 0.01};
    constexpr std::array<std::array<double, 4>, 3> crit = {{
        {1.196, 1.656, 2.135, 2.791},   // no deterministic part
        {0.347, 0.463, 0.574, 0.739},   // level
        {0.119, 0.146, 0.176, 0.216},   // trend
    }};

    UnitRootTable out;
    out.test_name = "KPSS";
    const Deterministic types[3] = {Deterministic::none, Deterministic::drift,
                                    Deterministic::drift_trend};
    for (int ti = 0; ti < 3; ++ti) {
        const Eigen::Index N = n - 1;
        Eigen::VectorXd Y = x.tail(N);
        Eigen::MatrixXd D = det_design(types[ti], N, 2.0);
        Eigen::MatrixXd X(N, D.cols() + 1);
        X.leftCols(D.cols()) = D;
        X.col(D.cols()) = x.head(N);
        auto [b, e] = stats::ols(X, Y);
        Eigen::VectorXd S(N);
        double acc = 0.0;
        for (Eigen::Index i = 0; i < N; ++i) S[i] = (acc += e[i]);
        double lrv = bartlett_lrv(e, q);
        double stat = S.squaredNorm() / (static_cast<double>(N) * static_cast<double>(N) * lrv);

        UnitRootRow row;
        row.type = types[ti];
        row.lag = q;
        row.statistic = stat;
        const auto& cv = crit[ti];
        if (stat >= cv.back()) {
            row.p_value = 0.01;
            row.p_clamped_low = true;
        } else if (stat <= cv.front()) {
            row.p_value = 0.10;
            row.p_clamped_high = true;
        } else {
            size_t j = 0;
            while (stat > cv[j + 1]) ++j;
            double w = (stat - cv[j]) / (cv[j + 1] - cv[j]);
            row.p_value = (1.0 - w) * alphas[j] + w * alphas[j + 1];
        }
        out.rows.push_back(row);
    }
    return out;
}

UnitRootTable pp_test(const MonthlySeries& s) {
    const Eigen::Index n = s.size();
    if (n < 30) throw DataError("pp_test: series too short");
    const Eigen::VectorXd& x = s.values;
    const int q =
        static_cast<int>(std::floor(4.0 * std::pow(static_cast<double>(n) / 100.0, 0.25)));

    UnitRootTable out;
    out.test_name = "Phillips-Perron";
    const Table* tables[3] = {&kRhoNone, &kRhoDrift, &kRhoTrend};
    const Deterministic types[3] = {Deterministic::none, Deterministic::drift,
                                    Deterministic::drift_trend};
    for (int ti = 0; ti < 3; ++ti) {
        const Eigen::Index N = n - 1;
        Eigen::VectorXd Y = x.tail(N);
        Eigen::MatrixXd D = det_design(types[ti], N, 2.0);
        Eigen::Index k = D.cols();
        Eigen::MatrixXd X(N, k + 1);
        X.leftCols(k) = D;
        X.col(k) = x.head(N);
        auto [b, e] = stats::ols(X, Y);
        double s2 = e.squaredNorm() / static_cast<double>(N - X.cols());
        Eigen::MatrixXd xtx_inv = (X.transpose() * X).inverse();
        double se_rho2 = s2 * xtx_inv(k, k);
        double g0 = e.squaredNorm() / static_cast<double>(N);
        double lambda = bartlett_lrv(e, q);
        double Nn = static_cast<double>(N);
        double z_rho =
            Nn * (b[k] - 1.0) - 0.5 * (lambda - g0) * Nn * Nn * se_rho2 / s2;

        UnitRootRow row;
        row.type = types[ti];
        row.lag = q;
        row.statistic = z_rho;
        table_p(*tables[ti], static_cast<double>(n), z_rho, row);
        out.rows.push_back(row);
    }
    return out;
}

}  // namespace tsc
