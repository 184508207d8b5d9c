#include "tscycle/dist_tests.hpp"

#include "tscycle/stats.hpp"

#include <cmath>
#include <random>

namespace tsc {

namespace {

/// Lagged design matrix: row t has x[t-1], ..., x[t-m]; sample is t = m..n-1.
Eigen::MatrixXd lag_matrix(const Eigen::VectorXd& x, int m) {
    const Eigen::Index N = x.size() - m;
    Eigen::MatrixXd L(N, m);
    for (Eigen::Index t = 0; t < N; ++t)
        for (int j = 0; j < m; ++j) L(t, j) = x[t + m - 1 - j];
    return L;
}

}  // namespace

NonlinearitySuite nonlinearity_suite(const MonthlySeries& s, std::uint64_t seed) {
    const Eigen::Index n = s.size();
    if (n < 50) throw DataError("nonlinearity_suite: need at least 50 observations");
    const Eigen::VectorXd& x = s.values;
    NonlinearitySuite out;

    // Teraesvirta: Taylor-expansion test on the lag-1 embedding of the
    // standardized series; LM statistic T*log(ssr0/ssr1), chi-squared(2).
    {
        Eigen::VectorXd zs = (x.array() - x.mean()) / stats::sd(x);
        const Eigen::Index N = n - 1;
        Eigen::VectorXd y = zs.tail(N);
        Eigen::VectorXd x1 = zs.head(N);
        Eigen::MatrixXd X0(N, 2);
        X0.col(0).setOnes();
        X0.col(1) = x1;
        auto [b0, u] = stats::ols(X0, y);
        Eigen::MatrixXd X1(N, 4);
        X1.col(0).setOnes();
        X1.col(1) = x1;
        X1.col(2) = x1.array().square();
        X1.col(3) = x1.array().cube();
        auto [b1, e] = stats::ols(X1, u);
        double ssr0 = u.squaredNorm();
        double ssr1 = e.squaredNorm();
        double stat = static_cast<double>(n) * std::log(ssr0 / ssr1);
        out.teraesvirta = {"Teraesvirta NN", stat, stats::chi2_sf(stat, 2.0), false,
                           "linearity in mean", {{"df", 2.0}}};
    }

    // White: ten seeded logistic hidden units on the lag-1 embedding of the
    // standardized series; the regression uses the second and third
    // principal components of the standardized unit activations (the first
    // is nearly constant); same LM form, chi-squared(2).
    {
        Eigen::VectorXd zs = (x.array() - x.mean()) / stats::sd(x);
        const Eigen::Index N = n - 1;
        Eigen::VectorXd y = zs.tail(N);
        Eigen::VectorXd x1 = zs.head(N);
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unif(-2.0, 2.0);
        const int q = 10;
        Eigen::MatrixXd H(N, q);
        for (int j = 0; j < q; ++j) {
            double g0 = unif(rng), g1 = unif(rng);
            H.col(j) = 1.0 / (1.0 + (-(g0 + g1 * x1.array())).exp());
        }
        for (int j = 0; j < q; ++j) {
            double m = H.col(j).mean();
            H.col(j).array() -= m;
            H.col(j) /= stats::sd(H.col(j));
        }
        Eigen::BDCSVD<Eigen::MatrixXd> svd(H, Eigen::ComputeThinU | Eigen::ComputeThinV);
        Eigen::MatrixXd scores = H * svd.matrixV();
        Eigen::MatrixXd X0(N, 2);
        X0.col(0).setOnes();
        X0.col(1) = x1;
        auto [b0, u] = stats::ols(X0, y);
        Eigen::MatrixXd X1(N, 4);
        X1 << X0, scores.col(1), scores.col(2);
        auto [b1, e] = stats::ols(X1, u);
        double stat = static_cast<double>(n) * std::log(u.squaredNorm() / e.squaredNorm());
        out.white_nn = {"White NN", stat, stats::chi2_sf(stat, 2.0), false,
                        "linearity in mean", {{"df", 2.0}, {"seed", static_cast<double>(seed)}}};
    }

    // AR order for the F-type tests, AIC selection capped at 24 lags.
    stats::ArFit ar = stats::ar_yw(x, 24);
    const int m = std::max(1, ar.order);

    // Keenan: one-degree test for additivity over the Yule-Walker AR fit.
    {
        const Eigen::Index N = n - m;
        Eigen::VectorXd y = x.tail(N);
        Eigen::MatrixXd L = lag_matrix(x, m);
        Eigen::VectorXd fit(N);
        for (Eigen::Index t = 0; t < N; ++t) {
            double pred = ar.mean;
            for (int j = 0; j < m; ++j) pred += ar.phi[j] * (L(t, j) - ar.mean);
            fit[t] = pred;
        }
        Eigen::VectorXd res1 = y - fit;
        Eigen::MatrixXd X(N, m + 1);
        X.col(0).setOnes();
        X.rightCols(m) = L;
        auto [bq, res2] = stats::ols(X, fit.array().square().matrix());
        double eta = res1.dot(res2) / std::sqrt(res2.squaredNorm());
        double df2 = static_cast<double>(n) - 2.0 * m - 2.0;
        double stat = eta * eta * df2 / (res1.squaredNorm() - eta * eta);
        out.keenan = {"Keenan", stat, stats::f_sf(stat, 1.0, df2), false,
                      "no second-order nonlinearity",
                      {{"df1", 1.0}, {"df2", df2}, {"order", static_cast<double>(m)}}};
    }

    // Tsay: F test on residualized cross products of the lags.
    {
        const Eigen::Index N = n - m;
        Eigen::VectorXd y = x.tail(N);
        Eigen::MatrixXd L = lag_matrix(x, m);
        Eigen::MatrixXd X(N, m + 1);
        X.col(0).setOnes();
        X.rightCols(m) = L;
        auto [ba, e] = stats::ols(X, y);
        const int q = m * (m + 1) / 2;
        Eigen::MatrixXd P(N, q);
        int c = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) P.col(c++) = L.col(i).array() * L.col(j).array();
        // Residualize the cross products on the linear design.
        Eigen::MatrixXd V = P - X * X.colPivHouseholderQr().solve(P);
        auto [bv, eps] = stats::ols(V, e);
        double df1 = q;
        double df2 = static_cast<double>(N) - df1 - m - 1.0;
        double stat = ((e.squaredNorm() - eps.squaredNorm()) / df1) / (eps.squaredNorm() / df2);
        out.tsay = {"Tsay", stat, stats::f_sf(stat, df1, df2), false,
                    "no quadratic nonlinearity",
                    {{"df1", df1}, {"df2", df2}, {"order", static_cast<double>(m)}}};
    }

    // McLeod-Li: Ljung-Box on the squared AR residuals.
    {
        Eigen::VectorXd sq = ar.resid.array().square();
        auto [stat, p] = stats::ljung_box(sq, 24);
        out.mcleod_li = {"McLeod-Li", stat, p, false,
                         "no ARCH-type nonlinearity (independent squared residuals)",
                         {{"lag", 24.0}, {"order", static_cast<double>(m)}}};
    }
    return out;
}

}  // namespace tsc
