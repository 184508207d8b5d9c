#pragma once

#include <Eigen/Dense>

#include <utility>

namespace tsc::stats {

// ---------------------------------------------------------------------------
// Distribution functions (double precision, standard series/continued
// fraction evaluations; accurate to ~1e-12 over the ranges used here).
// ---------------------------------------------------------------------------

/// Standard normal CDF.
[[nodiscard]] double norm_cdf(double x);
/// Standard normal upper tail.
[[nodiscard]] double norm_sf(double x);
/// Standard normal quantile (Acklam/Wichura style rational approximation).
[[nodiscard]] double norm_ppf(double p);

/// Regularized lower incomplete gamma P(a, x).
[[nodiscard]] double gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x).
[[nodiscard]] double gamma_q(double a, double x);
/// Regularized incomplete beta I_x(a, b).
[[nodiscard]] double beta_inc(double a, double b, double x);

/// Chi-squared upper tail with k degrees of freedom.
[[nodiscard]] double chi2_sf(double x, double k);
/// Student-t two-sided upper tail helpers.
[[nodiscard]] double t_cdf(double x, double df);
[[nodiscard]] double t_sf(double x, double df);
/// Student-t quantile (via beta inverse bisection).
[[nodiscard]] double t_ppf(double p, double df);
/// F distribution upper tail.
[[nodiscard]] double f_sf(double x, double df1, double df2);

// ---------------------------------------------------------------------------
// Linear algebra helpers
// ---------------------------------------------------------------------------

/// OLS fit y = X b + e; returns (coefficients, residuals).
[[nodiscard]] std::pair<Eigen::VectorXd, Eigen::VectorXd> ols(const Eigen::MatrixXd& X,
                                                              const Eigen::VectorXd& y);

/// Sample mean / variance (denominator n-1) / standard deviation.
[[nodiscard]] double mean(const Eigen::VectorXd& x);
[[nodiscard]] double var(const Eigen::VectorXd& x);
[[nodiscard]] double sd(const Eigen::VectorXd& x);

/// Continuous ("type 7") quantile by linear interpolation of order statistics.
[[nodiscard]] double quantile_type7(Eigen::VectorXd x, double p);

/// Biased autocovariance sequence g[0..max_lag] (denominator n), demeaned.
[[nodiscard]] Eigen::VectorXd acov_biased(const Eigen::VectorXd& x, int max_lag);

// ---------------------------------------------------------------------------
// AR modelling (Yule-Walker, AIC selection) shared by several tests
// ---------------------------------------------------------------------------

struct ArFit {
    int order = 0;                ///< selected order
    Eigen::VectorXd phi;          ///< AR coefficients, length order
    double var_pred = 0.0;        ///< innovation variance * n/(n-(order+1))
    double mean = 0.0;            ///< sample mean removed before fitting
    Eigen::VectorXd resid;        ///< in-sample residuals, length n - order
    Eigen::VectorXd aic;          ///< AIC value per candidate order 0..order_max
};

/**
 * @brief Yule-Walker AR fit with AIC order selection.
 *
 * Demeans, computes biased autocovariances, runs Levinson-Durbin, and picks
 * the order minimizing n*log(v_k) + 2k over 0..order_max.  order_max < 0
 * selects floor(10 log10 n).
 */
[[nodiscard]] ArFit ar_yw(const Eigen::VectorXd& x, int order_max = -1);

// ---------------------------------------------------------------------------
// Misc
// ---------------------------------------------------------------------------

/// Centered 2xP moving average (weights [0.5, 1, ..., 1, 0.5]/P); the first
/// and last P/2 positions are dropped (returned vector has length n - P).
[[nodiscard]] Eigen::VectorXd ma_2xp(const Eigen::VectorXd& x, int period);

/// Ljung-Box statistic and p-value on x at lags 1..lag.
[[nodiscard]] std::pair<double, double> ljung_box(const Eigen::VectorXd& x, int lag,
                                                  int fit_df = 0);

}  // namespace tsc::stats
