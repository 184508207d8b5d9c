#include "tscycle/stats.hpp"

#include "tscycle/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tsc::stats {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Lower incomplete gamma by series expansion (x < a + 1).
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

/// Upper incomplete gamma by continued fraction (x >= a + 1).
double gamma_q_cf(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / 1e-300;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

/// Continued fraction for the incomplete beta function.
double beta_cf(double a, double b, double x) {
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < 1e-300) d = 1e-300;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 500; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = 1.0 + aa / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = 1.0 + aa / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h;
}

}  // namespace

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double norm_sf(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double norm_ppf(double p) {
    if (p <= 0.0) return -std::numeric_limits<double>::infinity();
    if (p >= 1.0) return std::numeric_limits<double>::infinity();
    // Acklam's rational approximation, refined with one Halley step.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double dd[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        double q = p - 0.5, r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1.0);
    }
    double e = norm_cdf(x) - p;
    double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
    return x - u / (1.0 + x * u / 2.0);
}

double gamma_p(double a, double x) {
    if (x <= 0.0) return 0.0;
    return (x < a + 1.0) ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (x <= 0.0) return 1.0;
    return (x < a + 1.0) ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double beta_inc(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double lbeta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    double front = std::exp(a * std::log(x) + b * std::log(1.0 - x) - lbeta);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double chi2_sf(double x, double k) { return gamma_q(k / 2.0, x / 2.0); }

double t_cdf(double x, double df) {
    double p = 0.5 * beta_inc(df / 2.0, 0.5, df / (df + x * x));
    return x > 0.0 ? 1.0 - p : p;
}

double t_sf(double x, double df) { return 1.0 - t_cdf(x, df); }

double t_ppf(double p, double df) {
    if (p == 0.5) return 0.0;
    double lo = -1e3, hi = 1e3;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (t_cdf(mid, df) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double f_sf(double x, double df1, double df2) {
    if (x <= 0.0) return 1.0;
    return beta_inc(df2 / 2.0, df1 / 2.0, df2 / (df2 + df1 * x));
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> ols(const Eigen::MatrixXd& X,
                                                const Eigen::VectorXd& y) {
    Eigen::VectorXd b = X.colPivHouseholderQr().solve(y);
    return {b, y - X * b};
}

double mean(const Eigen::VectorXd& x) { return x.mean(); }

double var(const Eigen::VectorXd& x) {
    const Eigen::Index n = x.size();
    if (n < 2) throw NumericError("variance needs at least 2 observations");
    double m = x.mean();
    return (x.array() - m).square().sum() / static_cast<double>(n - 1);
}

double sd(const Eigen::VectorXd& x) { return std::sqrt(var(x)); }

double quantile_type7(Eigen::VectorXd x, double p) {
    const Eigen::Index n = x.size();
    if (n == 0) throw NumericError("quantile of empty vector");
    std::sort(x.data(), x.data() + n);
    double h = (static_cast<double>(n) - 1.0) * p;
    Eigen::Index lo = static_cast<Eigen::Index>(std::floor(h));
    Eigen::Index hi = std::min(lo + 1, n - 1);
    double frac = h - static_cast<double>(lo);
    return x[lo] + frac * (x[hi] - x[lo]);
}

Eigen::VectorXd acov_biased(const Eigen::VectorXd& x, int max_lag) {
    const Eigen::Index n = x.size();
    double m = x.mean();
    Eigen::VectorXd c = x.array() - m;
    Eigen::VectorXd g(max_lag + 1);
    for (int k = 0; k <= max_lag; ++k)
        g[k] = c.head(n - k).dot(c.tail(n - k)) / static_cast<double>(n);
    return g;
}

ArFit ar_yw(const Eigen::VectorXd& x, int order_max) {
    const Eigen::Index n = x.size();
    if (order_max < 0)
        order_max = static_cast<int>(std::floor(10.0 * std::log10(static_cast<double>(n))));
    order_max = std::min<int>(order_max, static_cast<int>(n) - 1);
    Eigen::VectorXd g = acov_biased(x, order_max);
    if (g[0] <= 0.0) throw NumericError("ar_yw: zero-variance input");

    // Levinson-Durbin with per-order AIC = n*log(v_k) + 2k.
    ArFit fit;
    fit.mean = x.mean();
    fit.aic.resize(order_max + 1);
    double v = g[0];
    fit.aic[0] = static_cast<double>(n) * std::log(v);
    std::vector<Eigen::VectorXd> phis(order_max + 1);
    std::vector<double> vs(order_max + 1);
    phis[0] = Eigen::VectorXd();
    vs[0] = v;
    Eigen::VectorXd phi;
    for (int k = 1; k <= order_max; ++k) {
        double num = g[k];
        for (int j = 1; j < k; ++j) num -= phi[j - 1] * g[k - j];
        double kk = num / v;
        Eigen::VectorXd next(k);
        for (int j = 0; j < k - 1; ++j) next[j] = phi[j] - kk * phi[k - 2 - j];
        next[k - 1] = kk;
        phi = next;
        v *= (1.0 - kk * kk);
        phis[k] = phi;
        vs[k] = v;
        fit.aic[k] = static_cast<double>(n) * std::log(v) + 2.0 * k;
    }
    int best = 0;
    for (int k = 1; k <= order_max; ++k)
        if (fit.aic[k] < fit.aic[best]) best = k;
    fit.order = best;
    fit.phi = phis[best];
    fit.var_pred = vs[best] * static_cast<double>(n) / static_cast<double>(n - (best + 1));

    // In-sample residuals on the demeaned series.
    Eigen::VectorXd c = x.array() - fit.mean;
    fit.resid.resize(n - best);
    for (Eigen::Index t = best; t < n; ++t) {
        double pred = 0.0;
        for (int j = 0; j < best; ++j) pred += fit.phi[j] * c[t - 1 - j];
        fit.resid[t - best] = c[t] - pred;
    }
    return fit;
}

Eigen::VectorXd ma_2xp(const Eigen::VectorXd& x, int period) {
    const Eigen::Index n = x.size();
    const int half = period / 2;
    if (n < period + 1) throw DataError("ma_2xp: series shorter than period+1");
    Eigen::VectorXd w(period + 1);
    w.setOnes();
    w[0] = w[period] = 0.5;
    w /= static_cast<double>(period);
    Eigen::VectorXd out(n - 2 * half);
    for (Eigen::Index i = 0; i < out.size(); ++i)
        out[i] = w.dot(x.segment(i, period + 1));
    return out;
}

std::pair<double, double> ljung_box(const Eigen::VectorXd& x, int lag, int fit_df) {
    const Eigen::Index n = x.size();
    Eigen::VectorXd g = acov_biased(x, lag);
    double q = 0.0;
    for (int k = 1; k <= lag; ++k) {
        double r = g[k] / g[0];
        q += r * r / static_cast<double>(n - k);
    }
    q *= static_cast<double>(n) * (static_cast<double>(n) + 2.0);
    double df = std::max(1, lag - fit_df);
    return {q, chi2_sf(q, df)};
}

}  // namespace tsc::stats
