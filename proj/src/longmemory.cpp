#include "tscycle/longmemory.hpp"

#include "tscycle/stats.hpp"

#include <cmath>
#include <vector>

namespace tsc {

namespace {

/// OLS slope of y on x.
double slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

/// Expected rescaled range of iid noise for block length d (Anis-Lloyd with
/// the Peters finite-sample factor).
double expected_rs(int d) {
    double sum = 0.0;
    for (int i = 1; i < d; ++i) sum += std::sqrt(static_cast<double>(d - i) / i);
    double ratio = (d - 0.5) / d * sum;
    if (d > 340) return ratio / std::sqrt(0.5 * M_PI * d);
    return std::exp(std::lgamma((d - 1.0) / 2.0) - std::lgamma(d / 2.0)) * ratio /
           std::sqrt(M_PI);
}

/// Rescaled range of one block (sample standard deviation).
double block_rs(const Eigen::VectorXd& b) {
    double m = b.mean();
    double acc = 0.0, lo = 0.0, hi = 0.0;
    for (Eigen::Index i = 0; i < b.size(); ++i) {
        acc += b[i] - m;
        lo = std::min(lo, acc);
        hi = std::max(hi, acc);
    }
    return (hi - lo) / stats::sd(b);
}

/// Negative profile log-likelihood of a fractionally integrated noise model
/// at memory parameter d, by the Durbin-Levinson innovations recursion.
double fi_nll(const Eigen::VectorXd& x, double d) {
    const Eigen::Index n = x.size();
    // Autocovariances gamma(k) up to the unit innovation variance.
    std::vector<double> g(n);
    g[0] = std::exp(std::lgamma(1.0 - 2.0 * d) - 2.0 * std::lgamma(1.0 - d));
    for (Eigen::Index k = 1; k < n; ++k) g[k] = g[k - 1] * (k - 1.0 + d) / (k - d);

    std::vector<double> phi;
    phi.reserve(n);
    double v = g[0];
    double ssq = x[0] * x[0] / v;
    double logdet = std::log(v);
    for (Eigen::Index t = 1; t < n; ++t) {
        double num = g[t];
        for (size_t j = 0; j < phi.size(); ++j) num -= phi[j] * g[t - 1 - j];
        double k = num / v;
        size_t p = phi.size();
        std::vector<double> nphi(p + 1);
        for (size_t j = 0; j < p; ++j) nphi[j] = phi[j] - k * phi[p - 1 - j];
        nphi[p] = k;
        phi.swap(nphi);
        v *= (1.0 - k * k);
        double pred = 0.0;
        for (size_t j = 0; j < phi.size(); ++j) pred += phi[j] * x[t - 1 - j];
        double e = x[t] - pred;
        ssq += e * e / v;
        logdet += std::log(v);
    }
    return 0.5 * (n * std::log(ssq / n) + logdet + n);
}

}  // namespace

double gph_estimate(const MonthlySeries& s, int m) {
    const Eigen::Index n = s.size();
    if (m < 0) m = static_cast<int>(std::floor(1.0 + std::pow(static_cast<double>(n), 0.8)));
    if (m < 2 || m >= n / 2) throw ConfigError("gph_estimate: bandwidth out of range");
    Eigen::VectorXd x = s.values.array() - s.values.mean();

    std::vector<double> Y(m), logI(m);
    for (int j = 1; j <= m; ++j) {
        double lambda = 2.0 * M_PI * j / static_cast<double>(n);
        double re = 0.0, im = 0.0;
        for (Eigen::Index t = 0; t < n; ++t) {
            re += x[t] * std::cos(lambda * t);
            im -= x[t] * std::sin(lambda * t);
        }
        double I = (re * re + im * im) / (2.0 * M_PI * n);
        if (I <= 0.0) throw NumericError("gph_estimate: degenerate periodogram ordinate");
        double sh = 2.0 * std::sin(lambda / 2.0);
        Y[j - 1] = -std::log(sh * sh);
        logI[j - 1] = std::log(I);
    }
    return slope(Y, logI);
}

LongMemoryEstimates hurst_rs(const MonthlySeries& s, int min_block) {
    Eigen::Index n = s.size();
    if (n < 4 * min_block) throw DataError("hurst_rs: series too short for the block grid");
    if (stats::sd(s.values) == 0.0)
        throw NumericError("hurst_rs: constant input has no rescaled range");
    Eigen::VectorXd x = s.values;
    if (n % 2 == 1) {
        x.conservativeResize(n + 1);
        x[n] = (x[n - 2] + x[n - 1]) / 2.0;
        ++n;
    }

    // Pick the working length: the smallest candidate in [0.99 n, n] with the
    // most block sizes d dividing it, min_block <= d <= candidate/2.
    auto divisor_count = [&](Eigen::Index len) {
        int c = 0;
        for (Eigen::Index d = min_block; d <= len / 2; ++d)
            if (len % d == 0) ++c;
        return c;
    };
    Eigen::Index opt_n = n;
    int best = -1;
    for (Eigen::Index i = static_cast<Eigen::Index>(std::floor(0.99 * n)); i <= n; ++i) {
        int c = divisor_count(i);
        if (c > best) {
            best = c;
            opt_n = i;
        }
    }
    Eigen::VectorXd xs = x.head(opt_n);
    std::vector<int> divisors;
    for (Eigen::Index d = min_block; d <= opt_n / 2; ++d)
        if (opt_n % d == 0) divisors.push_back(static_cast<int>(d));
    if (divisors.size() < 2) throw DataError("hurst_rs: not enough block sizes");

    LongMemoryEstimates out;
    out.rs_simple = std::log(block_rs(xs)) / std::log(static_cast<double>(opt_n));

    std::vector<double> lgd, lg_emp, lg_theo, lg_al;
    for (int d : divisors) {
        const int blocks = static_cast<int>(opt_n) / d;
        double rse = 0.0;
        for (int b = 0; b < blocks; ++b) rse += block_rs(xs.segment(b * d, d));
        rse /= blocks;
        double ers = expected_rs(d);
        lgd.push_back(std::log2(static_cast<double>(d)));
        lg_emp.push_back(std::log2(rse));
        lg_theo.push_back(std::log2(ers));
        lg_al.push_back(std::log2(rse - ers + std::sqrt(0.5 * M_PI * d)));
    }
    out.rs_empirical = slope(lgd, lg_emp);
    out.rs_theoretical = slope(lgd, lg_theo);
    out.rs_corrected_empirical = slope(lgd, lg_al);
    out.rs_corrected = out.rs_empirical - out.rs_theoretical + 0.5;
    return out;
}

double hurst_ml(const MonthlySeries& s) {
    const Eigen::Index n = s.size();
    if (n < 30) throw DataError("hurst_ml: series too short");
    Eigen::VectorXd x = s.values.array() - s.values.mean();

    // Golden-section minimization of the profile likelihood on [0, 0.5).
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.0, b = 0.4999;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = fi_nll(x, c), fd = fi_nll(x, d);
    while (b - a > 1e-7) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = fi_nll(x, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = fi_nll(x, d);
        }
    }
    return 0.5 + (a + b) / 2.0;
}

LongMemoryEstimates long_memory(const MonthlySeries& s) {
    LongMemoryEstimates out = hurst_rs(s);
    out.bandwidth_m =
        static_cast<int>(std::floor(1.0 + std::pow(static_cast<double>(s.size()), 0.8)));
    out.gph_d = gph_estimate(s, out.bandwidth_m);
    out.ml_hurst = hurst_ml(s);
    return out;
}

}  // namespace tsc
