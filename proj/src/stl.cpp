#include "tscycle/decompose.hpp"

#include <cmath>
#include <vector>

namespace tsc {

namespace {

int next_odd(int v) { return v % 2 == 0 ? v + 1 : v; }

/**
 * Loess smoothing of an equally spaced sequence: tricube-weighted local fit
 * of the given degree (0 or 1) over the span nearest points, evaluated at
 * integer position t (which may lie outside [0, n-1] for extrapolation).
 */
double loess_at(const Eigen::VectorXd& y, int span, int degree, double t) {
    const int n = static_cast<int>(y.size());
    const int q = std::min(span, n);
    // window of q points nearest to t
    int lo = static_cast<int>(std::ceil(t)) - q / 2;
    lo = std::max(0, std::min(lo, n - q));
    // slide to the true nearest-neighbour window
    while (lo > 0 && t - (lo - 1) < (lo + q - 1) - t) --lo;
    while (lo + q < n && (lo + q) - t < t - lo) ++lo;
    double dmax = std::max(t - lo, static_cast<double>(lo + q - 1) - t);
    if (span > n) dmax *= static_cast<double>(span) / n;
    if (dmax <= 0.0) dmax = 1.0;

    double sw = 0.0, swx = 0.0, swy = 0.0, swxx = 0.0, swxy = 0.0;
    for (int i = lo; i < lo + q; ++i) {
        double u = std::abs(i - t) / dmax;
        double w = u < 1.0 ? std::pow(1.0 - u * u * u, 3) : 0.0;
        if (w <= 0.0) continue;
        sw += w;
        swy += w * y[i];
        if (degree > 0) {
            swx += w * i;
            swxx += w * static_cast<double>(i) * i;
            swxy += w * static_cast<double>(i) * y[i];
        }
    }
    if (sw <= 0.0) return y[std::max(0, std::min(n - 1, static_cast<int>(std::lround(t))))];
    if (degree == 0) return swy / sw;
    double det = sw * swxx - swx * swx;
    if (std::abs(det) < 1e-12 * (sw * swxx + 1.0)) return swy / sw;
    double b = (sw * swxy - swx * swy) / det;
    double a = (swy - b * swx) / sw;
    return a + b * t;
}

Eigen::VectorXd loess_series(const Eigen::VectorXd& y, int span, int degree) {
    Eigen::VectorXd out(y.size());
    for (Eigen::Index i = 0; i < y.size(); ++i)
        out[i] = loess_at(y, span, degree, static_cast<double>(i));
    return out;
}

/// Simple moving average of window p (output shrinks by p-1).
Eigen::VectorXd ma(const Eigen::VectorXd& y, int p) {
    Eigen::VectorXd out(y.size() - p + 1);
    double acc = y.head(p).sum();
    out[0] = acc / p;
    for (Eigen::Index i = 1; i < out.size(); ++i) {
        acc += y[i + p - 1] - y[i - 1];
        out[i] = acc / p;
    }
    return out;
}

}  // namespace

Decomposition stl_decompose(const MonthlySeries& s, int s_window) {
    const Eigen::Index n = s.size();
    const int p = s.frequency;
    if (s_window < 3) throw ConfigError("stl_decompose: s_window must be at least 3");
    if (n < 2 * p + 1) throw DataError("stl_decompose: need more than two full cycles");
    const Eigen::VectorXd& x = s.values;

    const int sw = next_odd(s_window);
    const int lw = next_odd(p);
    const int tw = next_odd(static_cast<int>(std::ceil(1.5 * p / (1.0 - 1.5 / sw))));

    Eigen::VectorXd trend = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd seasonal = Eigen::VectorXd::Zero(n);
    for (int pass = 0; pass < 2; ++pass) {
        Eigen::VectorXd det = x - trend;

        // Cycle-subseries smoothing, extended one full cycle at both ends.
        Eigen::VectorXd C(n + 2 * p);
        for (int c = 0; c < p; ++c) {
            const int m = static_cast<int>((n - c + p - 1) / p);
            Eigen::VectorXd sub(m);
            for (int j = 0; j < m; ++j) sub[j] = det[c + j * p];
            for (int j = -1; j <= m; ++j) {
                double v = loess_at(sub, sw, 0, static_cast<double>(j));
                int row = c + (j + 1) * p;
                if (row < C.size()) C[row] = v;
            }
        }

        // Low-pass: 2 x MA(p), MA(3), then loess; leaves length n.
        Eigen::VectorXd L = loess_series(ma(ma(ma(C, p), p), 3), lw, 1);
        seasonal = C.segment(p, n) - L;
        trend = loess_series(x - seasonal, tw, 1);
    }

    Decomposition d;
    d.method = "stl";
    d.seasonal = seasonal;
    d.trend = trend;
    d.remainder = x - seasonal - trend;
    return d;
}

}  // namespace tsc
