#include "tscycle/structural.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace tsc {

namespace {

constexpr int kGaussN = 160;

/// Gauss-Legendre nodes/weights on (0, 1), computed once by Newton iteration.
struct GaussRule {
    std::array<double, kGaussN> node{}, weight{};
    GaussRule() {
        for (int i = 0; i < kGaussN; ++i) {
            // initial guess: Chebyshev angle
            double t = std::cos(M_PI * (i + 0.75) / (kGaussN + 0.5));
            double p0, p1;
            for (int it = 0; it < 100; ++it) {
                p0 = 1.0;
                p1 = t;
                for (int k = 2; k <= kGaussN; ++k) {
                    double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = kGaussN * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-15) break;
            }
            p0 = 1.0;
            p1 = t;
            for (int k = 2; k <= kGaussN; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = kGaussN * (t * p1 - p0) / (t * t - 1.0);
            node[i] = 0.5 * (1.0 + t);
            weight[i] = 1.0 / ((1.0 - t * t) * dp * dp) * 2.0 * 0.5;
        }
    }
};

const GaussRule& rule() {
    static const GaussRule r;
    return r;
}

/**
 * P(argmax <= x) for x > 0 where on [0, x] the process is a Brownian motion
 * with volatility v_move and drift -1/2, and the maximum of the other side
 * is exponential with the given rate.  Conditioning on the running maximum
 * (location mt, value via the reflection density), a change of measure
 * removes the drift; the kernel is the expected survival of the after-x
 * tail against max(other-side max, running max).
 */
double core(double x, double v_move, double other_rate) {
    const double th = 0.5 / v_move;
    const double r = 1.0 / (v_move * v_move);
    const GaussRule& g = rule();

    // Map (0,inf)^2 through rational transforms scaled to the integrand mass:
    // u concentrates below th*x + few*sqrt(x), mt below that as well.
    const double su = th * x + std::sqrt(x) + 1.0;
    const double sm = su;

    double total = 0.0;
    for (int i = 0; i < kGaussN; ++i) {
        double pm = g.node[i];
        double mt = sm * pm / (1.0 - pm);
        double jm = sm / ((1.0 - pm) * (1.0 - pm)) * g.weight[i];
        double b = v_move * mt;
        double inner = 0.0;
        for (int j = 0; j < kGaussN; ++j) {
            double pu = g.node[j];
            double du = su * pu / (1.0 - pu);
            double ju = su / ((1.0 - pu) * (1.0 - pu)) * g.weight[j];
            double u = mt + du;
            double wt = 2.0 * mt - u;
            double y = v_move * wt;
            double loggeo = std::log(2.0 * u / (x * std::sqrt(2.0 * M_PI * x)));
            double e1 = -u * u / (2.0 * x) - th * wt - th * th * x / 2.0;
            if (loggeo + e1 < -700.0) continue;
            double ker = std::exp(r * (y - b)) *
                         ((1.0 - std::exp(-other_rate * b)) +
                          other_rate * std::exp(-other_rate * b) / (other_rate + r));
            inner += ju * std::exp(loggeo + e1) * ker;
        }
        total += jm * inner;
    }
    return 1.0 - total;
}

/// Quantile of the argmax distribution by bisection.
double argmax_quantile(double p, double v) {
    double lo = -1.0, hi = 1.0;
    while (break_argmax_cdf(lo, v) > p) lo *= 2.0;
    while (break_argmax_cdf(hi, v) < p) hi *= 2.0;
    for (int it = 0; it < 80 && hi - lo > 1e-7 * (1.0 + std::abs(hi)); ++it) {
        double mid = 0.5 * (lo + hi);
        if (break_argmax_cdf(mid, v) < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double break_argmax_cdf(double x, double v) {
    if (x == 0.0) {
        // continuity: evaluate just above zero from the positive side (the
        // quadrature mapping needs x large enough that loggeo stays finite)
        x = 1e-6;
    }
    if (x > 0.0) return core(x, v, 1.0);
    return 1.0 - core(-x, 1.0, 1.0 / (v * v));
}

void break_confint(const MonthlySeries& s, BreakpointSet& bp, double level) {
    if (level <= 0.0 || level >= 1.0) throw ConfigError("break_confint: level in (0,1)");
    const Eigen::Index n = s.size();
    const Eigen::VectorXd& y = s.values;
    const double a = (1.0 - level) / 2.0;

    bp.conf_intervals.clear();
    std::vector<Eigen::Index> bounds;
    bounds.push_back(-1);
    for (Eigen::Index b : bp.break_indices) bounds.push_back(b);
    bounds.push_back(n - 1);

    for (size_t k = 0; k + 2 < bounds.size(); ++k) {
        Eigen::Index l0 = bounds[k] + 1, l1 = bounds[k + 1];
        Eigen::Index r0 = bounds[k + 1] + 1, r1 = bounds[k + 2];
        Eigen::VectorXd y1 = y.segment(l0, l1 - l0 + 1);
        Eigen::VectorXd y2 = y.segment(r0, r1 - r0 + 1);
        double m1 = y1.mean(), m2 = y2.mean();
        double delta = m2 - m1;
        if (std::abs(delta) < 1e-12 * (std::abs(m1) + 1.0))
            throw NumericError("break_confint: vanishing mean shift at a break");
        double s1 = (y1.array() - m1).square().sum() / static_cast<double>(y1.size());
        double s2 = (y2.array() - m2).square().sum() / static_cast<double>(y2.size());
        double v = std::sqrt(s2 / s1);
        double scale = s1 / (delta * delta);
        double qhi = argmax_quantile(1.0 - a, v);
        double qlo = argmax_quantile(a, v);
        double b_lo = static_cast<double>(bounds[k + 1]) - std::ceil(qhi * scale);
        double b_hi = static_cast<double>(bounds[k + 1]) - std::floor(qlo * scale);
        BreakInterval ci;
        ci.point = decimal_year(s, bounds[k + 1]);
        ci.lower = decimal_year(s, static_cast<Eigen::Index>(b_lo));
        ci.upper = decimal_year(s, static_cast<Eigen::Index>(b_hi));
        bp.conf_intervals.push_back(ci);
    }
}

}  // namespace tsc
