#include "tscycle/dist_tests.hpp"

#include "tscycle/stats.hpp"

#include <algorithm>
#include <cmath>

namespace tsc {

namespace {

/// log of the standard normal CDF, stable in the lower tail.
double log_norm_cdf(double x) {
    if (x > -10.0) return std::log(stats::norm_cdf(x));
    // asymptotic expansion: phi(x)/|x| * (1 - 1/x^2 + 3/x^4)
    double x2 = x * x;
    return -0.5 * x2 - 0.5 * std::log(2.0 * M_PI) - std::log(-x) +
           std::log1p(-1.0 / x2 + 3.0 / (x2 * x2));
}

}  // namespace

NormalitySuite normality_suite(const MonthlySeries& s) {
    const Eigen::Index n = s.size();
    if (n < 8) throw DataError("normality_suite: need at least 8 observations");
    Eigen::VectorXd x = s.values;
    std::sort(x.data(), x.data() + n);
    double m = x.mean();
    double sdev = stats::sd(x);
    if (sdev <= 0.0) throw NumericError("normality_suite: zero variance");
    Eigen::VectorXd z = (x.array() - m) / sdev;
    const double dn = static_cast<double>(n);

    NormalitySuite out;

    // Anderson-Darling with the estimated-parameter adjustment and the
    // D'Agostino-Stephens piecewise p-value curves.
    {
        double h = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            double lp1 = log_norm_cdf(z[i]);
            double lp2 = log_norm_cdf(-z[n - 1 - i]);
            h += (2.0 * static_cast<double>(i + 1) - 1.0) * (lp1 + lp2);
        }
        double A = -dn - h / dn;
        double AA = (1.0 + 0.75 / dn + 2.25 / (dn * dn)) * A;
        double p;
        bool clamp = false;
        if (AA < 0.2)
            p = 1.0 - std::exp(-13.436 + 101.14 * AA - 223.73 * AA * AA);
        else if (AA < 0.34)
            p = 1.0 - std::exp(-8.318 + 42.796 * AA - 59.938 * AA * AA);
        else if (AA < 0.6)
            p = std::exp(0.9177 - 4.279 * AA - 1.38 * AA * AA);
        else if (AA < 10.0)
            p = std::exp(1.2937 - 5.709 * AA + 0.0186 * AA * AA);
        else {
            p = 3.7e-24;
            clamp = true;
        }
        out.anderson_darling = {"Anderson-Darling", A, p, clamp,
                                "sample is drawn from a normal distribution", {}};
    }

    // Cramer-von Mises with the (1 + 0.5/n) adjustment.
    {
        double W = 1.0 / (12.0 * dn);
        for (Eigen::Index i = 0; i < n; ++i) {
            double u = stats::norm_cdf(z[i]) -
                       (2.0 * static_cast<double>(i + 1) - 1.0) / (2.0 * dn);
            W += u * u;
        }
        double WW = (1.0 + 0.5 / dn) * W;
        double p;
        bool clamp = false;
        if (WW < 0.0275)
            p = 1.0 - std::exp(-13.953 + 775.5 * WW - 12542.61 * WW * WW);
        else if (WW < 0.051)
            p = 1.0 - std::exp(-5.903 + 179.546 * WW - 1515.29 * WW * WW);
        else if (WW < 0.092)
            p = std::exp(0.886 - 31.62 * WW + 10.897 * WW * WW);
        else if (WW < 1.1)
            p = std::exp(1.111 - 34.242 * WW + 12.832 * WW * WW);
        else {
            p = 7.37e-10;
            clamp = true;
        }
        p = std::clamp(p, 0.0, 1.0);
        out.cramer_von_mises = {"Cramer-von Mises", W, p, clamp,
                                "sample is drawn from a normal distribution", {}};
    }

    // Lilliefors with the Dallal-Wilkinson p-value and the Stephens
    // correction for the upper range.
    {
        double dplus = 0.0, dminus = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            double pi = stats::norm_cdf(z[i]);
            dplus = std::max(dplus, static_cast<double>(i + 1) / dn - pi);
            dminus = std::max(dminus, pi - static_cast<double>(i) / dn);
        }
        double K = std::max(dplus, dminus);
        double Kd = K, nd = dn;
        if (n > 100) {
            Kd = K * std::pow(dn / 100.0, 0.49);
            nd = 100.0;
        }
        double p = std::exp(-7.01256 * Kd * Kd * (nd + 2.78019) +
                            2.99587 * Kd * std::sqrt(nd + 2.78019) - 0.122119 +
                            0.974598 / std::sqrt(nd) + 1.67997 / nd);
        if (p > 0.1) {
            double KK = (std::sqrt(dn) - 0.01 + 0.85 / std::sqrt(dn)) * K;
            if (KK <= 0.302)
                p = 1.0;
            else if (KK <= 0.5)
                p = 2.76773 - 19.828315 * KK + 80.709644 * KK * KK -
                    138.55152 * KK * KK * KK + 81.218052 * KK * KK * KK * KK;
            else if (KK <= 0.9)
                p = -4.901232 + 40.662806 * KK - 97.490286 * KK * KK +
                    94.029866 * KK * KK * KK - 32.355711 * KK * KK * KK * KK;
            else if (KK <= 1.31)
                p = 6.198765 - 19.558097 * KK + 23.186922 * KK * KK -
                    12.234627 * KK * KK * KK + 2.423045 * KK * KK * KK * KK;
            else
                p = 0.0;
        }
        p = std::clamp(p, 0.0, 1.0);
        out.lilliefors = {"Lilliefors (Kolmogorov-Smirnov)", K, p, false,
                          "sample is drawn from a normal distribution", {}};
    }
    return out;
}

}  // namespace tsc
