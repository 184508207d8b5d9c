#include "tscycle/spectral.hpp"

#include "tscycle/stats.hpp"

#include <cmath>

namespace tsc {

int find_frequency(const MonthlySeries& s) {
    const Eigen::Index n = s.size();
    if (n < 30) throw DataError("find_frequency: series too short");

    // Linear detrend.
    Eigen::MatrixXd X(n, 2);
    X.col(0).setOnes();
    for (Eigen::Index i = 0; i < n; ++i) X(i, 1) = static_cast<double>(i + 1);
    auto [b, e] = stats::ols(X, s.values);

    stats::ArFit ar = stats::ar_yw(e);
    const int nf = 500;
    Eigen::VectorXd freq(nf), spec(nf);
    for (int i = 0; i < nf; ++i) {
        double f = 0.5 * static_cast<double>(i) / static_cast<double>(nf - 1);
        freq[i] = f;
        double cs = 1.0, sn = 0.0;
        for (int k = 1; k <= ar.order; ++k) {
            cs -= ar.phi[k - 1] * std::cos(2.0 * M_PI * f * k);
            sn -= ar.phi[k - 1] * std::sin(2.0 * M_PI * f * k);
        }
        spec[i] = ar.var_pred / (cs * cs + sn * sn);
    }

    Eigen::Index imax;
    if (spec.maxCoeff(&imax) <= 10.0) return 1;
    if (imax > 0) return static_cast<int>(std::floor(1.0 / freq[imax] + 0.5));

    // Zero-frequency maximum: use the first local rise and the maximum after
    // it; otherwise there is no usable interior peak.
    int j = -1;
    for (int i = 0; i + 1 < nf; ++i) {
        if (spec[i + 1] > spec[i]) {
            j = i;
            break;
        }
    }
    if (j < 0) return 1;
    Eigen::Index sub;
    spec.tail(nf - 1 - j).maxCoeff(&sub);
    Eigen::Index nextmax = j + 1 + sub;
    if (nextmax >= nf - 1) return 1;
    return static_cast<int>(std::floor(1.0 / freq[nextmax] + 0.5));
}

}  // namespace tsc
