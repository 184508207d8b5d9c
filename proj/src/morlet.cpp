#include "tscycle/spectral.hpp"

#include "fft_internal.hpp"

#include <cmath>

namespace tsc {

WaveletSpectrum morlet_power(const MonthlySeries& s, double dt, double dj) {
    const Eigen::Index n = s.size();
    if (dt <= 0.0 || dj <= 0.0) throw ConfigError("morlet_power: dt and dj must be positive");
    if (n < 32) throw DataError("morlet_power: need at least 32 observations");

    const double omega0 = 6.0;
    const double fourier_factor = 4.0 * M_PI / (omega0 + std::sqrt(2.0 + omega0 * omega0));
    const double s0 = 2.0 * dt;
    const int J = static_cast<int>(
        std::floor(std::log2(static_cast<double>(n) * dt / s0) / dj));

    const std::size_t N = detail::next_pow2(static_cast<std::size_t>(n));
    std::vector<std::complex<double>> xf(N, {0.0, 0.0});
    const double mean = s.values.mean();
    for (Eigen::Index i = 0; i < n; ++i) xf[i] = s.values[i] - mean;
    detail::fft(xf, false);

    std::vector<double> omega(N);
    for (std::size_t k = 0; k < N; ++k) {
        double f = (k <= N / 2) ? static_cast<double>(k)
                                : static_cast<double>(k) - static_cast<double>(N);
        omega[k] = 2.0 * M_PI * f / (static_cast<double>(N) * dt);
    }

    WaveletSpectrum w;
    w.dt = dt;
    w.dj = dj;
    w.periods.resize(J + 1);
    w.times.resize(n);
    w.power.resize(J + 1, n);
    w.avg_power.resize(J + 1);
    w.coi.resize(n);
    for (Eigen::Index t = 0; t < n; ++t) {
        w.times[t] = decimal_year(s, t);
        double edge = std::min(static_cast<double>(t), static_cast<double>(n - 1 - t)) + 1e-9;
        w.coi[t] = fourier_factor * std::sqrt(2.0) * dt * edge;
    }

    const double norm_base = std::pow(M_PI, -0.25);
    std::vector<std::complex<double>> d(N);
    for (int j = 0; j <= J; ++j) {
        double scale = s0 * std::pow(2.0, j * dj);
        w.periods[j] = scale * fourier_factor;
        double norm = norm_base * std::sqrt(2.0 * M_PI * scale / dt);
        for (std::size_t k = 0; k < N; ++k) {
            if (omega[k] > 0.0) {
                double arg = scale * omega[k] - omega0;
                d[k] = xf[k] * (norm * std::exp(-0.5 * arg * arg));
            } else {
                d[k] = {0.0, 0.0};
            }
        }
        detail::fft(d, true);
        double acc = 0.0;
        for (Eigen::Index t = 0; t < n; ++t) {
            double p = std::norm(d[t]) / scale;
            w.power(j, t) = p;
            acc += p;
        }
        w.avg_power[j] = acc / static_cast<double>(n);
    }
    return w;
}

}  // namespace tsc
