#include "tscycle/decompose.hpp"

#include "tscycle/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

namespace tsc {

namespace {

/// Natural cubic spline through (t[i], v[i]) with strictly increasing t,
/// evaluated at the integers 0..n-1.
Eigen::VectorXd spline_eval(const std::vector<double>& t, const std::vector<double>& v,
                            Eigen::Index n) {
    const int m = static_cast<int>(t.size());
    Eigen::VectorXd out(n);
    if (m == 2) {
        double slope = (v[1] - v[0]) / (t[1] - t[0]);
        for (Eigen::Index i = 0; i < n; ++i) out[i] = v[0] + slope * (i - t[0]);
        return out;
    }
    // second derivatives by the tridiagonal natural-spline system
    std::vector<double> h(m - 1), alpha(m, 0.0), l(m), mu(m), z(m), c(m);
    for (int i = 0; i < m - 1; ++i) h[i] = t[i + 1] - t[i];
    for (int i = 1; i < m - 1; ++i)
        alpha[i] = 3.0 * ((v[i + 1] - v[i]) / h[i] - (v[i] - v[i - 1]) / h[i - 1]);
    l[0] = 1.0;
    mu[0] = z[0] = 0.0;
    for (int i = 1; i < m - 1; ++i) {
        l[i] = 2.0 * (t[i + 1] - t[i - 1]) - h[i - 1] * mu[i - 1];
        mu[i] = h[i] / l[i];
        z[i] = (alpha[i] - h[i - 1] * z[i - 1]) / l[i];
    }
    c[m - 1] = 0.0;
    for (int i = m - 2; i >= 0; --i) c[i] = z[i] - mu[i] * c[i + 1];

    int seg = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        double x = static_cast<double>(i);
        while (seg < m - 2 && x > t[seg + 1]) ++seg;
        double dx = x - t[seg];
        double b = (v[seg + 1] - v[seg]) / h[seg] - h[seg] * (c[seg + 1] + 2.0 * c[seg]) / 3.0;
        double d = (c[seg + 1] - c[seg]) / (3.0 * h[seg]);
        out[i] = v[seg] + b * dx + c[seg] * dx * dx + d * dx * dx * dx;
    }
    return out;
}

/// Strict local extrema of x (interior sign changes of the first difference).
void local_extrema(const Eigen::VectorXd& x, std::vector<int>& maxima,
                   std::vector<int>& minima) {
    maxima.clear();
    minima.clear();
    const Eigen::Index n = x.size();
    for (Eigen::Index i = 1; i + 1 < n; ++i) {
        if (x[i] > x[i - 1] && x[i] > x[i + 1]) maxima.push_back(static_cast<int>(i));
        if (x[i] < x[i - 1] && x[i] < x[i + 1]) minima.push_back(static_cast<int>(i));
    }
}

/// Envelope through the extrema with two mirrored extrema appended on each
/// side (reflection about the first/last sample).
Eigen::VectorXd envelope(const Eigen::VectorXd& x, const std::vector<int>& ext) {
    const Eigen::Index n = x.size();
    std::vector<double> t, v;
    const int nb = std::min<int>(2, static_cast<int>(ext.size()));
    for (int j = nb - 1; j >= 0; --j) {
        t.push_back(-static_cast<double>(ext[j]));
        v.push_back(x[ext[j]]);
    }
    for (int e : ext) {
        t.push_back(static_cast<double>(e));
        v.push_back(x[e]);
    }
    for (int j = 0; j < nb; ++j) {
        int e = ext[ext.size() - 1 - j];
        t.push_back(2.0 * static_cast<double>(n - 1) - e);
        v.push_back(x[e]);
    }
    return spline_eval(t, v, n);
}

/// First intrinsic mode by sifting with the S-number stopping rule; returns
/// the zero vector (and sets siftable=false) when the signal has fewer than
/// four interior extrema.
Eigen::VectorXd first_imf(const Eigen::VectorXd& x, int s_number, int max_siftings,
                          bool& siftable) {
    Eigen::VectorXd h = x;
    std::vector<int> maxima, minima;
    int stable = 0;
    int prev_ext = -1;
    siftable = true;
    for (int it = 0; it < max_siftings; ++it) {
        local_extrema(h, maxima, minima);
        const int next = static_cast<int>(maxima.size() + minima.size());
        if (maxima.size() < 2 || minima.size() < 2) {
            if (it == 0) {
                siftable = false;
                return Eigen::VectorXd::Zero(x.size());
            }
            break;
        }
        ExtremaCount ec = count_extrema(h);
        if (std::abs(ec.extrema - ec.zero_crossings) <= 1 && next == prev_ext) {
            if (++stable >= s_number) break;
        } else {
            stable = 0;
        }
        prev_ext = next;
        Eigen::VectorXd mean_env =
            0.5 * (envelope(h, maxima) + envelope(h, minima));
        h -= mean_env;
    }
    return h;
}

/// Full EMD of one signal into k modes (remaining modes zero when the
/// residual stops being siftable).
Eigen::MatrixXd emd_modes(const Eigen::VectorXd& x, int k, int s_number, int max_siftings) {
    Eigen::MatrixXd modes = Eigen::MatrixXd::Zero(x.size(), k);
    Eigen::VectorXd r = x;
    for (int j = 0; j < k; ++j) {
        bool ok = true;
        Eigen::VectorXd imf = first_imf(r, s_number, max_siftings, ok);
        if (!ok) break;
        modes.col(j) = imf;
        r -= imf;
    }
    return modes;
}

}  // namespace

ExtremaCount count_extrema(const Eigen::VectorXd& x) {
    ExtremaCount c;
    std::vector<int> maxima, minima;
    local_extrema(x, maxima, minima);
    c.extrema = static_cast<int>(maxima.size() + minima.size());
    for (Eigen::Index i = 1; i < x.size(); ++i)
        if ((x[i - 1] < 0.0 && x[i] >= 0.0) || (x[i - 1] >= 0.0 && x[i] < 0.0))
            ++c.zero_crossings;
    return c;
}

ImfSet ceemdan(const MonthlySeries& s, int ensemble_size, double noise_strength,
               int s_number, int max_siftings, std::uint64_t seed, int threads) {
    const Eigen::Index n = s.size();
    if (n < 64) throw DataError("ceemdan: need at least 64 observations");
    if (ensemble_size < 1 || s_number < 1 || max_siftings < 1 || noise_strength <= 0.0)
        throw ConfigError("ceemdan: invalid parameters");
    if (threads < 1) threads = 1;
    const Eigen::VectorXd& x = s.values;

    // Column count includes the residual: floor(log2 n) total, so K - 1
    // sifting stages.
    const int K = static_cast<int>(std::floor(std::log2(static_cast<double>(n)))) - 1;
    const double eps = noise_strength * stats::sd(x);

    ImfSet out;
    out.ensemble_size = ensemble_size;
    out.noise_strength = noise_strength;
    out.s_number = s_number;
    out.max_siftings = max_siftings;
    out.seed = seed;
    out.imfs = Eigen::MatrixXd::Zero(n, K + 1);

    // Per-member noise and its EMD modes, generated from independent seeded
    // streams so the result does not depend on the thread count.
    std::vector<Eigen::VectorXd> noise(ensemble_size);
    std::vector<Eigen::MatrixXd> noise_modes(ensemble_size);
    auto prep_member = [&](int i) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                          static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(i)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> gauss(0.0, 1.0);
        Eigen::VectorXd w(n);
        for (Eigen::Index t = 0; t < n; ++t) w[t] = gauss(rng);
        noise[i] = w;
        noise_modes[i] = emd_modes(w, K, s_number, max_siftings);
    };

    // Stage result per member, reduced in index order.
    std::vector<Eigen::VectorXd> member_imf(ensemble_size);
    auto run_stage = [&](int stage, const Eigen::VectorXd& r, int i) {
        Eigen::VectorXd input = r;
        if (stage == 0)
            input += eps * noise[i];
        else
            input += eps * noise_modes[i].col(stage - 1);
        bool ok = true;
        member_imf[i] = first_imf(input, s_number, max_siftings, ok);
        if (!ok) member_imf[i].setZero();
    };

    auto parallel_for = [&](int count, auto&& fn) {
        if (threads == 1) {
            for (int i = 0; i < count; ++i) fn(i);
            return;
        }
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
            });
        for (auto& th : pool) th.join();
    };

    parallel_for(ensemble_size, prep_member);

    Eigen::VectorXd r = x;
    for (int stage = 0; stage < K; ++stage) {
        ExtremaCount ec = count_extrema(r);
        if (ec.extrema < 4) {
            out.early_termination = true;
            break;
        }
        parallel_for(ensemble_size, [&](int i) { run_stage(stage, r, i); });
        Eigen::VectorXd imf = Eigen::VectorXd::Zero(n);
        for (int i = 0; i < ensemble_size; ++i) imf += member_imf[i];
        imf /= static_cast<double>(ensemble_size);
        out.imfs.col(stage) = imf;
        r -= imf;
    }
    out.imfs.col(K) = r;
    return out;
}

}  // namespace tsc
