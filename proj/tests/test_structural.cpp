#include "test_util.hpp"

#include "tscycle/structural.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

using namespace tsc;

namespace {

/// Brute-force segmented-mean RSS over all placements of m breaks with
/// segments of at least h observations; returns (best RSS, break indices).
std::pair<double, std::vector<Eigen::Index>> exhaustive_rss(const Eigen::VectorXd& x, int m,
                                                            Eigen::Index h) {
    const Eigen::Index n = x.size();
    Eigen::VectorXd cs(n + 1), cs2(n + 1);
    cs[0] = cs2[0] = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        cs[i + 1] = cs[i] + x[i];
        cs2[i + 1] = cs2[i] + x[i] * x[i];
    }
    auto seg_rss = [&](Eigen::Index a, Eigen::Index b) {  // observations a..b inclusive
        double s = cs[b + 1] - cs[a];
        double s2 = cs2[b + 1] - cs2[a];
        double len = double(b - a + 1);
        return s2 - s * s / len;
    };
    double best = std::numeric_limits<double>::infinity();
    std::vector<Eigen::Index> best_bp, bp(m);
    // recursive enumeration of break positions (last index of each segment)
    auto rec = [&](auto&& self, int k, Eigen::Index lo) -> void {
        if (k == m) {
            if (n - lo < h) return;
            double rss = seg_rss(lo, n - 1);
            for (int j = 0; j < m; ++j) {
                Eigen::Index a = (j == 0) ? 0 : bp[j - 1] + 1;
                rss += seg_rss(a, bp[j]);
            }
            if (rss < best) {
                best = rss;
                best_bp = bp;
            }
            return;
        }
        for (Eigen::Index b = lo + h - 1; b <= n - 1 - (m - k) * h; ++b) {
            bp[k] = b;
            self(self, k + 1, b + 1);
        }
    };
    rec(rec, 0, 0);
    return {best, best_bp};
}

}  // namespace

TEST_CASE("dynamic program matches exhaustive search on 50 random instances") {
    std::mt19937_64 rng(123456);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<int> len(28, 44);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index n = len(rng);
        MonthlySeries s;
        s.name = "random";
        s.values.resize(n);
        // two random level shifts to give the breaks something to find
        Eigen::Index c1 = n / 3 + (trial % 5), c2 = 2 * n / 3 + (trial % 3);
        for (Eigen::Index i = 0; i < n; ++i) {
            double level = (i < c1) ? 0.0 : (i < c2 ? 2.0 : -1.0);
            s.values[i] = level + gauss(rng);
        }
        BreakpointSet bp = breakpoints(s, 0.15, 3);
        const Eigen::Index h = bp.min_segment;
        for (int m = 0; m <= 3; ++m) {
            auto [rss, idx] = exhaustive_rss(s.values, m, h);
            if (!std::isfinite(rss)) continue;  // m infeasible for this n
            REQUIRE(m < int(bp.rss_by_m.size()));
            CHECK(bp.rss_by_m[m] == doctest::Approx(rss).epsilon(1e-9));
            if (m == bp.chosen_m) {
                REQUIRE(bp.break_indices.size() == idx.size());
                for (size_t j = 0; j < idx.size(); ++j)
                    CHECK(bp.break_indices[j] == idx[j]);
            }
        }
    }
}

TEST_CASE("breakpoints recovers a single planted mean shift") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> gauss(0.0, 0.5);
    MonthlySeries s = testutil::make_series(
        200, [&](Eigen::Index t) { return (t < 120 ? 0.0 : 4.0) + gauss(rng); });
    BreakpointSet bp = breakpoints(s, 0.15, 5);
    REQUIRE(bp.chosen_m >= 1);
    CHECK(std::abs(long(bp.break_indices[0]) - 119L) <= 2);
    break_confint(s, bp);
    REQUIRE(bp.conf_intervals.size() == bp.break_indices.size());
    for (const BreakInterval& ci : bp.conf_intervals) {
        CHECK(ci.lower <= ci.point);
        CHECK(ci.point <= ci.upper);
    }
}

TEST_CASE("argmax CDF matches the closed-form symmetric case") {
    auto Phi = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
    auto Gsym = [&](double x) {
        double ax = std::fabs(x);
        double g = 1.0 + std::sqrt(ax / (2.0 * M_PI)) * std::exp(-ax / 8.0) -
                   ((ax + 5.0) / 2.0) * Phi(-std::sqrt(ax) / 2.0) +
                   1.5 * std::exp(ax) * Phi(-3.0 * std::sqrt(ax) / 2.0);
        return x >= 0.0 ? g : 1.0 - g;
    };
    for (double x : {0.5, 2.0, 5.0, 11.0, 20.0}) {
        CHECK(break_argmax_cdf(x, 1.0) == doctest::Approx(Gsym(x)).epsilon(5e-5));
        CHECK(break_argmax_cdf(-x, 1.0) == doctest::Approx(Gsym(-x)).epsilon(5e-5));
    }
    // monotone in x for an asymmetric variance ratio
    double prev = 0.0;
    for (double x : {-8.0, -2.0, 0.0, 1.0, 4.0, 12.0}) {
        double c = break_argmax_cdf(x, 0.7);
        CHECK(c >= prev - 1e-9);
        prev = c;
    }
}

TEST_CASE("efp flags a mean shift and not stationary noise") {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> gauss(0.0, 1.0);
    MonthlySeries shifted = testutil::make_series(
        300, [&](Eigen::Index t) { return (t < 150 ? 0.0 : 3.0) + gauss(rng); });
    MonthlySeries calm = testutil::ar1_series(300, 0.0, 55);
    for (EfpType type :
         {EfpType::ols_cusum, EfpType::ols_mosum, EfpType::rec_cusum, EfpType::rec_mosum}) {
        EfpResult hot = efp_test(shifted, type);
        EfpResult cold = efp_test(calm, type);
        CHECK(hot.p_value < 0.01 + 1e-12);
        CHECK(cold.p_value > 0.05);
        CHECK(hot.statistic > cold.statistic);
        CHECK(hot.path.size() > 0);
    }
    CHECK_THROWS_AS((void)efp_test(calm, EfpType::ols_mosum, 0.7), ConfigError);
}
