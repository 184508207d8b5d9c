#include "test_util.hpp"

#include "tscycle/csv.hpp"
#include "tscycle/series.hpp"

#include <doctest.h>

using namespace tsc;

TEST_CASE("fixture ingest: shape, anchor, and column sums") {
    const SeriesBundle& b = testutil::fixture();
    CHECK(b.pmn.size() == 536);
    CHECK(b.pma.size() == 536);
    CHECK(b.total.size() == 536);
    CHECK(b.pmn.start_year == 1976);
    CHECK(b.pmn.start_month == 5);
    CHECK(b.pmn.values.sum() == 158714.0);
    CHECK(b.pma.values.sum() == 44805.0);
    CHECK(b.total.values.sum() == 203519.0);
    for (Eigen::Index i = 0; i < b.pmn.size(); ++i)
        CHECK(b.total.values[i] == b.pmn.values[i] + b.pma.values[i]);
}

TEST_CASE("ingest_csv rejects malformed input") {
    CHECK_THROWS_AS((void)ingest_csv_file("/nonexistent/file.csv", 1976, 5, 12), DataError);
    // sum violation on a data row
    std::string bad = "PMN,PMA,TotalMD\n";
    for (int i = 0; i < 24; ++i) bad += "1,2,3\n";
    bad += "1,2,4\n";
    CHECK_THROWS_AS((void)ingest_csv(bad, 1976, 5, 12), DataError);
    // non-numeric cell
    std::string txt = "PMN,PMA,TotalMD\n";
    for (int i = 0; i < 24; ++i) txt += "1,2,3\n";
    txt += "x,2,3\n";
    CHECK_THROWS_AS((void)ingest_csv(txt, 1976, 5, 12), DataError);
    // too short
    CHECK_THROWS_AS((void)ingest_csv("PMN,PMA,TotalMD\n1,2,3\n", 1976, 5, 12), DataError);
}

TEST_CASE("csv round trip preserves the bundle") {
    const SeriesBundle& b = testutil::fixture();
    SeriesBundle again = ingest_csv(to_csv(b), b.pmn.start_year, b.pmn.start_month,
                                    b.pmn.frequency);
    CHECK((again.pmn.values - b.pmn.values).cwiseAbs().maxCoeff() == 0.0);
    CHECK((again.total.values - b.total.values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("decimal_year and month_label follow the calendar anchor") {
    const MonthlySeries& s = testutil::fixture().pmn;
    CHECK(decimal_year(s, 0) == doctest::Approx(1976.0 + 4.0 / 12.0).epsilon(1e-12));
    CHECK(decimal_year(s, 535) == doctest::Approx(2020.0 + 11.0 / 12.0).epsilon(1e-12));
    CHECK(month_label(s, 0) == "May 1976");
    CHECK(month_label(s, 535) == "Dec 2020");
    CHECK(month_label(s, 191) == "Apr 1992");
    CHECK(month_label(s, 482) == "Jul 2016");
}

TEST_CASE("acf basics and affine invariance") {
    const MonthlySeries& s = testutil::fixture().pmn;
    AcfResult a = acf(s, 36);
    CHECK(a.rho[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(a.rho.size() == 37);
    CHECK(a.ci_halfwidth == doctest::Approx(1.96 / std::sqrt(536.0)).epsilon(1e-12));
    for (int k = 0; k <= 36; ++k) CHECK(std::abs(a.rho[k]) <= 1.0 + 1e-12);

    AcfResult b = acf(testutil::affine(s, 3.5, -120.0), 36);
    for (int k = 0; k <= 36; ++k)
        CHECK(b.rho[k] == doctest::Approx(a.rho[k]).epsilon(1e-10));
    // sign-flip scaling flips odd structure identically: rho is invariant to
    // negative scale as well
    AcfResult c = acf(testutil::affine(s, -2.0, 7.0), 36);
    for (int k = 0; k <= 36; ++k)
        CHECK(c.rho[k] == doctest::Approx(a.rho[k]).epsilon(1e-10));

    CHECK_THROWS_AS((void)acf(testutil::make_series(50, [](Eigen::Index) { return 4.0; }), 5),
                    NumericError);
    CHECK_THROWS_AS((void)acf(s, 536), ConfigError);
}
