#include "tscycle/report.hpp"

#include "tscycle/csv.hpp"
#include "tscycle/decompose.hpp"
#include "tscycle/descriptive.hpp"
#include "tscycle/dist_tests.hpp"
#include "tscycle/longmemory.hpp"
#include "tscycle/spectral.hpp"
#include "tscycle/structural.hpp"
#include "tscycle/unitroot.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <vector>

namespace tsc {

using ordered_json = nlohmann::ordered_json;

const char* to_string(CycleBand b) {
    switch (b) {
        case CycleBand::seasonal_yearly: return "seasonal/yearly";
        case CycleBand::kitchin: return "kitchin";
        case CycleBand::juglar: return "juglar";
        case CycleBand::kuznets: return "kuznets";
        case CycleBand::kondratieff: return "kondratieff";
        default: return "unclassified";
    }
}

CycleClassification classify_cycles(double period_years) {
    if (period_years <= 0.0) throw ConfigError("classify_cycles: period must be positive");
    CycleClassification c;
    c.period_years = period_years;
    struct Band {
        CycleBand band;
        double lo, hi;
        bool hi_inclusive;
    };
    static constexpr Band bands[] = {
        {CycleBand::seasonal_yearly, 0.2, 1.5, false},
        {CycleBand::kitchin, 2.5, 4.5, false},
        {CycleBand::juglar, 4.5, 11.0, false},
        {CycleBand::kuznets, 15.0, 25.0, true},
        {CycleBand::kondratieff, 40.0, 60.0, true},
    };
    for (const Band& b : bands) {
        bool in = period_years >= b.lo &&
                  (b.hi_inclusive ? period_years <= b.hi : period_years < b.hi);
        if (in) {
            c.band = b.band;
            c.band_lo = b.lo;
            c.band_hi = b.hi;
            return c;
        }
    }
    return c;
}

namespace {

double json_safe(double v) { return std::isfinite(v) ? v : 0.0; }

ordered_json test_json(const TestResult& t) {
    ordered_json j;
    j["test"] = t.test_name;
    j["statistic"] = json_safe(t.statistic);
    j["p_value"] = json_safe(t.p_value);
    j["p_clamped"] = t.p_clamped;
    j["null_hypothesis"] = t.null_hypothesis;
    ordered_json aux = ordered_json::object();
    for (const auto& [k, v] : t.auxiliary) aux[k] = json_safe(v);
    j["auxiliary"] = aux;
    return j;
}

ordered_json unitroot_json(const UnitRootTable& t) {
    ordered_json rows = ordered_json::array();
    for (const UnitRootRow& r : t.rows) {
        ordered_json j;
        j["type"] = to_string(r.type);
        j["lag"] = r.lag;
        j["statistic"] = json_safe(r.statistic);
        j["p_value"] = r.p_value;
        j["p_clamped_low"] = r.p_clamped_low;
        j["p_clamped_high"] = r.p_clamped_high;
        rows.push_back(j);
    }
    ordered_json out;
    out["test"] = t.test_name;
    out["rows"] = rows;
    return out;
}

void write_component_csv(const std::string& dir, const std::string& stem,
                         const MonthlySeries& s, const Decomposition& d) {
    std::ofstream f(std::filesystem::path(dir) / (stem + ".csv"));
    f << "date,observed,seasonal,trend,remainder\n";
    f.precision(10);
    for (Eigen::Index i = 0; i < s.size(); ++i)
        f << decimal_year(s, i) << ',' << s.values[i] << ',' << d.seasonal[i] << ','
          << d.trend[i] << ',' << d.remainder[i] << '\n';
}

ordered_json analyze_series(const MonthlySeries& s, const AnalysisConfig& cfg) {
    ordered_json j;
    j["name"] = s.name;

    // descriptive
    {
        SummaryStats st = basic_stats(s);
        ordered_json d;
        d["nobs"] = static_cast<long long>(st.nobs);
        d["na_count"] = static_cast<long long>(st.na_count);
        d["minimum"] = st.minimum;
        d["maximum"] = st.maximum;
        d["q1"] = st.q1;
        d["q3"] = st.q3;
        d["mean"] = st.mean;
        d["median"] = st.median;
        d["sum"] = st.sum;
        d["se_mean"] = st.se_mean;
        d["lcl_mean"] = st.lcl_mean;
        d["ucl_mean"] = st.ucl_mean;
        d["variance"] = st.variance;
        d["stdev"] = st.stdev;
        d["skewness"] = json_safe(st.skewness);
        d["kurtosis"] = json_safe(st.kurtosis_excess);
        j["descriptive"] = d;
    }

    // distribution tests
    {
        NormalitySuite norm = normality_suite(s);
        ordered_json t;
        t["anderson_darling"] = test_json(norm.anderson_darling);
        t["cramer_von_mises"] = test_json(norm.cramer_von_mises);
        t["lilliefors"] = test_json(norm.lilliefors);
        j["normality"] = t;

        SeasonalitySuite season = seasonality_suite(s, s.frequency);
        ordered_json sj;
        sj["qs"] = test_json(season.qs);
        sj["friedman"] = test_json(season.friedman);
        sj["welch"] = test_json(season.welch);
        sj["seasonal"] = season.wo_seasonal;
        j["seasonality"] = sj;

        NonlinearitySuite nl = nonlinearity_suite(s, cfg.seed);
        ordered_json nj;
        nj["teraesvirta"] = test_json(nl.teraesvirta);
        nj["white_nn"] = test_json(nl.white_nn);
        nj["keenan"] = test_json(nl.keenan);
        nj["tsay"] = test_json(nl.tsay);
        nj["mcleod_li"] = test_json(nl.mcleod_li);
        j["nonlinearity"] = nj;
    }

    // stationarity and memory
    j["adf"] = unitroot_json(adf_test(s, cfg.max_lag));
    j["kpss"] = unitroot_json(kpss_test(s));
    j["pp"] = unitroot_json(pp_test(s));
    {
        LongMemoryEstimates lm = long_memory(s);
        ordered_json m;
        m["gph_d"] = lm.gph_d;
        m["bandwidth_m"] = lm.bandwidth_m;
        m["hurst_simple"] = lm.rs_simple;
        m["hurst_corrected"] = lm.rs_corrected;
        m["hurst_empirical"] = lm.rs_empirical;
        m["hurst_corrected_empirical"] = lm.rs_corrected_empirical;
        m["hurst_theoretical"] = lm.rs_theoretical;
        m["hurst_ml"] = lm.ml_hurst;
        j["long_memory"] = m;
    }

    // structural change
    {
        ordered_json ej = ordered_json::object();
        const EfpType types[] = {EfpType::ols_cusum, EfpType::ols_mosum, EfpType::rec_cusum,
                                 EfpType::rec_mosum};
        for (EfpType t : types) {
            EfpResult r = efp_test(s, t);
            ordered_json e;
            e["statistic"] = r.statistic;
            e["p_value"] = r.p_value;
            e["p_clamped"] = r.p_clamped;
            ej[to_string(t)] = e;
        }
        j["efp"] = ej;

        BreakpointSet bp = breakpoints(s, cfg.min_seg_frac, cfg.max_breaks);
        break_confint(s, bp);
        ordered_json b;
        b["chosen_m"] = bp.chosen_m;
        ordered_json breaks = ordered_json::array();
        for (size_t k = 0; k < bp.break_indices.size(); ++k) {
            ordered_json one;
            one["index"] = static_cast<long long>(bp.break_indices[k]);
            one["date"] = bp.break_dates[k];
            one["label"] = month_label(s, bp.break_indices[k]);
            one["ci_lower"] = bp.conf_intervals[k].lower;
            one["ci_upper"] = bp.conf_intervals[k].upper;
            breaks.push_back(one);
        }
        b["breaks"] = breaks;
        b["rss_by_m"] = bp.rss_by_m;
        b["bic_by_m"] = bp.bic_by_m;
        j["breakpoints"] = b;
    }

    // decomposition
    {
        Decomposition stl = stl_decompose(s, cfg.s_window);
        Decomposition rmaf = rmaf_decompose(s, cfg.period);
        ordered_json dj;
        auto summary = [](const Decomposition& d) {
            ordered_json one;
            one["seasonal_range"] = d.seasonal.maxCoeff() - d.seasonal.minCoeff();
            one["trend_min"] = d.trend.minCoeff();
            one["trend_max"] = d.trend.maxCoeff();
            one["remainder_sd"] =
                std::sqrt(d.remainder.squaredNorm() / static_cast<double>(d.remainder.size()));
            return one;
        };
        dj["stl"] = summary(stl);
        dj["rmaf"] = summary(rmaf);

        std::vector<Peak> peaks = find_peaks(rmaf.trend);
        ordered_json pk = ordered_json::array();
        for (const Peak& p : peaks) {
            ordered_json one;
            one["index"] = static_cast<long long>(p.index);
            one["date"] = decimal_year(s, p.index);
            one["label"] = month_label(s, p.index);
            one["value"] = p.value;
            pk.push_back(one);
        }
        dj["rmaf_trend_peaks"] = pk;

        if (!cfg.skip_ceemdan) {
            ImfSet imfs = ceemdan(s, cfg.ensemble_size, cfg.noise_strength, 4, 50, cfg.seed);
            ordered_json cj;
            cj["n_imfs"] = static_cast<int>(imfs.imfs.cols()) - 1;
            cj["seed"] = static_cast<long long>(imfs.seed);
            cj["early_termination"] = imfs.early_termination;
            ordered_json modes = ordered_json::array();
            for (Eigen::Index c = 0; c + 1 < imfs.imfs.cols(); ++c) {
                ExtremaCount ec = count_extrema(imfs.imfs.col(c));
                ordered_json one;
                one["zero_crossings"] = ec.zero_crossings;
                one["extrema"] = ec.extrema;
                double period_samples =
                    ec.zero_crossings > 0
                        ? 2.0 * static_cast<double>(s.size()) / ec.zero_crossings
                        : 0.0;
                one["mean_period_years"] = period_samples / s.frequency;
                modes.push_back(one);
            }
            cj["imfs"] = modes;
            j["ceemdan"] = cj;
        }

        if (!cfg.emit_csv_dir.empty()) {
            write_component_csv(cfg.emit_csv_dir, s.name + "_stl", s, stl);
            write_component_csv(cfg.emit_csv_dir, s.name + "_rmaf", s, rmaf);
        }
    }

    // spectral
    {
        j["dominant_period_samples"] = find_frequency(s);

        WaveletSpectrum w = morlet_power(s, 1.0 / s.frequency, cfg.dj);
        Eigen::Index imax;
        w.avg_power.maxCoeff(&imax);
        ordered_json sj;
        sj["n_scales"] = static_cast<long long>(w.periods.size());
        sj["peak_period_years"] = w.periods[imax];
        CycleClassification cc = classify_cycles(w.periods[imax]);
        ordered_json band;
        band["period_years"] = cc.period_years;
        band["band"] = to_string(cc.band);
        band["band_lo"] = cc.band_lo;
        band["band_hi"] = cc.band_hi;
        sj["classification"] = band;
        j["wavelet"] = sj;
    }
    return j;
}

}  // namespace

std::string run_report(const AnalysisConfig& cfg) {
    if (cfg.input_path.empty()) throw ConfigError("run_report: input path is required");
    SeriesBundle b =
        ingest_csv_file(cfg.input_path, cfg.start_year, cfg.start_month, cfg.frequency);

    std::vector<const MonthlySeries*> picked;
    if (cfg.column.empty()) {
        picked = {&b.pmn, &b.pma, &b.total};
    } else if (cfg.column == "PMN") {
        picked = {&b.pmn};
    } else if (cfg.column == "PMA") {
        picked = {&b.pma};
    } else if (cfg.column == "TotalMD") {
        picked = {&b.total};
    } else {
        throw ConfigError("run_report: unknown column '" + cfg.column + "'");
    }

    if (!cfg.emit_csv_dir.empty()) std::filesystem::create_directories(cfg.emit_csv_dir);

    ordered_json root;
    root["input"] = cfg.input_path;
    root["start"] = std::to_string(cfg.start_year) + "-" +
                    (cfg.start_month < 10 ? "0" : "") + std::to_string(cfg.start_month);
    root["frequency"] = cfg.frequency;
    root["alpha"] = cfg.alpha;
    root["seed"] = static_cast<long long>(cfg.seed);
    ordered_json series = ordered_json::array();
    for (const MonthlySeries* s : picked) series.push_back(analyze_series(*s, cfg));
    root["series"] = series;

    std::string text = root.dump(2);
    text.push_back('\n');
    if (!cfg.out_path.empty()) {
        std::ofstream f(cfg.out_path);
        if (!f) throw ConfigError("run_report: cannot open output path " + cfg.out_path);
        f << text;
    }
    return text;
}

}  // namespace tsc
