// Command-line front end: one verb per analysis stage plus a full report.
#include "tscycle/csv.hpp"
#include "tscycle/decompose.hpp"
#include "tscycle/descriptive.hpp"
#include "tscycle/dist_tests.hpp"
#include "tscycle/longmemory.hpp"
#include "tscycle/report.hpp"
#include "tscycle/spectral.hpp"
#include "tscycle/structural.hpp"
#include "tscycle/unitroot.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using tsc::AnalysisConfig;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitNumeric = 4;

void parse_start(const std::string& start, AnalysisConfig& cfg) {
    if (start.size() != 7 || start[4] != '-')
        throw tsc::ConfigError("--start must be formatted YYYY-MM");
    try {
        cfg.start_year = std::stoi(start.substr(0, 4));
        cfg.start_month = std::stoi(start.substr(5, 2));
    } catch (const std::exception&) {
        throw tsc::ConfigError("--start must be formatted YYYY-MM");
    }
    if (cfg.start_month < 1 || cfg.start_month > 12)
        throw tsc::ConfigError("--start month must lie in 01..12");
}

std::vector<const tsc::MonthlySeries*> pick(const tsc::SeriesBundle& b,
                                            const std::string& column) {
    if (column.empty()) return {&b.pmn, &b.pma, &b.total};
    if (column == "PMN") return {&b.pmn};
    if (column == "PMA") return {&b.pma};
    if (column == "TotalMD") return {&b.total};
    throw tsc::ConfigError("unknown column '" + column + "' (PMN, PMA or TotalMD)");
}

ordered_json test_json(const tsc::TestResult& t) {
    ordered_json j;
    j["test"] = t.test_name;
    j["statistic"] = t.statistic;
    j["p_value"] = t.p_value;
    j["p_clamped"] = t.p_clamped;
    return j;
}

ordered_json table_json(const tsc::UnitRootTable& t) {
    ordered_json rows = ordered_json::array();
    for (const tsc::UnitRootRow& r : t.rows) {
        ordered_json j;
        j["type"] = tsc::to_string(r.type);
        j["lag"] = r.lag;
        j["statistic"] = r.statistic;
        j["p_value"] = r.p_value;
        j["p_clamped_low"] = r.p_clamped_low;
        j["p_clamped_high"] = r.p_clamped_high;
        rows.push_back(j);
    }
    return rows;
}

void emit(const ordered_json& j, const std::string& out_path) {
    std::string text = j.dump(2);
    text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw tsc::ConfigError("cannot open output path " + out_path);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monthly time-series periodicity analysis toolkit"};
    app.require_subcommand(1);

    AnalysisConfig cfg;
    std::string start = "1976-05";
    std::string verb;
    for (const char* name : {"describe", "tests", "unitroot", "longmemory", "breaks",
                             "decompose", "spectrum", "peaks", "report"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input", cfg.input_path, "input CSV path")->required();
        sub->add_option("--column", cfg.column, "PMN, PMA or TotalMD (default: all)");
        sub->add_option("--start", start, "first observation, YYYY-MM");
        sub->add_option("--freq", cfg.frequency, "samples per year");
        sub->add_option("--seed", cfg.seed, "RNG seed for seeded procedures");
        sub->add_option("--alpha", cfg.alpha, "significance level");
        sub->add_option("--out", cfg.out_path, "write JSON here instead of stdout");
        sub->add_option("--emit-csv", cfg.emit_csv_dir, "directory for CSV side files");
        sub->add_flag("--skip-ceemdan", cfg.skip_ceemdan, "skip the CEEMDAN ensemble");
        sub->callback([&verb, name] { verb = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        parse_start(start, cfg);
        if (cfg.frequency < 2) throw tsc::ConfigError("--freq must be at least 2");
        if (cfg.alpha <= 0.0 || cfg.alpha >= 1.0)
            throw tsc::ConfigError("--alpha must lie in (0, 1)");

        if (verb == "report") {
            std::string text = tsc::run_report(cfg);
            if (cfg.out_path.empty()) std::cout << text;
            return 0;
        }

        tsc::SeriesBundle bundle =
            tsc::ingest_csv_file(cfg.input_path, cfg.start_year, cfg.start_month,
                                 cfg.frequency);
        ordered_json root;
        root["verb"] = verb;
        ordered_json series = ordered_json::array();
        for (const tsc::MonthlySeries* s : pick(bundle, cfg.column)) {
            ordered_json j;
            j["name"] = s->name;
            if (verb == "describe") {
                tsc::SummaryStats st = tsc::basic_stats(*s);
                j["nobs"] = static_cast<long long>(st.nobs);
                j["minimum"] = st.minimum;
                j["maximum"] = st.maximum;
                j["q1"] = st.q1;
                j["q3"] = st.q3;
                j["mean"] = st.mean;
                j["median"] = st.median;
                j["sum"] = st.sum;
                j["se_mean"] = st.se_mean;
                j["lcl_mean"] = st.lcl_mean;
                j["ucl_mean"] = st.ucl_mean;
                j["variance"] = st.variance;
                j["stdev"] = st.stdev;
                j["skewness"] = st.skewness;
                j["kurtosis"] = st.kurtosis_excess;
            } else if (verb == "tests") {
                tsc::NormalitySuite norm = tsc::normality_suite(*s);
                j["anderson_darling"] = test_json(norm.anderson_darling);
                j["cramer_von_mises"] = test_json(norm.cramer_von_mises);
                j["lilliefors"] = test_json(norm.lilliefors);
                tsc::SeasonalitySuite season = tsc::seasonality_suite(*s, s->frequency);
                j["qs"] = test_json(season.qs);
                j["friedman"] = test_json(season.friedman);
                j["welch"] = test_json(season.welch);
                j["seasonal"] = season.wo_seasonal;
                tsc::NonlinearitySuite nl = tsc::nonlinearity_suite(*s, cfg.seed);
                j["teraesvirta"] = test_json(nl.teraesvirta);
                j["white_nn"] = test_json(nl.white_nn);
                j["keenan"] = test_json(nl.keenan);
                j["tsay"] = test_json(nl.tsay);
                j["mcleod_li"] = test_json(nl.mcleod_li);
            } else if (verb == "unitroot") {
                j["adf"] = table_json(tsc::adf_test(*s, cfg.max_lag));
                j["kpss"] = table_json(tsc::kpss_test(*s));
                j["pp"] = table_json(tsc::pp_test(*s));
            } else if (verb == "longmemory") {
                tsc::LongMemoryEstimates lm = tsc::long_memory(*s);
                j["gph_d"] = lm.gph_d;
                j["bandwidth_m"] = lm.bandwidth_m;
                j["hurst_simple"] = lm.rs_simple;
                j["hurst_corrected"] = lm.rs_corrected;
                j["hurst_empirical"] = lm.rs_empirical;
                j["hurst_corrected_empirical"] = lm.rs_corrected_empirical;
                j["hurst_theoretical"] = lm.rs_theoretical;
                j["hurst_ml"] = lm.ml_hurst;
            } else if (verb == "breaks") {
                const tsc::EfpType types[] = {tsc::EfpType::ols_cusum, tsc::EfpType::ols_mosum,
                                              tsc::EfpType::rec_cusum, tsc::EfpType::rec_mosum};
                for (tsc::EfpType t : types) {
                    tsc::EfpResult r = tsc::efp_test(*s, t);
                    ordered_json e;
                    e["statistic"] = r.statistic;
                    e["p_value"] = r.p_value;
                    e["p_clamped"] = r.p_clamped;
                    j[tsc::to_string(t)] = e;
                }
                tsc::BreakpointSet bp =
                    tsc::breakpoints(*s, cfg.min_seg_frac, cfg.max_breaks);
                tsc::break_confint(*s, bp);
                j["chosen_m"] = bp.chosen_m;
                ordered_json breaks = ordered_json::array();
                for (size_t k = 0; k < bp.break_indices.size(); ++k) {
                    ordered_json one;
                    one["index"] = static_cast<long long>(bp.break_indices[k]);
                    one["date"] = bp.break_dates[k];
                    one["label"] = tsc::month_label(*s, bp.break_indices[k]);
                    one["ci_lower"] = bp.conf_intervals[k].lower;
                    one["ci_upper"] = bp.conf_intervals[k].upper;
                    breaks.push_back(one);
                }
                j["breaks"] = breaks;
                j["bic_by_m"] = bp.bic_by_m;
            } else if (verb == "decompose") {
                tsc::Decomposition stl = tsc::stl_decompose(*s, cfg.s_window);
                tsc::Decomposition rmaf = tsc::rmaf_decompose(*s, cfg.period);
                auto summary = [&](const tsc::Decomposition& d) {
                    ordered_json one;
                    one["seasonal_range"] = d.seasonal.maxCoeff() - d.seasonal.minCoeff();
                    one["trend_min"] = d.trend.minCoeff();
                    one["trend_max"] = d.trend.maxCoeff();
                    one["max_identity_error"] =
                        (s->values - d.seasonal - d.trend - d.remainder)
                            .cwiseAbs()
                            .maxCoeff();
                    return one;
                };
                j["stl"] = summary(stl);
                j["rmaf"] = summary(rmaf);
                if (!cfg.skip_ceemdan) {
                    tsc::ImfSet imfs = tsc::ceemdan(*s, cfg.ensemble_size,
                                                    cfg.noise_strength, 4, 50, cfg.seed);
                    j["ceemdan_imfs"] = static_cast<int>(imfs.imfs.cols()) - 1;
                    j["ceemdan_early_termination"] = imfs.early_termination;
                }
                if (!cfg.emit_csv_dir.empty()) {
                    std::filesystem::create_directories(cfg.emit_csv_dir);
                    auto dump = [&](const char* tag, const tsc::Decomposition& d) {
                        std::ofstream f(std::filesystem::path(cfg.emit_csv_dir) /
                                        (s->name + "_" + tag + ".csv"));
                        f << "date,observed,seasonal,trend,remainder\n";
                        f.precision(10);
                        for (Eigen::Index i = 0; i < s->size(); ++i)
                            f << tsc::decimal_year(*s, i) << ',' << s->values[i] << ','
                              << d.seasonal[i] << ',' << d.trend[i] << ',' << d.remainder[i]
                              << '\n';
                    };
                    dump("stl", stl);
                    dump("rmaf", rmaf);
                }
            } else if (verb == "spectrum") {
                j["dominant_period_samples"] = tsc::find_frequency(*s);
                tsc::WaveletSpectrum w =
                    tsc::morlet_power(*s, 1.0 / s->frequency, cfg.dj);
                Eigen::Index imax;
                w.avg_power.maxCoeff(&imax);
                j["peak_period_years"] = w.periods[imax];
                tsc::CycleClassification cc = tsc::classify_cycles(w.periods[imax]);
                j["cycle_band"] = tsc::to_string(cc.band);
            } else if (verb == "peaks") {
                tsc::Decomposition rmaf = tsc::rmaf_decompose(*s, cfg.period);
                ordered_json pk = ordered_json::array();
                for (const tsc::Peak& p : tsc::find_peaks(rmaf.trend)) {
                    ordered_json one;
                    one["index"] = static_cast<long long>(p.index);
                    one["date"] = tsc::decimal_year(*s, p.index);
                    one["label"] = tsc::month_label(*s, p.index);
                    one["value"] = p.value;
                    pk.push_back(one);
                }
                j["trend_peaks"] = pk;
            }
            series.push_back(j);
        }
        root["series"] = series;
        emit(root, cfg.out_path);
        return 0;
    } catch (const tsc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const tsc::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const tsc::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
}
