#include "tscycle/csv.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace tsc {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        // trim surrounding whitespace and CR
        size_t a = cell.find_first_not_of(" \t\r");
        size_t b = cell.find_last_not_of(" \t\r");
        out.push_back(a == std::string::npos ? "" : cell.substr(a, b - a + 1));
    }
    return out;
}

double parse_cell(const std::string& cell, size_t row, size_t col) {
    try {
        size_t pos = 0;
        double v = std::stod(cell, &pos);
        if (pos != cell.size() || !std::isfinite(v) || v < 0.0)
            throw std::invalid_argument("bad");
        return v;
    } catch (...) {
        throw DataError("csv: malformed cell at row " + std::to_string(row) + ", column " +
                        std::to_string(col) + ": '" + cell + "'");
    }
}

}  // namespace

SeriesBundle ingest_csv(const std::string& content, int start_year, int start_month,
                        int frequency) {
    if (start_month < 1 || start_month > 12) throw ConfigError("csv: invalid start month");
    if (frequency <= 0) throw ConfigError("csv: invalid frequency");

    std::stringstream ss(content);
    std::string line;
    if (!std::getline(ss, line)) throw DataError("csv: empty input");
    std::vector<std::string> header = split_line(line);
    // An optional leading date column is accepted; values come from the last
    // three columns, which must be named PMN, PMA, TotalMD.
    if (header.size() < 3) throw DataError("csv: header must name three columns");
    size_t offset = header.size() - 3;
    if (header[offset] != "PMN" || header[offset + 1] != "PMA" ||
        header[offset + 2] != "TotalMD")
        throw DataError("csv: header must end with PMN,PMA,TotalMD");

    std::vector<double> pmn, pma, tot;
    size_t row = 1;
    while (std::getline(ss, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ++row;
        std::vector<std::string> cells = split_line(line);
        if (cells.size() != header.size())
            throw DataError("csv: row " + std::to_string(row) + " has " +
                            std::to_string(cells.size()) + " cells, expected " +
                            std::to_string(header.size()));
        double a = parse_cell(cells[offset], row, offset + 1);
        double b = parse_cell(cells[offset + 1], row, offset + 2);
        double c = parse_cell(cells[offset + 2], row, offset + 3);
        if (a + b != c)
            throw DataError("csv: row " + std::to_string(row) +
                            " violates TotalMD == PMN + PMA");
        pmn.push_back(a);
        pma.push_back(b);
        tot.push_back(c);
    }
    if (pmn.size() < 24) throw DataError("csv: need at least 24 rows, got " +
                                         std::to_string(pmn.size()));

    auto make = [&](const char* name, const std::vector<double>& v) {
        MonthlySeries s;
        s.name = name;
        s.values = Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
        s.start_year = start_year;
        s.start_month = start_month;
        s.frequency = frequency;
        return s;
    };
    return {make("PMN", pmn), make("PMA", pma), make("TotalMD", tot)};
}

SeriesBundle ingest_csv_file(const std::string& path, int start_year, int start_month,
                             int frequency) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("csv: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ingest_csv(ss.str(), start_year, start_month, frequency);
}

std::string to_csv(const SeriesBundle& b) {
    std::ostringstream out;
    out << "PMN,PMA,TotalMD\n";
    for (Eigen::Index i = 0; i < b.pmn.size(); ++i) {
        out << b.pmn.values[i] << ',' << b.pma.values[i] << ',' << b.total.values[i] << '\n';
    }
    return out.str();
}

}  // namespace tsc
