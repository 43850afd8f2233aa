#include <cmath>
#include <cstdio>
#include <sstream>

#include "ladder/cli.hpp"
#include "ladder/errors.hpp"

namespace ladder::cli {

std::string format_double(double value) {
    if(std::isnan(value)) return "nan";
    if(std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if(value == 0.0) return "0"; // folds -0
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

Json envelope(const std::string &command, const Json &inputs, const Json &results) {
    return {{"version", kReportVersion}, {"command", command}, {"inputs", inputs}, {"results", results}};
}

std::vector<double> GridSpec::points() const {
    if(!(step > 0.0)) throw ParameterError("grid: step must be positive");
    if(!(min < max)) throw ParameterError("grid: min must be below max");
    const double span  = (max - min) / step;
    const auto   count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    std::vector<double> out(count);
    for(std::size_t i = 0; i < count; ++i) {
        const double v = min + static_cast<double>(i) * step;
        out[i]         = std::abs(v) < 1e-12 * step ? 0.0 : v;
    }
    return out;
}

GridSpec parse_grid(const std::string &text) {
    GridSpec    grid;
    char        tail = 0;
    const int   read = std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &grid.min, &grid.max, &grid.step, &tail);
    if(read != 3) throw ParameterError("grid: expected min:max:step, got '" + text + "'");
    (void)grid.points(); // validates
    return grid;
}

std::string to_csv(const ScanTable &table) {
    std::ostringstream out;
    out << "family";
    for(const auto &c : table.columns) out << ',' << c;
    out << ",degenerate_top\n";
    for(const auto &row : table.rows) {
        out << row.family;
        for(double v : row.values) out << ',' << format_double(v);
        out << ',' << (row.degenerate_top ? "true" : "false") << '\n';
    }
    return out.str();
}

Json to_json(const ScanTable &table) {
    Json rows = Json::array();
    for(const auto &row : table.rows) {
        Json r = {{"family", row.family}, {"degenerate_top", row.degenerate_top}};
        for(std::size_t c = 0; c < table.columns.size(); ++c) {
            const double v = row.values[c];
            if(std::isfinite(v)) r[table.columns[c]] = v;
            else r[table.columns[c]] = format_double(v);
        }
        rows.push_back(r);
    }
    return {{"columns", table.columns}, {"rows", rows}};
}

} // namespace ladder::cli
