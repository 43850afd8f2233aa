#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "ladder/cli.hpp"
#include "ladder/errors.hpp"
#include "ladder/rung_observables.hpp"

namespace ladder::cli {

namespace {

const std::vector<std::string> kAllOutputs{"S", "C", "zz", "nn", "xi_z", "xi_n", "lambda"};

std::string default_sweep(Family family) { return family == Family::class_b ? "u" : "x"; }

std::vector<std::string> column_names(const ScanSpec &spec) {
    std::vector<std::string> cols{"a", "b", "g", "epsilon", "sigma", "x", "u"};
    for(const auto &o : spec.outputs) {
        if(o == "S") cols.emplace_back("S_bits");
        else if(o == "lambda")
            for(int i = 1; i <= 4; ++i) cols.push_back("lambda_" + std::to_string(i));
        else cols.push_back(o);
    }
    return cols;
}

ScanRow evaluate(const ScanSpec &spec, double value) {
    Json config          = spec.fixed;
    config["family"]     = std::string(to_string(spec.family));
    config[spec.sweep]   = value;
    if(spec.family == Family::class_a && !config.contains("a")) config["a"] = 1.0;
    if(spec.family == Family::spin_flip && !config.contains("a") && !config.contains("mu_t")) config["mu_t"] = 1.0;

    const LadderMPS mps      = model_from_json(config);
    const auto      p        = spin_flip_params(mps);
    const auto      transfer = transfer_matrix(mps);
    const auto      report   = correlation_report(p);
    const auto      intra    = intra_rung_closed_form(p);

    ScanRow row;
    row.family         = std::string(to_string(mps.family));
    row.degenerate_top = transfer.degenerate_top;
    row.values         = {mps.params.a, mps.params.b, mps.params.g, double(mps.params.epsilon), double(mps.params.sigma), report.x, mps.params.u};
    for(const auto &o : spec.outputs) {
        if(o == "S") row.values.push_back(entropy_closed_form(p));
        else if(o == "C") row.values.push_back(concurrence_closed_form(p));
        else if(o == "zz") row.values.push_back(intra.zz);
        else if(o == "nn") row.values.push_back(intra.nn);
        else if(o == "xi_z") row.values.push_back(report.xi_z);
        else if(o == "xi_n") row.values.push_back(report.xi_n);
        else if(o == "lambda")
            for(std::size_t i = 0; i < 4; ++i) row.values.push_back(transfer.spectrum.eigenvalues[i].real());
    }
    return row;
}

} // namespace

ScanSpec scan_spec_from_json(const Json &config) {
    if(!config.is_object()) throw ParameterError("scan: expected a JSON object");
    ScanSpec spec;
    if(!config.contains("family")) throw ParameterError("scan: missing \"family\"");
    spec.family = parse_family(config.at("family").get<std::string>());
    if(spec.family != Family::class_a && spec.family != Family::class_b && spec.family != Family::spin_flip)
        throw ParameterError("scan: family must be class_a, class_b or spin_flip");

    spec.sweep = config.value("sweep", default_sweep(spec.family));
    const bool valid_sweep = spec.family == Family::class_b ? spec.sweep == "u" : (spec.sweep == "x" || spec.sweep == "g");
    if(!valid_sweep) throw ParameterError("scan: cannot sweep '" + spec.sweep + "' for this family");

    if(!config.contains("grid")) throw ParameterError("scan: missing \"grid\" (or --param-grid)");
    const auto &grid = config.at("grid");
    if(grid.is_string()) spec.grid = parse_grid(grid.get<std::string>());
    else spec.grid = {grid.at("min").get<double>(), grid.at("max").get<double>(), grid.at("step").get<double>()};
    (void)spec.grid.points();

    if(config.contains("fixed")) spec.fixed = config.at("fixed");
    if(!spec.fixed.is_object()) throw ParameterError("scan: \"fixed\" must be an object");
    if(spec.fixed.contains(spec.sweep)) throw ParameterError("scan: '" + spec.sweep + "' is both swept and fixed");

    spec.outputs = config.value("outputs", kAllOutputs);
    for(const auto &o : spec.outputs)
        if(std::find(kAllOutputs.begin(), kAllOutputs.end(), o) == kAllOutputs.end()) throw ParameterError("scan: unknown output '" + o + "'");
    spec.format = config.value("format", std::string("csv"));
    if(spec.format != "csv" && spec.format != "json") throw ParameterError("scan: format must be csv or json");
    spec.out = config.value("out", std::string());
    return spec;
}

ScanTable run_scan(const ScanSpec &spec, unsigned threads) {
    const auto points = spec.grid.points();
    ScanTable  table;
    table.columns = column_names(spec);
    table.rows.resize(points.size());

    std::vector<std::exception_ptr> errors(points.size());
    std::atomic<std::size_t>        next{0};
    auto                            worker = [&] {
        for(std::size_t i = next++; i < points.size(); i = next++) {
            try {
                table.rows[i] = evaluate(spec, points[i]);
            } catch(...) {
                errors[i] = std::current_exception();
            }
        }
    };

    if(threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, points.size()));
    std::vector<std::thread> pool;
    for(unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for(auto &t : pool) t.join();

    for(const auto &e : errors)
        if(e) std::rethrow_exception(e);
    return table;
}

} // namespace ladder::cli
