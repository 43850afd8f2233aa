#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ladder/cli.hpp"
#include "ladder/errors.hpp"
#include "ladder/exact_oracle.hpp"

namespace ladder::cli {

namespace {

struct Options {
    std::string              config_path;
    std::string              family;
    std::string              grid;
    std::string              sweep;
    std::string              out;
    std::string              format;
    std::vector<std::string> fixed;
    std::vector<std::string> outputs;
    std::vector<std::string> checks;
    std::size_t              n    = 0;
    std::uint64_t            seed = 0;
    bool                     n_set = false, seed_set = false;
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Json load_config(const std::string &path) {
    if(path.empty()) return Json::object();
    std::ifstream in(path);
    if(!in) throw UsageError("cannot read " + path);
    try {
        Json j = Json::parse(in);
        if(!j.is_object()) throw UsageError(path + ": top level must be a JSON object");
        return j;
    } catch(const Json::parse_error &e) {
        throw UsageError(path + ": " + e.what());
    }
}

Json scalar_value(const std::string &text) {
    try {
        return Json::parse(text);
    } catch(const Json::parse_error &) {
        return text;
    }
}

// Flags override keys of the JSON document.
Json merged_config(const Options &o, bool fixed_nested) {
    Json config = load_config(o.config_path);
    if(!o.family.empty()) config["family"] = o.family;
    if(!o.grid.empty()) config["grid"] = o.grid;
    if(!o.sweep.empty()) config["sweep"] = o.sweep;
    if(!o.out.empty()) config["out"] = o.out;
    if(!o.format.empty()) config["format"] = o.format;
    if(o.n_set) config["N"] = o.n;
    if(o.seed_set) config["seed"] = o.seed;
    if(!o.outputs.empty()) config["outputs"] = o.outputs;
    if(!o.checks.empty()) config["checks"] = o.checks;
    for(const auto &kv : o.fixed) {
        const auto eq = kv.find('=');
        if(eq == std::string::npos || eq == 0) throw UsageError("--fixed expects key=value, got '" + kv + "'");
        const std::string key = kv.substr(0, eq);
        const Json        val = scalar_value(kv.substr(eq + 1));
        if(fixed_nested) config["fixed"][key] = val;
        else config[key] = val;
    }
    return config;
}

void write_text(const std::string &path, const std::string &text, std::ostream &out) {
    if(path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if(!file) throw ParameterError("cannot write " + path);
    file << text;
    if(!file) throw ParameterError("write failed for " + path);
}

int cmd_scan(const Options &o, std::ostream &out) {
    const Json     config = merged_config(o, true);
    const ScanSpec spec   = scan_spec_from_json(config);
    const auto     table  = run_scan(spec);
    if(spec.format == "csv") write_text(spec.out, to_csv(table), out);
    else write_text(spec.out, envelope("scan", config, to_json(table)).dump(2) + "\n", out);
    return kOk;
}

int cmd_verify(const Options &o, std::ostream &out) {
    const Json config  = merged_config(o, false);
    const Json results = verify_report(config);
    write_text(config.value("out", std::string()), envelope("verify", config, results).dump(2) + "\n", out);
    return results.at("passed").get<bool>() ? kOk : kFailure;
}

int cmd_json(const Options &o, std::ostream &out, const std::string &name, Json (*report)(const Json &)) {
    const Json config = merged_config(o, false);
    Json       inputs = config;
    const bool state  = name == "state";
    const Json result = report(config);
    write_text(state ? std::string() : config.value("out", std::string()), envelope(name, inputs, result).dump(2) + "\n", out);
    return kOk;
}

} // namespace

Json spectrum_report(const Json &config) {
    const LadderMPS mps      = model_from_json(config);
    const auto      transfer = transfer_matrix(mps);
    Json            values   = Json::array();
    for(const auto &l : transfer.spectrum.eigenvalues) values.push_back({{"re", l.real()}, {"im", l.imag()}});

    Json lengths = Json::object();
    for(const char *name : {"Sz", "Sn"}) {
        if(transfer.degenerate_top) {
            lengths[name] = "undefined (degenerate top eigenvalue)";
            continue;
        }
        const auto xi = correlation_length(mps, rung_operator(name));
        if(xi.kind == CorrelationLength::Kind::finite) lengths[name] = xi.value;
        else lengths[name] = xi.kind == CorrelationLength::Kind::infinite ? "inf" : "none";
    }
    return {{"model", model_to_json(mps)}, {"eigenvalues", values}, {"degenerate_top", transfer.degenerate_top},
            {"diagonalizable", transfer.spectrum.diagonalizable}, {"correlation_length", lengths}};
}

Json state_report(const Json &config) {
    const LadderMPS  mps   = model_from_json(config);
    const auto       n     = config.value("N", std::size_t{4});
    const DenseState state = build_state(mps, n);
    Json             out   = {{"N", n}, {"dimension", state.amplitudes.size()}, {"norm_squared", state.norm() * state.norm()},
                              {"partition_norm", partition_norm(mps, n)}};
    if(n % 2 == 0) out["ghz_overlap"] = overlap(ghz_state(n), state);
    if(config.contains("out")) {
        const auto path = config.at("out").get<std::string>();
        write_state(state, path);
        out["dump"] = path;
    }
    return out;
}

int run(int argc, char **argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Spin-1/2 ladder matrix product states: scans, oracle checks and parent Hamiltonians"};
    app.require_subcommand(1);
    Options o;

    auto common = [&o](CLI::App *sub) {
        sub->add_option("config", o.config_path, "JSON configuration document");
        sub->add_option("--family", o.family, "so2, spin_flip, class_a, class_b or custom");
        sub->add_option("--out", o.out, "output path (standard output when omitted)");
        sub->add_option("--fixed", o.fixed, "key=value override, repeatable");
        sub->add_option_function<std::size_t>("--N", [&o](std::size_t n) { o.n = n; o.n_set = true; }, "rung count");
    };

    auto *scan = app.add_subcommand("scan", "sweep a family parameter and tabulate observables");
    common(scan);
    scan->add_option("--param-grid", o.grid, "min:max:step");
    scan->add_option("--sweep", o.sweep, "swept parameter: x, g or u");
    scan->add_option("--format", o.format, "csv or json");
    scan->add_option("--outputs", o.outputs, "S, C, zz, nn, xi_z, xi_n, lambda")->delimiter(',');

    auto *verify = app.add_subcommand("verify", "run every applicable invariant check on one model");
    common(verify);
    verify->add_option_function<std::uint64_t>("--seed", [&o](std::uint64_t s) { o.seed = s; o.seed_set = true; }, "seed for randomized checks");
    verify->add_option("--check", o.checks, "restrict to the named checks")->delimiter(',');

    auto *hamiltonian = app.add_subcommand("hamiltonian", "parent Hamiltonian couplings of a class A model");
    common(hamiltonian);
    auto *spectrum = app.add_subcommand("spectrum", "transfer operator spectrum and correlation lengths");
    common(spectrum);
    auto *state = app.add_subcommand("state", "dense state summary and optional binary dump");
    common(state);

    try {
        app.parse(argc, argv);
    } catch(const CLI::CallForHelp &e) {
        out << app.help();
        return kOk;
    } catch(const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if(scan->parsed()) return cmd_scan(o, out);
        if(verify->parsed()) return cmd_verify(o, out);
        if(hamiltonian->parsed()) return cmd_json(o, out, "hamiltonian", hamiltonian_report);
        if(spectrum->parsed()) return cmd_json(o, out, "spectrum", spectrum_report);
        if(state->parsed()) return cmd_json(o, out, "state", state_report);
    } catch(const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch(const Json::exception &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch(const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}

} // namespace ladder::cli
