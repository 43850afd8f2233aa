#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ladder/mps_core.hpp"
#include "ladder/parent_hamiltonian.hpp"

namespace ladder::cli {

using Json = nlohmann::json;

inline constexpr const char *kReportVersion = "1.0";

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// {"family": "class_a", "a": 1, "g": 0.7, "epsilon": 1, "sigma": 1}; class_a and spin_flip
/// accept "x" in place of "g", spin_flip accepts "mu_t" in place of "a", "b".
LadderMPS model_from_json(const Json &config);
Family    parse_family(const std::string &name); // so2, spin_flip, class_a, class_b, custom
Json      model_to_json(const LadderMPS &mps);

/// Either explicit "mu22".."mu00" keys or {"rotational": {"mu", "nu", "xi", "eta"}}.
WeightSet weights_from_json(const Json &config);
Json      weights_to_json(const WeightSet &weights);

/// 17 significant digits, "inf"/"-inf"/"nan" for non-finite values.
std::string format_double(double value);

/// {version, command, inputs, results}.
Json envelope(const std::string &command, const Json &inputs, const Json &results);

struct GridSpec {
    double min  = 0.0;
    double max  = 0.0;
    double step = 0.0;

    /// min + i step for i = 0.. while <= max (with a 1e-9 step slack); values within 1e-12 step
    /// of zero are snapped to zero.
    [[nodiscard]] std::vector<double> points() const;
};

/// "min:max:step".
GridSpec parse_grid(const std::string &text);

struct ScanSpec {
    Family                   family = Family::class_a;
    std::string              sweep; // x, g or u
    GridSpec                 grid;
    Json                     fixed = Json::object();
    std::vector<std::string> outputs; // S, C, zz, nn, xi_z, xi_n, lambda
    std::string              format = "csv";
    std::string              out; // empty: standard output
};

ScanSpec scan_spec_from_json(const Json &config);

struct ScanRow {
    std::string         family;
    std::vector<double> values; // one per numeric column
    bool                degenerate_top = false;
};

struct ScanTable {
    std::vector<std::string> columns; // numeric columns between "family" and "degenerate_top"
    std::vector<ScanRow>     rows;
};

/// Evaluates the grid on `threads` workers (0: hardware concurrency); rows stay in grid order.
ScanTable run_scan(const ScanSpec &spec, unsigned threads = 0);
std::string to_csv(const ScanTable &table);
Json        to_json(const ScanTable &table);

/// Full invariant suite on one model; results carry "checks" and "passed".
Json verify_report(const Json &config);

/// Formula and expansion couplings, basis, deltas and the N = 4 frustration-free residual.
Json hamiltonian_report(const Json &config);

/// Transfer spectrum and correlation lengths.
Json spectrum_report(const Json &config);

/// Dense state summary; writes the binary dump when "out" is set.
Json state_report(const Json &config);

/// Entry point behind the `ladder` executable.
int run(int argc, char **argv, std::ostream &out, std::ostream &err);

} // namespace ladder::cli
