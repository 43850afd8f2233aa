#include <cmath>
#include <string>

#include "ladder/cli.hpp"
#include "ladder/errors.hpp"
#include "ladder/model_families.hpp"

namespace ladder::cli {

namespace {

double number(const Json &config, const char *key) {
    if(!config.contains(key)) throw ParameterError(std::string("model: missing \"") + key + "\"");
    const auto &v = config.at(key);
    if(!v.is_number()) throw ParameterError(std::string("model: \"") + key + "\" must be a number");
    return v.get<double>();
}

double number_or(const Json &config, const char *key, double fallback) { return config.contains(key) ? number(config, key) : fallback; }

int sign_or(const Json &config, const char *key) {
    const double v = number_or(config, key, 1.0);
    if(v != 1.0 && v != -1.0) throw ParameterError(std::string("model: \"") + key + "\" must be +1 or -1");
    return static_cast<int>(v);
}

Family family_from_string(const std::string &name) {
    if(name == "so2" || name == "general_so2") return Family::general_so2;
    if(name == "spin_flip") return Family::spin_flip;
    if(name == "class_a") return Family::class_a;
    if(name == "class_b") return Family::class_b;
    if(name == "custom") return Family::custom;
    throw ParameterError("model: unknown family '" + name + "'");
}

LadderMPS custom_model(const Json &config) {
    if(!config.contains("matrices") || !config.at("matrices").is_array() || config.at("matrices").size() != 4)
        throw ParameterError("model: custom family needs \"matrices\", four square matrices");
    LadderMPS mps;
    mps.family = Family::custom;
    for(std::size_t i = 0; i < 4; ++i) {
        const auto &rows = config.at("matrices").at(i);
        const auto  d    = static_cast<Eigen::Index>(rows.size());
        if(d == 0) throw ParameterError("model: empty matrix");
        mps.A[i].resize(d, d);
        for(Eigen::Index r = 0; r < d; ++r) {
            const auto &row = rows.at(static_cast<std::size_t>(r));
            if(!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) throw DimensionError("model: matrices must be square");
            for(Eigen::Index c = 0; c < d; ++c) mps.A[i](r, c) = row.at(static_cast<std::size_t>(c)).get<double>();
        }
        if(i > 0 && mps.A[i].rows() != mps.A[0].rows()) throw DimensionError("model: matrices must share one bond dimension");
    }
    return mps;
}

} // namespace

Family parse_family(const std::string &name) { return family_from_string(name); }

LadderMPS model_from_json(const Json &config) {
    if(!config.is_object()) throw ParameterError("model: expected a JSON object");
    if(!config.contains("family") || !config.at("family").is_string()) throw ParameterError("model: missing \"family\"");
    switch(family_from_string(config.at("family").get<std::string>())) {
        case Family::general_so2:
            return build_so2(number(config, "a"), number(config, "b"), number(config, "a_prime"), number(config, "b_prime"), number(config, "g"));
        case Family::spin_flip: {
            double a = 0.0, b = 0.0;
            if(config.contains("mu_t")) {
                const double mu = number(config, "mu_t");
                if(mu < 0.0 || mu > 1.0) throw ParameterError("model: mu_t must lie in [0, 1]");
                const double phi = 0.5 * std::asin(mu);
                a                = std::cos(phi);
                b                = std::sin(phi);
            } else {
                a = number(config, "a");
                b = number(config, "b");
            }
            const double g = config.contains("x") ? number(config, "x") * (a * a + b * b) : number(config, "g");
            return build_spin_flip(a, b, g, sign_or(config, "epsilon"));
        }
        case Family::class_a: {
            const double a = number(config, "a");
            const double g = config.contains("x") ? number(config, "x") * 2.0 * a * a : number(config, "g");
            return build_class_a(a, g, sign_or(config, "epsilon"), sign_or(config, "sigma"));
        }
        case Family::class_b: return build_class_b(number(config, "u"));
        case Family::custom: return custom_model(config);
    }
    throw ParameterError("model: unsupported family");
}

Json model_to_json(const LadderMPS &mps) {
    const auto &p   = mps.params;
    Json        out = {{"family", std::string(to_string(mps.family))}};
    switch(mps.family) {
        case Family::class_b: out["u"] = p.u; break;
        case Family::custom: break;
        default:
            out["a"]       = p.a;
            out["b"]       = p.b;
            out["a_prime"] = p.a_prime;
            out["b_prime"] = p.b_prime;
            out["g"]       = p.g;
            out["epsilon"] = p.epsilon;
            out["sigma"]   = p.sigma;
    }
    Json matrices = Json::array();
    for(const auto &a : mps.A) {
        Json rows = Json::array();
        for(Eigen::Index r = 0; r < a.rows(); ++r) {
            Json row = Json::array();
            for(Eigen::Index c = 0; c < a.cols(); ++c) row.push_back(a(r, c));
            rows.push_back(row);
        }
        matrices.push_back(rows);
    }
    out["matrices"] = matrices;
    if(!mps.warnings.empty()) out["warnings"] = mps.warnings;
    return out;
}

WeightSet weights_from_json(const Json &config) {
    if(config.contains("rotational")) {
        const auto &r = config.at("rotational");
        return rotational_weights(number_or(r, "mu", 0.0), number_or(r, "nu", 0.0), number_or(r, "xi", 0.0), number_or(r, "eta", 0.0));
    }
    const Json &w = config.contains("weights") ? config.at("weights") : config;
    WeightSet   out;
    double     *fields[] = {&out.mu22, &out.mu21, &out.mu20, &out.mu11, &out.mu10, &out.mu1p1, &out.mu1p0, &out.mu00};
    for(std::size_t i = 0; i < 8; ++i) *fields[i] = number_or(w, WeightSet::keys()[i], 0.0);
    return out;
}

Json weights_to_json(const WeightSet &weights) {
    Json       out    = Json::object();
    const auto values = weights.values();
    for(std::size_t i = 0; i < values.size(); ++i) out[WeightSet::keys()[i]] = values[i];
    return out;
}

} // namespace ladder::cli
