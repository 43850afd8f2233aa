#include <cmath>

#include "ladder/cli.hpp"
#include "ladder/errors.hpp"
#include "ladder/exact_oracle.hpp"
#include "ladder/model_families.hpp"

namespace ladder::cli {

namespace {

constexpr std::size_t kResidualRungs = 4;

Json couplings_to_json(const CouplingSet &c) {
    Json out = Json::object();
    for(std::size_t k = 0; k < kCouplingCount; ++k) out["J" + std::to_string(k)] = c.J[k];
    return out;
}

} // namespace

Json hamiltonian_report(const Json &config) {
    Json model = config;
    if(!model.contains("family")) model["family"] = "class_a";
    const LadderMPS mps = model_from_json(model);
    if(mps.family != Family::class_a) throw ParameterError("hamiltonian: only class_a models have the tabulated multiplet basis");
    const auto &q = mps.params;

    const WeightSet weights = weights_from_json(config);
    weights.validate();

    const MultipletBasis   basis     = multiplet_basis(q.a, q.g, q.epsilon, q.sigma);
    const LocalHamiltonian local     = local_h(basis, weights);
    const PauliExpansion   expansion = pauli_expand(local.h);
    const CouplingSet      formula   = coupling_formulas(q.a, q.g, q.epsilon, q.sigma, weights);

    CouplingSet deltas;
    for(std::size_t k = 0; k < kCouplingCount; ++k) deltas.J[k] = formula.J[k] - expansion.couplings.J[k];

    Json basis_json = Json::array();
    for(const auto &v : basis.vectors) {
        std::vector<double> entries(v.vector.data(), v.vector.data() + v.vector.size());
        basis_json.push_back({{"label", v.label.name()}, {"raw_norm", v.raw_norm}, {"vector", entries}});
    }

    const double residual = local_hamiltonian_residual(local.h, build_state(mps, kResidualRungs).normalized());
    const Json   params   = {{"a", q.a}, {"g", q.g}, {"epsilon", q.epsilon}, {"sigma", q.sigma}};

    return {{"couplings",
             {{"formula", couplings_to_json(formula)},
              {"expansion", couplings_to_json(expansion.couplings)},
              {"provenance",
               {{"method", "pauli_expand of 8h against the 14-coupling ladder structure; formula column evaluates the closed-form table"},
                {"params", params},
                {"weights", weights_to_json(weights)},
                {"deltas", couplings_to_json(deltas)}}}}},
            {"structural_residual", expansion.structural_residual},
            {"null_dimension", null_space(constraint_matrix(mps)).size()},
            {"frustration_free_residual_N4", residual},
            {"basis", basis_json}};
}

} // namespace ladder::cli
