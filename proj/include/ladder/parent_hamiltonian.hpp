#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ladder/mps_core.hpp"

namespace ladder {

/// Two-rung sites are ordered (i, j, k, l) = (rung 1 leg 1, rung 1 leg 2, rung 2 leg 1, rung 2 leg 2);
/// site i is the most significant bit of the 16-dim index.
inline constexpr int kPairDim = 16;

/// M[(alpha, beta), (ij, kl)] = (A_ij A_kl)_{alpha beta}: its null space holds every two-rung
/// vector orthogonal to the support of the two-rung reduced density matrix.
DenseMatrix constraint_matrix(const LadderMPS &mps);

/// Multiplet label |l, m> with l in {2, 1, 1', 0}.
struct MultipletLabel {
    int  l      = 0;
    bool primed = false;
    int  m      = 0;

    [[nodiscard]] std::string name() const; // e.g. "2,1", "1',-1"
    bool operator==(const MultipletLabel &) const = default;
};

struct MultipletVector {
    MultipletLabel label;
    RealVector     vector;   // unit norm
    double         raw_norm; // norm of the tabulated (unnormalized) expression
};

struct MultipletBasis {
    std::vector<MultipletVector> vectors; // 12 entries, m >= 0 first then their sigma_x^{(x)4} partners
    double                       a = 0.0, g = 0.0;
    int                          epsilon = 1, sigma = 1;

    [[nodiscard]] const MultipletVector &at(const MultipletLabel &label) const;
    /// 16 x 12 matrix of the vectors as columns.
    [[nodiscard]] RealMatrix columns() const;
};

/// The twelve class-A null vectors organized as 2 + 1 + 1' + 0 multiplets. Throws StructureError
/// naming the label if a vector is not annihilated by the constraint map to 1e-10.
MultipletBasis multiplet_basis(double a, double g, int epsilon, int sigma);

/// Nonnegative weights mu_{lm}, m >= 0; mu_{l,-m} is tied to mu_{l,m}.
struct WeightSet {
    double mu22  = 0.0;
    double mu21  = 0.0;
    double mu20  = 0.0;
    double mu11  = 0.0;
    double mu10  = 0.0;
    double mu1p1 = 0.0;
    double mu1p0 = 0.0;
    double mu00  = 0.0;

    [[nodiscard]] double weight(const MultipletLabel &label) const;
    [[nodiscard]] std::array<double, 8> values() const;
    static const std::array<const char *, 8> &keys(); // "mu22", "mu21", ...
    void validate() const;                             // throws ParameterError on negative entries
};

/// mu_{2m} = 6 mu, mu_{1m} = 2 nu, mu_{1'm} = 2 xi, mu_{00} = 2 eta.
WeightSet rotational_weights(double mu, double nu, double xi, double eta);

struct LocalHamiltonian {
    RealMatrix     h; // 16 x 16, symmetric, positive semidefinite
    MultipletBasis basis;
    WeightSet      weights;
};

/// h = sum over all 12 labels of mu_{l|m|} |l,m><l,m|; each m = 0 projector enters once.
LocalHamiltonian local_h(const MultipletBasis &basis, const WeightSet &weights);

/// H = sum_{l=1..N} h_{l,l+1} with periodic wrap, 2 <= N <= 6.
RealMatrix embed_global(const RealMatrix &h, std::size_t n_rungs);
/// H psi without forming H; any N with 4^N amplitudes.
std::vector<double> apply_global(const RealMatrix &h, std::size_t n_rungs, const std::vector<double> &psi);

/// Pauli string on the four two-rung sites; index = 64 p_i + 16 p_j + 4 p_k + p_l with p in {I, X, Y, Z}.
std::string pauli_name(std::size_t index);
/// tr(op P) / 16 for all 256 strings.
std::array<double, 256> pauli_coefficients(const RealMatrix &op);

inline constexpr std::size_t kCouplingCount = 14;

struct CouplingSet {
    std::array<double, kCouplingCount> J{};
};

/// The local operator carrying coupling J_k (unit coefficient) in the 8h normalization.
RealMatrix coupling_operator(std::size_t k);
/// sum_k J_k coupling_operator(k).
RealMatrix reassemble(const CouplingSet &couplings);

struct PauliExpansion {
    CouplingSet                                 couplings;
    std::array<double, 256>                     coefficients{}; // of 8h
    double                                      structural_residual = 0.0;
    std::vector<std::pair<std::string, double>> residual_terms; // strings above tolerance
};

/// Expands 8h in Pauli strings and fits the fourteen-coupling ladder structure. Throws
/// StructureError when a coefficient outside the structure exceeds `tol`.
PauliExpansion pauli_expand(const RealMatrix &h, double tol = 1e-10);

/// The closed-form coupling table, evaluated as tabulated.
CouplingSet coupling_formulas(double a, double g, int epsilon, int sigma, const WeightSet &weights);

} // namespace ladder
