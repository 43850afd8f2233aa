#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "ladder/mps_core.hpp"

namespace ladder {

inline constexpr std::size_t kMaxOracleRungs = 10;

/// Explicit ring state. Amplitudes are indexed by the base-4 rung configuration with rung 1 the
/// most significant digit; within a rung the leg-1 bit is high.
struct DenseState {
    std::size_t         N = 0;
    std::vector<double> amplitudes;

    [[nodiscard]] double     norm() const;
    [[nodiscard]] DenseState normalized() const; // throws DegenerateStateError at zero norm
};

/// amplitude[c] = tr(A_{c1} ... A_{cN}), unnormalized.
DenseState build_state(const LadderMPS &mps, std::size_t n_rungs);

/// <psi| O_1 ... O_k |psi> / <psi|psi> for operators on distinct rungs (1-based).
double expectation(const DenseState &state, std::span<const Placement> placements);
double expectation(const DenseState &state, const RungOperator &op, std::size_t site);

/// One-rung reduced density matrix of rung `site` (1-based), rho(j, i) = <j|rho|i>.
DenseMatrix reduced(const DenseState &state, std::size_t site);

/// |<x|y>| / (|x| |y|).
double overlap(const DenseState &x, const DenseState &y);

/// ||H psi|| / ||psi||.
double hamiltonian_residual(const RealMatrix &H, const DenseState &state);
/// Same with H = sum_l h_{l,l+1} on the periodic ring, applied rung pair by rung pair.
double local_hamiltonian_residual(const RealMatrix &h, const DenseState &state);

/// sum_k [a^k (eps b)^{N-k} + b^k (eps a)^{N-k}] |u^k d^{N-k}>, every arrangement with unit weight;
/// u = |01>, d = |10>.
DenseState g_zero_state(double a, double b, int epsilon, std::size_t n_rungs);
/// 2 [(a^2 + b^2)^N + (2ab)^N].
double g_zero_norm(double a, double b, std::size_t n_rungs);

/// (|t1 t-1 t1 ...> + |t-1 t1 t-1 ...>) / sqrt(2) for even N, t1 = |00>, t-1 = |11>.
DenseState ghz_state(std::size_t n_rungs);
/// (|t1 ... t1> + |t-1 ... t-1>) / sqrt(2).
DenseState aligned_ghz_state(std::size_t n_rungs);
/// |<GHZ|psi(mps)>| on normalized states, with the staggered GHZ.
double ghz_overlap(const LadderMPS &mps, std::size_t n_rungs);

/// Binary dump: 8-byte little-endian N, then 4^N little-endian doubles.
void write_state(const DenseState &state, const std::filesystem::path &path);
DenseState read_state(const std::filesystem::path &path);

} // namespace ladder
