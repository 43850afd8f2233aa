#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ladder/numerics.hpp"

namespace ladder {

/// Built-in symmetry families plus a catch-all for user supplied matrices.
enum class Family { general_so2, spin_flip, class_a, class_b, custom };

std::string_view to_string(Family family);

/// Rung basis |00>, |01>, |10>, |11>; the first index is leg 1, |0> is spin up.
enum RungLabel : int { kUpUp = 0, kUpDown = 1, kDownUp = 2, kDownDown = 3 };

inline constexpr int kRungDim = 4;

/// Parameters as given to the family builders. Fields that a family does not use stay at zero
/// (epsilon/sigma/eta at +1).
struct ModelParams {
    double a       = 0.0;
    double b       = 0.0;
    double a_prime = 0.0;
    double b_prime = 0.0;
    double g       = 0.0;
    int    epsilon = 1;
    int    sigma   = 1;
    int    eta     = 1;
    double u       = 0.0;
};

/// Translationally invariant ladder MPS: one real D x D matrix per rung state.
struct LadderMPS {
    std::array<RealMatrix, 4> A;
    Family                    family = Family::custom;
    ModelParams               params;
    std::vector<std::string>  warnings;

    [[nodiscard]] std::size_t       bond_dim() const { return static_cast<std::size_t>(A[0].rows()); }
    [[nodiscard]] const RealMatrix &operator[](int label) const { return A[static_cast<std::size_t>(label)]; }
};

/// E = sum_i A_i^* (x) A_i together with its spectrum.
struct TransferOperator {
    DenseMatrix E;
    Spectrum    spectrum;
    bool        degenerate_top = false;

    [[nodiscard]] Complex lambda_max() const { return spectrum.eigenvalues.front(); }
};

/// A 4x4 Hermitian operator on one rung.
struct RungOperator {
    DenseMatrix matrix;
    std::string name;
};

/// One operator placed on rung `site` (1-based).
struct Placement {
    std::size_t         site;
    const RungOperator *op;
};

struct CorrelationLength {
    enum class Kind { finite, infinite, none };
    Kind   kind  = Kind::none;
    double value = 0.0; // meaningful only for Kind::finite

    [[nodiscard]] bool is_finite() const { return kind == Kind::finite; }
};

TransferOperator transfer_matrix(const LadderMPS &mps);

/// tr(A_{i1} ... A_{iN}), unnormalized.
double amplitude(const LadderMPS &mps, std::span<const int> config);

/// Z = tr(E^N) = sum_i lambda_i^N.
double partition_norm(const LadderMPS &mps, std::size_t n_rungs);

/// Labels: identity, sx1, sy1, sz1, sx2, sy2, sz2, Sx, Sy, Sz, Sn (in-plane, angle theta), S2,
/// zz (sz1 sz2) and nn (sn1 sn2, angle theta).
RungOperator rung_operator(std::string_view name, double theta = 0.0);

/// E_O = sum_ij <i|O|j> A_i^* (x) A_j.
DenseMatrix operator_transfer(const LadderMPS &mps, const RungOperator &op);

double one_point(const LadderMPS &mps, const RungOperator &op, std::size_t site, std::size_t n_rungs);
double one_point_thermo(const LadderMPS &mps, const RungOperator &op);

/// Finite-ring expectation of a product of operators on distinct rungs.
double correlator(const LadderMPS &mps, std::span<const Placement> placements, std::size_t n_rungs);

/// <O(1) O(r)> on a ring of n_rungs, r >= 2.
double two_point(const LadderMPS &mps, const RungOperator &op, std::size_t r, std::size_t n_rungs);
/// <O(1) O(r)> in the thermodynamic limit.
double two_point_thermo(const LadderMPS &mps, const RungOperator &op, std::size_t r);

CorrelationLength correlation_length(const LadderMPS &mps, const RungOperator &op);

/// (E / |lambda_max|)^n, spectral when E is diagonalizable and by repeated squaring otherwise.
class TransferPowers {
  public:
    explicit TransferPowers(const TransferOperator &transfer);

    [[nodiscard]] DenseMatrix power(std::size_t n) const;
    [[nodiscard]] Complex     trace_power(std::size_t n) const;
    [[nodiscard]] double      scale() const { return scale_; }

  private:
    DenseMatrix          scaled_;
    DenseMatrix          right_;
    DenseMatrix          left_;
    std::vector<Complex> values_;
    double               scale_ = 1.0;
    bool                 spectral_ = true;
};

} // namespace ladder
