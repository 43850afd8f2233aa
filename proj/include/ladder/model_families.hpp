#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ladder/mps_core.hpp"

namespace ladder {

/// SO(2)-symmetric ansatz: A01 = diag(a, b), A10 = diag(a', b'), A00 = [[0, g], [0, 0]],
/// A11 = [[0, 0], [1, 0]] (h = 1 gauge). g = 0 is accepted with a warning.
LadderMPS build_so2(double a, double b, double a_prime, double b_prime, double g);

/// SO(2) ansatz with spin-flip symmetry: a' = epsilon b, b' = epsilon a.
LadderMPS build_spin_flip(double a, double b, double g, int epsilon);

/// SO(2) plus spin flip, leg exchange and parity: b = sigma a, eta = epsilon sigma.
LadderMPS build_class_a(double a, double g, int epsilon, int sigma);

/// Fully rotation invariant one-parameter family, g = epsilon = -1.
LadderMPS build_class_b(double u);

/// x = g / (a^2 + b^2) for the spin-flip-type families.
double x_parameter(const LadderMPS &mps);

enum class SymmetryKind { tz, spin_flip, leg_exchange, parity, su2 };

std::string_view to_string(SymmetryKind kind);
SymmetryKind     symmetry_kind_from_string(std::string_view name);

struct SymmetryWitness {
    SymmetryKind             kind   = SymmetryKind::tz;
    int                      sign   = 1; // epsilon, eta or sigma; unused for tz and su2
    std::vector<DenseMatrix> witnesses;
    double                   residual = 0.0;
    bool                     passed   = false;
    std::string              method; // "conjugation" or "state(N=4)"
};

/// The discrete sign a family carries for a symmetry (+1 where the family does not fix it).
int default_sign(const LadderMPS &mps, SymmetryKind kind);

/// Builds the closed-form witness for `kind` and measures the largest entrywise defect of its
/// defining equations. Pass iff residual <= 1e-12 (relative to the largest matrix entry when that
/// exceeds one).
SymmetryWitness verify_symmetry(const LadderMPS &mps, SymmetryKind kind, int sign);
SymmetryWitness verify_symmetry(const LadderMPS &mps, SymmetryKind kind);

} // namespace ladder
