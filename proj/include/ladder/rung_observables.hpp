#pragma once

#include <array>
#include <cstddef>
#include <limits>

#include "ladder/mps_core.hpp"

namespace ladder {

/// a, b, g, epsilon of a spin-flip-type model (spin_flip, class_a, class_b).
struct SpinFlipParams {
    double a       = 0.0;
    double b       = 0.0;
    double g       = 0.0;
    int    epsilon = 1;
};

/// Throws ParameterError for families without spin-flip structure.
SpinFlipParams spin_flip_params(const LadderMPS &mps);

/// One-rung reduced density matrix in the |00>, |01>, |10>, |11> basis.
struct RungDensity {
    DenseMatrix           matrix;
    double                Q = std::numeric_limits<double>::quiet_NaN(); // closed form only
    std::array<double, 4> eigenvalues{};                                // ascending
};

RungDensity make_rung_density(DenseMatrix matrix);

RungDensity rung_density_closed_form(const SpinFlipParams &p);
RungDensity rung_density_closed_form(const LadderMPS &mps);
/// Exact contraction on a ring of n_rungs >= 1.
RungDensity rung_density_finite(const LadderMPS &mps, std::size_t n_rungs);
RungDensity rung_density_thermo(const LadderMPS &mps);

/// Von Neumann entropy in bits from the eigenvalues, 0 log 0 = 0.
double entropy(const RungDensity &rho);
double entropy_closed_form(const SpinFlipParams &p);

enum class ConcurrenceMethod { closed_form, wootters };

/// Wootters concurrence of an arbitrary two-qubit density matrix.
double concurrence_wootters(const DenseMatrix &rho);
/// max(0, (2|ab| - |g|) / (a^2 + b^2 + |g|)).
double concurrence_closed_form(const SpinFlipParams &p);
/// closed_form uses max(0, 2 alpha_max - 1) on the spectrum of `rho`.
double concurrence(const RungDensity &rho, ConcurrenceMethod method);

struct IntraRung {
    double zz = 0.0; // <sz1 sz2>
    double nn = 0.0; // <sn1 sn2>, n in the x-y plane
    double s2 = 0.0; // <S^2>
};

IntraRung intra_rung(const LadderMPS &mps);
IntraRung intra_rung_closed_form(const SpinFlipParams &p);

struct CorrelationAxis {
    enum class Kind { z, in_plane };
    Kind   kind  = Kind::z;
    double theta = 0.0;
};

/// Closed-form <S_{a,1} S_{a,r}>, r >= 2. Throws DegenerateTopError at g = 0.
double distance_correlator(const SpinFlipParams &p, CorrelationAxis axis, std::size_t r);
double distance_correlator(const LadderMPS &mps, CorrelationAxis axis, std::size_t r);

struct CorrelationReport {
    double x    = 0.0; // g / (a^2 + b^2)
    double mu_t = 0.0; // 2|ab| / (a^2 + b^2)
    double xi_z = 0.0; // +inf at the transition
    double xi_n = 0.0;
    double zz   = 0.0;
    double nn   = 0.0;
};

CorrelationReport correlation_report(const SpinFlipParams &p);

/// Class-level closed forms as functions of x (class A) or u (class B).
struct ClassReport {
    double entropy_bits = 0.0;
    double concurrence  = 0.0;
    double zz           = 0.0;
    double nn           = 0.0;
    double xi_z         = 0.0;
    double xi_n         = 0.0;
    bool   degenerate_top = false;
};

ClassReport class_a_report(double x, int epsilon, int sigma);
ClassReport class_b_report(double u);

} // namespace ladder
