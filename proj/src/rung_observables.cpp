#include "ladder/rung_observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ladder/errors.hpp"

namespace ladder {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// t log2 t with the 0 log 0 = 0 convention.
double xlog2x(double t) { return t > 0.0 ? t * std::log2(t) : 0.0; }

// 1 / ln(ratio); ratio = 1 is a divergent length, ratio = inf a vanishing one.
double inverse_log(double ratio) {
    if(ratio == 1.0) return kInf;
    if(std::isinf(ratio)) return 0.0;
    return 1.0 / std::log(ratio);
}

double weight_sum(const SpinFlipParams &p) { return p.a * p.a + p.b * p.b; }

void require_nondegenerate(const SpinFlipParams &p, std::string_view what) {
    if(p.g == 0.0 || weight_sum(p) == 0.0)
        throw DegenerateTopError(std::string(what) + ": top transfer eigenvalue is degenerate (g = 0 transition point)");
}

} // namespace

SpinFlipParams spin_flip_params(const LadderMPS &mps) {
    const auto &q = mps.params;
    switch(mps.family) {
        case Family::spin_flip:
        case Family::class_a:
        case Family::class_b: return {q.a, q.b, q.g, q.epsilon};
        case Family::general_so2:
            for(int eps : {1, -1})
                if(q.a_prime == eps * q.b && q.b_prime == eps * q.a) return {q.a, q.b, q.g, eps};
            break;
        case Family::custom: break;
    }
    throw ParameterError("closed forms need a spin-flip-type model; family '" + std::string(to_string(mps.family)) + "' is not one");
}

RungDensity make_rung_density(DenseMatrix matrix) {
    RungDensity rho;
    rho.matrix               = std::move(matrix);
    const RealVector values  = hermitian_eigenvalues(0.5 * (rho.matrix + rho.matrix.adjoint()));
    for(Eigen::Index i = 0; i < values.size() && i < 4; ++i) rho.eigenvalues[static_cast<std::size_t>(i)] = values(i);
    return rho;
}

RungDensity rung_density_closed_form(const SpinFlipParams &p) {
    const double s = weight_sum(p);
    const double g = std::abs(p.g);
    const double q = 2.0 * s + 2.0 * g;
    if(q == 0.0) throw DegenerateStateError("rung_density: Q = 0");
    DenseMatrix m = DenseMatrix::Zero(4, 4);
    m(0, 0) = g;
    m(3, 3) = g;
    m(1, 1) = s;
    m(2, 2) = s;
    m(1, 2) = 2.0 * p.epsilon * p.a * p.b;
    m(2, 1) = m(1, 2);
    auto rho = make_rung_density(m / q);
    rho.Q    = q;
    return rho;
}

RungDensity rung_density_closed_form(const LadderMPS &mps) { return rung_density_closed_form(spin_flip_params(mps)); }

RungDensity rung_density_finite(const LadderMPS &mps, std::size_t n_rungs) {
    if(n_rungs == 0) throw ParameterError("rung_density_finite: N must be >= 1");
    const auto           transfer = transfer_matrix(mps);
    const TransferPowers powers(transfer);
    const DenseMatrix    rest = powers.power(n_rungs - 1);
    const Complex        z    = powers.scale() * powers.trace_power(n_rungs);
    if(std::abs(z) == 0.0) throw DegenerateStateError("rung_density_finite: tr(E^N) vanishes");

    DenseMatrix m(4, 4);
    for(int i = 0; i < kRungDim; ++i)
        for(int j = 0; j < kRungDim; ++j) m(j, i) = (kron(to_complex(mps[i]).conjugate(), to_complex(mps[j])) * rest).trace() / z;
    return make_rung_density(m);
}

RungDensity rung_density_thermo(const LadderMPS &mps) {
    const auto transfer = transfer_matrix(mps);
    if(transfer.degenerate_top)
        throw DegenerateTopError("rung_density_thermo: top transfer eigenvalue is degenerate (g = 0 transition point)");
    const auto &s = transfer.spectrum;
    DenseMatrix m(4, 4);
    for(int i = 0; i < kRungDim; ++i)
        for(int j = 0; j < kRungDim; ++j)
            m(j, i) = Complex(s.left_vectors[0].transpose() * kron(to_complex(mps[i]).conjugate(), to_complex(mps[j])) * s.right_vectors[0]) /
                      s.eigenvalues[0];
    return make_rung_density(m);
}

double entropy(const RungDensity &rho) {
    double s = 0.0;
    for(double alpha : rho.eigenvalues) s -= xlog2x(std::max(alpha, 0.0));
    return s;
}

double entropy_closed_form(const SpinFlipParams &p) {
    const double s = weight_sum(p);
    const double g = std::abs(p.g);
    const double q = 2.0 * s + 2.0 * g;
    if(q == 0.0) throw DegenerateStateError("entropy_closed_form: Q = 0");
    const double plus  = (p.a + p.b) * (p.a + p.b);
    const double minus = (p.a - p.b) * (p.a - p.b);
    return std::log2(q) - (2.0 * xlog2x(g) + xlog2x(plus) + xlog2x(minus)) / q;
}

double concurrence_wootters(const DenseMatrix &rho) {
    if(rho.rows() != 4 || rho.cols() != 4) throw DimensionError("concurrence_wootters: expects a 4x4 density matrix");
    // sqrt(eig(rho rho~)) are the singular values of sqrt(rho) (sy x sy) sqrt(rho)^*.
    DenseMatrix flip = DenseMatrix::Zero(4, 4);
    flip(0, 3)       = -1.0;
    flip(1, 2)       = 1.0;
    flip(2, 1)       = 1.0;
    flip(3, 0)       = -1.0;

    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(0.5 * (rho + rho.adjoint()));
    const RealVector root   = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const DenseMatrix sqrt_rho = solver.eigenvectors() * root.cast<Complex>().asDiagonal() * solver.eigenvectors().adjoint();
    const RealVector  sv       = Eigen::JacobiSVD<DenseMatrix>(sqrt_rho * flip * sqrt_rho.conjugate()).singularValues();
    return std::max(0.0, sv(0) - sv(1) - sv(2) - sv(3));
}

double concurrence_closed_form(const SpinFlipParams &p) {
    const double g   = std::abs(p.g);
    const double den = weight_sum(p) + g;
    if(den == 0.0) throw DegenerateStateError("concurrence_closed_form: a^2 + b^2 + |g| = 0");
    return std::max(0.0, (2.0 * std::abs(p.a * p.b) - g) / den);
}

double concurrence(const RungDensity &rho, ConcurrenceMethod method) {
    if(method == ConcurrenceMethod::wootters) return concurrence_wootters(rho.matrix);
    return std::max(0.0, 2.0 * rho.eigenvalues.back() - 1.0);
}

IntraRung intra_rung_closed_form(const SpinFlipParams &p) {
    const double s   = weight_sum(p);
    const double g   = std::abs(p.g);
    const double den = s + g;
    if(den == 0.0) throw DegenerateStateError("intra_rung: a^2 + b^2 + |g| = 0");
    const double sum = p.a + p.epsilon * p.b;
    return {(g - s) / den, 2.0 * p.epsilon * p.a * p.b / den, (sum * sum + 2.0 * g) / den};
}

IntraRung intra_rung(const LadderMPS &mps) { return intra_rung_closed_form(spin_flip_params(mps)); }

double distance_correlator(const SpinFlipParams &p, CorrelationAxis axis, std::size_t r) {
    if(r < 2) throw ParameterError("distance_correlator: need r >= 2");
    require_nondegenerate(p, "distance_correlator");
    const double s     = weight_sum(p);
    const double g     = std::abs(p.g);
    const double denom = std::pow(s + g, static_cast<double>(r));
    const double steps = static_cast<double>(r - 2);
    if(axis.kind == CorrelationAxis::Kind::z) return -p.g * p.g * std::pow(s - g, steps) / denom;
    const double sg   = sgn(p.g);
    const double lead = p.a + sg * p.b;
    return (sg + p.epsilon) * lead * lead * (g / 2.0) * std::pow(2.0 * p.a * p.b, steps) / denom;
}

double distance_correlator(const LadderMPS &mps, CorrelationAxis axis, std::size_t r) {
    return distance_correlator(spin_flip_params(mps), axis, r);
}

CorrelationReport correlation_report(const SpinFlipParams &p) {
    const double s = weight_sum(p);
    if(s == 0.0) throw ParameterError("correlation_report: a^2 + b^2 = 0");
    CorrelationReport out;
    out.x          = p.g / s;
    out.mu_t       = 2.0 * std::abs(p.a * p.b) / s;
    const double t = std::abs(out.x);
    out.xi_z       = t == 1.0 ? 0.0 : inverse_log((1.0 + t) / std::abs(1.0 - t));
    out.xi_n       = out.mu_t == 0.0 ? 0.0 : inverse_log((1.0 + t) / out.mu_t);
    const auto intra = intra_rung_closed_form(p);
    out.zz           = intra.zz;
    out.nn           = intra.nn;
    return out;
}

ClassReport class_a_report(double x, int epsilon, int sigma) {
    const double t = std::abs(x);
    ClassReport  out;
    out.degenerate_top = x == 0.0;
    out.concurrence    = std::max(0.0, (1.0 - t) / (1.0 + t));
    out.entropy_bits   = t == 0.0 ? 0.0 : (t / (1.0 + t)) * (1.0 - std::log2(t)) + std::log2(1.0 + t);
    out.zz             = (t - 1.0) / (t + 1.0);
    out.nn             = epsilon * sigma / (t + 1.0);
    out.xi_z           = t == 1.0 ? 0.0 : inverse_log((1.0 + t) / std::abs(1.0 - t));
    out.xi_n           = inverse_log(1.0 + t);
    return out;
}

ClassReport class_b_report(double u) {
    const double u2 = u * u;
    ClassReport  out;
    out.concurrence  = std::max(0.0, (u2 - 3.0) / (u2 + 3.0));
    out.entropy_bits = std::log2(u2 + 3.0) - xlog2x(u2) / (u2 + 3.0);
    out.zz           = (1.0 - u2) / (3.0 + u2);
    out.nn           = out.zz;
    out.xi_z         = u2 == 1.0 ? 0.0 : inverse_log((u2 + 3.0) / std::abs(u2 - 1.0));
    out.xi_n         = out.xi_z;
    return out;
}

} // namespace ladder
