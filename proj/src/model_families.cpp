#include "ladder/model_families.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ladder/errors.hpp"

namespace ladder {

namespace {

constexpr double kWitnessTolerance = 1e-12;
constexpr std::size_t kFlipCheckRungs = 4;

RealMatrix diag2(double p, double q) {
    RealMatrix m = RealMatrix::Zero(2, 2);
    m(0, 0)      = p;
    m(1, 1)      = q;
    return m;
}

void require_sign(int s, std::string_view what) {
    if(s != 1 && s != -1) throw ParameterError(std::string(what) + " must be +1 or -1");
}

int flipped(int label) { return 3 - label; }
int swapped_legs(int label) { return ((label & 1) << 1) | (label >> 1); }

double matrix_scale(const LadderMPS &mps) {
    double s = 1.0;
    for(const auto &a : mps.A) s = std::max(s, a.cwiseAbs().maxCoeff());
    return s;
}

DenseMatrix commutator(const DenseMatrix &x, const DenseMatrix &y) { return x * y - y * x; }

// Global spin flip checked on the amplitudes of a 4-rung ring: psi(flip c) = epsilon^4 psi(c).
double flip_state_residual(const LadderMPS &mps, int epsilon) {
    const double     phase = std::pow(static_cast<double>(epsilon), static_cast<double>(kFlipCheckRungs));
    std::vector<int> config(kFlipCheckRungs), image(kFlipCheckRungs);
    double           worst = 0.0, largest = 0.0;
    for(int code = 0; code < 256; ++code) {
        for(std::size_t k = 0; k < kFlipCheckRungs; ++k) {
            config[k] = (code >> (2 * (kFlipCheckRungs - 1 - k))) & 3;
            image[k]  = flipped(config[k]);
        }
        const double psi = amplitude(mps, config);
        largest          = std::max(largest, std::abs(psi));
        worst            = std::max(worst, std::abs(amplitude(mps, image) - phase * psi));
    }
    return largest > 0.0 ? worst / largest : worst;
}

LadderMPS assemble(double a, double b, double a_prime, double b_prime, double g) {
    LadderMPS mps;
    mps.A[kUpUp]          = RealMatrix::Zero(2, 2);
    mps.A[kUpUp](0, 1)    = g;
    mps.A[kUpDown]        = diag2(a, b);
    mps.A[kDownUp]        = diag2(a_prime, b_prime);
    mps.A[kDownDown]      = RealMatrix::Zero(2, 2);
    mps.A[kDownDown](1, 0) = 1.0;
    mps.params.a       = a;
    mps.params.b       = b;
    mps.params.a_prime = a_prime;
    mps.params.b_prime = b_prime;
    mps.params.g       = g;
    if(g == 0.0) mps.warnings.emplace_back("g = 0: trivial-correlation point (transfer spectrum degenerate at the top)");
    return mps;
}

} // namespace

LadderMPS build_so2(double a, double b, double a_prime, double b_prime, double g) {
    auto mps   = assemble(a, b, a_prime, b_prime, g);
    mps.family = Family::general_so2;
    return mps;
}

LadderMPS build_spin_flip(double a, double b, double g, int epsilon) {
    require_sign(epsilon, "epsilon");
    auto mps           = assemble(a, b, epsilon * b, epsilon * a, g);
    mps.family         = Family::spin_flip;
    mps.params.epsilon = epsilon;
    return mps;
}

LadderMPS build_class_a(double a, double g, int epsilon, int sigma) {
    require_sign(epsilon, "epsilon");
    require_sign(sigma, "sigma");
    if(a == 0.0) throw ParameterError("build_class_a: a = 0 gives a degenerate family");
    auto mps           = assemble(a, sigma * a, epsilon * sigma * a, epsilon * a, g);
    mps.family         = Family::class_a;
    mps.params.epsilon = epsilon;
    mps.params.sigma   = sigma;
    mps.params.eta     = epsilon * sigma;
    return mps;
}

LadderMPS build_class_b(double u) {
    auto mps           = assemble((u + 1.0) / 2.0, (u - 1.0) / 2.0, (1.0 - u) / 2.0, -(1.0 + u) / 2.0, -1.0);
    mps.family         = Family::class_b;
    mps.params.epsilon = -1;
    mps.params.sigma   = -1;
    mps.params.eta     = 1;
    mps.params.u       = u;
    return mps;
}

double x_parameter(const LadderMPS &mps) {
    const double s = mps.params.a * mps.params.a + mps.params.b * mps.params.b;
    if(s == 0.0) throw ParameterError("x_parameter: a^2 + b^2 = 0");
    return mps.params.g / s;
}

std::string_view to_string(SymmetryKind kind) {
    switch(kind) {
        case SymmetryKind::tz: return "tz";
        case SymmetryKind::spin_flip: return "spin_flip";
        case SymmetryKind::leg_exchange: return "leg_exchange";
        case SymmetryKind::parity: return "parity";
        case SymmetryKind::su2: return "su2";
    }
    return "tz";
}

SymmetryKind symmetry_kind_from_string(std::string_view name) {
    for(auto kind : {SymmetryKind::tz, SymmetryKind::spin_flip, SymmetryKind::leg_exchange, SymmetryKind::parity, SymmetryKind::su2})
        if(to_string(kind) == name) return kind;
    throw ParameterError("unknown symmetry kind '" + std::string(name) + "'");
}

int default_sign(const LadderMPS &mps, SymmetryKind kind) {
    switch(kind) {
        case SymmetryKind::spin_flip: return mps.params.epsilon;
        case SymmetryKind::leg_exchange: return mps.params.eta;
        case SymmetryKind::parity: return mps.params.sigma;
        default: return 1;
    }
}

SymmetryWitness verify_symmetry(const LadderMPS &mps, SymmetryKind kind) { return verify_symmetry(mps, kind, default_sign(mps, kind)); }

SymmetryWitness verify_symmetry(const LadderMPS &mps, SymmetryKind kind, int sign) {
    if(mps.bond_dim() != 2) throw DimensionError("verify_symmetry: witnesses are defined for D = 2");
    SymmetryWitness out;
    out.kind   = kind;
    out.sign   = sign;
    out.method = "conjugation";

    std::array<DenseMatrix, 4> a;
    for(int i = 0; i < kRungDim; ++i) a[static_cast<std::size_t>(i)] = to_complex(mps[i]);
    auto worst = [&out](const DenseMatrix &defect) { out.residual = std::max(out.residual, max_abs(defect)); };

    switch(kind) {
        case SymmetryKind::tz: {
            DenseMatrix t = DenseMatrix::Zero(2, 2);
            t(0, 0)       = 0.5;
            t(1, 1)       = -0.5;
            out.witnesses.push_back(t);
            worst(commutator(t, a[kUpUp]) - a[kUpUp]);
            worst(commutator(t, a[kDownDown]) + a[kDownDown]);
            worst(commutator(t, a[kUpDown]));
            worst(commutator(t, a[kDownUp]));
            break;
        }
        case SymmetryKind::spin_flip: {
            require_sign(sign, "epsilon");
            DenseMatrix x = DenseMatrix::Zero(2, 2);
            x(0, 1)       = mps.params.g;
            x(1, 0)       = sign;
            out.witnesses.push_back(x);
            if(mps.params.g == 0.0) {
                // X is singular at g = 0; check the state itself instead.
                out.method   = "state(N=4)";
                out.residual = flip_state_residual(mps, sign);
                break;
            }
            const DenseMatrix x_inv = x.inverse();
            for(int i = 0; i < kRungDim; ++i) worst(x * a[static_cast<std::size_t>(i)] * x_inv - double(sign) * a[static_cast<std::size_t>(flipped(i))]);
            break;
        }
        case SymmetryKind::leg_exchange: {
            require_sign(sign, "eta");
            DenseMatrix y = DenseMatrix::Identity(2, 2);
            y(1, 1)       = sign;
            out.witnesses.push_back(y);
            const DenseMatrix y_inv = y.inverse();
            for(int i = 0; i < kRungDim; ++i)
                worst(y * a[static_cast<std::size_t>(i)] * y_inv - double(sign) * a[static_cast<std::size_t>(swapped_legs(i))]);
            break;
        }
        case SymmetryKind::parity: {
            require_sign(sign, "sigma");
            DenseMatrix pi = DenseMatrix::Zero(2, 2);
            pi(0, 1)       = 1.0;
            pi(1, 0)       = sign;
            out.witnesses.push_back(pi);
            const DenseMatrix pi_inv = pi.inverse();
            for(int i = 0; i < kRungDim; ++i)
                worst(pi * a[static_cast<std::size_t>(i)] * pi_inv - double(sign) * a[static_cast<std::size_t>(i)].transpose());
            break;
        }
        case SymmetryKind::su2: {
            const double      r2 = std::sqrt(2.0);
            const DenseMatrix b00 = (a[kUpDown] - a[kDownUp]) / r2;
            // Spin-1 components indexed by m + 1.
            const std::array<DenseMatrix, 3> b1{a[kDownDown], (a[kUpDown] + a[kDownUp]) / r2, a[kUpUp]};
            DenseMatrix tx(2, 2), ty(2, 2), tz(2, 2), tp(2, 2), tm(2, 2);
            tx << 0, 0.5, 0.5, 0;
            ty << 0, Complex(0, -0.5), Complex(0, 0.5), 0;
            tz << 0.5, 0, 0, -0.5;
            tp << 0, 1, 0, 0;
            tm << 0, 0, 1, 0;
            out.witnesses = {tx, ty, tz};
            for(const auto &t : out.witnesses) worst(commutator(t, b00));
            const DenseMatrix zero = DenseMatrix::Zero(2, 2);
            for(int m = -1; m <= 1; ++m) {
                const auto &bm = b1[static_cast<std::size_t>(m + 1)];
                worst(commutator(tz, bm) - double(m) * bm);
                const DenseMatrix &up   = m < 1 ? b1[static_cast<std::size_t>(m + 2)] : zero;
                const DenseMatrix &down = m > -1 ? b1[static_cast<std::size_t>(m)] : zero;
                worst(commutator(tp, bm) - std::sqrt(2.0 - m * (m + 1)) * up);
                worst(commutator(tm, bm) - std::sqrt(2.0 - m * (m - 1)) * down);
            }
            break;
        }
    }
    const double scale = out.method == "conjugation" ? matrix_scale(mps) : 1.0;
    out.passed         = out.residual <= kWitnessTolerance * scale;
    return out;
}

} // namespace ladder
