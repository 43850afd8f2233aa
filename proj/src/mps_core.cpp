#include "ladder/mps_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ladder/errors.hpp"

namespace ladder {

namespace {

constexpr double kTopDegeneracyTolerance = 1e-12;
constexpr double kMatrixElementThreshold = 1e-10;

Complex integer_power(Complex base, std::size_t n) {
    Complex result{1.0, 0.0};
    while(n > 0) {
        if(n & 1U) result *= base;
        base *= base;
        n >>= 1U;
    }
    return result;
}

DenseMatrix matrix_power(DenseMatrix base, std::size_t n) {
    DenseMatrix result = DenseMatrix::Identity(base.rows(), base.cols());
    while(n > 0) {
        if(n & 1U) result = result * base;
        base = base * base;
        n >>= 1U;
    }
    return result;
}

void require_nondegenerate(const TransferOperator &transfer, std::string_view what) {
    if(transfer.degenerate_top)
        throw DegenerateTopError(std::string(what) +
                                 ": top eigenvalue of the transfer operator is degenerate (g = 0 transition point); "
                                 "thermodynamic limit is not defined");
}

const DenseMatrix &pauli(char axis) {
    static const DenseMatrix x = (DenseMatrix(2, 2) << 0, 1, 1, 0).finished();
    static const DenseMatrix y = (DenseMatrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished();
    static const DenseMatrix z = (DenseMatrix(2, 2) << 1, 0, 0, -1).finished();
    switch(axis) {
        case 'x': return x;
        case 'y': return y;
        default: return z;
    }
}

DenseMatrix leg1(const DenseMatrix &m) { return kron(m, DenseMatrix::Identity(2, 2)); }
DenseMatrix leg2(const DenseMatrix &m) { return kron(DenseMatrix::Identity(2, 2), m); }

DenseMatrix in_plane(double theta) { return std::cos(theta) * pauli('x') + std::sin(theta) * pauli('y'); }

} // namespace

std::string_view to_string(Family family) {
    switch(family) {
        case Family::general_so2: return "general_so2";
        case Family::spin_flip: return "spin_flip";
        case Family::class_a: return "class_a";
        case Family::class_b: return "class_b";
        case Family::custom: return "custom";
    }
    return "custom";
}

TransferOperator transfer_matrix(const LadderMPS &mps) {
    const auto  d = static_cast<Eigen::Index>(mps.bond_dim());
    DenseMatrix e = DenseMatrix::Zero(d * d, d * d);
    for(const auto &a : mps.A) e += kron(to_complex(a).conjugate(), to_complex(a));

    TransferOperator out{e, eigen_decompose(e), false};
    const auto      &values = out.spectrum.eigenvalues;
    if(values.size() > 1) {
        const double top = std::abs(values[0]);
        out.degenerate_top = std::abs(values[0]) - std::abs(values[1]) <= kTopDegeneracyTolerance * top;
    }
    return out;
}

double amplitude(const LadderMPS &mps, std::span<const int> config) {
    if(config.empty()) throw ParameterError("amplitude: configuration must contain at least one rung");
    RealMatrix product = RealMatrix::Identity(static_cast<Eigen::Index>(mps.bond_dim()), static_cast<Eigen::Index>(mps.bond_dim()));
    for(int label : config) {
        if(label < 0 || label >= kRungDim) throw ParameterError("amplitude: rung label " + std::to_string(label) + " out of range");
        product = product * mps[label];
    }
    return product.trace();
}

double partition_norm(const LadderMPS &mps, std::size_t n_rungs) {
    if(n_rungs == 0) throw ParameterError("partition_norm: N must be >= 1");
    const auto transfer = transfer_matrix(mps);
    Complex    z{0.0, 0.0};
    for(const auto &lambda : transfer.spectrum.eigenvalues) z += integer_power(lambda, n_rungs);
    if(!std::isfinite(z.real()) || z.real() <= 0.0)
        throw DegenerateStateError("partition_norm: Z = " + std::to_string(z.real()) + " is not positive");
    return z.real();
}

RungOperator rung_operator(std::string_view name, double theta) {
    const DenseMatrix id2 = DenseMatrix::Identity(2, 2);
    DenseMatrix       m;
    if(name == "identity" || name == "I") {
        m = DenseMatrix::Identity(4, 4);
    } else if(name.size() == 3 && name[0] == 's' && (name[2] == '1' || name[2] == '2') &&
              (name[1] == 'x' || name[1] == 'y' || name[1] == 'z')) {
        m = name[2] == '1' ? leg1(pauli(name[1])) : leg2(pauli(name[1]));
    } else if(name == "Sx" || name == "Sy" || name == "Sz") {
        const char axis = static_cast<char>(name[1] - 'A' + 'a');
        m = 0.5 * (leg1(pauli(axis)) + leg2(pauli(axis)));
    } else if(name == "Sn") {
        m = 0.5 * (leg1(in_plane(theta)) + leg2(in_plane(theta)));
    } else if(name == "S2") {
        m = DenseMatrix::Zero(4, 4);
        for(char axis : {'x', 'y', 'z'}) {
            const DenseMatrix s = 0.5 * (leg1(pauli(axis)) + leg2(pauli(axis)));
            m += s * s;
        }
    } else if(name == "zz") {
        m = kron(pauli('z'), pauli('z'));
    } else if(name == "nn") {
        m = kron(in_plane(theta), in_plane(theta));
    } else {
        throw ParameterError("rung_operator: unknown label '" + std::string(name) + "'");
    }
    return {m, std::string(name)};
}

DenseMatrix operator_transfer(const LadderMPS &mps, const RungOperator &op) {
    const auto  d   = static_cast<Eigen::Index>(mps.bond_dim());
    DenseMatrix out = DenseMatrix::Zero(d * d, d * d);
    for(int i = 0; i < kRungDim; ++i) {
        for(int j = 0; j < kRungDim; ++j) {
            const Complex w = op.matrix(i, j);
            if(w == Complex{0.0, 0.0}) continue;
            out += w * kron(to_complex(mps[i]).conjugate(), to_complex(mps[j]));
        }
    }
    return out;
}

TransferPowers::TransferPowers(const TransferOperator &transfer) {
    scale_ = std::abs(transfer.lambda_max());
    if(scale_ == 0.0) scale_ = 1.0;
    scaled_   = transfer.E / scale_;
    spectral_ = transfer.spectrum.diagonalizable;
    if(spectral_) {
        right_ = transfer.spectrum.right_matrix();
        left_  = transfer.spectrum.left_matrix();
        for(const auto &lambda : transfer.spectrum.eigenvalues) values_.push_back(lambda / scale_);
    }
}

DenseMatrix TransferPowers::power(std::size_t n) const {
    if(!spectral_) return matrix_power(scaled_, n);
    DenseVector diag(static_cast<Eigen::Index>(values_.size()));
    for(std::size_t i = 0; i < values_.size(); ++i) diag(static_cast<Eigen::Index>(i)) = integer_power(values_[i], n);
    return right_ * diag.asDiagonal() * left_;
}

Complex TransferPowers::trace_power(std::size_t n) const {
    if(!spectral_) return matrix_power(scaled_, n).trace();
    Complex sum{0.0, 0.0};
    for(const auto &v : values_) sum += integer_power(v, n);
    return sum;
}

double correlator(const LadderMPS &mps, std::span<const Placement> placements, std::size_t n_rungs) {
    if(n_rungs == 0) throw ParameterError("correlator: N must be >= 1");
    std::vector<Placement> sorted(placements.begin(), placements.end());
    std::sort(sorted.begin(), sorted.end(), [](const Placement &p, const Placement &q) { return p.site < q.site; });
    for(std::size_t i = 0; i < sorted.size(); ++i) {
        if(sorted[i].site < 1 || sorted[i].site > n_rungs)
            throw ParameterError("correlator: site " + std::to_string(sorted[i].site) + " outside 1.." + std::to_string(n_rungs));
        if(i > 0 && sorted[i].site == sorted[i - 1].site)
            throw ParameterError("correlator: two operators on rung " + std::to_string(sorted[i].site));
    }

    const auto           transfer = transfer_matrix(mps);
    const TransferPowers powers(transfer);
    const Complex        z = powers.trace_power(n_rungs);
    if(std::abs(z) < 1e-300) throw DegenerateStateError("correlator: tr(E^N) vanishes");

    DenseMatrix product = DenseMatrix::Identity(transfer.E.rows(), transfer.E.cols());
    std::size_t next    = 1;
    for(const auto &p : sorted) {
        product = product * powers.power(p.site - next) * (operator_transfer(mps, *p.op) / powers.scale());
        next    = p.site + 1;
    }
    product = product * powers.power(n_rungs + 1 - next);
    return (product.trace() / z).real();
}

double one_point(const LadderMPS &mps, const RungOperator &op, std::size_t site, std::size_t n_rungs) {
    const Placement p{site, &op};
    return correlator(mps, std::span<const Placement>(&p, 1), n_rungs);
}

double one_point_thermo(const LadderMPS &mps, const RungOperator &op) {
    const auto transfer = transfer_matrix(mps);
    require_nondegenerate(transfer, "one_point_thermo");
    const auto &s = transfer.spectrum;
    const Complex value = s.left_vectors[0].transpose() * operator_transfer(mps, op) * s.right_vectors[0];
    return (value / s.eigenvalues[0]).real();
}

double two_point(const LadderMPS &mps, const RungOperator &op, std::size_t r, std::size_t n_rungs) {
    if(r < 2 || r > n_rungs) throw ParameterError("two_point: need 2 <= r <= N");
    const std::array<Placement, 2> p{Placement{1, &op}, Placement{r, &op}};
    return correlator(mps, p, n_rungs);
}

double two_point_thermo(const LadderMPS &mps, const RungOperator &op, std::size_t r) {
    if(r < 2) throw ParameterError("two_point_thermo: need r >= 2");
    const auto transfer = transfer_matrix(mps);
    require_nondegenerate(transfer, "two_point_thermo");
    const auto        &s      = transfer.spectrum;
    const DenseMatrix  eo     = operator_transfer(mps, op);
    const Complex      lambda = s.eigenvalues[0];

    if(!s.diagonalizable) {
        const TransferPowers powers(transfer);
        const Complex        phase = lambda / powers.scale();
        const Complex v = s.left_vectors[0].transpose() * eo * powers.power(r - 2) * eo * s.right_vectors[0];
        return (v / (lambda * lambda) / integer_power(phase, r - 2)).real();
    }

    Complex sum{0.0, 0.0};
    for(std::size_t i = 0; i < s.size(); ++i) {
        const Complex out_elem = s.left_vectors[0].transpose() * eo * s.right_vectors[i];
        const Complex in_elem  = s.left_vectors[i].transpose() * eo * s.right_vectors[0];
        sum += integer_power(s.eigenvalues[i] / lambda, r - 2) * out_elem * in_elem;
    }
    return (sum / (lambda * lambda)).real();
}

CorrelationLength correlation_length(const LadderMPS &mps, const RungOperator &op) {
    const auto transfer = transfer_matrix(mps);
    require_nondegenerate(transfer, "correlation_length");
    const auto       &s      = transfer.spectrum;
    const DenseMatrix eo     = operator_transfer(mps, op);
    const double      top    = std::abs(s.eigenvalues[0]);
    const Complex     lambda = s.eigenvalues[0];

    // Connected weight of every eigenvalue group below the top, in units of lambda_max^2.
    std::vector<Complex> weight(s.size(), Complex{0.0, 0.0});
    for(std::size_t i = 1; i < s.size(); ++i) {
        if(s.group[i] == s.group[0]) continue;
        const Complex out_elem = s.left_vectors[0].transpose() * eo * s.right_vectors[i];
        const Complex in_elem  = s.left_vectors[i].transpose() * eo * s.right_vectors[0];
        weight[s.group[i]] += out_elem * in_elem / (lambda * lambda);
    }
    for(std::size_t i = 1; i < s.size(); ++i) {
        if(s.group[i] != i || s.group[i] == s.group[0]) continue; // first member of each group
        if(std::abs(weight[i]) <= kMatrixElementThreshold) continue;
        const double second = std::abs(s.eigenvalues[i]);
        if(top - second <= kTopDegeneracyTolerance * top) return {CorrelationLength::Kind::infinite, 0.0};
        if(second == 0.0) return {CorrelationLength::Kind::finite, 0.0};
        return {CorrelationLength::Kind::finite, 1.0 / std::log(top / second)};
    }
    return {CorrelationLength::Kind::none, 0.0};
}

} // namespace ladder
