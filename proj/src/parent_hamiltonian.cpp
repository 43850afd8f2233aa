#include "ladder/parent_hamiltonian.hpp"

#include <cmath>
#include <string>

#include "ladder/errors.hpp"
#include "ladder/model_families.hpp"

namespace ladder {

namespace {

constexpr double      kBasisTolerance = 1e-10;
constexpr std::size_t kMaxEmbedRungs  = 6;

std::size_t power4(std::size_t n) { return std::size_t{1} << (2 * n); }

// |ijkl> as a 16-dim unit vector; bits given most significant first.
RealVector ket(const char *bits) {
    std::size_t index = 0;
    for(const char *c = bits; *c != '\0'; ++c) index = 2 * index + static_cast<std::size_t>(*c - '0');
    return RealVector::Unit(kPairDim, static_cast<Eigen::Index>(index));
}

RealMatrix flip_all() {
    RealMatrix f = RealMatrix::Zero(kPairDim, kPairDim);
    for(int i = 0; i < kPairDim; ++i) f(kPairDim - 1 - i, i) = 1.0;
    return f;
}

// Single-site Pauli matrices: 0 = I, 1 = X, 2 = Y, 3 = Z.
DenseMatrix pauli(int p) {
    DenseMatrix m(2, 2);
    switch(p) {
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
        case 3: m << 1, 0, 0, -1; break;
        default: m << 1, 0, 0, 1; break;
    }
    return m;
}

DenseMatrix pauli_string(std::size_t index) {
    DenseMatrix out = pauli(static_cast<int>((index >> 6) & 3));
    for(int shift : {4, 2, 0}) out = kron(out, pauli(static_cast<int>((index >> shift) & 3)));
    return out;
}

// Operator with Pauli p on the listed sites (0..3), identity elsewhere.
DenseMatrix on_sites(std::initializer_list<std::pair<int, int>> factors) {
    std::array<int, 4> p{0, 0, 0, 0};
    for(auto [site, which] : factors) p[static_cast<std::size_t>(site)] = which;
    return pauli_string(static_cast<std::size_t>(64 * p[0] + 16 * p[1] + 4 * p[2] + p[3]));
}

DenseMatrix zz(int s, int t) { return on_sites({{s, 3}, {t, 3}}); }

DenseMatrix dot(int s, int t) {
    DenseMatrix out = DenseMatrix::Zero(kPairDim, kPairDim);
    for(int p = 1; p <= 3; ++p) out += on_sites({{s, p}, {t, p}});
    return out;
}

// Site numbers: 0 = i, 1 = i', 2 = i+1, 3 = i'+1. Rung terms (J3, J8) are global couplings
// shared by the two plaquettes that contain the rung, hence the 1/2.
DenseMatrix build_coupling_operator(std::size_t k) {
    switch(k) {
        case 0: return 2.0 * DenseMatrix::Identity(kPairDim, kPairDim);
        case 1: return zz(0, 2) + zz(1, 3);
        case 2: return dot(0, 2) + dot(1, 3);
        case 3: return 0.5 * (dot(0, 1) + dot(2, 3));
        case 4: return dot(0, 3) + dot(1, 2);
        case 5: return dot(0, 1) * dot(2, 3);
        case 6: return dot(0, 2) * dot(1, 3);
        case 7: return dot(0, 3) * dot(1, 2);
        case 8: return 0.5 * (zz(0, 1) + zz(2, 3));
        case 9: return zz(0, 3) + zz(1, 2);
        case 10: return on_sites({{0, 3}, {1, 3}, {2, 3}, {3, 3}});
        case 11: return zz(0, 1) * dot(2, 3) + zz(2, 3) * dot(0, 1);
        case 12: return zz(0, 2) * dot(1, 3) + zz(1, 3) * dot(0, 2);
        case 13: return zz(0, 3) * dot(1, 2) + zz(1, 2) * dot(0, 3);
        default: throw ParameterError("coupling index " + std::to_string(k) + " out of range");
    }
}

const std::array<RealMatrix, kCouplingCount> &coupling_operators() {
    static const auto ops = [] {
        std::array<RealMatrix, kCouplingCount> out;
        for(std::size_t k = 0; k < kCouplingCount; ++k) out[k] = build_coupling_operator(k).real();
        return out;
    }();
    return ops;
}

const std::array<DenseMatrix, 256> &pauli_strings() {
    static const auto strings = [] {
        std::array<DenseMatrix, 256> out;
        for(std::size_t i = 0; i < 256; ++i) out[i] = pauli_string(i);
        return out;
    }();
    return strings;
}

Eigen::Map<const RealVector> as_vector(const std::array<double, 256> &a) { return {a.data(), 256}; }

} // namespace

DenseMatrix constraint_matrix(const LadderMPS &mps) {
    const auto  d = static_cast<Eigen::Index>(mps.bond_dim());
    DenseMatrix m = DenseMatrix::Zero(d * d, kPairDim);
    for(int first = 0; first < kRungDim; ++first) {
        for(int second = 0; second < kRungDim; ++second) {
            const RealMatrix product = mps[first] * mps[second];
            for(Eigen::Index alpha = 0; alpha < d; ++alpha)
                for(Eigen::Index beta = 0; beta < d; ++beta) m(alpha * d + beta, first * kRungDim + second) = product(alpha, beta);
        }
    }
    return m;
}

std::string MultipletLabel::name() const { return std::to_string(l) + (primed ? "'" : "") + "," + std::to_string(m); }

const MultipletVector &MultipletBasis::at(const MultipletLabel &label) const {
    for(const auto &v : vectors)
        if(v.label == label) return v;
    throw ParameterError("multiplet basis has no vector " + label.name());
}

RealMatrix MultipletBasis::columns() const {
    RealMatrix out(kPairDim, static_cast<Eigen::Index>(vectors.size()));
    for(std::size_t c = 0; c < vectors.size(); ++c) out.col(static_cast<Eigen::Index>(c)) = vectors[c].vector;
    return out;
}

MultipletBasis multiplet_basis(double a, double g, int epsilon, int sigma) {
    const double e  = epsilon;
    const double se = sigma * epsilon;
    const double s  = sigma;

    std::vector<std::pair<MultipletLabel, RealVector>> raw;
    raw.push_back({{2, false, 2}, ket("0000")});
    raw.push_back({{2, false, 1}, 0.5 * (-e * ket("0001") + ket("0010") - e * ket("0100") + ket("1000"))});
    raw.push_back({{2, false, 0},
                   (1.0 / std::sqrt(6.0)) * (-4.0 * a * a * (ket("0011") + ket("1100")) +
                                             g * (ket("0101") + se * ket("0110") + se * ket("1001") + ket("1010")))});
    raw.push_back({{1, false, 1}, 0.5 * (e * ket("0001") + ket("0010") - e * ket("0100") - ket("1000"))});
    raw.push_back({{1, false, 0}, (ket("0110") - ket("1001")) / std::sqrt(2.0)});
    raw.push_back({{1, true, 1}, 0.5 * (-se * ket("0001") + ket("0010") + e * ket("0100") - s * ket("1000"))});
    raw.push_back({{1, true, 0}, (ket("0101") - ket("1010")) / std::sqrt(2.0)});
    raw.push_back({{0, false, 0}, 0.5 * (ket("0101") - se * ket("0110") - se * ket("1001") + ket("1010"))});

    const RealMatrix flip = flip_all();
    const std::size_t positive = raw.size();
    for(std::size_t i = 0; i < positive; ++i) {
        if(raw[i].first.m == 0) continue;
        MultipletLabel partner = raw[i].first;
        partner.m              = -partner.m;
        raw.push_back({partner, flip * raw[i].second});
    }

    MultipletBasis basis;
    basis.a       = a;
    basis.g       = g;
    basis.epsilon = epsilon;
    basis.sigma   = sigma;

    const DenseMatrix constraint = constraint_matrix(build_class_a(a, g, epsilon, sigma));
    for(auto &[label, v] : raw) {
        const double norm = v.norm();
        if(norm == 0.0) throw StructureError("multiplet " + label.name() + " vanishes");
        const RealVector unit     = v / norm;
        const double     residual = (constraint * to_complex(unit)).cwiseAbs().maxCoeff();
        if(residual > kBasisTolerance)
            throw StructureError("multiplet " + label.name() + " is outside the null space (residual " + std::to_string(residual) + ")");
        basis.vectors.push_back({label, unit, norm});
    }
    return basis;
}

double WeightSet::weight(const MultipletLabel &label) const {
    const int m = std::abs(label.m);
    if(label.l == 2) return m == 2 ? mu22 : (m == 1 ? mu21 : mu20);
    if(label.l == 1 && !label.primed) return m == 1 ? mu11 : mu10;
    if(label.l == 1) return m == 1 ? mu1p1 : mu1p0;
    return mu00;
}

std::array<double, 8> WeightSet::values() const { return {mu22, mu21, mu20, mu11, mu10, mu1p1, mu1p0, mu00}; }

const std::array<const char *, 8> &WeightSet::keys() {
    static const std::array<const char *, 8> k{"mu22", "mu21", "mu20", "mu11", "mu10", "mu1p1", "mu1p0", "mu00"};
    return k;
}

void WeightSet::validate() const {
    const auto v = values();
    for(std::size_t i = 0; i < v.size(); ++i)
        if(!(v[i] >= 0.0)) throw ParameterError(std::string("weight ") + keys()[i] + " must be nonnegative");
}

WeightSet rotational_weights(double mu, double nu, double xi, double eta) {
    return {6 * mu, 6 * mu, 6 * mu, 2 * nu, 2 * nu, 2 * xi, 2 * xi, 2 * eta};
}

LocalHamiltonian local_h(const MultipletBasis &basis, const WeightSet &weights) {
    weights.validate();
    RealMatrix h = RealMatrix::Zero(kPairDim, kPairDim);
    for(const auto &v : basis.vectors) h += weights.weight(v.label) * v.vector * v.vector.transpose();
    return {h, basis, weights};
}

RealMatrix embed_global(const RealMatrix &h, std::size_t n_rungs) {
    if(n_rungs < 2) throw ParameterError("embed_global: need N >= 2");
    if(n_rungs > kMaxEmbedRungs) throw ParameterError("embed_global: N = " + std::to_string(n_rungs) + " is too large for a dense embedding (max 6)");
    if(h.rows() != kPairDim || h.cols() != kPairDim) throw DimensionError("embed_global: h must be 16x16");

    const std::size_t dim = power4(n_rungs);
    RealMatrix        out = RealMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for(std::size_t l = 0; l < n_rungs; ++l) {
        const std::size_t next = (l + 1) % n_rungs;
        const std::size_t wl   = power4(n_rungs - 1 - l);
        const std::size_t wn   = power4(n_rungs - 1 - next);
        for(std::size_t col = 0; col < dim; ++col) {
            const std::size_t dl   = (col / wl) % 4;
            const std::size_t dn   = (col / wn) % 4;
            const std::size_t base = col - dl * wl - dn * wn;
            const std::size_t in   = dl * 4 + dn;
            for(std::size_t out_idx = 0; out_idx < static_cast<std::size_t>(kPairDim); ++out_idx) {
                const double w = h(static_cast<Eigen::Index>(out_idx), static_cast<Eigen::Index>(in));
                if(w == 0.0) continue;
                const std::size_t row = base + (out_idx / 4) * wl + (out_idx % 4) * wn;
                out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += w;
            }
        }
    }
    return out;
}

std::vector<double> apply_global(const RealMatrix &h, std::size_t n_rungs, const std::vector<double> &psi) {
    if(n_rungs < 2) throw ParameterError("apply_global: need N >= 2");
    const std::size_t dim = power4(n_rungs);
    if(psi.size() != dim) throw DimensionError("apply_global: state has the wrong dimension");
    std::vector<double> out(dim, 0.0);
    for(std::size_t l = 0; l < n_rungs; ++l) {
        const std::size_t next = (l + 1) % n_rungs;
        const std::size_t wl   = power4(n_rungs - 1 - l);
        const std::size_t wn   = power4(n_rungs - 1 - next);
        for(std::size_t col = 0; col < dim; ++col) {
            if(psi[col] == 0.0) continue;
            const std::size_t dl   = (col / wl) % 4;
            const std::size_t dn   = (col / wn) % 4;
            const std::size_t base = col - dl * wl - dn * wn;
            const std::size_t in   = dl * 4 + dn;
            for(std::size_t o = 0; o < static_cast<std::size_t>(kPairDim); ++o)
                out[base + (o / 4) * wl + (o % 4) * wn] += h(static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(in)) * psi[col];
        }
    }
    return out;
}

std::string pauli_name(std::size_t index) {
    static constexpr char letters[] = {'I', 'X', 'Y', 'Z'};
    std::string           out;
    for(int shift : {6, 4, 2, 0}) out.push_back(letters[(index >> shift) & 3]);
    return out;
}

std::array<double, 256> pauli_coefficients(const RealMatrix &op) {
    if(op.rows() != kPairDim || op.cols() != kPairDim) throw DimensionError("pauli_coefficients: operator must be 16x16");
    std::array<double, 256> out{};
    const DenseMatrix       c = to_complex(op);
    const auto             &strings = pauli_strings();
    // Real symmetric operators have real coefficients.
    for(std::size_t i = 0; i < 256; ++i) out[i] = (c * strings[i]).trace().real() / kPairDim;
    return out;
}

RealMatrix coupling_operator(std::size_t k) {
    if(k >= kCouplingCount) throw ParameterError("coupling index " + std::to_string(k) + " out of range");
    return coupling_operators()[k];
}

RealMatrix reassemble(const CouplingSet &couplings) {
    RealMatrix out = RealMatrix::Zero(kPairDim, kPairDim);
    for(std::size_t k = 0; k < kCouplingCount; ++k) out += couplings.J[k] * coupling_operators()[k];
    return out;
}

PauliExpansion pauli_expand(const RealMatrix &h, double tol) {
    PauliExpansion out;
    out.coefficients = pauli_coefficients(8.0 * h);

    static const RealMatrix design = [] {
        RealMatrix d(256, static_cast<Eigen::Index>(kCouplingCount));
        for(std::size_t k = 0; k < kCouplingCount; ++k)
            d.col(static_cast<Eigen::Index>(k)) = as_vector(pauli_coefficients(coupling_operators()[k]));
        return d;
    }();

    const RealVector target = as_vector(out.coefficients);
    const RealVector fit    = design.colPivHouseholderQr().solve(target);
    for(std::size_t k = 0; k < kCouplingCount; ++k) out.couplings.J[k] = fit(static_cast<Eigen::Index>(k));

    const RealVector residual = target - design * fit;
    for(std::size_t i = 0; i < 256; ++i) {
        const double r          = std::abs(residual(static_cast<Eigen::Index>(i)));
        out.structural_residual = std::max(out.structural_residual, r);
        if(r > tol) out.residual_terms.emplace_back(pauli_name(i), residual(static_cast<Eigen::Index>(i)));
    }
    if(!out.residual_terms.empty())
        throw StructureError("pauli_expand: " + std::to_string(out.residual_terms.size()) +
                             " Pauli terms outside the ladder coupling structure, largest " + std::to_string(out.structural_residual) +
                             " (first: " + out.residual_terms.front().first + ")");
    return out;
}

CouplingSet coupling_formulas(double a, double g, int epsilon, int sigma, const WeightSet &w) {
    const double e = epsilon, s = sigma, se = sigma * epsilon;
    const double a2 = a * a, a4 = a2 * a2, g2 = g * g;
    CouplingSet  c;
    auto        &J = c.J;
    J[0] = w.mu22 + 4.0 * (w.mu21 + w.mu11 + w.mu1p1) + w.mu10 - w.mu1p0 + 2.0 * (w.mu00 + w.mu20) + 16.0 * a4 * w.mu20;
    J[1] = w.mu22 + 0.5 * (-w.mu21 + w.mu11 + s * w.mu1p1 + w.mu1p0 - w.mu10) + 4.0 / 3.0 * a2 * (g * se - 2.0 * a2) * w.mu20;
    J[2] = 0.5 * (w.mu21 - w.mu11 - s * w.mu1p1) - 4.0 / 3.0 * se * a2 * g * w.mu20;
    J[3] = -e * (w.mu21 - w.mu11) - se * w.mu1p1 + se * (2.0 / 3.0 * g2 * w.mu20 - w.mu00);
    J[4] = -0.5 * e * (w.mu21 + w.mu11 - w.mu1p1) - 4.0 / 3.0 * a2 * g * w.mu20;
    J[5] = 0.5 * (w.mu00 - w.mu10 - w.mu1p0) + 1.0 / 3.0 * w.mu20 * (g2 - 8.0 * a4);
    J[6] = 8.0 / 3.0 * a4 * w.mu20 + 0.5 * (w.mu1p0 - w.mu10);
    J[7] = 8.0 / 3.0 * a4 * w.mu20 + 0.5 * (w.mu10 - w.mu1p0);
    J[8] = 2.0 * w.mu22 + e * (w.mu21 - w.mu11) + se * w.mu1p1 - w.mu10 - w.mu1p0 + (se - 1.0) * w.mu00 +
           2.0 / 3.0 * w.mu20 * (8.0 * a4 - (1.0 + se) * g2);
    J[9]  = w.mu22 + 0.5 * e * (w.mu21 + w.mu11 - w.mu1p1) + 0.5 * (w.mu10 - w.mu1p0) + 4.0 / 3.0 * a2 * (g - 2.0 * a2) * w.mu20;
    J[10] = w.mu22 + 2.0 * (e - 1.0) * w.mu21 + (e + 1.0) * (s - 1.0) * w.mu1p1 + (1.0 - se) * w.mu00 + 2.0 / 3.0 * (1.0 + se) * g2 * w.mu20 +
            8.0 / 3.0 * a2 * (2.0 * a2 - g - g * se) * w.mu20;
    J[11] = 0.5 * (-e * w.mu21 + e * w.mu11 - se * w.mu1p1 + w.mu10 + w.mu1p0) + 0.5 * (se - 1.0) * w.mu00 +
            w.mu20 / 3.0 * (8.0 * a4 - (1.0 + se) * g2);
    J[12] = 0.5 * (w.mu21 - w.mu11 - s * w.mu1p1 + w.mu10 - w.mu1p0) - 4.0 / 3.0 * a2 * (2.0 * a2 - g * se) * w.mu20;
    J[13] = 0.5 * (-e * w.mu21 - e * w.mu11 + e * w.mu1p1 - w.mu10 + w.mu1p0) + 4.0 / 3.0 * a2 * w.mu20 * (g - 2.0 * a2);
    return c;
}

} // namespace ladder
