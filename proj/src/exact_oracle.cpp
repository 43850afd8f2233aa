#include "ladder/exact_oracle.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>

#include "ladder/errors.hpp"

namespace ladder {

namespace {

std::size_t power4(std::size_t n) { return std::size_t{1} << (2 * n); }

void require_rungs(std::size_t n, std::string_view what) {
    if(n == 0) throw ParameterError(std::string(what) + ": N must be >= 1");
    if(n > kMaxOracleRungs)
        throw ParameterError(std::string(what) + ": N = " + std::to_string(n) + " exceeds the dense limit of " + std::to_string(kMaxOracleRungs));
}

std::size_t digit_weight(const DenseState &state, std::size_t site) {
    if(site < 1 || site > state.N)
        throw ParameterError("rung index " + std::to_string(site) + " outside 1.." + std::to_string(state.N));
    return power4(state.N - site);
}

// Applies a 4x4 operator to one rung of a complex state vector.
void apply_rung(std::vector<Complex> &psi, const DenseMatrix &op, std::size_t weight) {
    const std::size_t block = 4 * weight;
    Complex           in[4];
    for(std::size_t start = 0; start < psi.size(); start += block) {
        for(std::size_t low = 0; low < weight; ++low) {
            for(std::size_t d = 0; d < 4; ++d) in[d] = psi[start + d * weight + low];
            for(std::size_t r = 0; r < 4; ++r) {
                Complex acc = 0.0;
                for(std::size_t c = 0; c < 4; ++c) acc += op(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
                psi[start + r * weight + low] = acc;
            }
        }
    }
}

double squared_norm(const std::vector<double> &v) {
    double s = 0.0;
    for(double x : v) s += x * x;
    return s;
}

DenseState product_pair(std::size_t n_rungs, int first, int second) {
    DenseState state;
    state.N = n_rungs;
    state.amplitudes.assign(power4(n_rungs), 0.0);
    std::size_t even = 0, odd = 0;
    for(std::size_t k = 0; k < n_rungs; ++k) {
        even = 4 * even + static_cast<std::size_t>(k % 2 == 0 ? first : second);
        odd  = 4 * odd + static_cast<std::size_t>(k % 2 == 0 ? second : first);
    }
    state.amplitudes[even] += 1.0 / std::sqrt(2.0);
    state.amplitudes[odd] += 1.0 / std::sqrt(2.0);
    return state;
}

template <typename T>
void write_le(std::ofstream &out, T value) {
    unsigned char bytes[sizeof(T)];
    std::memcpy(bytes, &value, sizeof(T));
    if constexpr(std::endian::native == std::endian::big)
        for(std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(bytes[i], bytes[sizeof(T) - 1 - i]);
    out.write(reinterpret_cast<const char *>(bytes), sizeof(T));
}

template <typename T>
T read_le(std::ifstream &in) {
    unsigned char bytes[sizeof(T)];
    if(!in.read(reinterpret_cast<char *>(bytes), sizeof(T))) throw DimensionError("read_state: truncated file");
    if constexpr(std::endian::native == std::endian::big)
        for(std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(bytes[i], bytes[sizeof(T) - 1 - i]);
    T value;
    std::memcpy(&value, bytes, sizeof(T));
    return value;
}

} // namespace

double DenseState::norm() const { return std::sqrt(squared_norm(amplitudes)); }

DenseState DenseState::normalized() const {
    const double n = norm();
    if(n == 0.0) throw DegenerateStateError("dense state has zero norm");
    DenseState out = *this;
    for(double &x : out.amplitudes) x /= n;
    return out;
}

DenseState build_state(const LadderMPS &mps, std::size_t n_rungs) {
    require_rungs(n_rungs, "build_state");
    DenseState state;
    state.N = n_rungs;
    state.amplitudes.resize(power4(n_rungs));

    // prefix[k] holds A_{c1} ... A_{c(k+1)}; only the changed tail is recomputed per configuration.
    std::vector<RealMatrix> prefix(n_rungs);
    std::vector<int>        digits(n_rungs, 0);
    prefix[0] = mps[0];
    for(std::size_t k = 1; k < n_rungs; ++k) prefix[k].noalias() = prefix[k - 1] * mps[0];

    for(std::size_t index = 0;; ++index) {
        state.amplitudes[index] = prefix[n_rungs - 1].trace();
        if(index + 1 == state.amplitudes.size()) break;
        std::size_t pos = n_rungs - 1;
        while(digits[pos] == 3) digits[pos--] = 0;
        ++digits[pos];
        for(std::size_t k = pos; k < n_rungs; ++k) {
            if(k == 0) prefix[0] = mps[digits[0]];
            else prefix[k].noalias() = prefix[k - 1] * mps[digits[k]];
        }
    }
    return state;
}

double expectation(const DenseState &state, std::span<const Placement> placements) {
    const double norm2 = squared_norm(state.amplitudes);
    if(norm2 == 0.0) throw DegenerateStateError("expectation: zero state");
    std::vector<Complex> phi(state.amplitudes.begin(), state.amplitudes.end());
    std::vector<bool>    used(state.N + 1, false);
    for(const auto &p : placements) {
        const std::size_t w = digit_weight(state, p.site);
        if(used[p.site]) throw ParameterError("expectation: two operators on rung " + std::to_string(p.site));
        used[p.site] = true;
        apply_rung(phi, p.op->matrix, w);
    }
    Complex acc = 0.0;
    for(std::size_t i = 0; i < phi.size(); ++i) acc += state.amplitudes[i] * phi[i];
    return acc.real() / norm2;
}

double expectation(const DenseState &state, const RungOperator &op, std::size_t site) {
    const Placement p{site, &op};
    return expectation(state, std::span<const Placement>(&p, 1));
}

DenseMatrix reduced(const DenseState &state, std::size_t site) {
    const std::size_t w     = digit_weight(state, site);
    const double      norm2 = squared_norm(state.amplitudes);
    if(norm2 == 0.0) throw DegenerateStateError("reduced: zero state");
    RealMatrix rho = RealMatrix::Zero(4, 4);
    for(std::size_t start = 0; start < state.amplitudes.size(); start += 4 * w)
        for(std::size_t low = 0; low < w; ++low)
            for(std::size_t j = 0; j < 4; ++j)
                for(std::size_t i = 0; i < 4; ++i)
                    rho(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) +=
                        state.amplitudes[start + j * w + low] * state.amplitudes[start + i * w + low];
    return to_complex(rho / norm2);
}

double overlap(const DenseState &x, const DenseState &y) {
    if(x.amplitudes.size() != y.amplitudes.size()) throw DimensionError("overlap: states of different size");
    double dot = 0.0;
    for(std::size_t i = 0; i < x.amplitudes.size(); ++i) dot += x.amplitudes[i] * y.amplitudes[i];
    const double den = x.norm() * y.norm();
    if(den == 0.0) throw DegenerateStateError("overlap: zero state");
    return std::abs(dot) / den;
}

double hamiltonian_residual(const RealMatrix &H, const DenseState &state) {
    const auto dim = static_cast<Eigen::Index>(state.amplitudes.size());
    if(H.rows() != dim || H.cols() != dim) throw DimensionError("hamiltonian_residual: H does not match the state dimension");
    const Eigen::Map<const RealVector> psi(state.amplitudes.data(), dim);
    const double                       n = psi.norm();
    if(n == 0.0) throw DegenerateStateError("hamiltonian_residual: zero state");
    return (H * psi).norm() / n;
}

double local_hamiltonian_residual(const RealMatrix &h, const DenseState &state) {
    if(h.rows() != 16 || h.cols() != 16) throw DimensionError("local_hamiltonian_residual: h must be 16x16");
    if(state.N < 2) throw ParameterError("local_hamiltonian_residual: need N >= 2");
    const double n = state.norm();
    if(n == 0.0) throw DegenerateStateError("local_hamiltonian_residual: zero state");

    std::vector<double> out(state.amplitudes.size(), 0.0);
    for(std::size_t l = 1; l <= state.N; ++l) {
        const std::size_t wl = power4(state.N - l);
        const std::size_t wr = power4(state.N - (l % state.N + 1));
        for(std::size_t c = 0; c < state.amplitudes.size(); ++c) {
            const double amp = state.amplitudes[c];
            if(amp == 0.0) continue;
            const std::size_t dl = (c / wl) % 4, dr = (c / wr) % 4;
            const std::size_t rest = c - dl * wl - dr * wr;
            for(std::size_t r = 0; r < 16; ++r)
                out[rest + (r / 4) * wl + (r % 4) * wr] += h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(dl * 4 + dr)) * amp;
        }
    }
    return std::sqrt(squared_norm(out)) / n;
}

DenseState g_zero_state(double a, double b, int epsilon, std::size_t n_rungs) {
    require_rungs(n_rungs, "g_zero_state");
    DenseState state;
    state.N = n_rungs;
    state.amplitudes.assign(power4(n_rungs), 0.0);
    const double eps = epsilon;
    // Walk the 2^N arrangements of u and d.
    for(std::size_t mask = 0; mask < (std::size_t{1} << n_rungs); ++mask) {
        std::size_t index = 0;
        int         k     = 0;
        for(std::size_t r = 0; r < n_rungs; ++r) {
            const bool up = (mask >> (n_rungs - 1 - r)) & 1U;
            index         = 4 * index + (up ? kUpDown : kDownUp);
            k += up ? 1 : 0;
        }
        const int rest = static_cast<int>(n_rungs) - k;
        state.amplitudes[index] = std::pow(a, k) * std::pow(eps * b, rest) + std::pow(b, k) * std::pow(eps * a, rest);
    }
    return state;
}

double g_zero_norm(double a, double b, std::size_t n_rungs) {
    const double n = static_cast<double>(n_rungs);
    return 2.0 * (std::pow(a * a + b * b, n) + std::pow(2.0 * a * b, n));
}

DenseState ghz_state(std::size_t n_rungs) {
    require_rungs(n_rungs, "ghz_state");
    if(n_rungs % 2 != 0) throw ParameterError("ghz_state: the staggered GHZ state needs an even N");
    return product_pair(n_rungs, kUpUp, kDownDown);
}

DenseState aligned_ghz_state(std::size_t n_rungs) {
    require_rungs(n_rungs, "aligned_ghz_state");
    DenseState state;
    state.N = n_rungs;
    state.amplitudes.assign(power4(n_rungs), 0.0);
    state.amplitudes.front() = 1.0 / std::sqrt(2.0);
    state.amplitudes.back()  = 1.0 / std::sqrt(2.0);
    return state;
}

double ghz_overlap(const LadderMPS &mps, std::size_t n_rungs) { return overlap(ghz_state(n_rungs), build_state(mps, n_rungs)); }

void write_state(const DenseState &state, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if(!out) throw ParameterError("write_state: cannot open " + path.string());
    write_le<std::uint64_t>(out, state.N);
    for(double x : state.amplitudes) write_le<double>(out, x);
    if(!out) throw ParameterError("write_state: write failed for " + path.string());
}

DenseState read_state(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if(!in) throw ParameterError("read_state: cannot open " + path.string());
    DenseState state;
    state.N = static_cast<std::size_t>(read_le<std::uint64_t>(in));
    require_rungs(state.N, "read_state");
    state.amplitudes.resize(power4(state.N));
    for(double &x : state.amplitudes) x = read_le<double>(in);
    return state;
}

} // namespace ladder
