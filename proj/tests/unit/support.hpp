#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "ladder/model_families.hpp"
#include "ladder/mps_core.hpp"

namespace ladder::fixtures {

inline constexpr double kPi = 3.14159265358979323846;

/// Random spin-flip-type model drawn from one of the built-in families.
struct RandomModels {
    std::mt19937_64 rng;

    explicit RandomModels(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
    int    sign() { return std::bernoulli_distribution(0.5)(rng) ? 1 : -1; }

    // |g| bounded away from zero so the top eigenvalue stays simple.
    double coupling() { return sign() * uniform(0.05, 2.0); }

    LadderMPS spin_flip() { return build_spin_flip(uniform(-2.0, 2.0), uniform(-2.0, 2.0), coupling(), sign()); }
    LadderMPS class_a() { return build_class_a(sign() * uniform(0.2, 2.0), coupling(), sign(), sign()); }
    LadderMPS class_b() { return build_class_b(uniform(-3.0, 3.0)); }

    LadderMPS any() {
        switch(std::uniform_int_distribution<int>(0, 2)(rng)) {
            case 0: return spin_flip();
            case 1: return class_a();
            default: return class_b();
        }
    }
};

/// E built by explicit index loops, no Kronecker helper.
inline Eigen::MatrixXd naive_transfer(const LadderMPS &mps) {
    const auto      d = mps.A[0].rows();
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(d * d, d * d);
    for(const auto &a : mps.A)
        for(Eigen::Index i = 0; i < d; ++i)
            for(Eigen::Index j = 0; j < d; ++j)
                for(Eigen::Index k = 0; k < d; ++k)
                    for(Eigen::Index l = 0; l < d; ++l) e(i * d + k, j * d + l) += a(i, j) * a(k, l);
    return e;
}

/// Wootters concurrence from the literal definition: sqrt of the eigenvalues of rho (sy sy) rho* (sy sy).
inline double wootters_by_definition(const Eigen::MatrixXcd &rho) {
    Eigen::Matrix2cd sy;
    sy << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
    Eigen::Matrix4cd yy;
    for(int i = 0; i < 2; ++i)
        for(int j = 0; j < 2; ++j)
            for(int k = 0; k < 2; ++k)
                for(int l = 0; l < 2; ++l) yy(2 * i + k, 2 * j + l) = sy(i, j) * sy(k, l);
    const Eigen::Matrix4cd     tilde = yy * rho.conjugate() * yy;
    const Eigen::Matrix4cd     prod  = rho * tilde;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(prod);
    std::vector<double>        roots;
    for(int i = 0; i < 4; ++i) roots.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()(i).real())));
    std::sort(roots.rbegin(), roots.rend());
    return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

/// Ascending eigenvalues of a Hermitian matrix.
inline std::vector<double> sorted_eigenvalues(const Eigen::MatrixXcd &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    std::vector<double>                             out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    return out;
}

} // namespace ladder::fixtures
