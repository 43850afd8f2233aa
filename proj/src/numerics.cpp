#include "ladder/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ladder/errors.hpp"

namespace ladder {

namespace {

constexpr std::size_t kMaxEigenDimension = 64;
constexpr double      kOrderTolerance    = 1e-12;
constexpr double      kGroupTolerance    = 1e-9;
constexpr double      kMinRcond          = 1e-10;

// Descending modulus, then descending real part, then descending imaginary part.
bool precedes(const Complex &a, const Complex &b, double tol) {
    if(std::abs(std::abs(a) - std::abs(b)) > tol) return std::abs(a) > std::abs(b);
    if(std::abs(a.real() - b.real()) > tol) return a.real() > b.real();
    return a.imag() > b.imag() + tol;
}

DenseVector smallest_right_singular_vector(const DenseMatrix &m) {
    Eigen::JacobiSVD<DenseMatrix> svd(m, Eigen::ComputeFullV);
    return svd.matrixV().col(m.cols() - 1);
}

} // namespace

DenseMatrix Spectrum::right_matrix() const {
    const auto  n = static_cast<Eigen::Index>(size());
    DenseMatrix v(n, n);
    for(Eigen::Index i = 0; i < n; ++i) v.col(i) = right_vectors[static_cast<std::size_t>(i)];
    return v;
}

DenseMatrix Spectrum::left_matrix() const {
    const auto  n = static_cast<Eigen::Index>(size());
    DenseMatrix w(n, n);
    for(Eigen::Index i = 0; i < n; ++i) w.row(i) = left_vectors[static_cast<std::size_t>(i)].transpose();
    return w;
}

DenseMatrix Spectrum::reconstruct() const {
    const auto  n   = static_cast<Eigen::Index>(size());
    DenseMatrix out = DenseMatrix::Zero(n, n);
    for(std::size_t i = 0; i < size(); ++i) out += eigenvalues[i] * right_vectors[i] * left_vectors[i].transpose();
    return out;
}

Spectrum eigen_decompose(const DenseMatrix &m) {
    if(m.rows() != m.cols())
        throw DimensionError("eigen_decompose: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", not square");
    if(static_cast<std::size_t>(m.rows()) > kMaxEigenDimension)
        throw DimensionError("eigen_decompose: dimension " + std::to_string(m.rows()) + " exceeds 64");
    if(!m.allFinite()) throw DimensionError("eigen_decompose: non-finite entries");

    const auto n = m.rows();
    Spectrum   spec;
    if(n == 0) return spec;

    Eigen::ComplexEigenSolver<DenseMatrix> solver(m, true);
    if(solver.info() != Eigen::Success) throw ConvergenceError("eigen_decompose: QR iteration did not converge");

    const DenseVector &values = solver.eigenvalues();
    double             scale  = 1.0;
    for(Eigen::Index i = 0; i < n; ++i) scale = std::max(scale, std::abs(values(i)));

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return precedes(values(i), values(j), kOrderTolerance * scale); });

    DenseMatrix v(n, n);
    for(Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index src = order[static_cast<std::size_t>(k)];
        spec.eigenvalues.push_back(values(src));
        DenseVector r = solver.eigenvectors().col(src);
        r.normalize();
        v.col(k) = r;
        spec.right_vectors.push_back(r);
    }

    Eigen::JacobiSVD<DenseMatrix> svd_v(v);
    const auto                    &sv    = svd_v.singularValues();
    const double                   rcond = sv(n - 1) / sv(0);
    spec.diagonalizable                  = rcond > kMinRcond;

    if(spec.diagonalizable) {
        const DenseMatrix w = v.inverse();
        for(Eigen::Index k = 0; k < n; ++k) spec.left_vectors.emplace_back(w.row(k).transpose());
    } else {
        // Defective: left vectors one at a time, l^T (m - lambda) = 0.
        const DenseMatrix id = DenseMatrix::Identity(n, n);
        for(Eigen::Index k = 0; k < n; ++k) {
            const Complex lambda = spec.eigenvalues[static_cast<std::size_t>(k)];
            DenseVector   l      = smallest_right_singular_vector((m - lambda * id).transpose());
            const Complex overlap = l.transpose() * spec.right_vectors[static_cast<std::size_t>(k)];
            if(std::abs(overlap) > 1e-8) l /= overlap;
            spec.left_vectors.push_back(l);
        }
    }

    spec.group.resize(static_cast<std::size_t>(n));
    std::iota(spec.group.begin(), spec.group.end(), std::size_t{0});
    for(std::size_t i = 0; i < spec.size(); ++i) {
        for(std::size_t j = 0; j < i; ++j) {
            if(std::abs(spec.eigenvalues[i] - spec.eigenvalues[j]) <= kGroupTolerance * scale) {
                spec.group[i]       = spec.group[j];
                spec.has_degeneracy = true;
                break;
            }
        }
    }
    return spec;
}

std::vector<DenseVector> null_space(const DenseMatrix &m, double tol) {
    std::vector<DenseVector> basis;
    const auto               cols = m.cols();
    if(cols == 0) return basis;
    if(m.rows() == 0) {
        for(Eigen::Index j = 0; j < cols; ++j) basis.emplace_back(DenseVector::Unit(cols, j));
        return basis;
    }
    Eigen::JacobiSVD<DenseMatrix> svd(m, Eigen::ComputeFullV);
    const auto                   &sv        = svd.singularValues();
    const double                  sigma_max = sv.size() > 0 ? sv(0) : 0.0;
    Eigen::Index                  rank      = 0;
    for(Eigen::Index i = 0; i < sv.size(); ++i)
        if(sigma_max > 0.0 && sv(i) > tol * sigma_max) ++rank;
    for(Eigen::Index j = rank; j < cols; ++j) basis.emplace_back(svd.matrixV().col(j));
    return basis;
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for(Eigen::Index i = 0; i < a.rows(); ++i)
        for(Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

DenseMatrix partial_trace(const DenseMatrix &m, std::span<const std::size_t> keep, std::size_t local_dim) {
    if(m.rows() != m.cols()) throw DimensionError("partial_trace: matrix not square");
    if(local_dim < 2) throw DimensionError("partial_trace: local dimension must be >= 2");

    std::size_t sites = 0;
    std::size_t dim   = 1;
    while(dim < static_cast<std::size_t>(m.rows())) {
        dim *= local_dim;
        ++sites;
    }
    if(dim != static_cast<std::size_t>(m.rows()))
        throw DimensionError("partial_trace: dimension " + std::to_string(m.rows()) + " is not a power of " + std::to_string(local_dim));

    std::vector<std::size_t> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    for(auto s : kept)
        if(s >= sites) throw DimensionError("partial_trace: site " + std::to_string(s) + " out of range");

    std::vector<std::size_t> traced;
    for(std::size_t s = 0; s < sites; ++s)
        if(!std::binary_search(kept.begin(), kept.end(), s)) traced.push_back(s);

    auto power = [local_dim](std::size_t e) {
        std::size_t p = 1;
        for(std::size_t i = 0; i < e; ++i) p *= local_dim;
        return p;
    };
    const std::size_t kept_dim   = power(kept.size());
    const std::size_t traced_dim = power(traced.size());

    // Place the digits of `value` (most significant first) onto the listed site positions.
    auto scatter = [&](std::size_t value, const std::vector<std::size_t> &positions) {
        std::size_t full = 0;
        for(std::size_t k = positions.size(); k-- > 0;) {
            full += (value % local_dim) * power(sites - 1 - positions[k]);
            value /= local_dim;
        }
        return full;
    };

    DenseMatrix out = DenseMatrix::Zero(static_cast<Eigen::Index>(kept_dim), static_cast<Eigen::Index>(kept_dim));
    for(std::size_t t = 0; t < traced_dim; ++t) {
        const std::size_t offset = scatter(t, traced);
        for(std::size_t r = 0; r < kept_dim; ++r) {
            const std::size_t row = offset + scatter(r, kept);
            for(std::size_t c = 0; c < kept_dim; ++c) {
                const std::size_t col = offset + scatter(c, kept);
                out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) +=
                    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
            }
        }
    }
    return out;
}

bool is_hermitian(const DenseMatrix &m, double tol) {
    return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

RealVector hermitian_eigenvalues(const DenseMatrix &m) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m, Eigen::EigenvaluesOnly);
    if(solver.info() != Eigen::Success) throw ConvergenceError("hermitian_eigenvalues: solver did not converge");
    return solver.eigenvalues();
}

DenseMatrix hermitian_exp(const DenseMatrix &h, Complex factor) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(h);
    if(solver.info() != Eigen::Success) throw ConvergenceError("hermitian_exp: solver did not converge");
    DenseVector phases = (factor * solver.eigenvalues().cast<Complex>()).array().exp();
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

DenseMatrix to_complex(const RealMatrix &m) { return m.cast<Complex>(); }

double max_abs(const DenseMatrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

} // namespace ladder
