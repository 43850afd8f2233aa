#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ladder {

using Complex     = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;
using RealMatrix  = Eigen::MatrixXd;
using RealVector  = Eigen::VectorXd;

inline constexpr double kNullSpaceTolerance = 1e-9;

/// Eigen-decomposition of a square matrix.
///
/// Eigenvalues are sorted by descending modulus; ties are broken by descending real part, then
/// by descending imaginary part. Right vectors have unit norm. Left vectors are stored as
/// coefficient columns l with l^T A = lambda l^T and l^T r = 1 for the matching pair.
struct Spectrum {
    std::vector<Complex>     eigenvalues;
    std::vector<DenseVector> right_vectors;
    std::vector<DenseVector> left_vectors;
    std::vector<std::size_t> group;          // eigenvalues sharing a group id are degenerate
    bool                     has_degeneracy = false;
    bool                     diagonalizable = true;

    [[nodiscard]] std::size_t size() const { return eigenvalues.size(); }
    /// Sum_i lambda_i r_i l_i^T. Equals the input when diagonalizable.
    [[nodiscard]] DenseMatrix reconstruct() const;
    /// Matrix of right vectors (columns) and its biorthogonal inverse (rows are left vectors).
    [[nodiscard]] DenseMatrix right_matrix() const;
    [[nodiscard]] DenseMatrix left_matrix() const;
};

Spectrum eigen_decompose(const DenseMatrix &m);

/// Orthonormal basis of {v : m v = 0}, using singular values <= tol * sigma_max.
std::vector<DenseVector> null_space(const DenseMatrix &m, double tol = kNullSpaceTolerance);

/// (a (x) b)[(i,k),(j,l)] = a[i,j] b[k,l], composite index i * rows(b) + k.
DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b);

/// Trace over every site not listed in `keep`. Sites are numbered 0..n-1 with site 0 the most
/// significant digit of the composite index; kept sites retain their relative order.
DenseMatrix partial_trace(const DenseMatrix &m, std::span<const std::size_t> keep, std::size_t local_dim);

// Small helpers shared by the physics modules.
bool        is_hermitian(const DenseMatrix &m, double tol);
RealVector  hermitian_eigenvalues(const DenseMatrix &m); // ascending
DenseMatrix hermitian_exp(const DenseMatrix &h, Complex factor); // exp(factor * h) for Hermitian h
DenseMatrix to_complex(const RealMatrix &m);
double      max_abs(const DenseMatrix &m);

} // namespace ladder
