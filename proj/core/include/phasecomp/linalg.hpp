#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace phasecomp {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Default numerical tolerance used across the library.
inline constexpr double kDefaultTol = 1e-9;

/// Relative asymmetry below which an input is symmetrized instead of rejected.
inline constexpr double kHermitianSlack = 1e-12;

namespace linalg {

double spectral_norm(const ComplexMatrix& m);

/// Returns (m + m*)/2 after checking that m is Hermitian to
/// kHermitianSlack relative to its norm. Throws InvalidArgument otherwise.
ComplexMatrix symmetrized(const ComplexMatrix& m, const char* what = "matrix");

bool is_hermitian(const ComplexMatrix& m, double rel_tol = kHermitianSlack);

/// Smallest eigenvalue of a Hermitian matrix (the lower triangle is read).
double min_eigenvalue(const ComplexMatrix& h);

/// Numerical rank: singular values above tol * sigma_max.
int numerical_rank(const ComplexMatrix& m, double tol);

/// Moore-Penrose pseudoinverse of a Hermitian matrix, eigenvalues with
/// |lambda| <= tol * max|lambda| treated as zero.
ComplexMatrix hermitian_pinv(const ComplexMatrix& h, double tol);

/// Orthonormal basis of the column space, cutoff tol * sigma_max.
ComplexMatrix range_basis(const ComplexMatrix& m, double tol);

/// Orthogonal projector onto the column space of m.
ComplexMatrix range_projector(const ComplexMatrix& m, double tol);

/// Principal submatrix m[idx, idx].
ComplexMatrix principal(const ComplexMatrix& m, std::span<const int> idx);

/// Block m[rows, cols].
ComplexMatrix block(const ComplexMatrix& m, std::span<const int> rows,
                    std::span<const int> cols);

/// Largest absolute entry of a - b, relative to max(1, |b|_max).
double max_rel_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace linalg
}  // namespace phasecomp
