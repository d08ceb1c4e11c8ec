#pragma once

#include <Eigen/Dense>

#include <utility>

namespace mvcomp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Relative eigenvalue threshold below which a direction of E is treated as
// degenerate in gen_eig_spd (raw-count data makes E rank-deficient because
// tp+fn+fp+tn is (near-)constant per fold).
inline constexpr double kRankTol = 1e-9;

enum class CovDenominator {
    sample,      // k - 1, the unbiased estimate used by the tests
    population,  // k, Mardia's convention
};

// Column mean and covariance of a k x p sample matrix, k >= 2.
std::pair<Vector, Matrix> mean_and_covariance(
    const Matrix& rows, CovDenominator denom = CovDenominator::sample);

// Lower Cholesky factor of a symmetric positive definite matrix. Only the
// lower triangle of a is read. Throws SingularCovarianceError with the pivot
// index when a pivot falls below tolerance.
Matrix cholesky_spd(const Matrix& a);

// Solves a x = b for symmetric positive definite a via Cholesky.
Vector solve_spd(const Matrix& a, const Vector& b);

double determinant(const Matrix& a);

struct EigenResult {
    Vector eigenvalues;   // descending, length = effective_rank
    Matrix eigenvectors;  // p x effective_rank, unit columns
    int effective_rank = 0;
};

// Generalized symmetric-definite eigenproblem H v = lambda E v, restricted to
// the subspace where E is nondegenerate: eigendirections of E with eigenvalue
// <= kRankTol * max eigenvalue are discarded, H is whitened on the retained
// subspace and eigendecomposed there, and the vectors are mapped back,
// normalized, and sign-fixed (largest-magnitude entry positive). At most
// max_components components with lambda > kRankTol are returned.
EigenResult gen_eig_spd(const Matrix& h, const Matrix& e, int max_components);

}  // namespace mvcomp
