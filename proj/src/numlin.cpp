#include "mvcomp/numlin.hpp"

#include "mvcomp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace mvcomp {

namespace {
constexpr double kPivotTol = 1e-12;
}

std::pair<Vector, Matrix> mean_and_covariance(const Matrix& rows,
                                              CovDenominator denom) {
    const Eigen::Index k = rows.rows();
    if (k < 2) {
        throw ValidationError("mean_and_covariance requires at least 2 rows, got " +
                              std::to_string(k));
    }
    Vector mean = rows.colwise().mean();
    Matrix centered = rows.rowwise() - mean.transpose();
    const double div =
        denom == CovDenominator::sample ? double(k - 1) : double(k);
    Matrix cov = (centered.transpose() * centered) / div;
    return {std::move(mean), std::move(cov)};
}

Matrix cholesky_spd(const Matrix& a) {
    const Eigen::Index p = a.rows();
    // Pivot tolerance is relative to the largest diagonal entry.
    const double scale = std::max(a.diagonal().cwiseAbs().maxCoeff(), 1e-300);
    Matrix l = Matrix::Zero(p, p);
    for (Eigen::Index j = 0; j < p; ++j) {
        double d = a(j, j) - l.row(j).head(j).squaredNorm();
        if (d <= kPivotTol * scale) {
            throw SingularCovarianceError(
                "matrix is not positive definite (pivot " + std::to_string(j) +
                    " = " + std::to_string(d) + ")",
                int(j));
        }
        l(j, j) = std::sqrt(d);
        for (Eigen::Index i = j + 1; i < p; ++i) {
            l(i, j) = (a(i, j) - l.row(i).head(j).dot(l.row(j).head(j))) / l(j, j);
        }
    }
    return l;
}

Vector solve_spd(const Matrix& a, const Vector& b) {
    Matrix l = cholesky_spd(a);
    Vector y = l.triangularView<Eigen::Lower>().solve(b);
    return l.transpose().triangularView<Eigen::Upper>().solve(y);
}

double determinant(const Matrix& a) { return a.determinant(); }

EigenResult gen_eig_spd(const Matrix& h, const Matrix& e, int max_components) {
    const Eigen::Index p = e.rows();
    Eigen::SelfAdjointEigenSolver<Matrix> es(e);
    if (es.info() != Eigen::Success) {
        throw SingularScatterError("eigendecomposition of E failed");
    }
    const double emax = es.eigenvalues().maxCoeff();
    if (!(emax > 0.0)) {
        throw SingularScatterError("scatter matrix E is numerically zero");
    }

    // Retained subspace of E: eigenvalues above the relative rank tolerance.
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < p; ++i) {
        if (es.eigenvalues()(i) > kRankTol * emax) keep.push_back(i);
    }
    const Eigen::Index r = Eigen::Index(keep.size());
    Matrix whitener(p, r);  // W = U_r D_r^{-1/2}, so W^T E W = I_r
    for (Eigen::Index c = 0; c < r; ++c) {
        whitener.col(c) =
            es.eigenvectors().col(keep[size_t(c)]) / std::sqrt(es.eigenvalues()(keep[size_t(c)]));
    }

    Matrix m = whitener.transpose() * h * whitener;
    m = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> esm(m);
    if (esm.info() != Eigen::Success) {
        throw SingularScatterError("eigendecomposition of whitened H failed");
    }

    // esm orders ascending; walk from the top, keep lambda > kRankTol.
    std::vector<Eigen::Index> order(size_t(r));
    std::iota(order.begin(), order.end(), 0);
    std::reverse(order.begin(), order.end());

    const Eigen::Index limit = std::min<Eigen::Index>(r, std::max(max_components, 0));
    EigenResult result;
    result.eigenvalues.resize(limit);
    result.eigenvectors.resize(p, limit);
    Eigen::Index n = 0;
    for (Eigen::Index idx : order) {
        if (n >= limit) break;
        const double lambda = esm.eigenvalues()(idx);
        if (!(lambda > kRankTol)) break;
        Vector v = whitener * esm.eigenvectors().col(idx);
        v.normalize();
        Eigen::Index imax;
        v.cwiseAbs().maxCoeff(&imax);
        if (v(imax) < 0.0) v = -v;
        result.eigenvalues(n) = lambda;
        result.eigenvectors.col(n) = v;
        ++n;
    }
    result.eigenvalues.conservativeResize(n);
    result.eigenvectors.conservativeResize(p, n);
    result.effective_rank = int(n);
    return result;
}

}  // namespace mvcomp
