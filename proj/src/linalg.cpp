#include "utm/linalg.hpp"

#include <Eigen/Eigenvalues>

namespace utm {

double row_norm_product(const Mat6& A) {
    double p = 1.0;
    for (int i = 0; i < 6; ++i) p *= A.row(i).norm();
    return p;
}

cplx det6(const Mat6& A) { return A.partialPivLu().determinant(); }

Vec6 solve6(const Mat6& A, const Vec6& y) {
    Eigen::PartialPivLU<Mat6> lu(A);
    double scale = row_norm_product(A);
    if (!(std::abs(lu.determinant()) >= 1e-13 * scale))
        throw Error("NearSingularAtK", "|det A| below 1e-13 times the row-norm product");
    Vec6 x = lu.solve(y);
    double r = (A * x - y).norm();
    if (r > 1e-10 * y.norm())
        throw Error("NearSingularAtK", "residual " + std::to_string(r) + " above 1e-10 |Y|");
    return x;
}

std::vector<cplx> poly_roots(const std::vector<cplx>& c) {
    int n = int(c.size()) - 1;
    double scale = 0.0;
    for (auto& v : c) scale = std::max(scale, std::abs(v));
    while (n > 0 && std::abs(c[n]) <= 1e-14 * scale) --n;
    if (n <= 0) return {};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -c[i] / c[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<cplx> r(n);
    for (int i = 0; i < n; ++i) r[i] = es.eigenvalues()[i];
    return r;
}

}  // namespace utm
