#pragma once

#include <Eigen/Dense>
#include <vector>

#include "utm/core.hpp"

namespace utm {

using Mat6 = Eigen::Matrix<cplx, 6, 6>;
using Vec6 = Eigen::Matrix<cplx, 6, 1>;

double row_norm_product(const Mat6& A);
cplx det6(const Mat6& A);

// partial-pivot solve with the degeneracy and residual checks
Vec6 solve6(const Mat6& A, const Vec6& y);

// roots of sum c[i] k^i via the companion matrix
std::vector<cplx> poly_roots(const std::vector<cplx>& c);

}  // namespace utm
