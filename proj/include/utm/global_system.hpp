#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "utm/conditions.hpp"
#include "utm/linalg.hpp"
#include "utm/medium.hpp"
#include "utm/profile.hpp"

namespace utm {

struct RowDesc {
    enum Kind { Global, Condition } kind;
    int side = 0;  // Global: 1 or 2
    int rot = 0;   // Global: rotation index j in alpha^j
    int cond = 0;  // Condition: row of beta
};

std::vector<int> regions_for(SignCase tag);
std::vector<RowDesc> region_rows(SignCase tag, int region);

// sigma_1 Im(alpha^j k) >= 0 for side 1, sigma_2 Im(alpha^j k) <= 0 for side 2
bool row_valid(const RowDesc& row, const Medium& m, cplx k);
// samples the closed sector and throws RegionValidityViolation
void validate_rows(int region, const Medium& m, const std::vector<RowDesc>& rows);

Mat6 system_matrix(const std::vector<RowDesc>& rows, const Medium& m, const Eigen::MatrixXd& beta,
                   cplx k);

struct Assembly {
    Mat6 A;
    Vec6 Y;
};

// Condition rows carry the forcing transform with e^{ik^3 T} parts dropped unless
// full_T > 0, in which case the plain int_0^T transform is used.
Assembly assemble(const std::vector<RowDesc>& rows, const Medium& m, const CanonicalConditionSet& cs,
                  const HalfLineProfile& p1, const HalfLineProfile& p2, cplx k, double full_T = 0.0);

struct DeterminantPolynomial {
    std::array<cplx, 5> c{};  // det A = k^prefactor * sum c_i k^i
    std::array<cplx, 5> unclamped{};  // before rounding-level coefficients are zeroed
    int prefactor = 0;
    double c5 = 0.0;          // aliasing check, should be at rounding level
    double scale = 0.0;
    bool zero = false;
    cplx eval(cplx k) const;
};

int det_prefactor(SignCase tag);
DeterminantPolynomial determinant_polynomial(SignCase tag, int region, const Medium& m,
                                             const Eigen::MatrixXd& beta);
// max(1, 1.5 max|root|, 1.5 max|a|^{1/3}); throws SingularSystem on a zero polynomial
double choose_radius(const std::vector<DeterminantPolynomial>& polys, double exp_rate = 0.0);

Vec6 solve_unknowns(const Mat6& A, const Vec6& Y);

}  // namespace utm
