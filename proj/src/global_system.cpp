#include "utm/global_system.hpp"

#include <algorithm>

namespace utm {

std::vector<int> regions_for(SignCase tag) {
    switch (tag) {
        case SignCase::PosNeg: return {5};
        case SignCase::PosPos: return {5, 1, 3};
        case SignCase::NegPos: return {1, 3};
    }
    return {};
}

std::vector<RowDesc> region_rows(SignCase tag, int r) {
    std::vector<RowDesc> rows;
    auto g = [&](int side, int rot) { rows.push_back({RowDesc::Global, side, ((rot % 3) + 3) % 3, 0}); };
    if (tag == SignCase::PosNeg) {
        if (r != 5) throw Error("RegionValidityViolation", "PosNeg uses region 5 only");
        g(1, 1), g(1, 2), g(2, 1), g(2, 2);
    } else if (tag == SignCase::PosPos) {
        if (r != 1 && r != 3 && r != 5) throw Error("RegionValidityViolation", "bad region");
        g(1, r), g(1, r + 2), g(2, r + 1);
    } else {
        if (r != 1 && r != 3) throw Error("RegionValidityViolation", "NegPos uses regions 1, 3");
        g(1, r + 1), g(2, r + 1);
    }
    int m = required_condition_count(tag);
    for (int i = 0; i < m; ++i) rows.push_back({RowDesc::Condition, 0, 0, i});
    return rows;
}

bool row_valid(const RowDesc& row, const Medium& m, cplx k) {
    if (row.kind != RowDesc::Global) return true;
    double im = (alpha_pow(row.rot) * k).imag();
    double tol = 1e-12 * std::abs(k);
    return row.side == 1 ? m.sigma1 * im >= -tol : m.sigma2 * im <= tol;
}

void validate_rows(int region, const Medium& m, const std::vector<RowDesc>& rows) {
    double th0 = region == 1 ? 0.0 : region == 3 ? 2 * pi / 3 : -2 * pi / 3;
    for (int i = 0; i <= 20; ++i) {
        double th = th0 + (pi / 3) * i / 20.0;
        cplx k = std::polar(1.0, th);
        for (auto& row : rows)
            if (!row_valid(row, m, k))
                throw Error("RegionValidityViolation",
                            "side " + std::to_string(row.side) + " rotation " +
                                std::to_string(row.rot) + " invalid on region " +
                                std::to_string(region));
    }
}

Mat6 system_matrix(const std::vector<RowDesc>& rows, const Medium& m, const Eigen::MatrixXd& beta,
                   cplx k) {
    Mat6 A = Mat6::Zero();
    double s1 = m.sigma1, s2 = m.sigma2;
    for (int i = 0; i < 6; ++i) {
        const RowDesc& r = rows[i];
        if (r.kind == RowDesc::Global) {
            cplx K = alpha_pow(r.rot) * k;
            if (r.side == 1) {
                A(i, 0) = -K * K * s1;
                A(i, 1) = I * K * s1 * s1;
                A(i, 2) = s1 * s1 * s1;
            } else {
                A(i, 3) = K * K * s2;
                A(i, 4) = -I * K * s2 * s2;
                A(i, 5) = -s2 * s2 * s2;
            }
        } else {
            for (int j = 0; j < 6; ++j) A(i, j) = beta(r.cond, j);
        }
    }
    return A;
}

Assembly assemble(const std::vector<RowDesc>& rows, const Medium& m, const CanonicalConditionSet& cs,
                  const HalfLineProfile& p1, const HalfLineProfile& p2, cplx k, double full_T) {
    Assembly a;
    a.A = system_matrix(rows, m, cs.beta, k);
    cplx w = I * k * k * k;
    for (int i = 0; i < 6; ++i) {
        const RowDesc& r = rows[i];
        if (r.kind == RowDesc::Global) {
            const HalfLineProfile& p = r.side == 1 ? p1 : p2;
            a.Y(i) = -rotated_transform(p, m, r.rot, k);
        } else {
            const Forcing& f = cs.forcings[r.cond];
            a.Y(i) = full_T > 0.0 ? f.transform(w, full_T) : f.effective_transform(w);
        }
    }
    return a;
}

cplx DeterminantPolynomial::eval(cplx k) const {
    cplx s = 0.0;
    for (int i = 4; i >= 0; --i) s = s * k + c[i];
    return s * std::pow(k, prefactor);
}

int det_prefactor(SignCase tag) {
    return tag == SignCase::PosNeg ? 2 : tag == SignCase::PosPos ? 1 : 0;
}

DeterminantPolynomial determinant_polynomial(SignCase tag, int region, const Medium& m,
                                             const Eigen::MatrixXd& beta) {
    auto rows = region_rows(tag, region);
    DeterminantPolynomial d;
    d.prefactor = det_prefactor(tag);
    // det is homogeneous in (k, sigma): sample on the natural scale
    double rho = std::sqrt(std::abs(m.sigma1 * m.sigma2));
    const double phase = 0.3;
    std::array<cplx, 6> vals;
    double had = 0.0;
    for (int i = 0; i < 6; ++i) {
        cplx k = std::polar(rho, phase + 2 * pi * i / 6);
        Mat6 A = system_matrix(rows, m, beta, k);
        vals[i] = det6(A) / std::pow(k, d.prefactor);
        had = std::max(had, row_norm_product(A));
    }
    d.scale = had / std::pow(rho, d.prefactor);
    std::array<cplx, 6> c;
    for (int j = 0; j < 6; ++j) {
        cplx s = 0.0;
        for (int i = 0; i < 6; ++i) s += vals[i] * std::polar(1.0, -2 * pi * i * j / 6);
        c[j] = s / 6.0 / std::pow(std::polar(rho, phase), j);
    }
    d.c5 = std::abs(c[5]) * std::pow(rho, 5) / d.scale;
    d.zero = true;
    for (int j = 0; j < 5; ++j) {
        d.unclamped[j] = c[j];
        if (std::abs(c[j]) * std::pow(rho, j) <= 1e-10 * d.scale)
            d.c[j] = 0.0;
        else {
            d.c[j] = c[j];
            d.zero = false;
        }
    }
    return d;
}

double choose_radius(const std::vector<DeterminantPolynomial>& polys, double exp_rate) {
    double rmax = 0.0;
    for (auto& p : polys) {
        if (p.zero) throw Error("SingularSystem", "det A is identically zero (det ≡ 0)");
        for (auto& z : poly_roots({p.c.begin(), p.c.end()})) rmax = std::max(rmax, std::abs(z));
    }
    return std::max({1.0, 1.5 * rmax, 1.5 * std::cbrt(exp_rate)});
}

Vec6 solve_unknowns(const Mat6& A, const Vec6& Y) { return solve6(A, Y); }

}  // namespace utm
