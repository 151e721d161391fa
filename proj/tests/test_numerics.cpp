#include <doctest.h>

#include <random>

#include "utm/linalg.hpp"
#include "utm/quadrature.hpp"

using namespace utm;

namespace {

// Laplace expansion along the first row
cplx cofactor_det(const Eigen::MatrixXcd& A) {
    int n = int(A.rows());
    if (n == 1) return A(0, 0);
    cplx s = 0.0;
    for (int j = 0; j < n; ++j) {
        Eigen::MatrixXcd M(n - 1, n - 1);
        for (int r = 1; r < n; ++r)
            for (int c = 0, cc = 0; c < n; ++c)
                if (c != j) M(r - 1, cc++) = A(r, c);
        s += (j % 2 ? -1.0 : 1.0) * A(0, j) * cofactor_det(M);
    }
    return s;
}

Mat6 random_matrix(std::mt19937_64& rng) {
    std::normal_distribution<double> N;
    Mat6 A;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) A(i, j) = cplx(N(rng), N(rng));
    return A;
}

}  // namespace

TEST_CASE("det6 agrees with cofactor expansion") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        Mat6 A = random_matrix(rng);
        cplx o = cofactor_det(A);
        CHECK(std::abs(det6(A) - o) <= 1e-12 * row_norm_product(A));
    }
}

TEST_CASE("solve6 agrees with Cramer's rule") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        Mat6 A = random_matrix(rng);
        Vec6 y = random_matrix(rng).col(0);
        Vec6 x = solve6(A, y);
        cplx d = cofactor_det(A);
        for (int i = 0; i < 6; ++i) {
            Mat6 Ai = A;
            Ai.col(i) = y;
            CHECK(std::abs(x(i) - cofactor_det(Ai) / d) <= 1e-10 * std::max(1.0, std::abs(x(i))));
        }
    }
}

TEST_CASE("solve6 trivial systems and degeneracy") {
    Mat6 P = Mat6::Zero();
    for (int i = 0; i < 6; ++i) P(i, (i + 2) % 6) = 1.0;
    Vec6 y;
    for (int i = 0; i < 6; ++i) y(i) = cplx(i, -i);
    Vec6 x = solve6(P, y);
    for (int i = 0; i < 6; ++i) CHECK(std::abs(x((i + 2) % 6) - y(i)) < 1e-15);
    CHECK(solve6(P, Vec6::Zero()).norm() == 0.0);
    Mat6 S = P;
    S.row(5) = S.row(4);
    CHECK_THROWS_AS(solve6(S, y), Error);
}

TEST_CASE("companion roots") {
    // (k - 1)(k - 2i) = k^2 - (1 + 2i) k + 2i
    auto r = poly_roots({cplx(0, 2), cplx(-1, -2), 1.0});
    REQUIRE(r.size() == 2);
    double m = std::max(std::abs(r[0]), std::abs(r[1]));
    CHECK(m == doctest::Approx(2.0));
    CHECK(poly_roots({3.0}).empty());
}

TEST_CASE("adaptive Gauss-Kronrod") {
    QuadOptions o;
    o.abs_tol = 1e-13;
    QuadResult r = integrate([](double x) { return std::exp(I * 10.0 * x); }, 0.0, 2.0, o);
    cplx exact = (std::exp(I * 20.0) - 1.0) / (I * 10.0);
    CHECK(r.converged);
    CHECK(std::abs(r.value - exact) < 1e-13);
    CHECK(r.error <= o.abs_tol);
    // peaked integrand needs subdivision
    QuadResult p = integrate([](double x) { return cplx(1.0 / (1e-4 + x * x), 0.0); }, -1.0, 1.0, o);
    CHECK(std::abs(p.value.real() - 2.0 / 1e-2 * std::atan(1.0 / 1e-2)) < 1e-9);
    // reversed limits flip the sign
    QuadResult n = integrate([](double x) { return cplx(x * x, 0.0); }, 1.0, 0.0, o);
    CHECK(n.value.real() == doctest::Approx(-1.0 / 3.0));
    // an impossible budget is reported, not hidden
    o.max_intervals = 3;
    CHECK_FALSE(integrate([](double x) { return cplx(std::sin(200 * x), 0.0); }, 0.0, 10.0, o).converged);
}
