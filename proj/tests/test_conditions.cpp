#include <doctest.h>

#include "utm/conditions.hpp"

using namespace utm;

namespace {

RawCondition cont(int n) {
    RawCondition r;
    r.left[n] = 1.0;
    r.right[n] = -1.0;
    return r;
}

}  // namespace

TEST_CASE("third-derivative reduction") {
    Medium m(1.5, 2.0);
    double c1 = m.coefficient(1), c2 = m.coefficient(2);
    RawCondition r = reduce_third_derivative(cont(3), m, 0.7, 0.4);
    CHECK(r.left[3] == 0.0);
    CHECK(r.right[3] == 0.0);
    CHECK(r.left[0] == doctest::Approx(1 / c1));
    CHECK(r.right[0] == doctest::Approx(-1 / c2));
    CHECK(r.forcing.value(0.3) == doctest::Approx(0.7 / c1 - 0.4 / c2));

    RawCondition plain = cont(1);
    CHECK(reduce_third_derivative(plain, m, 1.0, 1.0) == plain);

    RawCondition one;
    one.left[3] = 1.0;
    RawCondition q = reduce_third_derivative(one, m, 0.25, 9.0);
    CHECK(q.left[0] == doctest::Approx(1 / c1));
    CHECK(q.right[0] == 0.0);
    CHECK(q.forcing.value(1.0) == doctest::Approx(0.25 / c1));

    RawCondition mixed = cont(3);
    mixed.left[1] = 2.0;
    CHECK_THROWS_AS(reduce_third_derivative(mixed, m, 0, 0), Error);
}

TEST_CASE("canonical forms") {
    Medium m(1, 2);
    CanonicalConditionSet cs = canonicalize({cont(0), cont(1), cont(2)}, SignCase::PosPos, m);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 6; ++j) {
            double want = j == i ? -1.0 : j == i + 3 ? 1.0 : 0.0;
            CHECK(cs.beta(i, j) == doctest::Approx(want));
        }
    for (auto& f : cs.forcings) CHECK(f.is_zero());
    CHECK(cs.boundary_condition_count() == 0);

    CHECK_THROWS_WITH_AS(canonicalize({cont(0), cont(1), cont(2)}, SignCase::NegPos, Medium(-1, 1)),
                         doctest::Contains("WrongConditionCount"), Error);

    RawCondition bc;
    bc.left[0] = 1.0;
    try {
        canonicalize({bc, cont(1), cont(2)}, SignCase::PosPos, m);
        FAIL("decoupled set accepted");
    } catch (const Error& e) {
        CHECK(e.name() == "DecoupledProblem");
        CHECK(std::string(e.what()).find("left-first") != std::string::npos);
    }
}

TEST_CASE("canonicalization keeps the row space") {
    Medium m(-1, 1.3);
    std::vector<RawCondition> rows(4);
    double v[4][6] = {{1, 2, 0, -1, 0.5, 0}, {0, 1, 3, 0, -1, 0.2}, {2, 0, 1, 1, 0, -1}, {0.3, 0.1, 0, 1, 1, 1}};
    for (int i = 0; i < 4; ++i)
        for (int n = 0; n < 3; ++n) rows[i].left[n] = v[i][n], rows[i].right[n] = v[i][n + 3];
    CanonicalConditionSet cs = canonicalize(rows, SignCase::NegPos, m);
    CHECK((cs.transform * raw_beta(rows) - cs.beta).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(cs.beta.topLeftCorner(3, 3).isApprox(Eigen::MatrixXd::Identity(3, 3)));
    CHECK(cs.beta.block(3, 0, 1, 3).isZero());
    CHECK(cs.beta.row(3).cwiseAbs().maxCoeff() == doctest::Approx(1.0));
}

TEST_CASE("rank criteria") {
    Medium m(1, 2);
    CanonicalConditionSet cs = canonicalize({cont(0), cont(1), cont(2)}, SignCase::PosPos, m);
    RankReport r = rank_criteria(cs, m);
    CHECK(r.criteria[2].lhs == doctest::Approx(-(1 + 2 + 4)));
    CHECK(r.full_rank);
    CHECK(r.first_holding() == 3);
    CHECK(r.consistent);

    CanonicalConditionSet zero;
    zero.tag = SignCase::PosPos;
    zero.beta = Eigen::MatrixXd::Zero(3, 6);
    RankReport z = rank_criteria(zero, m);
    CHECK_FALSE(z.full_rank);
    CHECK_FALSE(z.det_full_rank);
    CHECK(z.consistent);
}

TEST_CASE("PosNeg criterion 3 as printed differs from the determinant") {
    // rows chosen so only the b13 b24 / b14 b23 monomials survive in criterion 3
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(2, 6);
    b(0, 2) = 1.0;  // b13
    b(1, 3) = 1.0;  // b24
    b(0, 3) = 0.5;  // b14
    b(1, 2) = 2.0;  // b23
    CriterionValue printed;
    auto c = evaluate_criteria(SignCase::PosNeg, b, Medium(1, -1), &printed);
    // b14 b23 - b13 b24 = 1 - 1 = 0, while the printed b14 b24 - b13 b24 = 0.5 - 1
    CHECK_FALSE(c[2].holds);
    CHECK(printed.holds);
}

TEST_CASE("reflection of a condition") {
    RawCondition r;
    r.left = {1, 2, 3, 4};
    r.right = {5, 6, 7, 8};
    RawCondition f = reflect_condition(r);
    CHECK(f.left == std::array<double, 4>{5, -6, 7, -8});
    CHECK(f.right == std::array<double, 4>{1, -2, 3, -4});
}
