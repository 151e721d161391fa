#include <doctest.h>

#include "utm/evaluator.hpp"
#include "utm/oracles.hpp"

using namespace utm;

namespace {

RawCondition cont(int n) {
    RawCondition r;
    r.left[n] = 1.0;
    r.right[n] = -1.0;
    return r;
}

ProblemSpec continuous(double s, HalfLineProfile l, HalfLineProfile r) {
    ProblemSpec sp;
    sp.medium = Medium(s, s);
    sp.conditions = {cont(0), cont(1), cont(2)};
    sp.left = std::move(l);
    sp.right = std::move(r);
    return sp;
}

}  // namespace

TEST_CASE("zero data gives the zero solution") {
    Solver s(Problem::build(continuous(1, HalfLineProfile::zero(1), HalfLineProfile::zero(2))));
    for (double x : {-1.0, 0.7})
        CHECK(std::abs(s.evaluate(x, 0.4).value) == 0.0);
}

TEST_CASE("t = 0 returns the initial profile") {
    auto l = HalfLineProfile::bump(1, -1, 0.8, 1.0, 6);
    Solver s(Problem::build(continuous(1, l, HalfLineProfile::zero(2))));
    for (double x : {-1.5, -1.0, -0.3})
        CHECK(s.evaluate(x, 0.0).value == cplx(l.derivative(x, 0)));
}

TEST_CASE("matches the whole-line solution when the interface is transparent") {
    auto l = HalfLineProfile::box(1, -1, 0);
    auto r = HalfLineProfile::bump(2, 1, 0.7, 0.5, 6);
    for (double sg : {1.0, -1.0}) {
        Solver s(Problem::build(continuous(sg, l, r)));
        for (double x : {-1.2, -0.4, 0.3, 1.5}) {
            cplx a = s.evaluate(x, 0.3).value;
            cplx b = whole_line_solution(l, r, sg, x, 0.3).value;
            CHECK(std::abs(a - b) < 1e-8);
        }
    }
}

TEST_CASE("argument checks") {
    Solver s(Problem::build(continuous(1, HalfLineProfile::box(1, -1, 0), HalfLineProfile::zero(2))));
    CHECK_THROWS_WITH_AS(s.evaluate(0.0, 0.5), doctest::Contains("ConfigError"), Error);
    CHECK_THROWS_AS(s.evaluate(-1.0, 1.5), Error);
    CHECK_THROWS_AS(s.evaluate_side(1, 0.5, 0.5), Error);

    ProblemSpec bad = continuous(1, HalfLineProfile::zero(1), HalfLineProfile::zero(2));
    bad.T = 0.0;
    CHECK_THROWS_AS(Problem::build(bad), Error);
    bad = continuous(1, HalfLineProfile::zero(1), HalfLineProfile::zero(2));
    bad.conditions.pop_back();
    CHECK_THROWS_WITH_AS(Problem::build(bad), doctest::Contains("WrongConditionCount"), Error);
}

TEST_CASE("grid evaluation is ordered and independent of the worker count") {
    ProblemSpec sp = continuous(1, HalfLineProfile::bump(1, -1, 0.8, 1.0, 6), HalfLineProfile::zero(2));
    sp.medium = Medium(1, 1.5);
    Solver s(Problem::build(sp));
    std::vector<double> xs = {-1.0, -0.5, 0.5}, ts = {0.2, 0.6};
    auto a = s.evaluate_grid(xs, ts, 1);
    auto b = s.evaluate_grid(xs, ts, 4);
    REQUIRE(a.size() == 6);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].x == xs[i % 3]);
        CHECK(a[i].t == ts[i / 3]);
        CHECK(a[i].status.empty());
        CHECK(a[i].value == b[i].value);
    }
}

TEST_CASE("both coefficients negative go through the reflection") {
    ProblemSpec sp = continuous(-1, HalfLineProfile::bump(1, -1, 0.8, 1.0, 6), HalfLineProfile::zero(2));
    Problem p = Problem::build(sp);
    CHECK(p.cls.reflected);
    CHECK(p.medium.sigma1 > 0);
    Solver s(p);
    for (double x : {-0.8, 0.6}) {
        cplx a = s.evaluate(x, 0.25).value;
        cplx b = whole_line_solution(sp.left, sp.right, -1.0, x, 0.25).value;
        CHECK(std::abs(a - b) < 1e-8);
    }
}
