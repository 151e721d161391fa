#pragma once

#include <functional>
#include <string>
#include <vector>

#include "utm/evaluator.hpp"

namespace utm {

enum class ExampleId { One = 1, Two = 2, Three = 3 };

// One printed integral: sign * int_{dD_R^(sector)} K(k) e^{ikx/sigma_side} [time] source dk
struct ExampleTerm {
    int side;    // which solution formula (q1 or q2)
    int sector;  // 1, 3, 5
    int sign;    // +1 or -1 in front of the integral
    enum Source { Hat1, Hat2, Point1, Point2 } source;
    int rot;           // hat argument alpha^rot k / sigma
    bool minus_one;    // time factor (e^{-ik^3 t} - 1) instead of e^{-ik^3 t}
    std::string label;
    std::function<cplx(double, double, cplx, cplx)> kernel;  // (s1, s2, alpha, k)
};

const std::vector<ExampleTerm>& example_terms(ExampleId id);
SignCase example_case(ExampleId id);
std::vector<RawCondition> example_conditions(ExampleId id);
ProblemSpec example_spec(ExampleId id, const Medium& m, const HalfLineProfile& left,
                         const HalfLineProfile& right, double T);

struct ExampleValue {
    cplx value{0.0, 0.0};
    double error = 0.0;
};

// printed formula: initial term plus every transcribed contour integral
ExampleValue example_eval(ExampleId id, const Solver& solver, double x, double t);

// generic kernel that multiplies the term's source in the solved system
cplx generic_kernel(const Solver& solver, ExampleId id, const ExampleTerm& term, cplx k);

struct TermDiscrepancy {
    std::string label;
    double kernel_gap = 0.0;  // max |printed - generic| over sampled k, relative to |generic|
    cplx integral_gap{0.0, 0.0};  // contribution of (printed - generic) at (x, t)
};

std::vector<TermDiscrepancy> compare_terms(ExampleId id, const Solver& solver, int side, double x,
                                           double t);

}  // namespace utm
