#pragma once

#include <map>
#include <string>
#include <vector>

#include "utm/conditions.hpp"
#include "utm/contours.hpp"
#include "utm/global_system.hpp"
#include "utm/profile.hpp"

namespace utm {

struct ProblemSpec {
    Medium medium{1.0, 1.0};
    std::vector<RawCondition> conditions;
    HalfLineProfile left = HalfLineProfile::zero(1);
    HalfLineProfile right = HalfLineProfile::zero(2);
    double T = 1.0;
    double tol = 1e-10;
    double delta = pi / 24;
};

// Problem after reflection, third-derivative reduction and canonicalization.
// Everything except `spec` lives in the working frame (reflected when cls.reflected).
struct Problem {
    ProblemSpec spec;
    Classification cls{SignCase::PosPos, false, Medium(1.0, 1.0)};
    Medium medium{1.0, 1.0};
    HalfLineProfile p1, p2;
    std::vector<RawCondition> reduced;
    CanonicalConditionSet cset;
    RankReport report;
    std::vector<DeterminantPolynomial> polys;
    double R = 1.0;

    static Problem build(const ProblemSpec& spec);
};

struct Term {
    cplx value{0.0, 0.0};
    double error = 0.0;
};

struct SolutionSample {
    double x = 0.0;
    double t = 0.0;
    cplx value{0.0, 0.0};
    double error_estimate = 0.0;
    std::string status;  // empty on success
};

class Solver {
public:
    explicit Solver(Problem p);

    const Problem& problem() const { return p_; }
    double tolerance() const { return tol_; }
    void set_tolerance(double tol) { tol_ = tol; }
    double delta() const { return delta_; }
    void set_delta(double d) { delta_ = d; }

    // original frame; order is the number of x-derivatives
    Term initial_term(int side, double x, double t, int order = 0) const;
    Term contour_term(int side, double x, double t, int order = 0) const;
    Term contour_term(int side, double x, double t, int order, double delta) const;
    SolutionSample evaluate(double x, double t) const;
    SolutionSample evaluate_side(int side, double x, double t, int order = 0) const;
    SolutionSample evaluate_side(int side, double x, double t, int order, double delta) const;
    Term trace(int side, int order, double t) const;
    std::vector<SolutionSample> evaluate_grid(const std::vector<double>& xs,
                                              const std::vector<double>& ts, int workers = 0) const;

    // contribution of the dropped e^{ik^3 T} terms given the solution at T (original frame)
    Term retained_term(int side, double x, double t, const HalfLineProfile& qT1,
                       const HalfLineProfile& qT2, double T) const;

    // working-frame spectral combination sigma^2 w2 + ik sigma w1 - k^2 w0 for side j
    cplx spectral_combination(int side_w, int region, cplx k) const;

private:
    struct Frame {
        int side;
        double x;
        double sign;
    };
    Frame to_working(int side, double x, int order) const;
    Term initial_w(int side, double x, double t, int order) const;
    Term contour_w(int side, double x, double t, int order, double delta) const;
    double growth_rate() const;

    Problem p_;
    double tol_;
    double delta_;
    std::map<int, std::vector<RowDesc>> rows_;
};

}  // namespace utm
