#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "utm/evaluator.hpp"

namespace utm {

struct CheckReport {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string context;
};

std::string to_csv(const std::vector<CheckReport>& reports);
bool all_pass(const std::vector<CheckReport>& reports);

// sampled field q^(side)(x, t) with x-derivative order; the default wraps Solver::evaluate_side
using FieldFn = std::function<Term(int side, double x, double t, int order)>;

struct ResidualGrid {
    std::vector<double> xs;  // sample points away from the interface (stencils need |x| > 2h)
    std::vector<double> ts;
    double h = 0.04;         // finest spacing is h/4
};

// PDE residual (second-order decay over h, h/2, h/4), interface residuals per canonical row,
// reality and the initial-limit check
std::vector<CheckReport> run_residual_suite(const Solver& s, const ResidualGrid& g);
std::vector<CheckReport> run_residual_suite(const Solver& s, const ResidualGrid& g, const FieldFn& field);

// centered residual |q_t - sigma^3 q_xxx| at one point, time step and x step both h
double pde_residual(const FieldFn& field, double sigma, int side, double x, double t, double h);

// canonical row residuals at time t from direct one-sided traces; returns (max residual, trace scale)
std::pair<double, double> interface_residual(const Solver& s, double t);

struct CampaignResult {
    SignCase tag = SignCase::PosPos;
    int draws = 0;
    int agree = 0;           // criteria (as implemented) vs determinant
    int agree_verbatim = 0;  // criteria exactly as printed
    int resampled = 0;       // draws rejected by canonicalization
    int singular = 0;        // draws with a vanishing determinant
    double ratio_spread = 0.0;  // max relative spread of det coefficient / criterion over draws
    std::vector<Eigen::MatrixXd> disagreements;
    std::vector<CheckReport> reports;
};

CampaignResult run_criteria_campaign(SignCase tag, const Medium& m, int n_draws, std::uint64_t seed);
// single-draw verdict for a given raw beta
CheckReport criteria_check(SignCase tag, const Medium& m, const Eigen::MatrixXd& raw);

// max pairwise |difference| / (10 x combined error) over the deformation angles; pass iff <= 1
CheckReport deformation_invariance(const Solver& s, const std::vector<std::pair<double, double>>& pts,
                                   const std::vector<double>& deltas);

}  // namespace utm
