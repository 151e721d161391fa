#pragma once

#include <vector>

#include "utm/evaluator.hpp"

namespace utm {

// (1/2pi) int e^{ikx - i sigma^3 k^3 t} (hat q1 + hat q2)(k) dk on rotated half-rays
Term whole_line_solution(const HalfLineProfile& left, const HalfLineProfile& right, double sigma,
                         double x, double t, double tol = 1e-12);

struct FDGrid {
    double L_dom = 25.0;
    double h = 0.02;
    double tau = 0.01;
};

struct FDField {
    std::vector<double> x;  // ascending, interface node excluded
    std::vector<double> q;
    double h = 0.0;
    double t = 0.0;
    double edge_max = 0.0;  // max |q| over the outer 10% of each subdomain
    double value_at(double x) const;  // x must be a grid node
};

// Crank-Nicolson reference for the canonical problem. Interface traces use centered
// differences with ghost nodes fixed by the condition rows and outflow extrapolation.
FDField fd_reference(const Problem& p, const FDGrid& grid, double t_final);

struct RichardsonResult {
    std::vector<double> hs;
    std::vector<std::vector<double>> values;  // per h, per point
    std::vector<double> extrapolated;
    double order = 0.0;  // observed self-convergence order (max norm)
    double band = 0.0;   // max |q_finest - q_previous|
    double edge_max = 0.0;
};

RichardsonResult fd_richardson(const Problem& p, const std::vector<double>& points, double t,
                               double h0, int levels = 3, double L_dom = 25.0);

enum class Norm { Max, L2 };
double compare(const std::vector<double>& a, const std::vector<double>& b, Norm norm, double h = 1.0);

}  // namespace utm
