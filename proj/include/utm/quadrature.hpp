#pragma once

#include <functional>
#include <vector>

#include "utm/core.hpp"

namespace utm {

struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 0.0;
    int max_intervals = 4000;
};

struct QuadResult {
    cplx value{0.0, 0.0};
    double error = 0.0;
    int evals = 0;
    bool converged = true;
};

// Globally adaptive Gauss-Kronrod 7/15 for a complex integrand of a real parameter.
// The per-interval error is |K15 - G7|, which is pessimistic but honest.
QuadResult integrate(const std::function<cplx(double)>& f, double a, double b,
                     const QuadOptions& opt, const std::vector<double>& breaks = {});

}  // namespace utm
