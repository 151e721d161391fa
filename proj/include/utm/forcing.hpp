#pragma once

#include <utility>
#include <vector>

#include "utm/core.hpp"

namespace utm {

// f(t) = sum_n poly[n] t^n + sum c e^{a t}
struct Forcing {
    std::vector<double> poly;
    std::vector<std::pair<double, double>> exps;  // (c, a), a != 0

    static Forcing constant(double c);
    static Forcing polynomial(std::vector<double> coeffs);
    static Forcing exponential(double c, double a);

    double value(double t) const;
    bool is_zero() const;
    Forcing operator+(const Forcing& o) const;
    Forcing operator*(double s) const;
    Forcing integral() const;  // t -> int_0^t f

    // int_0^T e^{w s} f(s) ds
    cplx transform(cplx w, double T) const;
    // the same with every e^{w T} contribution dropped
    cplx effective_transform(cplx w) const;
    double exp_rate_bound() const;
    void normalize();
    bool operator==(const Forcing&) const = default;
};

// int_0^T e^{i k^3 s} f(s) ds
cplx time_transform_forcing(const Forcing& f, cplx k, double T);

}  // namespace utm
