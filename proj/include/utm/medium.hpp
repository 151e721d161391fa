#pragma once

#include "utm/core.hpp"

namespace utm {

// sigma_j are the cube roots: q_t = sigma_j^3 q_xxx on side j
struct Medium {
    double sigma1;
    double sigma2;

    Medium(double s1, double s2);
    static Medium from_coefficients(double c1, double c2);

    double sigma(int side) const { return side == 1 ? sigma1 : sigma2; }
    double coefficient(int side) const;
};

enum class SignCase { PosNeg, PosPos, NegPos };

const char* to_string(SignCase c);

struct Classification {
    SignCase tag;
    bool reflected;
    Medium medium;  // reflected medium when reflected, else the input
};

cplx dispersion(const Medium& m, int side, cplx k);
double phase_velocity(const Medium& m, int side, double k);
Classification classify(const Medium& m);
int required_condition_count(SignCase c);

}  // namespace utm
