#include "utm/medium.hpp"

namespace utm {

Medium::Medium(double s1, double s2) : sigma1(s1), sigma2(s2) {
    if (!(std::isfinite(s1) && std::isfinite(s2)) || s1 == 0.0 || s2 == 0.0)
        throw Error("InvalidMedium", "sigma values must be finite and nonzero");
}

Medium Medium::from_coefficients(double c1, double c2) {
    return Medium(std::cbrt(c1), std::cbrt(c2));
}

double Medium::coefficient(int side) const {
    double s = sigma(side);
    return s * s * s;
}

const char* to_string(SignCase c) {
    switch (c) {
        case SignCase::PosNeg: return "PosNeg";
        case SignCase::PosPos: return "PosPos";
        case SignCase::NegPos: return "NegPos";
    }
    return "?";
}

cplx dispersion(const Medium& m, int side, cplx k) {
    return I * m.coefficient(side) * k * k * k;
}

double phase_velocity(const Medium& m, int side, double k) {
    return m.coefficient(side) * k * k;
}

Classification classify(const Medium& m) {
    bool p1 = m.sigma1 > 0, p2 = m.sigma2 > 0;
    if (p1 && !p2) return {SignCase::PosNeg, false, m};
    if (p1 && p2) return {SignCase::PosPos, false, m};
    if (!p1 && p2) return {SignCase::NegPos, false, m};
    // x -> -x swaps the sides and flips both signs
    return {SignCase::PosPos, true, Medium(-m.sigma2, -m.sigma1)};
}

int required_condition_count(SignCase c) {
    switch (c) {
        case SignCase::PosNeg: return 2;
        case SignCase::PosPos: return 3;
        case SignCase::NegPos: return 4;
    }
    return 0;
}

}  // namespace utm
