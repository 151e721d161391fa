#pragma once

#include <vector>

#include "utm/core.hpp"
#include "utm/medium.hpp"

namespace utm {

// polynomial sum coeffs[n] (x - origin)^n on one interval
struct Piece {
    double a;
    double b;
    std::vector<double> coeffs;
    double origin = 0.0;
    bool operator==(const Piece&) const = default;
};

// Compactly supported piecewise polynomial on one half-line.
// Side 1 lives in (-L, 0] with pieces (a, b]; side 2 in [0, L) with pieces [a, b).
class HalfLineProfile {
public:
    HalfLineProfile() = default;
    HalfLineProfile(int side, std::vector<Piece> pieces);

    static HalfLineProfile zero(int side);
    static HalfLineProfile box(int side, double a, double b, double height = 1.0);
    // amp (1 - ((x-c)/w)^2)^p clipped to the half-line
    static HalfLineProfile bump(int side, double center, double halfwidth, double amp, int power);
    // piecewise linear interpolant of samples (xs ascending, all on this side)
    static HalfLineProfile from_samples(int side, const std::vector<double>& xs,
                                        const std::vector<double>& vs);

    int side() const { return side_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    bool is_zero() const { return pieces_.empty(); }

    double value(double x) const;
    double derivative(double x, int order) const;
    double value_at_interface() const;
    double derivative_at_interface(int order) const;
    double support_radius() const;
    double l1_norm() const;
    cplx transform(cplx k) const;

    HalfLineProfile reflected() const;  // x -> -x, lands on the other side
    HalfLineProfile scaled(double c) const;

private:
    bool contains(const Piece& p, double x) const;
    int side_ = 1;
    std::vector<Piece> pieces_;
};

// transform(alpha^j k / sigma_side)
cplx rotated_transform(const HalfLineProfile& p, const Medium& m, int j, cplx k);

}  // namespace utm
