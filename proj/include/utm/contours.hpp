#pragma once

#include <functional>
#include <vector>

#include "utm/core.hpp"
#include "utm/medium.hpp"
#include "utm/quadrature.hpp"

namespace utm {

enum class SectorClass { D1, D3, D5, Boundary, Exterior };

SectorClass sector_of(cplx k);
// angular range (a, b) of sector r in {1, 3, 5}
std::pair<double, double> sector_angles(int r);

struct Segment {
    enum Kind { Ray, Arc } kind = Ray;
    // Ray: k(s) = p + s e^{i phi}, s in [0, smax]; inbound rays are walked from smax to 0
    cplx p{0.0, 0.0};
    double phi = 0.0;
    double smax = 0.0;
    bool inbound = false;
    // Arc: k = R e^{i th}, th from th0 to th1
    double R = 0.0, th0 = 0.0, th1 = 0.0;

    cplx start() const;
    cplx end() const;
};

struct ContourPath {
    int sector = 0;
    std::vector<Segment> segments;
    ContourPath reversed() const;
};

// counterclockwise boundary of {|k| > R} within sector r: the sector lies on the left
ContourPath sector_boundary(int r, double R);

struct GammaPaths {
    std::vector<ContourPath> side1, side2;
    int flag1 = -1, flag2 = -1;  // scalar in front of (1/2pi) * integral
};

std::vector<int> sectors_for_side(const Medium& m, int side);
GammaPaths gamma_paths(SignCase tag, const Medium& m, double R);

// Rotates each ray about its arc endpoint by delta into Re(ik^3) > 0 (outward) or
// into the sector (inward). delta = 0 is the identity.
ContourPath deform(const ContourPath& path, double delta, double t, bool outward = true);
ContourPath deform_outward(const ContourPath& path, double delta, double t);

// chooses smax on each ray so that log_env(k) < floor and is decreasing
void truncate_rays(ContourPath& path, const std::function<double(cplx)>& log_env, double floor);

QuadResult integrate_path(const ContourPath& path, const std::function<cplx(cplx)>& f,
                          const QuadOptions& opt);

}  // namespace utm
