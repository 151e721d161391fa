#include "utm/contours.hpp"

#include <algorithm>

namespace utm {

SectorClass sector_of(cplx k) {
    if (k == 0.0) throw Error("OriginUndefined", "sector of k = 0");
    double th = std::arg(k);
    double s = std::sin(3 * th);
    if (std::abs(s) <= 1e-14) return SectorClass::Boundary;
    if (s < 0) return SectorClass::Exterior;
    if (th > 0 && th < pi / 3) return SectorClass::D1;
    if (th > 2 * pi / 3) return SectorClass::D3;
    return SectorClass::D5;
}

std::pair<double, double> sector_angles(int r) {
    switch (r) {
        case 1: return {0.0, pi / 3};
        case 3: return {2 * pi / 3, pi};
        case 5: return {-2 * pi / 3, -pi / 3};
    }
    throw Error("ConfigError", "sector index must be 1, 3 or 5");
}

cplx Segment::start() const {
    if (kind == Arc) return std::polar(R, th0);
    return inbound ? p + smax * std::polar(1.0, phi) : p;
}

cplx Segment::end() const {
    if (kind == Arc) return std::polar(R, th1);
    return inbound ? p : p + smax * std::polar(1.0, phi);
}

ContourPath ContourPath::reversed() const {
    ContourPath r;
    r.sector = sector;
    for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
        Segment s = *it;
        if (s.kind == Segment::Arc)
            std::swap(s.th0, s.th1);
        else
            s.inbound = !s.inbound;
        r.segments.push_back(s);
    }
    return r;
}

ContourPath sector_boundary(int r, double R) {
    auto [a, b] = sector_angles(r);
    ContourPath path;
    path.sector = r;
    Segment in;
    in.kind = Segment::Ray;
    in.p = std::polar(R, b);
    in.phi = b;
    in.inbound = true;
    Segment arc;
    arc.kind = Segment::Arc;
    arc.R = R;
    arc.th0 = b;
    arc.th1 = a;
    Segment out;
    out.kind = Segment::Ray;
    out.p = std::polar(R, a);
    out.phi = a;
    out.inbound = false;
    path.segments = {in, arc, out};
    return path;
}

std::vector<int> sectors_for_side(const Medium& m, int side) {
    double s = m.sigma(side);
    if (side == 1) return s > 0 ? std::vector<int>{5} : std::vector<int>{1, 3};
    return s > 0 ? std::vector<int>{1, 3} : std::vector<int>{5};
}

GammaPaths gamma_paths(SignCase, const Medium& m, double R) {
    GammaPaths g;
    for (int r : sectors_for_side(m, 1)) g.side1.push_back(sector_boundary(r, R));
    for (int r : sectors_for_side(m, 2)) g.side2.push_back(sector_boundary(r, R));
    return g;
}

ContourPath deform(const ContourPath& path, double delta, double t, bool outward) {
    if (!(t > 0.0)) throw Error("InvalidDeformation", "deformation needs t > 0");
    if (delta < 0.0 || delta >= pi / 12)
        throw Error("InvalidDeformation", "delta must lie in [0, pi/12)");
    ContourPath r = path;
    if (delta == 0.0) return r;
    for (auto& s : r.segments) {
        if (s.kind != Segment::Ray) continue;
        // inbound rays sit on the larger angle of the sector
        double sg = s.inbound ? 1.0 : -1.0;
        s.phi += (outward ? sg : -sg) * delta;
    }
    return r;
}

ContourPath deform_outward(const ContourPath& path, double delta, double t) {
    return deform(path, delta, t, true);
}

void truncate_rays(ContourPath& path, const std::function<double(cplx)>& log_env, double floor) {
    for (auto& s : path.segments) {
        if (s.kind != Segment::Ray) continue;
        cplx d = std::polar(1.0, s.phi);
        double x = 1.0;
        for (int it = 0; it < 400; ++it) {
            double e0 = log_env(s.p + x * d), e1 = log_env(s.p + 1.25 * x * d);
            if (e0 < floor && e1 < e0) break;
            x *= 1.25;
        }
        if (x > 1e5) throw Error("QuadratureNonConvergence", "ray envelope does not decay");
        s.smax = x;
    }
}

QuadResult integrate_path(const ContourPath& path, const std::function<cplx(cplx)>& f,
                          const QuadOptions& opt) {
    QuadResult total;
    QuadOptions o = opt;
    o.abs_tol = opt.abs_tol / std::max<size_t>(1, path.segments.size());
    for (auto& s : path.segments) {
        QuadResult r;
        if (s.kind == Segment::Arc) {
            double R = s.R;
            auto g = [&](double th) {
                cplx k = std::polar(R, th);
                return f(k) * I * k;
            };
            r = integrate(g, s.th0, s.th1, o);
        } else {
            cplx d = std::polar(1.0, s.phi);
            auto g = [&](double x) { return f(s.p + x * d) * d; };
            std::vector<double> br{s.smax / 16, s.smax / 8, s.smax / 4, s.smax / 2};
            r = integrate(g, 0.0, s.smax, o, br);
            if (s.inbound) r.value = -r.value;
        }
        total.value += r.value;
        total.error += r.error;
        total.evals += r.evals;
        total.converged = total.converged && r.converged;
    }
    return total;
}

}  // namespace utm
