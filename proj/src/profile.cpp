#include "utm/profile.hpp"

#include <algorithm>

#include "utm/special.hpp"

namespace utm {

namespace {

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double poly_deriv(const std::vector<double>& c, double y, int order) {
    double v = 0.0;
    for (int n = int(c.size()) - 1; n >= order; --n) {
        double f = 1.0;
        for (int i = 0; i < order; ++i) f *= double(n - i);
        v = v * y + c[n] * f;
    }
    return v;
}

}  // namespace

HalfLineProfile::HalfLineProfile(int side, std::vector<Piece> pieces) : side_(side) {
    if (side != 1 && side != 2) throw Error("ConfigError", "profile side must be 1 or 2");
    for (auto& p : pieces) {
        if (!(p.a < p.b) || !std::isfinite(p.a) || !std::isfinite(p.b))
            throw Error("ConfigError", "profile piece needs a < b");
        if ((side == 1 && p.b > 0.0) || (side == 2 && p.a < 0.0))
            throw Error("ConfigError", "profile piece leaves its half-line");
        bool nz = std::any_of(p.coeffs.begin(), p.coeffs.end(), [](double c) { return c != 0.0; });
        if (nz) pieces_.push_back(p);
    }
}

HalfLineProfile HalfLineProfile::zero(int side) { return HalfLineProfile(side, {}); }

HalfLineProfile HalfLineProfile::box(int side, double a, double b, double height) {
    return HalfLineProfile(side, {Piece{a, b, {height}, 0.0}});
}

HalfLineProfile HalfLineProfile::bump(int side, double c, double w, double amp, int power) {
    std::vector<double> co(2 * power + 1, 0.0);
    for (int j = 0; j <= power; ++j)
        co[2 * j] = amp * binom(power, j) * ((j % 2) ? -1.0 : 1.0) / std::pow(w, 2 * j);
    double a = c - w, b = c + w;
    if (side == 1) b = std::min(b, 0.0);
    if (side == 2) a = std::max(a, 0.0);
    if (!(a < b)) return zero(side);
    return HalfLineProfile(side, {Piece{a, b, co, c}});
}

HalfLineProfile HalfLineProfile::from_samples(int side, const std::vector<double>& xs,
                                              const std::vector<double>& vs) {
    if (xs.size() != vs.size() || xs.size() < 2) throw Error("GridMismatch", "sample arrays");
    std::vector<Piece> ps;
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        double h = xs[i + 1] - xs[i];
        if (vs[i] == 0.0 && vs[i + 1] == 0.0) continue;
        ps.push_back(Piece{xs[i], xs[i + 1], {vs[i], (vs[i + 1] - vs[i]) / h}, xs[i]});
    }
    return HalfLineProfile(side, ps);
}

bool HalfLineProfile::contains(const Piece& p, double x) const {
    return side_ == 1 ? (x > p.a && x <= p.b) : (x >= p.a && x < p.b);
}

double HalfLineProfile::value(double x) const { return derivative(x, 0); }

double HalfLineProfile::derivative(double x, int order) const {
    double v = 0.0;
    for (auto& p : pieces_)
        if (contains(p, x)) v += poly_deriv(p.coeffs, x - p.origin, order);
    return v;
}

double HalfLineProfile::value_at_interface() const { return derivative(0.0, 0); }

double HalfLineProfile::derivative_at_interface(int order) const { return derivative(0.0, order); }

double HalfLineProfile::support_radius() const {
    double L = 0.0;
    for (auto& p : pieces_) L = std::max({L, std::abs(p.a), std::abs(p.b)});
    return L;
}

double HalfLineProfile::l1_norm() const {
    static const double gx[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                 0.5384693101056831, 0.9061798459386640};
    static const double gw[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                 0.4786286704993665, 0.2369268850561891};
    double s = 0.0;
    for (auto& p : pieces_) {
        const int n = 400;
        double h = (p.b - p.a) / n;
        for (int i = 0; i < n; ++i) {
            double m = p.a + (i + 0.5) * h;
            for (int q = 0; q < 5; ++q)
                s += 0.5 * h * gw[q] * std::abs(poly_deriv(p.coeffs, m + 0.5 * h * gx[q] - p.origin, 0));
        }
    }
    return s;
}

cplx HalfLineProfile::transform(cplx k) const {
    cplx total = 0.0;
    for (auto& p : pieces_) {
        cplx s = 0.0;
        for (size_t n = 0; n < p.coeffs.size(); ++n) {
            if (p.coeffs[n] == 0.0) continue;
            s += p.coeffs[n] * (monomial_ft(int(n), p.b - p.origin, k) -
                                monomial_ft(int(n), p.a - p.origin, k));
        }
        total += std::exp(-I * k * p.origin) * s;
    }
    return total;
}

HalfLineProfile HalfLineProfile::reflected() const {
    std::vector<Piece> ps;
    for (auto& p : pieces_) {
        Piece r{-p.b, -p.a, p.coeffs, -p.origin};
        for (size_t n = 1; n < r.coeffs.size(); n += 2) r.coeffs[n] = -r.coeffs[n];
        ps.push_back(r);
    }
    return HalfLineProfile(3 - side_, ps);
}

HalfLineProfile HalfLineProfile::scaled(double c) const {
    std::vector<Piece> ps = pieces_;
    for (auto& p : ps)
        for (auto& v : p.coeffs) v *= c;
    return HalfLineProfile(side_, ps);
}

cplx rotated_transform(const HalfLineProfile& p, const Medium& m, int j, cplx k) {
    return p.transform(alpha_pow(j) * k / m.sigma(p.side()));
}

}  // namespace utm
