#include "utm/forcing.hpp"

#include <algorithm>

#include "utm/special.hpp"

namespace utm {

Forcing Forcing::constant(double c) {
    Forcing f;
    f.poly = {c};
    f.normalize();
    return f;
}

Forcing Forcing::polynomial(std::vector<double> coeffs) {
    Forcing f;
    f.poly = std::move(coeffs);
    f.normalize();
    return f;
}

Forcing Forcing::exponential(double c, double a) {
    Forcing f;
    if (a == 0.0)
        f.poly = {c};
    else
        f.exps.push_back({c, a});
    f.normalize();
    return f;
}

void Forcing::normalize() {
    std::vector<std::pair<double, double>> keep;
    for (auto [c, a] : exps) {
        if (c == 0.0) continue;
        if (a == 0.0) {
            if (poly.empty()) poly.push_back(0.0);
            poly[0] += c;
            continue;
        }
        auto it = std::find_if(keep.begin(), keep.end(), [a = a](auto& p) { return p.second == a; });
        if (it != keep.end())
            it->first += c;
        else
            keep.push_back({c, a});
    }
    exps = keep;
    while (!poly.empty() && poly.back() == 0.0) poly.pop_back();
}

double Forcing::value(double t) const {
    double v = 0.0;
    for (size_t n = poly.size(); n-- > 0;) v = v * t + poly[n];
    for (auto [c, a] : exps) v += c * std::exp(a * t);
    return v;
}

bool Forcing::is_zero() const { return poly.empty() && exps.empty(); }

Forcing Forcing::operator+(const Forcing& o) const {
    Forcing r = *this;
    if (r.poly.size() < o.poly.size()) r.poly.resize(o.poly.size(), 0.0);
    for (size_t i = 0; i < o.poly.size(); ++i) r.poly[i] += o.poly[i];
    r.exps.insert(r.exps.end(), o.exps.begin(), o.exps.end());
    r.normalize();
    return r;
}

Forcing Forcing::operator*(double s) const {
    Forcing r = *this;
    for (auto& p : r.poly) p *= s;
    for (auto& e : r.exps) e.first *= s;
    r.normalize();
    return r;
}

Forcing Forcing::integral() const {
    Forcing r;
    r.poly.assign(poly.size() + 1, 0.0);
    for (size_t n = 0; n < poly.size(); ++n) r.poly[n + 1] = poly[n] / double(n + 1);
    for (auto [c, a] : exps) {
        r.exps.push_back({c / a, a});
        r.poly[0] -= c / a;
    }
    r.normalize();
    return r;
}

cplx Forcing::transform(cplx w, double T) const {
    cplx s = 0.0;
    double Tp = T;
    for (size_t n = 0; n < poly.size(); ++n) {
        s += poly[n] * Tp * moment_exp(int(n), -w * T);
        Tp *= T;
    }
    for (auto [c, a] : exps) s += c * T * moment_exp(0, -(w + a) * T);
    return s;
}

cplx Forcing::effective_transform(cplx w) const {
    cplx s = 0.0;
    cplx p = 1.0 / w;  // n!/w^{n+1}
    for (size_t n = 0; n < poly.size(); ++n) {
        double sg = (n % 2 == 0) ? 1.0 : -1.0;
        s -= poly[n] * sg * p;
        p *= double(n + 1) / w;
    }
    for (auto [c, a] : exps) s -= c / (w + a);
    return s;
}

double Forcing::exp_rate_bound() const {
    double m = 0.0;
    for (auto [c, a] : exps) m = std::max(m, std::abs(a));
    return m;
}

cplx time_transform_forcing(const Forcing& f, cplx k, double T) {
    return f.transform(I * k * k * k, T);
}

}  // namespace utm
