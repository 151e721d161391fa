#include "utm/evaluator.hpp"

#include <algorithm>
#include <thread>

namespace utm {

Problem Problem::build(const ProblemSpec& spec) {
    if (spec.left.side() != 1 || spec.right.side() != 2)
        throw Error("ConfigError", "left profile must be side 1 and right profile side 2");
    if (!(spec.T > 0.0)) throw Error("ConfigError", "horizon T must be positive");
    if (!(spec.tol > 0.0)) throw Error("ConfigError", "tolerance must be positive");
    Problem p;
    p.spec = spec;
    p.cls = classify(spec.medium);
    p.medium = p.cls.medium;
    std::vector<RawCondition> conds = spec.conditions;
    if (p.cls.reflected) {
        for (auto& c : conds) c = reflect_condition(c);
        p.p1 = spec.right.reflected();
        p.p2 = spec.left.reflected();
    } else {
        p.p1 = spec.left;
        p.p2 = spec.right;
    }
    for (auto& c : conds)
        p.reduced.push_back(reduce_third_derivative(c, p.medium, p.p1.value_at_interface(),
                                                    p.p2.value_at_interface()));
    SignCase tag = p.cls.tag;
    int need = required_condition_count(tag);
    if (int(p.reduced.size()) != need)
        throw Error("WrongConditionCount", std::string(to_string(tag)) + " needs " +
                                               std::to_string(need) + " conditions, got " +
                                               std::to_string(p.reduced.size()));
    Eigen::MatrixXd B = raw_beta(p.reduced);
    for (int r : regions_for(tag))
        if (determinant_polynomial(tag, r, p.medium, B).zero)
            throw Error("SingularSystem", "rank-deficient; det ≡ 0 on region " + std::to_string(r));
    p.cset = canonicalize(p.reduced, tag, p.medium);
    p.report = rank_criteria(p.cset, p.medium);
    for (int r : regions_for(tag)) {
        validate_rows(r, p.medium, region_rows(tag, r));
        p.polys.push_back(determinant_polynomial(tag, r, p.medium, p.cset.beta));
    }
    double rate = 0.0;
    for (auto& f : p.cset.forcings) rate = std::max(rate, f.exp_rate_bound());
    p.R = choose_radius(p.polys, rate);
    return p;
}

Solver::Solver(Problem p) : p_(std::move(p)), tol_(p_.spec.tol), delta_(p_.spec.delta) {
    for (int r : regions_for(p_.cls.tag)) rows_[r] = region_rows(p_.cls.tag, r);
}

Solver::Frame Solver::to_working(int side, double x, int order) const {
    if (side != 1 && side != 2) throw Error("ConfigError", "side must be 1 or 2");
    if ((side == 1 && x > 0) || (side == 2 && x < 0))
        throw Error("ConfigError", "x lies outside the requested side");
    if (!p_.cls.reflected) return {side, x, 1.0};
    return {3 - side, -x, (order % 2) ? -1.0 : 1.0};
}

double Solver::growth_rate() const {
    return std::max(p_.p1.support_radius() / std::abs(p_.medium.sigma1),
                    p_.p2.support_radius() / std::abs(p_.medium.sigma2));
}

Term Solver::initial_w(int side, double x, double t, int order) const {
    const HalfLineProfile& q = side == 1 ? p_.p1 : p_.p2;
    Term out;
    if (q.is_zero()) return out;
    if (t == 0.0) {
        out.value = q.derivative(x, order);
        return out;
    }
    double c = p_.medium.coefficient(side);
    double sg = c > 0 ? 1.0 : -1.0;
    double L = q.support_radius();
    double scale = std::max(1.0, q.l1_norm());
    double floor = std::log(tol_ * 1e-3 / scale);
    auto f = [&](cplx k) {
        return std::pow(I * k, order) * std::exp(I * k * x - I * c * k * k * k * t) * q.transform(k);
    };
    auto env = [&](cplx k) {
        return std::real(I * k * x - I * c * k * k * k * t) + L * std::abs(k.imag()) +
               order * std::log(1.0 + std::abs(k));
    };
    QuadOptions o;
    o.abs_tol = 0.5 * tol_;
    for (int half = 0; half < 2; ++half) {
        Segment s;
        s.kind = Segment::Ray;
        s.p = 0.0;
        s.phi = half == 0 ? -sg * delta_ : pi + sg * delta_;
        s.inbound = half == 1;
        ContourPath path;
        path.segments = {s};
        truncate_rays(path, env, floor);
        QuadResult r = integrate_path(path, f, o);
        if (!r.converged) throw Error("QuadratureNonConvergence", "initial term");
        out.value += r.value / (2 * pi);
        out.error += r.error / (2 * pi);
    }
    return out;
}

cplx Solver::spectral_combination(int side, int region, cplx k) const {
    Assembly a = assemble(rows_.at(region), p_.medium, p_.cset, p_.p1, p_.p2, k);
    Vec6 X = solve_unknowns(a.A, a.Y);
    double s = p_.medium.sigma(side);
    int o = side == 1 ? 0 : 3;
    return s * s * X(o + 2) + I * k * s * X(o + 1) - k * k * X(o);
}

Term Solver::contour_w(int side, double x, double t, int order, double delta) const {
    Term out;
    if (t == 0.0) return out;
    double s = p_.medium.sigma(side);
    double g = growth_rate();
    double scale = std::max(1.0, p_.p1.l1_norm() + p_.p2.l1_norm());
    for (auto& f : p_.cset.forcings) {
        for (double v : f.poly) scale += std::abs(v);
        for (auto [c, a] : f.exps) scale += std::abs(c);
    }
    double floor = std::log(tol_ * 1e-3 / scale);
    auto env = [&](cplx k) {
        return std::real(I * k * x / s - I * k * k * k * t) + g * std::abs(k) +
               (2 + order) * std::log(1.0 + std::abs(k));
    };
    auto secs = sectors_for_side(p_.medium, side);
    QuadOptions o;
    o.abs_tol = 0.5 * tol_ / secs.size();
    for (int r : secs) {
        ContourPath path = deform(sector_boundary(r, p_.R), delta, t, true);
        truncate_rays(path, env, floor);
        auto f = [&](cplx k) {
            return std::pow(I * k / s, order) * std::exp(I * k * x / s - I * k * k * k * t) *
                   spectral_combination(side, r, k);
        };
        QuadResult q = integrate_path(path, f, o);
        if (!q.converged) throw Error("QuadratureNonConvergence", "contour term");
        out.value -= q.value / (2 * pi);
        out.error += q.error / (2 * pi);
    }
    return out;
}

Term Solver::initial_term(int side, double x, double t, int order) const {
    Frame w = to_working(side, x, order);
    Term r = initial_w(w.side, w.x, t, order);
    r.value *= w.sign;
    return r;
}

Term Solver::contour_term(int side, double x, double t, int order) const {
    return contour_term(side, x, t, order, delta_);
}

Term Solver::contour_term(int side, double x, double t, int order, double delta) const {
    Frame w = to_working(side, x, order);
    Term r = contour_w(w.side, w.x, t, order, delta);
    r.value *= w.sign;
    return r;
}

SolutionSample Solver::evaluate_side(int side, double x, double t, int order) const {
    return evaluate_side(side, x, t, order, delta_);
}

SolutionSample Solver::evaluate_side(int side, double x, double t, int order, double delta) const {
    if (t < 0.0 || t > p_.spec.T) throw Error("ConfigError", "t must lie in [0, T]");
    SolutionSample s;
    s.x = x;
    s.t = t;
    Term a = initial_term(side, x, t, order);
    Term b = contour_term(side, x, t, order, delta);
    s.value = a.value + b.value;
    s.error_estimate = a.error + b.error;
    return s;
}

SolutionSample Solver::evaluate(double x, double t) const {
    if (x == 0.0) throw Error("ConfigError", "x = 0 needs an explicit side (use a one-sided trace)");
    return evaluate_side(x < 0 ? 1 : 2, x, t, 0);
}

Term Solver::trace(int side, int order, double t) const {
    SolutionSample s = evaluate_side(side, 0.0, t, order);
    return {s.value, s.error_estimate};
}

std::vector<SolutionSample> Solver::evaluate_grid(const std::vector<double>& xs,
                                                  const std::vector<double>& ts, int workers) const {
    size_t n = xs.size() * ts.size();
    std::vector<SolutionSample> out(n);
    auto job = [&](size_t i) {
        double t = ts[i / xs.size()], x = xs[i % xs.size()];
        try {
            out[i] = evaluate(x, t);
        } catch (const Error& e) {
            out[i].x = x;
            out[i].t = t;
            out[i].status = e.what();
        }
    };
    if (workers <= 0) workers = int(std::max(1u, std::thread::hardware_concurrency()));
    workers = int(std::min<size_t>(workers, std::max<size_t>(n, 1)));
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) job(i);
        return out;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (size_t i = w; i < n; i += workers) job(i);
        });
    for (auto& th : pool) th.join();
    return out;
}

Term Solver::retained_term(int side, double x, double t, const HalfLineProfile& qT1,
                           const HalfLineProfile& qT2, double T) const {
    if (!(T > t)) throw Error("ConfigError", "retained term needs T > t");
    Frame w = to_working(side, x, 0);
    HalfLineProfile a = p_.cls.reflected ? qT2.reflected() : qT1;
    HalfLineProfile b = p_.cls.reflected ? qT1.reflected() : qT2;
    double s = p_.medium.sigma(w.side);
    double tau = T - t;
    double g = std::max(a.support_radius() / std::abs(p_.medium.sigma1),
                        b.support_radius() / std::abs(p_.medium.sigma2));
    double scale = std::max(1.0, a.l1_norm() + b.l1_norm());
    double floor = std::log(tol_ * 1e-3 / scale);
    auto env = [&](cplx k) {
        return std::real(I * k * w.x / s + I * k * k * k * tau) + g * std::abs(k) +
               2 * std::log(1.0 + std::abs(k));
    };
    Term out;
    auto secs = sectors_for_side(p_.medium, w.side);
    QuadOptions o;
    o.abs_tol = 0.5 * tol_ / secs.size();
    int off = w.side == 1 ? 0 : 3;
    for (int r : secs) {
        const auto& rows = rows_.at(r);
        ContourPath path = deform(sector_boundary(r, p_.R), delta_, tau, false);
        truncate_rays(path, env, floor);
        auto f = [&](cplx k) {
            Mat6 A = system_matrix(rows, p_.medium, p_.cset.beta, k);
            Vec6 Y = Vec6::Zero();
            for (int i = 0; i < 6; ++i)
                if (rows[i].kind == RowDesc::Global)
                    Y(i) = rotated_transform(rows[i].side == 1 ? a : b, p_.medium, rows[i].rot, k);
            Vec6 X = solve_unknowns(A, Y);
            cplx L = s * s * X(off + 2) + I * k * s * X(off + 1) - k * k * X(off);
            return std::exp(I * k * w.x / s + I * k * k * k * tau) * L;
        };
        QuadResult q = integrate_path(path, f, o);
        if (!q.converged) throw Error("QuadratureNonConvergence", "retained term");
        out.value -= q.value / (2 * pi);
        out.error += q.error / (2 * pi);
    }
    return out;
}

}  // namespace utm
