#include "utm/closed_form.hpp"
#include <limits>

namespace utm {

namespace {

using K = std::function<cplx(double, double, cplx, cplx)>;
constexpr double tp = 2 * pi;

std::vector<ExampleTerm> make_one() {
    using S = ExampleTerm::Source;
    std::vector<ExampleTerm> v;
    auto add = [&](int side, int sec, int sign, S src, int rot, bool m1, const char* lab, K k) {
        v.push_back({side, sec, sign, src, rot, m1, lab, std::move(k)});
    };
    // q1, dD1
    add(1, 1, +1, S::Hat1, 2, false, "q1 D1 hat1(a^2k/s1)", [](double s1, double s2, cplx a, cplx) {
        return (a * a * s1 - s2) / (tp * a * a * s1 * (s1 - s2));
    });
    add(1, 1, +1, S::Point1, 0, true, "q1 D1 q1(0)", [](double s1, double s2, cplx a, cplx k) {
        return I * (a - 1.0) / (tp * a * a * k * s1 * s2 * (s1 - s2));
    });
    add(1, 1, +1, S::Hat2, 2, false, "q1 D1 hat2(a^2k/s2)", [](double s1, double s2, cplx a, cplx) {
        return s1 * s1 * (a * a - 1.0) / (tp * a * a * s2 * s2 * (s1 - s2));
    });
    add(1, 1, -1, S::Point2, 0, true, "q1 D1 q2(0)", [](double s1, double s2, cplx a, cplx k) {
        return I * s1 * s1 * (a - 1.0) / (tp * a * a * k * std::pow(s2, 4) * (s1 - s2));
    });
    // q1, dD3
    add(1, 3, +1, S::Hat1, 1, false, "q1 D3 hat1(ak/s1)", [](double s1, double s2, cplx a, cplx k) {
        return (a * s1 - s2) / (tp * k * a * s1 * (s1 - s2));
    });
    add(1, 3, +1, S::Point1, 0, true, "q1 D3 q1(0)", [](double s1, double s2, cplx a, cplx k) {
        return I * (a * a - 1.0) / (tp * k * (s1 * s1 * s1 - s2 * s2 * s2));
    });
    add(1, 3, +1, S::Hat2, 1, false, "q1 D3 hat2(ak/s2)", [](double s1, double s2, cplx a, cplx) {
        return s1 * s1 * (a - 1.0) / (tp * a * s2 * s2 * (s1 - s2));
    });
    add(1, 3, -1, S::Point2, 0, true, "q1 D3 q2(0)", [](double s1, double s2, cplx a, cplx k) {
        return I * s1 * s1 * (a * a - 1.0) / (tp * std::pow(s2, 4) * a * k * (s1 - s2));
    });
    // q2, dD1
    add(2, 1, +1, S::Hat1, 2, false, "q2 D1 hat1(a^2k/s1)", [](double s1, double s2, cplx a, cplx) {
        return s2 * s2 * (a * a - 1.0) / (tp * a * a * s1 * s1 * (s1 - s2));
    });
    add(2, 1, +1, S::Point1, 0, true, "q2 D1 q1(0)", [](double s1, double s2, cplx a, cplx k) {
        return I * (a - 1.0) * (s2 - a * s1 + a * s2) / (tp * a * a * k * s1 * s1 * s1 * (s1 - s2));
    });
    add(2, 1, +1, S::Hat2, 2, false, "q2 D1 hat2(a^2k/s2)", [](double s1, double s2, cplx a, cplx) {
        return (a * a * s2 - s1) / (tp * a * a * s2 * (s1 - s2));
    });
    add(2, 1, -1, S::Point2, 0, true, "q2 D1 q2(0)", [](double s1, double s2, cplx a, cplx k) {
        return I * (a - 1.0) * (a * s1 - a * s2 - s2) / (tp * a * a * k * s2 * s2 * s2 * (s1 - s2));
    });
    // q2, dD3
    add(2, 3, +1, S::Hat1, 1, false, "q2 D3 hat1(ak/s1)", [](double s1, double s2, cplx a, cplx) {
        return s2 * s2 * (a - 1.0) / (tp * a * s1 * s1 * (s1 - s2));
    });
    add(2, 3, -1, S::Point1, 0, true, "q2 D3 q1(0)", [](double s1, double s2, cplx a, cplx k) {
        return I * (a - 1.0) * (s2 + a * s1) / (tp * a * s1 * s1 * s1 * k * (s1 - s2));
    });
    add(2, 3, +1, S::Hat2, 1, false, "q2 D3 hat2(ak/s2)", [](double s1, double s2, cplx a, cplx) {
        return (a * s2 - s1) / (tp * a * s2 * (s1 - s2));
    });
    add(2, 3, -1, S::Point2, 0, true, "q2 D3 q2(0)", [](double s1, double s2, cplx a, cplx k) {
        return I * (a - 1.0) * (s2 + a * s1) / (tp * a * k * s2 * s2 * s2 * (s1 - s2));
    });
    return v;
}

std::vector<ExampleTerm> make_two() {
    using S = ExampleTerm::Source;
    std::vector<ExampleTerm> v;
    auto add = [&](int side, int sec, int sign, S src, int rot, const char* lab, K k) {
        v.push_back({side, sec, sign, src, rot, false, lab, std::move(k)});
    };
    add(1, 5, +1, S::Hat1, 1, "q1 D5 hat1(ak/s1)", [](double s1, double s2, cplx a, cplx) {
        return (s1 - s2) * (s1 + a * s1 + a * s2) /
               (tp * a * s1 * (s1 - a * s2) * (s1 + s2 + a * s2));
    });
    add(1, 5, +1, S::Hat1, 2, "q1 D5 hat1(a^2k/s1)", [](double s1, double s2, cplx a, cplx) {
        return (s2 - s1) / (tp * a * s1 * (s1 + s2 + a * s2));
    });
    add(1, 5, -1, S::Hat2, 0, "q1 D5 hat2(k/s2)", [](double s1, double s2, cplx a, cplx) {
        return 3 * s1 * s1 * s1 / (tp * s2 * (s1 - a * s2) * (s1 + s2 + a * s2));
    });
    auto d1 = [](double s1, double s2, cplx a) {
        return s1 * s1 + a * (1.0 + a) * s1 * s2 - s2 * s2;
    };
    auto d3 = [](double s1, double s2, cplx a) {
        return a * s1 * s1 * (1.0 + a) + s2 * (s1 + s2);
    };
    add(2, 1, -1, S::Hat1, 0, "q2 D1 hat1(k/s1)", [d1](double s1, double s2, cplx a, cplx) {
        return s2 * (s1 * s1 + s1 * s2 - s2 * s2) / (tp * s1 * s1 * d1(s1, s2, a));
    });
    add(2, 1, +1, S::Hat1, 1, "q2 D1 hat1(ak/s1)", [d1](double s1, double s2, cplx a, cplx) {
        return s2 * (s2 * (s1 + s2) + a * (s1 * s1 + s2 * s2)) / (tp * a * s1 * s1 * d1(s1, s2, a));
    });
    add(2, 1, -1, S::Hat2, 2, "q2 D1 hat2(a^2k/s2)", [d1](double s1, double s2, cplx a, cplx) {
        return (s1 * s1 + (1.0 + a) * s1 * s2 - a * s2 * s2) / (tp * a * s2 * d1(s1, s2, a));
    });
    add(2, 3, +1, S::Hat1, 0, "q2 D3 hat1(k/s1)", [d3](double s1, double s2, cplx a, cplx) {
        return s2 * (s1 * s1 + s1 * s2 - s2 * s2) / (tp * s1 * s1 * d3(s1, s2, a));
    });
    add(2, 3, +1, S::Hat1, 2, "q2 D3 hat1(a^2k/s1)", [d3](double s1, double s2, cplx a, cplx) {
        return s2 * (a * s1 * (s2 - s1) + s2 * (s1 + s2)) / (tp * a * s1 * s1 * d3(s1, s2, a));
    });
    add(2, 3, -1, S::Hat2, 1, "q2 D3 hat2(ak/s2)", [d3](double s1, double s2, cplx a, cplx) {
        return ((1.0 + a) * s1 * s1 + s1 * s2 + a * s2 * s2) / (tp * a * s2 * d3(s1, s2, a));
    });
    return v;
}

std::vector<ExampleTerm> make_three() {
    using S = ExampleTerm::Source;
    std::vector<ExampleTerm> v;
    auto add = [&](int side, int sign, S src, int rot, const char* lab, K k) {
        v.push_back({side, 5, sign, src, rot, false, lab, std::move(k)});
    };
    add(1, +1, S::Hat1, 1, "q1 D5 hat1(ak/s1)", [](double s1, double s2, cplx a, cplx) {
        return (s1 + a * s1 - s2) / (tp * a * s1 * (s1 + s2));
    });
    add(1, +1, S::Hat1, 2, "q1 D5 hat1(a^2k/s1)", [](double s1, double s2, cplx a, cplx) {
        return (s2 + a * s2 - s1) / (tp * a * s1 * (s1 + s2));
    });
    add(1, +1, S::Hat2, 1, "q1 D5 hat2(ak/s2)", [](double s1, double s2, cplx a, cplx) {
        return s1 * (2.0 + a) / (tp * a * s2 * (s1 + s2));
    });
    add(1, -1, S::Hat2, 2, "q1 D5 hat2(a^2k/s2)", [](double s1, double s2, cplx a, cplx) {
        return s1 * (2.0 + a) / (tp * a * s2 * (s1 + s2));
    });
    add(2, -1, S::Hat1, 1, "q2 D5 hat1(ak/s1)", [](double s1, double s2, cplx a, cplx) {
        return s2 * (2.0 + a) / (tp * a * s1 * (s1 + s2));
    });
    add(2, +1, S::Hat1, 2, "q2 D5 hat1(a^2k/s1)", [](double s1, double s2, cplx a, cplx) {
        return s2 * (2.0 + a) / (tp * a * s1 * (s1 + s2));
    });
    add(2, -1, S::Hat2, 1, "q2 D5 hat2(ak/s2)", [](double s1, double s2, cplx a, cplx) {
        return (s2 + a * s2 - s1) / (tp * a * s2 * (s1 + s2));
    });
    add(2, -1, S::Hat2, 2, "q2 D5 hat2(a^2k/s2)", [](double s1, double s2, cplx a, cplx) {
        return (s1 + a * s1 - s2) / (tp * a * s2 * (s1 + s2));
    });
    return v;
}

RawCondition cont(int n) {
    RawCondition r;
    r.left[n] = 1.0;
    r.right[n] = -1.0;
    return r;
}

cplx source_value(const ExampleTerm& term, const Problem& p, cplx k) {
    switch (term.source) {
        case ExampleTerm::Hat1: return rotated_transform(p.p1, p.medium, term.rot, k);
        case ExampleTerm::Hat2: return rotated_transform(p.p2, p.medium, term.rot, k);
        case ExampleTerm::Point1: return p.p1.value_at_interface();
        case ExampleTerm::Point2: return p.p2.value_at_interface();
    }
    return 0.0;
}

void check_case(ExampleId id, const Solver& s) {
    const Problem& p = s.problem();
    if (p.cls.reflected || p.cls.tag != example_case(id))
        throw Error("SignCaseMismatch", "medium signs do not match the example");
}

struct TermIntegral {
    cplx value;
    double error;
};

double log_envelope(const Problem& p, double x, double s, double t, cplx k) {
    double g = std::max(p.p1.support_radius() / std::abs(p.medium.sigma1),
                        p.p2.support_radius() / std::abs(p.medium.sigma2));
    return std::real(I * k * x / s - I * k * k * k * t) + g * std::abs(k) +
           2 * std::log(1.0 + std::abs(k));
}

// integral of g(k) e^{ikx/s - ik^3 t} over the outward deformed boundary of the sector
TermIntegral path_integral(const Solver& solver, int sector, double x, double s, double t,
                           const std::function<cplx(cplx)>& g, double tol) {
    const Problem& p = solver.problem();
    ContourPath path = deform(sector_boundary(sector, p.R), solver.delta(), t, true);
    truncate_rays(path, [&](cplx k) { return log_envelope(p, x, s, t, k); }, std::log(tol * 1e-3));
    QuadOptions o;
    o.abs_tol = tol;
    auto f = [&](cplx k) { return g(k) * std::exp(I * k * x / s - I * k * k * k * t); };
    QuadResult r = integrate_path(path, f, o);
    if (!r.converged) throw Error("QuadratureNonConvergence", "example term");
    return {r.value, r.error};
}

// the "-1" half of (e^{-ik^3 t} - 1): no time decay, so both rays are turned to the
// sector bisector where e^{ikx/s} decays exponentially
TermIntegral static_integral(const Solver& solver, int sector, double x, double s,
                             const std::function<cplx(cplx)>& g, double tol) {
    const Problem& p = solver.problem();
    ContourPath path = sector_boundary(sector, p.R);
    auto [a, b] = sector_angles(sector);
    for (auto& seg : path.segments)
        if (seg.kind == Segment::Ray) seg.phi = 0.5 * (a + b);
    auto env = [&](cplx k) { return std::real(I * k * x / s) - std::log(std::abs(k)); };
    truncate_rays(path, env, std::log(tol * 1e-3));
    QuadOptions o;
    o.abs_tol = tol;
    o.max_intervals = 20000;
    auto f = [&](cplx k) { return g(k) * std::exp(I * k * x / s); };
    QuadResult r = integrate_path(path, f, o);
    if (!r.converged) throw Error("QuadratureNonConvergence", "example static term");
    return {r.value, r.error};
}

}  // namespace

const std::vector<ExampleTerm>& example_terms(ExampleId id) {
    static const std::vector<ExampleTerm> one = make_one(), two = make_two(), three = make_three();
    switch (id) {
        case ExampleId::One: return one;
        case ExampleId::Two: return two;
        case ExampleId::Three: return three;
    }
    return one;
}

SignCase example_case(ExampleId id) {
    switch (id) {
        case ExampleId::One: return SignCase::NegPos;
        case ExampleId::Two: return SignCase::PosPos;
        case ExampleId::Three: return SignCase::PosNeg;
    }
    return SignCase::PosPos;
}

std::vector<RawCondition> example_conditions(ExampleId id) {
    switch (id) {
        case ExampleId::One: {
            RawCondition third;
            third.left[3] = 1.0;
            third.right[3] = -1.0;
            return {cont(0), cont(1), cont(2), third};
        }
        case ExampleId::Two: return {cont(0), cont(1), cont(2)};
        case ExampleId::Three: return {cont(0), cont(1)};
    }
    return {};
}

ProblemSpec example_spec(ExampleId id, const Medium& m, const HalfLineProfile& left,
                         const HalfLineProfile& right, double T) {
    Classification c = classify(m);
    if (c.reflected || c.tag != example_case(id))
        throw Error("SignCaseMismatch", "medium signs do not match the example");
    ProblemSpec sp;
    sp.medium = m;
    sp.conditions = example_conditions(id);
    sp.left = left;
    sp.right = right;
    sp.T = T;
    return sp;
}

ExampleValue example_eval(ExampleId id, const Solver& solver, double x, double t) {
    check_case(id, solver);
    const Problem& p = solver.problem();
    int side = x < 0 ? 1 : 2;
    ExampleValue out;
    Term init = solver.initial_term(side, x, t);
    out.value = init.value;
    out.error = init.error;
    if (t == 0.0) return out;
    double s = p.medium.sigma(side);
    const auto& terms = example_terms(id);
    double tol = 0.5 * solver.tolerance() / terms.size();
    for (const auto& term : terms) {
        if (term.side != side) continue;
        auto kern = [&](cplx k) {
            return double(term.sign) * term.kernel(p.medium.sigma1, p.medium.sigma2, alpha_pow(1), k) *
                   source_value(term, p, k);
        };
        TermIntegral a = path_integral(solver, term.sector, x, s, t, kern, tol);
        out.value += a.value;
        out.error += a.error;
        if (term.minus_one && x != 0.0) {
            TermIntegral b = static_integral(solver, term.sector, x, s, kern, tol);
            out.value -= b.value;
            out.error += b.error;
        }
    }
    return out;
}

cplx generic_kernel(const Solver& solver, ExampleId id, const ExampleTerm& term, cplx k) {
    check_case(id, solver);
    const Problem& p = solver.problem();
    auto rows = region_rows(p.cls.tag, term.sector);
    Mat6 A = system_matrix(rows, p.medium, p.cset.beta, k);
    Vec6 e = Vec6::Zero();
    double scale = 1.0 / (2 * pi);
    if (term.source == ExampleTerm::Hat1 || term.source == ExampleTerm::Hat2) {
        int want = term.source == ExampleTerm::Hat1 ? 1 : 2;
        int found = -1;
        for (int i = 0; i < 6; ++i)
            if (rows[i].kind == RowDesc::Global && rows[i].side == want && rows[i].rot == term.rot % 3)
                found = i;
        if (found < 0) return {std::nan(""), std::nan("")};
        e(found) = 1.0;
    } else {
        // q0(0) enters only through reduced third-derivative rows
        const auto& conds = p.spec.conditions;
        int m = int(conds.size());
        Eigen::VectorXd fr = Eigen::VectorXd::Zero(m);
        for (int i = 0; i < m; ++i)
            fr(i) = term.source == ExampleTerm::Point1 ? conds[i].left[3] / p.medium.coefficient(1)
                                                       : conds[i].right[3] / p.medium.coefficient(2);
        Eigen::VectorXd F = p.cset.transform * fr;
        cplx w = I * k * k * k;
        for (int i = 0; i < 6; ++i)
            if (rows[i].kind == RowDesc::Condition) e(i) = -F(rows[i].cond) / w;
        scale = -scale;
    }
    Vec6 X = solve_unknowns(A, e);
    double s = p.medium.sigma(term.side);
    int o = term.side == 1 ? 0 : 3;
    return scale * (s * s * X(o + 2) + I * k * s * X(o + 1) - k * k * X(o));
}

std::vector<TermDiscrepancy> compare_terms(ExampleId id, const Solver& solver, int side, double x,
                                           double t) {
    check_case(id, solver);
    const Problem& p = solver.problem();
    double s = p.medium.sigma(side);
    std::vector<TermDiscrepancy> out;
    for (const auto& term : example_terms(id)) {
        if (term.side != side) continue;
        TermDiscrepancy d;
        d.label = term.label;
        auto printed = [&](cplx k) {
            return double(term.sign) * term.kernel(p.medium.sigma1, p.medium.sigma2, alpha_pow(1), k);
        };
        auto [a, b] = sector_angles(term.sector);
        for (double rad : {1.0, 2.0, 4.0})
            for (double frac : {0.0, 0.3, 0.7, 1.0}) {
                cplx k = std::polar(p.R * rad, a + frac * (b - a));
                cplx gk = generic_kernel(solver, id, term, k), pk = printed(k);
                double rel = std::abs(pk - gk) / std::max(std::abs(gk), 1e-300);
                if (!std::isfinite(rel)) rel = std::numeric_limits<double>::infinity();
                d.kernel_gap = std::max(d.kernel_gap, rel);
            }
        auto gap = [&](cplx k) {
            return (printed(k) - generic_kernel(solver, id, term, k)) * source_value(term, p, k);
        };
        try {
            d.integral_gap = path_integral(solver, term.sector, x, s, t, gap, solver.tolerance()).value;
        } catch (const Error&) {
            d.integral_gap = {std::nan(""), std::nan("")};
        }
        out.push_back(d);
    }
    return out;
}

}  // namespace utm
