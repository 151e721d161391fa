// One line per acceptance criterion. Exit status is nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "utm/closed_form.hpp"
#include "utm/diagnostics.hpp"
#include "utm/oracles.hpp"

using namespace utm;

namespace {

int failures = 0;

void line(int id, bool ok, const std::string& what) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RawCondition cont(int n) {
    RawCondition r;
    r.left[n] = 1.0;
    r.right[n] = -1.0;
    return r;
}

void run(int id, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        line(id, false, std::string("exception: ") + e.what());
    }
}

// FD-friendly data: wide smooth bumps keep the spectrum inside what h = 0.04 resolves
struct FdCheck {
    double worst = 0.0, band = 0.0, order = 0.0, edge = 0.0;
    bool ok = false;
};

FdCheck generic_vs_fd(const Problem& p, const std::vector<double>& pts, double t, double h0, double L) {
    Solver s(p);
    RichardsonResult rr = fd_richardson(p, pts, t, h0, 3, L);
    FdCheck c;
    for (size_t i = 0; i < pts.size(); ++i)
        c.worst = std::max(c.worst, std::abs(s.evaluate(pts[i], t).value.real() - rr.extrapolated[i]));
    c.band = rr.band;
    c.order = rr.order;
    c.edge = rr.edge_max;
    c.ok = c.worst <= c.band && c.order >= 1.8;
    return c;
}

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    ProblemSpec sp;
    sp.medium = Medium(1, 1);
    sp.conditions = {cont(0), cont(1), cont(2)};
    sp.left = HalfLineProfile::box(1, -1, 0);
    Solver s(Problem::build(sp));
    double worst = 0.0;
    for (double t : {0.1, 0.5})
        for (double x = -2.0; x <= 2.0 + 1e-12; x += 0.5) {
            if (std::abs(x) < 0.05) continue;
            cplx a = s.evaluate(x, t).value;
            cplx b = whole_line_solution(sp.left, sp.right, 1.0, x, t).value;
            worst = std::max(worst, std::abs(a - b));
        }
    double secs = seconds_since(t0);
    line(1, worst <= 1e-6 && secs <= 120,
         fmt("whole-line reduction, max discrepancy %.2e (<= 1e-6), %.2f s", worst, secs));
}

void criterion2() {
    struct Case {
        ExampleId id;
        Medium m;
        HalfLineProfile l, r;
        // FD configuration for the fallback
        HalfLineProfile fl, fr;
        double h0, L;
    };
    std::vector<Case> cases = {
        {ExampleId::One, Medium(-1, 1.2), HalfLineProfile::bump(1, 0, 1, 1, 6), HalfLineProfile::bump(2, 0, 1, 1, 6),
         HalfLineProfile::bump(1, 0, 4, 1, 10), HalfLineProfile::bump(2, 0, 4, 1, 10), 0.02, 60},
        {ExampleId::Two, Medium(1, 2), HalfLineProfile::bump(1, -1.5, 1, 1, 6),
         HalfLineProfile::bump(2, 1.5, 1, 0.5, 6), HalfLineProfile::bump(1, -4, 4, 1, 10),
         HalfLineProfile::bump(2, 4, 4, 0.5, 10), 0.04, 60},
        {ExampleId::Three, Medium(1.2, -0.7), HalfLineProfile::bump(1, -1.5, 1, 1, 6),
         HalfLineProfile::bump(2, 1.5, 1, 0.5, 6), HalfLineProfile::bump(1, -4, 4, 1, 10),
         HalfLineProfile::bump(2, 4, 4, 0.5, 10), 0.04, 40},
    };
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> X(0.1, 2.0), T(0.1, 0.9);
    bool all = true;
    std::string summary;
    for (auto& c : cases) {
        Solver s(Problem::build(example_spec(c.id, c.m, c.l, c.r, 1.0)));
        int agree[2] = {0, 0};
        for (int side = 1; side <= 2; ++side)
            for (int i = 0; i < 10; ++i) {
                double x = side == 1 ? -X(rng) : X(rng), t = T(rng);
                SolutionSample g = s.evaluate(x, t);
                ExampleValue e = example_eval(c.id, s, x, t);
                if (std::abs(g.value - e.value) <= 1e-8 + 10 * (g.error_estimate + e.error)) ++agree[side - 1];
            }
        int n = int(c.id);
        summary += fmt(" ex%d closed-form %d/10,%d/10;", n, agree[0], agree[1]);
        if (agree[0] == 10 && agree[1] == 10) continue;
        // errata path: log printed-vs-generic kernels term by term, then require generic vs FD
        for (int side = 1; side <= 2; ++side) {
            if (agree[side - 1] == 10) continue;
            for (auto& d : compare_terms(c.id, s, side, side == 1 ? -0.5 : 0.5, 0.3))
                if (d.kernel_gap > 1e-8)
                    std::printf("    ex%d side %d term '%s': kernel gap %.2e, contribution %.2e\n", n, side,
                                d.label.c_str(), d.kernel_gap, std::abs(d.integral_gap));
        }
        Problem pf = Problem::build(example_spec(c.id, c.m, c.fl, c.fr, 1.0));
        std::vector<double> pts = {-2, -1.2, -0.4, 0.4, 1.2, 2};
        FdCheck fd = generic_vs_fd(pf, pts, 0.2, c.h0, c.L);
        summary += fmt(" generic-vs-FD %.1e<=band %.1e order %.2f %s;", fd.worst, fd.band, fd.order,
                       fd.ok ? "ok" : "FAIL");
        all = all && fd.ok;
    }
    line(2, all, "closed-form examples:" + summary);
}

void criterion3() {
    ProblemSpec sp = example_spec(ExampleId::Three, Medium(1, -1), HalfLineProfile::bump(1, -4, 4, 1, 10),
                                  HalfLineProfile::bump(2, 4, 4, 0.5, 10), 1.0);
    Problem p = Problem::build(sp);
    std::vector<double> pts;
    for (double a : {0.2, 0.6, 1.0, 1.4, 1.8, 2.2, 2.6}) pts.push_back(-a), pts.push_back(a);
    pts.push_back(3.0);
    std::sort(pts.begin(), pts.end());
    FdCheck fd = generic_vs_fd(p, pts, 0.2, 0.04, 25);
    line(3, fd.ok,
         fmt("FD agreement at %zu points, max |UTM - Richardson| %.2e <= band %.2e, order %.2f (>= 1.8)",
             pts.size(), fd.worst, fd.band, fd.order));
}

void criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    struct C {
        SignCase tag;
        Medium m;
    };
    bool ok = true;
    std::string s;
    for (C c : {C{SignCase::PosNeg, Medium(1, -1.3)}, C{SignCase::PosPos, Medium(1, 2)},
                C{SignCase::NegPos, Medium(-1, 1.2)}}) {
        CampaignResult r = run_criteria_campaign(c.tag, c.m, 1000, 42);
        ok = ok && r.agree >= 999 && r.ratio_spread <= 1e-8;
        s += fmt(" %s %d/1000 (as printed %d/1000, %d singular, ratio spread %.1e);", to_string(c.tag), r.agree,
                 r.agree_verbatim, r.singular, r.ratio_spread);
    }
    double secs = seconds_since(t0);
    ok = ok && secs <= 60;
    line(4, ok, "rank-criteria campaign seed 42:" + s + fmt(" %.2f s", secs));
}

std::vector<ProblemSpec> example_specs() {
    return {
        example_spec(ExampleId::One, Medium(-1, 1.2), HalfLineProfile::bump(1, 0, 1, 1, 6),
                     HalfLineProfile::bump(2, 0, 1, 1, 6), 1.0),
        example_spec(ExampleId::Two, Medium(1, 2), HalfLineProfile::bump(1, -1.5, 1, 1, 6),
                     HalfLineProfile::bump(2, 1.5, 1, 0.5, 6), 1.0),
        example_spec(ExampleId::Three, Medium(1, -1), HalfLineProfile::bump(1, -1.5, 1, 1, 6),
                     HalfLineProfile::bump(2, 1.5, 1, 0.5, 6), 1.0),
    };
}

void criterion5() {
    bool ok = true;
    double worst = 0.0;
    for (auto& sp : example_specs()) {
        Solver s(Problem::build(sp));
        for (double f : {0.1, 0.5, 0.9}) {
            auto [res, scale] = interface_residual(s, f * sp.T);
            ok = ok && res <= 1e-5 * scale;
            worst = std::max(worst, res / scale);
        }
    }
    line(5, ok, fmt("interface residuals, worst relative %.2e (<= 1e-5)", worst));
}

void criterion6() {
    ProblemSpec sp = example_spec(ExampleId::Two, Medium(1, 2), HalfLineProfile::bump(1, -1.5, 1, 1, 8),
                                  HalfLineProfile::bump(2, 1.5, 1, 0.5, 8), 1.0);
    sp.tol = 1e-12;
    Solver s(Problem::build(sp));
    FieldFn f = [&](int side, double x, double t, int o) {
        SolutionSample v = s.evaluate_side(side, x, t, o);
        return Term{v.value, v.error_estimate};
    };
    double lo = 1e9;
    for (double x : {-2.2, -1.8, -1.4, -1.0, -0.6, 0.6, 1.0, 1.4, 1.8, 2.2}) {
        int side = x < 0 ? 1 : 2;
        double r[3];
        int i = 0;
        for (double h : {0.04, 0.02, 0.01}) r[i++] = pde_residual(f, sp.medium.sigma(side), side, x, 0.3, h);
        lo = std::min({lo, std::log2(r[0] / r[1]), std::log2(r[1] / r[2])});
    }
    line(6, lo >= 1.8, fmt("PDE residual decay over h = 0.04, 0.02, 0.01 at 10 points, min order %.2f (>= 1.8)", lo));
}

void criterion7() {
    auto specs = example_specs();
    double worst = 0.0;
    std::vector<std::pair<double, double>> pts = {{-1.7, 0.3}, {-1.1, 0.8}, {-0.6, 0.5}, {-0.2, 0.15}, {-1.4, 0.9},
                                                  {0.3, 0.25}, {0.8, 0.6},  {1.3, 0.4},  {1.9, 0.7},  {0.5, 0.95}};
    for (auto& sp : specs) {
        Solver s(Problem::build(sp));
        CheckReport r = deformation_invariance(s, pts, {pi / 48, pi / 24, pi / 16});
        worst = std::max(worst, r.measured);
    }
    line(7, worst <= 1.0,
         fmt("deformation invariance over delta in {pi/48, pi/24, pi/16}, max |diff|/(10 x error) %.2e (<= 1)", worst));
}

void criterion8() {
    ProblemSpec sp = example_spec(ExampleId::Two, Medium(1, 2), HalfLineProfile::bump(1, -1.5, 1, 1, 8),
                                  HalfLineProfile::bump(2, 1.5, 1, 0.5, 8), 0.3);
    Problem p = Problem::build(sp);
    Solver s(p);
    // q(., T) from the finite-difference oracle, interpolated piecewise linearly
    FDField fd = fd_reference(p, {25, 0.02, 0.01}, sp.T);
    std::vector<double> x1, v1, x2, v2;
    for (size_t i = 0; i < fd.x.size(); ++i) {
        if (std::abs(fd.x[i]) > 6) continue;
        if (fd.x[i] < 0)
            x1.push_back(fd.x[i]), v1.push_back(fd.q[i]);
        else
            x2.push_back(fd.x[i]), v2.push_back(fd.q[i]);
    }
    x1.push_back(0.0), v1.push_back(v1.back());
    x2.insert(x2.begin(), 0.0), v2.insert(v2.begin(), v2.front());
    HalfLineProfile q1 = HalfLineProfile::from_samples(1, x1, v1), q2 = HalfLineProfile::from_samples(2, x2, v2);
    double worst = 0.0;
    for (auto [x, t] : std::vector<std::pair<double, double>>{{-1, 0.1}, {-0.5, 0.2}, {0.5, 0.15}, {1, 0.05}, {2, 0.2}})
        worst = std::max(worst, std::abs(s.retained_term(x < 0 ? 1 : 2, x, t, q1, q2, sp.T).value));
    line(8, worst <= 10 * sp.tol,
         fmt("retained e^{ik^3 T} term at 5 points, max %.2e (<= 10 x tol = %.0e)", worst, 10 * sp.tol));
}

void criterion9() {
    ProblemSpec sp = example_specs()[0];
    Solver s(Problem::build(sp));
    double q0 = sp.left.value(0.0), worst = 0.0;
    for (double t : {0.1, 0.4, 0.8})
        for (int side = 1; side <= 2; ++side)
            worst = std::max(worst, std::abs(s.trace(side, 0, t).value - q0) / std::abs(q0));
    line(9, worst <= 1e-4, fmt("Example 1 interface traces constant in t, max relative drift %.2e (<= 1e-4)", worst));
}

void criterion10() {
    std::string a, b;
    bool ok1 = false, ok2 = false;
    ProblemSpec sp;
    sp.medium = Medium(1, 2);
    sp.conditions = {RawCondition{}, RawCondition{}, RawCondition{}};
    try {
        Problem::build(sp);
        a = "accepted";
    } catch (const Error& e) {
        a = e.what();
        ok1 = e.exit_code() == 3 && a.find("det ≡ 0") != std::string::npos;
        a += fmt(" (exit %d)", e.exit_code());
    }
    RawCondition bc;
    bc.left[0] = 1.0;
    sp.conditions = {bc, cont(1), cont(2)};
    try {
        Problem::build(sp);
        b = "accepted";
    } catch (const Error& e) {
        b = e.what();
        ok2 = e.name() == "DecoupledProblem" && b.find("left-first") != std::string::npos;
    }
    line(10, ok1 && ok2, "degeneracy handling: zero beta -> " + a + "; q1(0)=0 -> " + b);
}

}  // namespace

int main() {
    run(1, criterion1);
    run(2, criterion2);
    run(3, criterion3);
    run(4, criterion4);
    run(5, criterion5);
    run(6, criterion6);
    run(7, criterion7);
    run(8, criterion8);
    run(9, criterion9);
    run(10, criterion10);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
