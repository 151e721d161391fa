#include "utm/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "utm/config.hpp"
#include "utm/oracles.hpp"

namespace utm {

namespace {

std::string shortest(double v) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string describe_case(const Problem& p) {
    std::ostringstream os;
    os << to_string(p.cls.tag);
    if (p.cls.reflected)
        os << " (reflected x -> -x from sigma=(" << p.spec.medium.sigma1 << ", " << p.spec.medium.sigma2 << "))";
    return os.str();
}

void print_report(const Problem& p, std::ostream& out) {
    const RankReport& r = p.report;
    out << describe_case(p) << ", " << required_condition_count(p.cls.tag) << " required, ";
    if (r.full_rank)
        out << "full rank (criterion " << r.first_holding() << ")\n";
    else
        out << "rank-deficient\n";
    out << "boundary conditions: " << p.cset.boundary_condition_count() << " (left " << p.cset.bc_left
        << ", right " << p.cset.bc_right << ")\n";
    out << "decoupling: " << decoupling(p.cset.beta, p.medium).describe() << "\n";
    for (int i = 0; i < 5; ++i) {
        const CriterionValue& c = r.criteria[i];
        out << "criterion " << i + 1 << ": lhs=" << shortest(c.lhs) << " rhs=" << shortest(c.rhs)
            << (c.holds ? " holds" : " fails") << "\n";
    }
    out << "determinant check: " << (r.det_full_rank ? "nonzero" : "identically zero")
        << (r.consistent ? "" : " (DISAGREES with criteria)") << "\n";
    out << "R = " << shortest(p.R) << "\n";
}

struct Options {
    std::string config, out, oracle;
    double tol = 0.0, delta = -1.0;
};

RunConfig load(const Options& o) {
    RunConfig c = load_config(o.config);
    if (o.tol > 0) c.tol = o.tol;
    if (o.delta >= 0) c.delta = o.delta;
    if (!o.oracle.empty()) {
        if (o.oracle != "whole-line" && o.oracle != "fd")
            throw Error("ConfigError", "--oracle must be whole-line or fd");
        c.oracle = o.oracle;
    }
    if (!o.out.empty()) c.output = o.out;
    return c;
}

void need_grid(const RunConfig& c) {
    if (c.xs.empty() || c.ts.empty()) throw Error("ConfigError", "'grid.xs' and 'grid.ts' must be non-empty");
    for (double x : c.xs)
        if (x == 0.0) throw Error("ConfigError", "'grid.xs' contains 0; the interface has one-sided values only");
}

int cmd_classify(const Options& o, std::ostream& out) {
    RunConfig c = load(o);
    Problem p = Problem::build(c.to_spec());
    print_report(p, out);
    return p.report.full_rank ? 0 : 3;
}

int cmd_solve(const Options& o, std::ostream& out) {
    RunConfig c = load(o);
    need_grid(c);
    Problem p = Problem::build(c.to_spec());
    Solver s(p);
    s.set_delta(c.delta);
    auto samples = s.evaluate_grid(c.xs, c.ts);
    std::string path = c.output.empty() ? "solution.csv" : c.output;
    std::ostringstream csv;
    csv << "x,t,re_q,im_q,err_est\n";
    for (auto& v : samples) {
        if (!v.status.empty()) throw Error("QuadratureNonConvergence", v.status);
        csv << shortest(v.x) << ',' << shortest(v.t) << ',' << shortest(v.value.real()) << ','
            << shortest(v.value.imag()) << ',' << shortest(v.error_estimate) << '\n';
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("ConfigError", "cannot write '" + path + "'");
    f << csv.str();
    std::ofstream m(path + ".manifest.txt", std::ios::binary);
    m << "case: " << describe_case(p) << "\nR: " << shortest(p.R) << "\ndelta: " << shortest(c.delta)
      << "\ntol: " << shortest(c.tol) << "\n";
    for (int i = 0; i < 5; ++i)
        m << "criterion " << i + 1 << ": " << shortest(p.report.criteria[i].lhs - p.report.criteria[i].rhs)
          << (p.report.criteria[i].holds ? " holds" : " fails") << "\n";
    out << "wrote " << samples.size() << " rows to " << path << "\n";
    return 0;
}

int cmd_compare(const Options& o, std::ostream& out) {
    RunConfig c = load(o);
    need_grid(c);
    if (c.oracle == "none") throw Error("ConfigError", "'oracle' must be set (whole-line or fd)");
    if (c.oracle == "whole-line" && c.sigma1 != c.sigma2)
        throw Error("OracleUnavailable", "whole-line oracle needs sigma1 == sigma2");
    Problem p = Problem::build(c.to_spec());
    Solver s(p);
    s.set_delta(c.delta);
    double h = c.xs.size() > 1 ? (c.xs.back() - c.xs.front()) / double(c.xs.size() - 1) : 1.0;
    double worst = 0.0, l2 = 0.0, threshold = c.compare_tol;
    for (double t : c.ts) {
        std::vector<double> a, b;
        for (double x : c.xs) a.push_back(s.evaluate(x, t).value.real());
        if (c.oracle == "whole-line") {
            for (double x : c.xs)
                b.push_back(whole_line_solution(p.spec.left, p.spec.right, c.sigma1, x, t).value.real());
        } else {
            RichardsonResult rr = fd_richardson(p, c.xs, t, c.fd_h, 3, c.fd_L);
            b = rr.extrapolated;
            threshold = std::max(threshold, rr.band);
            out << "t=" << shortest(t) << " fd order " << shortest(rr.order) << " band " << shortest(rr.band)
                << "\n";
        }
        worst = std::max(worst, compare(a, b, Norm::Max));
        l2 = std::max(l2, compare(a, b, Norm::L2, h));
    }
    bool ok = worst <= threshold;
    out << "oracle " << c.oracle << ": max " << shortest(worst) << " L2 " << shortest(l2) << " threshold "
        << shortest(threshold) << (ok ? " PASS" : " FAIL") << "\n";
    return ok ? 0 : 4;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"interface linear KdV solver"};
    app.require_subcommand(1);
    Options o;
    auto add = [&](CLI::App* sub) {
        sub->add_option("--config", o.config, "problem description (JSON)")->required();
        sub->add_option("--out", o.out, "output CSV path");
        sub->add_option("--oracle", o.oracle, "whole-line or fd");
        sub->add_option("--tol", o.tol, "quadrature tolerance");
        sub->add_option("--delta", o.delta, "contour deformation angle");
    };
    CLI::App* classify = app.add_subcommand("classify", "sign case, counts and rank criteria");
    CLI::App* solve = app.add_subcommand("solve", "evaluate on the configured grid and write CSV");
    CLI::App* cmp = app.add_subcommand("compare", "compare against an oracle");
    add(classify), add(solve), add(cmp);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o2, e2;
        int code = app.exit(e, o2, e2);
        out << o2.str();
        err << e2.str();
        return code == 0 ? 0 : 2;
    }
    try {
        if (*classify) return cmd_classify(o, out);
        if (*solve) return cmd_solve(o, out);
        return cmd_compare(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace utm
