#include "utm/oracles.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <map>

namespace utm {

Term whole_line_solution(const HalfLineProfile& left, const HalfLineProfile& right, double sigma,
                         double x, double t, double tol) {
    Term out;
    if (t == 0.0) {
        out.value = x <= 0 ? left.value(x) : right.value(x);
        if (x == 0.0) out.value += right.value(0.0);
        return out;
    }
    double c = sigma * sigma * sigma, sg = c > 0 ? 1.0 : -1.0;
    double L = std::max(left.support_radius(), right.support_radius());
    double scale = std::max(1.0, left.l1_norm() + right.l1_norm());
    double delta = pi / 24;
    auto f = [&](cplx k) {
        return std::exp(I * k * x - I * c * k * k * k * t) * (left.transform(k) + right.transform(k));
    };
    auto env = [&](cplx k) {
        return std::real(I * k * x - I * c * k * k * k * t) + L * std::abs(k.imag());
    };
    QuadOptions o;
    o.abs_tol = 0.5 * tol;
    for (int half = 0; half < 2; ++half) {
        ContourPath path;
        Segment s;
        s.p = 0.0;
        s.phi = half == 0 ? -sg * delta : pi + sg * delta;
        s.inbound = half == 1;
        path.segments = {s};
        truncate_rays(path, env, std::log(tol * 1e-3 / scale));
        QuadResult r = integrate_path(path, f, o);
        if (!r.converged) throw Error("QuadratureNonConvergence", "whole-line oracle");
        out.value += r.value / (2 * pi);
        out.error += r.error / (2 * pi);
    }
    return out;
}

double FDField::value_at(double xq) const {
    long idx = std::lround(xq / h);
    if (idx == 0 || std::abs(xq - idx * h) > 1e-9 * std::max(1.0, std::abs(xq)))
        throw Error("GridMismatch", "point is not a grid node");
    auto it = std::lower_bound(x.begin(), x.end(), idx * h - 0.5 * h);
    if (it == x.end()) throw Error("GridMismatch", "point outside the grid");
    return q[it - x.begin()];
}

namespace {

// node (side, j): side 1 j <= 0, side 2 j >= 0
struct Node {
    int side, j;
    bool operator<(const Node& o) const { return side != o.side ? side < o.side : j < o.j; }
};

const double E4[5] = {1, -4, 6, -4, 1};

}  // namespace

FDField fd_reference(const Problem& p, const FDGrid& grid, double t_final) {
    const double h = grid.h, tau = grid.tau;
    const int M = int(std::lround(grid.L_dom / h));
    const int n = 2 * M;
    const double s1 = p.medium.sigma1, s2 = p.medium.sigma2;
    const Eigen::MatrixXd& beta = p.cset.beta;
    const int m = int(beta.rows());

    auto wi = [&](int side, int j) -> int {
        if (side == 1 && j >= -M && j <= -1) return j + M;
        if (side == 2 && j >= 1 && j <= M) return M - 1 + j;
        return -1;
    };
    std::vector<Node> alg = {{1, 0}, {1, 1}, {2, 0}, {2, -1}, {1, -M - 1}, {1, -M - 2}, {2, M + 1}, {2, M + 2}};
    std::map<Node, int> ai;
    for (size_t i = 0; i < alg.size(); ++i) ai[alg[i]] = int(i);
    const int na = int(alg.size());
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(na, na), E = Eigen::MatrixXd::Zero(na, n),
                    F = Eigen::MatrixXd::Zero(na, m);
    int r = 0;
    auto put = [&](int side, int j, double v) {
        auto it = ai.find({side, j});
        if (it != ai.end()) {
            G(r, it->second) += v;
            return;
        }
        int w = wi(side, j);
        if (w < 0) throw Error("ConstraintSingular", "stencil leaves the grid");
        E(r, w) += v;
    };
    for (int i = 0; i < m; ++i) {
        for (int c = 0; c < 6; ++c) {
            double b = beta(i, c);
            if (b == 0.0) continue;
            int side = c < 3 ? 1 : 2, o = c % 3;
            if (o == 0) put(side, 0, b);
            if (o == 1) put(side, 1, 0.5 * b / h), put(side, -1, -0.5 * b / h);
            if (o == 2) put(side, 1, b / (h * h)), put(side, 0, -2 * b / (h * h)), put(side, -1, b / (h * h));
        }
        F(r, i) = 1.0;
        ++r;
    }
    // the outflow side of the interface gets an extrapolated ghost
    if (s1 > 0) {
        for (int q = 0; q < 5; ++q) put(1, 1 - q, E4[q]);
        ++r;
    }
    if (s2 < 0) {
        for (int q = 0; q < 5; ++q) put(2, -1 + q, E4[q]);
        ++r;
    }
    // far ends: inflow ends clamp both ghosts, outflow ends clamp one and extrapolate
    put(1, -M - 1, 1.0);
    ++r;
    if (s1 > 0)
        put(1, -M - 2, 1.0);
    else
        for (int q = 0; q < 5; ++q) put(1, -M - 2 + q, E4[q]);
    ++r;
    put(2, M + 1, 1.0);
    ++r;
    if (s2 < 0)
        put(2, M + 2, 1.0);
    else
        for (int q = 0; q < 5; ++q) put(2, M + 2 - q, E4[q]);
    ++r;
    if (r != na) throw Error("ConstraintSingular", "interface block is not square");

    Eigen::FullPivLU<Eigen::MatrixXd> glu(G);
    if (glu.rank() < na || std::abs(glu.rcond()) < 1e-13)
        throw Error("ConstraintSingular", "interface constraint block is singular");
    Eigen::MatrixXd P = -glu.solve(E), Q = glu.solve(F);

    std::vector<Eigen::Triplet<double>> trip;
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, m);
    const int off[4] = {-2, -1, 1, 2};
    const double st[4] = {-1, 2, -2, 1};
    for (int side = 1; side <= 2; ++side) {
        double c = std::pow(side == 1 ? s1 : s2, 3) / (2 * h * h * h);
        int lo = side == 1 ? -M : 1, hi = side == 1 ? -1 : M;
        for (int i = lo; i <= hi; ++i) {
            int ri = wi(side, i);
            for (int q = 0; q < 4; ++q) {
                int j = i + off[q];
                int w = wi(side, j);
                double v = c * st[q];
                if (w >= 0) {
                    trip.emplace_back(ri, w, v);
                    continue;
                }
                int a = ai.at({side, j});
                for (int jj = 0; jj < n; ++jj)
                    if (P(a, jj) != 0.0) trip.emplace_back(ri, jj, v * P(a, jj));
                B.row(ri) += v * Q.row(a);
            }
        }
    }
    Eigen::SparseMatrix<double> L(n, n), Id(n, n);
    L.setFromTriplets(trip.begin(), trip.end());
    Id.setIdentity();
    Eigen::SparseMatrix<double> Am = Id - 0.5 * tau * L, Bm = Id + 0.5 * tau * L;
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(Am);
    if (lu.info() != Eigen::Success) throw Error("ConstraintSingular", "time-step matrix factorization");

    Eigen::VectorXd w(n);
    std::vector<double> xs(n);
    for (int j = -M; j <= -1; ++j) {
        xs[wi(1, j)] = j * h;
        w(wi(1, j)) = p.p1.value(j * h);
    }
    for (int j = 1; j <= M; ++j) {
        xs[wi(2, j)] = j * h;
        w(wi(2, j)) = p.p2.value(j * h);
    }
    auto forcing = [&](double t) {
        Eigen::VectorXd f(m);
        for (int i = 0; i < m; ++i) f(i) = p.cset.forcings[i].value(t);
        return f;
    };
    double norm0 = std::max(w.cwiseAbs().maxCoeff(), 1e-300);
    int steps = int(std::lround(t_final / tau));
    for (int s = 0; s < steps; ++s) {
        Eigen::VectorXd rhs = Bm * w;
        if (m > 0) rhs += 0.5 * tau * (B * (forcing(s * tau) + forcing((s + 1) * tau)));
        w = lu.solve(rhs);
        double nw = w.cwiseAbs().maxCoeff();
        if (!std::isfinite(nw) || nw > 1e3 * std::max(norm0, 1.0))
            throw Error("InstabilityDetected", "norm growth beyond 1e3");
    }

    FDField out;
    out.h = h;
    out.t = steps * tau;
    int edge = std::max(1, M / 10);
    for (int j = 0; j < edge; ++j)
        out.edge_max = std::max({out.edge_max, std::abs(w(j)), std::abs(w(n - 1 - j))});
    std::vector<std::pair<double, double>> pts(n);
    for (int i = 0; i < n; ++i) {
        double x = xs[i];
        if (p.cls.reflected) x = -x;
        pts[i] = {x, w(i)};
    }
    std::sort(pts.begin(), pts.end());
    for (auto& [x, v] : pts) {
        out.x.push_back(x);
        out.q.push_back(v);
    }
    return out;
}

RichardsonResult fd_richardson(const Problem& p, const std::vector<double>& points, double t,
                               double h0, int levels, double L_dom) {
    RichardsonResult rr;
    double h = h0;
    for (int l = 0; l < levels; ++l, h *= 0.5) {
        FDGrid g{L_dom, h, 0.5 * h};
        FDField f = fd_reference(p, g, t);
        std::vector<double> v;
        for (double x : points) v.push_back(f.value_at(x));
        rr.hs.push_back(h);
        rr.values.push_back(v);
        rr.edge_max = std::max(rr.edge_max, f.edge_max);
    }
    size_t L = rr.values.size();
    if (L >= 3) {
        double d1 = compare(rr.values[L - 3], rr.values[L - 2], Norm::Max);
        double d2 = compare(rr.values[L - 2], rr.values[L - 1], Norm::Max);
        rr.order = std::log2(d1 / d2);
    }
    double pw = std::pow(2.0, std::max(rr.order, 1.0)) - 1.0;
    for (size_t i = 0; i < points.size(); ++i) {
        double a = rr.values[L - 1][i], b = rr.values[L - 2][i];
        rr.extrapolated.push_back(a + (a - b) / pw);
        rr.band = std::max(rr.band, std::abs(a - b));
    }
    return rr;
}

double compare(const std::vector<double>& a, const std::vector<double>& b, Norm norm, double h) {
    if (a.size() != b.size()) throw Error("GridMismatch", "fields have different sizes");
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double d = std::abs(a[i] - b[i]);
        acc = norm == Norm::Max ? std::max(acc, d) : acc + d * d;
    }
    return norm == Norm::Max ? acc : std::sqrt(h * acc);
}

}  // namespace utm
