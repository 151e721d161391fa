#include "utm/quadrature.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace utm {

namespace {

const double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                       0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                       0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                       0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
const double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                       0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                       0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                       0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                      0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
    double a, b;
    cplx val;
    double err;
    bool operator<(const Interval& o) const { return err < o.err; }
};

Interval gk15(const std::function<cplx(double)>& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx fc = f(c);
    cplx rk = fc * wgk[7];
    cplx rg = fc * wg[3];
    for (int j = 0; j < 7; ++j) {
        double dx = h * xgk[j];
        cplx f1 = f(c - dx), f2 = f(c + dx);
        rk += wgk[j] * (f1 + f2);
        if (j % 2 == 1) rg += wg[j / 2] * (f1 + f2);
    }
    rk *= h;
    rg *= h;
    double err = std::abs(rk - rg);
    if (!std::isfinite(err)) err = std::numeric_limits<double>::infinity();
    double floor = 50.0 * std::numeric_limits<double>::epsilon() * std::abs(rk);
    return {a, b, rk, std::max(err, floor)};
}

}  // namespace

QuadResult integrate(const std::function<cplx(double)>& f, double a, double b,
                     const QuadOptions& opt, const std::vector<double>& breaks) {
    QuadResult res;
    if (a == b) return res;
    std::vector<double> pts{a};
    for (double x : breaks)
        if (x > std::min(a, b) && x < std::max(a, b)) pts.push_back(x);
    pts.push_back(b);
    if (a < b)
        std::sort(pts.begin(), pts.end());
    else
        std::sort(pts.begin(), pts.end(), std::greater<double>());

    std::priority_queue<Interval> heap;
    cplx total = 0.0;
    double err = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        Interval iv = gk15(f, pts[i], pts[i + 1]);
        res.evals += 15;
        total += iv.val;
        err += iv.err;
        heap.push(iv);
    }
    int count = int(heap.size());
    while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
        if (count >= opt.max_intervals || !std::isfinite(err)) {
            res.converged = false;
            break;
        }
        Interval top = heap.top();
        heap.pop();
        double m = 0.5 * (top.a + top.b);
        if (m == top.a || m == top.b) {
            res.converged = false;
            break;
        }
        Interval l = gk15(f, top.a, m), r = gk15(f, m, top.b);
        res.evals += 30;
        total += l.val + r.val - top.val;
        err += l.err + r.err - top.err;
        heap.push(l);
        heap.push(r);
        ++count;
    }
    // re-sum to shed accumulated cancellation in the running totals
    total = 0.0;
    err = 0.0;
    while (!heap.empty()) {
        total += heap.top().val;
        err += heap.top().err;
        heap.pop();
    }
    res.value = total;
    res.error = err;
    return res;
}

}  // namespace utm
