#include "utm/special.hpp"

namespace utm {

cplx moment_exp(int n, cplx z) {
    double az = std::abs(z);
    if (az <= n + 2.0) {
        // e^{-z} sum_m z^m n!/(n+m+1)!; terms shrink monotonically here
        cplx term = 1.0 / (n + 1.0), sum = term;
        for (int m = 0; m < 400; ++m) {
            term *= z / (n + m + 2.0);
            sum += term;
            if (std::abs(term) <= 1e-17 * std::abs(sum) && m > az) break;
        }
        return std::exp(-z) * sum;
    }
    // n!/z^{n+1} - e^{-z} sum_j n!/((n-j)! z^{j+1})
    cplx inv = 1.0 / z;
    cplx head = 1.0;
    for (int j = 1; j <= n; ++j) head *= double(j) * inv;
    head *= inv;
    cplx tail = 0.0, term = inv;
    for (int j = 0; j <= n; ++j) {
        tail += term;
        term *= double(n - j) * inv;
    }
    return head - std::exp(-z) * tail;
}

cplx monomial_ft(int n, double y, cplx k) {
    if (y == 0.0) return 0.0;
    return std::pow(y, n + 1) * moment_exp(n, I * k * y);
}

}  // namespace utm
