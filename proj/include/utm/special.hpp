#pragma once

#include "utm/core.hpp"

namespace utm {

// E_n(z) = int_0^1 u^n e^{-z u} du, entire in z
cplx moment_exp(int n, cplx z);

// int_0^y v^n e^{-i k v} dv
cplx monomial_ft(int n, double y, cplx k);

}  // namespace utm
