#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace utm {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cplx I{0.0, 1.0};

// alpha = e^{2 pi i/3}; exact constants keep 1 + a + a^2 at rounding level
inline cplx alpha_pow(int j) {
    j %= 3;
    if (j < 0) j += 3;
    const double h = 0.86602540378443864676;
    if (j == 0) return {1.0, 0.0};
    if (j == 1) return {-0.5, h};
    return {-0.5, -h};
}

enum class ErrorKind { User, Degenerate, Numerical };

class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& msg);
    const std::string& name() const { return name_; }
    ErrorKind kind() const { return kind_; }
    int exit_code() const;

private:
    std::string name_;
    ErrorKind kind_;
};

ErrorKind error_kind(const std::string& name);

}  // namespace utm
