#pragma once

#include <string>
#include <vector>

#include "utm/evaluator.hpp"

namespace utm {

struct RunConfig {
    int schema_version = 1;
    double sigma1 = 1.0, sigma2 = 1.0;
    std::vector<RawCondition> conditions;
    std::vector<Piece> left, right;
    double T = 1.0;
    std::vector<double> xs, ts;
    double tol = 1e-10;
    double delta = pi / 24;
    std::string oracle = "none";  // none, whole-line, fd
    double compare_tol = 1e-6;
    double fd_h = 0.04;
    double fd_L = 25.0;
    std::string output;

    ProblemSpec to_spec() const;
    bool operator==(const RunConfig&) const = default;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string dump_config(const RunConfig& c);

}  // namespace utm
