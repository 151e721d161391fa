#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "utm/forcing.hpp"
#include "utm/medium.hpp"

namespace utm {

// sum_n left[n] d^n q1(0,t) + sum_n right[n] d^n q2(0,t) = forcing(t), n = 0..3
struct RawCondition {
    std::array<double, 4> left{};
    std::array<double, 4> right{};
    Forcing forcing;
    bool operator==(const RawCondition&) const = default;
};

struct CanonicalConditionSet {
    SignCase tag = SignCase::PosPos;
    Eigen::MatrixXd beta;  // m x 6, columns q1, q1x, q1xx, q2, q2x, q2xx
    std::vector<Forcing> forcings;
    Eigen::MatrixXd transform;  // beta = transform * raw beta
    int bc_left = 0;            // rows expressible in q1 columns alone
    int bc_right = 0;
    int boundary_condition_count() const { return std::max(bc_left, bc_right); }
};

struct BoundaryCounts {
    int left;
    int right;
};

struct Decoupling {
    bool decoupled = false;
    int side = 0;  // 1: left BVP separates first, 2: right first
    std::string describe() const;
};

RawCondition reduce_third_derivative(const RawCondition& raw, const Medium& m, double q0_left_at_0,
                                     double q0_right_at_0);
RawCondition reflect_condition(const RawCondition& raw);

Eigen::MatrixXd raw_beta(const std::vector<RawCondition>& raws);
BoundaryCounts boundary_counts(const Eigen::MatrixXd& beta);
Decoupling decoupling(const Eigen::MatrixXd& beta, const Medium& m);
int numeric_rank(const Eigen::MatrixXd& A);

CanonicalConditionSet canonicalize(const std::vector<RawCondition>& raws, SignCase tag,
                                   const Medium& m);

struct CriterionValue {
    double lhs = 0.0;
    double rhs = 0.0;
    double scale = 0.0;
    bool holds = false;
};

struct DeterminantPolynomial;

struct RankReport {
    SignCase tag = SignCase::PosPos;
    std::array<CriterionValue, 5> criteria{};
    bool full_rank = false;          // from the criteria
    bool det_full_rank = false;      // from the interpolated determinant
    bool consistent = false;
    CriterionValue printed_pn3{};    // the PosNeg criterion 3 as printed
    std::vector<std::array<cplx, 5>> det_coeffs;  // per region
    std::vector<int> regions;
    int first_holding() const;
};

std::array<CriterionValue, 5> evaluate_criteria(SignCase tag, const Eigen::MatrixXd& beta,
                                                const Medium& m, CriterionValue* printed_pn3 = nullptr);
RankReport rank_criteria(const CanonicalConditionSet& cset, const Medium& m);

}  // namespace utm
