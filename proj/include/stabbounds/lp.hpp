#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

namespace stabbounds {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Relation { LessEq, Equal, GreaterEq };

// min c.x  subject to rows (a.x <op> rhs) and per-variable bounds.
// Variables are free unless bounds say otherwise.
struct LinearProgram {
    std::vector<double> objective;
    struct Row {
        std::vector<double> coeffs;
        Relation rel = Relation::Equal;
        double rhs = 0.0;
        std::string name;
    };
    std::vector<Row> rows;
    std::vector<double> lower;  // empty means all -inf
    std::vector<double> upper;  // empty means all +inf

    int num_vars() const { return static_cast<int>(objective.size()); }
    void add_row(std::vector<double> coeffs, Relation rel, double rhs, std::string name = "");
    double lower_bound(int j) const { return lower.empty() ? -kInf : lower[j]; }
    double upper_bound(int j) const { return upper.empty() ? kInf : upper[j]; }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

// Dual convention for the min problem: dual_values[i] multiplies row i in the
// Lagrangian c.x - sum_i y_i (a_i.x - b_i), so y >= 0 on GreaterEq rows,
// y <= 0 on LessEq rows, free on Equal rows, and the dual objective is
// b.y plus the bound terms.
struct LpSolution {
    LpStatus status = LpStatus::Optimal;
    std::vector<double> x;
    double objective_value = 0.0;
    std::vector<double> dual_values;
    int iterations = 0;
    double max_primal_residual = 0.0;
    double max_dual_residual = 0.0;
    double duality_gap = 0.0;
};

// Two-phase dense tableau simplex. Deterministic: Dantzig pricing with a
// lowest-index tie break, switching to Bland's rule after a long degenerate
// stall. No randomization, no big-M.
LpSolution solve(const LinearProgram& lp);

// Residual report for a (primal, dual) pair against the program data.
struct CertificateReport {
    double max_primal_residual = 0.0;
    double max_dual_residual = 0.0;
    double max_complementarity = 0.0;
    double primal_objective = 0.0;
    double dual_objective = 0.0;
    bool ok = false;
    std::string worst_row;  // name of the worst violated constraint, if any
};

CertificateReport verify_certificate(const LinearProgram& lp,
                                     std::span<const double> x,
                                     std::span<const double> duals,
                                     double tol = 1e-8);

// Primal feasibility only: largest row/bound violation of the given point.
struct PointReport {
    double max_violation = 0.0;
    double objective = 0.0;
    bool feasible = false;
    std::string worst_row;
};

PointReport verify_point(const LinearProgram& lp, std::span<const double> x, double tol = 1e-8);

}  // namespace stabbounds
