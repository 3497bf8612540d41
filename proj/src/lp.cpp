#include "stabbounds/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stabbounds {

namespace {

constexpr double kPivotTol = 1e-10;
constexpr double kFeasTol = 1e-9;
constexpr double kDegenerateStep = 1e-12;
constexpr int kBlandAfter = 1000;
constexpr int kMaxPivots = 200000;

// Equality standard form: min c.y, A y = b, y >= 0, b >= 0.
struct Standardized {
    int num_rows = 0;
    int num_cols = 0;  // structural + slack columns
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    std::vector<double> cost;
    std::vector<int> orient;        // +1 / -1 applied to the row
    std::vector<int> identity_col;  // slack usable as initial basis, else -1
    std::vector<int> source_row;    // original row index, -1 for bound rows

    struct VarMap {
        enum Kind { Split, Lower, Upper } kind;
        int col1 = -1, col2 = -1;
        double shift = 0.0;
    };
    std::vector<VarMap> vars;
    bool bound_infeasible = false;
};

Standardized standardize(const LinearProgram& lp) {
    Standardized std_form;
    const int n = lp.num_vars();

    std_form.vars.resize(n);
    int next_col = 0;
    std::vector<std::pair<int, double>> range_rows;  // (var, width) for two-sided bounds
    for (int j = 0; j < n; ++j) {
        const double l = lp.lower_bound(j), u = lp.upper_bound(j);
        auto& vm = std_form.vars[j];
        if (l == -kInf && u == kInf) {
            vm.kind = Standardized::VarMap::Split;
            vm.col1 = next_col++;
            vm.col2 = next_col++;
        } else if (u == kInf) {
            vm.kind = Standardized::VarMap::Lower;
            vm.col1 = next_col++;
            vm.shift = l;
        } else if (l == -kInf) {
            vm.kind = Standardized::VarMap::Upper;
            vm.col1 = next_col++;
            vm.shift = u;
        } else {
            if (l > u + kFeasTol) std_form.bound_infeasible = true;
            vm.kind = Standardized::VarMap::Lower;
            vm.col1 = next_col++;
            vm.shift = l;
            range_rows.emplace_back(j, u - l);
        }
    }

    const int num_rows = static_cast<int>(lp.rows.size()) + static_cast<int>(range_rows.size());
    int num_slacks = 0;
    for (const auto& row : lp.rows)
        if (row.rel != Relation::Equal) ++num_slacks;
    num_slacks += static_cast<int>(range_rows.size());
    std_form.num_rows = num_rows;
    std_form.num_cols = next_col + num_slacks;

    std_form.rows.assign(num_rows, std::vector<double>(std_form.num_cols, 0.0));
    std_form.rhs.assign(num_rows, 0.0);
    std_form.orient.assign(num_rows, 1);
    std_form.identity_col.assign(num_rows, -1);
    std_form.source_row.assign(num_rows, -1);
    std_form.cost.assign(std_form.num_cols, 0.0);

    for (int j = 0; j < n; ++j) {
        const auto& vm = std_form.vars[j];
        const double c = lp.objective[j];
        if (vm.kind == Standardized::VarMap::Split) {
            std_form.cost[vm.col1] += c;
            std_form.cost[vm.col2] -= c;
        } else if (vm.kind == Standardized::VarMap::Lower) {
            std_form.cost[vm.col1] += c;
        } else {
            std_form.cost[vm.col1] -= c;
        }
    }

    int slack_col = next_col;
    auto fill_row = [&](int r, const std::vector<double>& coeffs, Relation rel, double rhs) {
        auto& row = std_form.rows[r];
        double b = rhs;
        for (int j = 0; j < static_cast<int>(coeffs.size()); ++j) {
            const double a = coeffs[j];
            if (a == 0.0) continue;
            const auto& vm = std_form.vars[j];
            if (vm.kind == Standardized::VarMap::Split) {
                row[vm.col1] += a;
                row[vm.col2] -= a;
            } else if (vm.kind == Standardized::VarMap::Lower) {
                row[vm.col1] += a;
                b -= a * vm.shift;
            } else {
                row[vm.col1] -= a;
                b -= a * vm.shift;
            }
        }
        int sc = -1;
        if (rel != Relation::Equal) {
            sc = slack_col++;
            row[sc] = (rel == Relation::LessEq) ? 1.0 : -1.0;
        }
        // Flip so that rhs >= 0 and, when possible, the slack carries +1.
        if (b < 0.0 || (b == 0.0 && sc >= 0 && row[sc] < 0.0)) {
            for (auto& v : row) v = -v;
            b = -b;
            std_form.orient[r] = -1;
        }
        std_form.rhs[r] = b;
        if (sc >= 0 && row[sc] > 0.0) std_form.identity_col[r] = sc;
    };

    int r = 0;
    for (const auto& row : lp.rows) {
        if (static_cast<int>(row.coeffs.size()) != n)
            throw std::invalid_argument("row length does not match variable count");
        std_form.source_row[r] = r;
        fill_row(r, row.coeffs, row.rel, row.rhs);
        ++r;
    }
    for (const auto& [j, width] : range_rows) {
        std::vector<double> coeffs(static_cast<size_t>(n), 0.0);
        coeffs[j] = 1.0;
        fill_row(r, coeffs, Relation::LessEq, std_form.vars[j].shift + width);
        ++r;
    }
    return std_form;
}

struct Tableau {
    int num_rows;
    int total_cols;  // structural + slack + artificial
    int first_artificial;
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    std::vector<int> basis;
    std::vector<double> reduced;  // current reduced costs
    std::vector<bool> banned;     // artificials barred from entering
    int pivots = 0;
    bool bland = false;
    int degenerate_run = 0;

    void pivot(int pr, int pc) {
        auto& prow = a[pr];
        const double inv = 1.0 / prow[pc];
        for (auto& v : prow) v *= inv;
        b[pr] *= inv;
        prow[pc] = 1.0;
        for (int i = 0; i < num_rows; ++i) {
            if (i == pr) continue;
            const double f = a[i][pc];
            if (f == 0.0) continue;
            auto& row = a[i];
            for (int j = 0; j < total_cols; ++j) row[j] -= f * prow[j];
            row[pc] = 0.0;
            b[i] -= f * b[pr];
            if (b[i] < 0.0 && b[i] > -kFeasTol) b[i] = 0.0;
        }
        const double rf = reduced[pc];
        if (rf != 0.0) {
            for (int j = 0; j < total_cols; ++j) reduced[j] -= rf * prow[j];
            reduced[pc] = 0.0;
        }
        basis[pr] = pc;
        ++pivots;
    }

    // Returns false once optimal; throws on unbounded columns in phase 2.
    enum class StepResult { Optimal, Pivoted, Unbounded };

    StepResult step() {
        int enter = -1;
        if (!bland) {
            double best = -kPivotTol;
            for (int j = 0; j < total_cols; ++j)
                if (!banned[j] && reduced[j] < best) {
                    best = reduced[j];
                    enter = j;
                }
        } else {
            for (int j = 0; j < total_cols; ++j)
                if (!banned[j] && reduced[j] < -kPivotTol) {
                    enter = j;
                    break;
                }
        }
        if (enter < 0) return StepResult::Optimal;

        int leave = -1;
        double best_ratio = 0.0;
        for (int i = 0; i < num_rows; ++i) {
            const double aij = a[i][enter];
            if (aij <= kPivotTol) continue;
            const double ratio = b[i] / aij;
            if (leave < 0 || ratio < best_ratio - kDegenerateStep ||
                (std::abs(ratio - best_ratio) <= kDegenerateStep &&
                 (bland ? basis[i] < basis[leave] : i < leave))) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) return StepResult::Unbounded;

        if (best_ratio <= kDegenerateStep) {
            if (++degenerate_run > kBlandAfter) bland = true;
        } else {
            degenerate_run = 0;
        }
        pivot(leave, enter);
        if (pivots > kMaxPivots) throw std::runtime_error("simplex pivot limit exceeded");
        return StepResult::Pivoted;
    }

    void load_costs(const std::vector<double>& cost) {
        reduced = cost;
        for (int i = 0; i < num_rows; ++i) {
            const double cb = cost[basis[i]];
            if (cb == 0.0) continue;
            for (int j = 0; j < total_cols; ++j) reduced[j] -= cb * a[i][j];
            reduced[basis[i]] = 0.0;
        }
    }
};

struct Residuals {
    double primal = 0.0, dual = 0.0, comp = 0.0, dual_obj = 0.0;
    std::string worst_row;
};

Residuals compute_residuals(const LinearProgram& lp, std::span<const double> x,
                            std::span<const double> duals) {
    Residuals res;
    const int n = lp.num_vars();
    auto note_primal = [&](double v, const std::string& name) {
        if (v > res.primal) {
            res.primal = v;
            res.worst_row = name;
        }
    };
    for (size_t i = 0; i < lp.rows.size(); ++i) {
        const auto& row = lp.rows[i];
        double ax = 0.0;
        for (int j = 0; j < n; ++j) ax += row.coeffs[j] * x[j];
        const double slack = ax - row.rhs;
        double viol = 0.0;
        if (row.rel == Relation::Equal)
            viol = std::abs(slack);
        else if (row.rel == Relation::GreaterEq)
            viol = std::max(0.0, -slack);
        else
            viol = std::max(0.0, slack);
        note_primal(viol, row.name.empty() ? "row " + std::to_string(i) : row.name);
        if (!duals.empty()) {
            const double y = duals[i];
            if (row.rel == Relation::GreaterEq) res.dual = std::max(res.dual, -y);
            if (row.rel == Relation::LessEq) res.dual = std::max(res.dual, y);
            if (row.rel != Relation::Equal) res.comp = std::max(res.comp, std::abs(y * slack));
            res.dual_obj += y * row.rhs;
        }
    }
    for (int j = 0; j < n; ++j) {
        const double l = lp.lower_bound(j), u = lp.upper_bound(j);
        note_primal(std::max(0.0, l - x[j]), "lower bound " + std::to_string(j));
        note_primal(std::max(0.0, x[j] - u), "upper bound " + std::to_string(j));
        if (duals.empty()) continue;
        double s = lp.objective[j];
        for (size_t i = 0; i < lp.rows.size(); ++i) s -= duals[i] * lp.rows[i].coeffs[j];
        // s is the multiplier left for the bounds: s >= 0 pushes on the lower
        // bound, s <= 0 on the upper one.
        if (s > 0.0) {
            if (l == -kInf)
                res.dual = std::max(res.dual, s);
            else {
                res.dual_obj += s * l;
                res.comp = std::max(res.comp, std::abs(s * (x[j] - l)));
            }
        } else if (s < 0.0) {
            if (u == kInf)
                res.dual = std::max(res.dual, -s);
            else {
                res.dual_obj += s * u;
                res.comp = std::max(res.comp, std::abs(s * (x[j] - u)));
            }
        }
    }
    return res;
}

}  // namespace

void LinearProgram::add_row(std::vector<double> coeffs, Relation rel, double rhs, std::string name) {
    rows.push_back(Row{std::move(coeffs), rel, rhs, std::move(name)});
}

LpSolution solve(const LinearProgram& lp) {
    for (const auto& row : lp.rows)
        if (static_cast<int>(row.coeffs.size()) != lp.num_vars())
            throw std::invalid_argument("row length does not match variable count");

    LpSolution sol;
    Standardized sf = standardize(lp);
    if (sf.bound_infeasible) {
        sol.status = LpStatus::Infeasible;
        return sol;
    }

    const int m = sf.num_rows;
    Tableau t;
    t.num_rows = m;
    std::vector<int> artificial_of_row(m, -1);
    int num_art = 0;
    for (int i = 0; i < m; ++i)
        if (sf.identity_col[i] < 0) ++num_art;
    t.first_artificial = sf.num_cols;
    t.total_cols = sf.num_cols + num_art;
    t.a.assign(m, std::vector<double>(t.total_cols, 0.0));
    t.b = sf.rhs;
    t.basis.assign(m, -1);
    t.banned.assign(t.total_cols, false);

    int next_art = sf.num_cols;
    for (int i = 0; i < m; ++i) {
        std::copy(sf.rows[i].begin(), sf.rows[i].end(), t.a[i].begin());
        if (sf.identity_col[i] >= 0) {
            t.basis[i] = sf.identity_col[i];
        } else {
            artificial_of_row[i] = next_art;
            t.a[i][next_art] = 1.0;
            t.basis[i] = next_art;
            ++next_art;
        }
    }

    // Phase 1: drive the artificial variables to zero.
    if (num_art > 0) {
        std::vector<double> phase1(t.total_cols, 0.0);
        for (int j = t.first_artificial; j < t.total_cols; ++j) phase1[j] = 1.0;
        t.load_costs(phase1);
        while (true) {
            const auto r = t.step();
            if (r == Tableau::StepResult::Optimal) break;
            if (r == Tableau::StepResult::Unbounded)
                throw std::runtime_error("phase 1 cannot be unbounded");
        }
        double infeas = 0.0;
        for (int i = 0; i < m; ++i)
            if (t.basis[i] >= t.first_artificial) infeas += t.b[i];
        if (infeas > kFeasTol) {
            sol.status = LpStatus::Infeasible;
            sol.iterations = t.pivots;
            return sol;
        }
        // Pivot leftover artificials out where the row allows it.
        for (int i = 0; i < m; ++i) {
            if (t.basis[i] < t.first_artificial) continue;
            int pc = -1;
            for (int j = 0; j < t.first_artificial; ++j)
                if (std::abs(t.a[i][j]) > kPivotTol) {
                    pc = j;
                    break;
                }
            if (pc >= 0) t.pivot(i, pc);
        }
        for (int j = t.first_artificial; j < t.total_cols; ++j) t.banned[j] = true;
    }

    // Phase 2: the real objective.
    std::vector<double> phase2(t.total_cols, 0.0);
    std::copy(sf.cost.begin(), sf.cost.end(), phase2.begin());
    t.load_costs(phase2);
    t.bland = false;
    t.degenerate_run = 0;
    while (true) {
        const auto r = t.step();
        if (r == Tableau::StepResult::Optimal) break;
        if (r == Tableau::StepResult::Unbounded) {
            sol.status = LpStatus::Unbounded;
            sol.iterations = t.pivots;
            return sol;
        }
    }

    // Recover the original variables.
    std::vector<double> y(sf.num_cols, 0.0);
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < sf.num_cols) y[t.basis[i]] = t.b[i];
    sol.x.assign(lp.num_vars(), 0.0);
    for (int j = 0; j < lp.num_vars(); ++j) {
        const auto& vm = sf.vars[j];
        if (vm.kind == Standardized::VarMap::Split)
            sol.x[j] = y[vm.col1] - y[vm.col2];
        else if (vm.kind == Standardized::VarMap::Lower)
            sol.x[j] = vm.shift + y[vm.col1];
        else
            sol.x[j] = vm.shift - y[vm.col1];
    }
    sol.objective_value = 0.0;
    for (int j = 0; j < lp.num_vars(); ++j) sol.objective_value += lp.objective[j] * sol.x[j];

    // Duals: the reduced cost of each row's identity column carries -y_i of
    // the standardized system; undo the orientation flip per row.
    sol.dual_values.assign(lp.rows.size(), 0.0);
    for (int i = 0; i < m; ++i) {
        const int src = sf.source_row[i];
        if (src < 0) continue;  // bound rows fold into the variable conditions
        const int idcol = (artificial_of_row[i] >= 0) ? artificial_of_row[i] : sf.identity_col[i];
        double y_std = -t.reduced[idcol];
        // A GreaterEq slack enters with coefficient -1 before orientation, so
        // recover the multiplier of the as-written row.
        sol.dual_values[src] = sf.orient[i] * y_std;
    }

    sol.status = LpStatus::Optimal;
    sol.iterations = t.pivots;
    const Residuals res = compute_residuals(lp, sol.x, sol.dual_values);
    sol.max_primal_residual = res.primal;
    sol.max_dual_residual = res.dual;
    sol.duality_gap = std::abs(sol.objective_value - res.dual_obj);
    return sol;
}

CertificateReport verify_certificate(const LinearProgram& lp, std::span<const double> x,
                                     std::span<const double> duals, double tol) {
    if (static_cast<int>(x.size()) != lp.num_vars())
        throw std::invalid_argument("primal point length mismatch");
    if (duals.size() != lp.rows.size()) throw std::invalid_argument("dual vector length mismatch");
    const Residuals res = compute_residuals(lp, x, duals);
    CertificateReport report;
    report.max_primal_residual = res.primal;
    report.max_dual_residual = res.dual;
    report.max_complementarity = res.comp;
    report.primal_objective = 0.0;
    for (int j = 0; j < lp.num_vars(); ++j) report.primal_objective += lp.objective[j] * x[j];
    report.dual_objective = res.dual_obj;
    report.worst_row = res.worst_row;
    report.ok = res.primal <= tol && res.dual <= tol && res.comp <= tol &&
                std::abs(report.primal_objective - report.dual_objective) <= tol;
    return report;
}

PointReport verify_point(const LinearProgram& lp, std::span<const double> x, double tol) {
    if (static_cast<int>(x.size()) != lp.num_vars())
        throw std::invalid_argument("point length mismatch");
    const Residuals res = compute_residuals(lp, x, {});
    PointReport report;
    report.max_violation = res.primal;
    report.worst_row = res.worst_row;
    report.objective = 0.0;
    for (int j = 0; j < lp.num_vars(); ++j) report.objective += lp.objective[j] * x[j];
    report.feasible = res.primal <= tol;
    return report;
}

}  // namespace stabbounds
