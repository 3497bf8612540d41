#include "stabbounds/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace stabbounds {

namespace {

constexpr double kGapTol = 1e-6;
constexpr double kOutcomeSlack = 1e-12;
constexpr int kMaxLpQubits = 8;
constexpr int kMaxSdpQubits = 4;

int wht_sign(std::uint32_t i, std::uint32_t j) { return (std::popcount(i & j) & 1) ? -1 : 1; }

std::vector<int> cut_signs(const StabilizerSpec& spec, int cut) {
    const std::uint32_t size = 1u << spec.n;
    std::vector<int> s(size);
    const QubitMask mask = QubitMask{1} << cut;
    for (std::uint32_t i = 0; i < size; ++i) s[i] = pt_sign(group_element(spec, i), mask);
    return s;
}

double abs_sum(const std::vector<double>& a) {
    double s = 0.0;
    for (double v : a) s += std::abs(v);
    return s;
}

// The box closed form maximizes the pair expression over the edges of the
// 4-cycle; returns the pairs (i, j) of generator indices (0-based).
std::vector<std::pair<int, int>> four_cycle_edges(const StabilizerSpec& spec) {
    if (spec.family != StabilizerSpec::Family::Graph || spec.n != 4 || spec.edges.size() != 4)
        return {};
    std::vector<int> degree(4, 0);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [a, b] : spec.edges) {
        ++degree[a - 1];
        ++degree[b - 1];
        pairs.emplace_back(a - 1, b - 1);
    }
    for (int d : degree)
        if (d != 2) return {};
    // Degree-2 on four vertices is either a 4-cycle or two disjoint 2-cycles;
    // duplicate edges are rejected upstream, so this is a box.
    return pairs;
}

bool is_triangle(const StabilizerSpec& spec) {
    if (spec.family != StabilizerSpec::Family::Graph || spec.n != 3 || spec.edges.size() != 3)
        return false;
    std::vector<int> degree(3, 0);
    for (const auto& [a, b] : spec.edges) {
        ++degree[a - 1];
        ++degree[b - 1];
    }
    return degree[0] == 2 && degree[1] == 2 && degree[2] == 2;
}

void require_lp_scale(const StabilizerSpec& spec) {
    if (spec.n > kMaxLpQubits)
        throw std::invalid_argument("symmetric lp path limited to 8 qubits");
}

// Primal program over group coefficients: variables [c | d], the data rows
// pin c_0 and the singleton entries, every eigenvalue transform stays >= 0.
LinearProgram compile_gre_primal(const StabilizerSpec& spec, const std::vector<double>& a) {
    const int n = spec.n;
    const std::uint32_t size = 1u << n;
    const double dim = static_cast<double>(size);
    LinearProgram lp;
    lp.objective.assign(2 * size, 0.0);
    lp.objective[size] = dim;  // tr sigma = 2^n d_0

    {
        std::vector<double> row(2 * size, 0.0);
        row[0] = 1.0;
        lp.add_row(std::move(row), Relation::Equal, 1.0 / dim, "trace");
    }
    for (int k = 0; k < n; ++k) {
        std::vector<double> row(2 * size, 0.0);
        row[1u << k] = 1.0;
        lp.add_row(std::move(row), Relation::Equal, a[k] / dim, "data " + std::to_string(k + 1));
    }
    for (std::uint32_t j = 0; j < size; ++j) {
        std::vector<double> row(2 * size, 0.0);
        for (std::uint32_t i = 0; i < size; ++i) row[i] = wht_sign(i, j);
        lp.add_row(std::move(row), Relation::GreaterEq, 0.0, "rho eig " + std::to_string(j));
    }
    for (std::uint32_t j = 0; j < size; ++j) {
        std::vector<double> row(2 * size, 0.0);
        for (std::uint32_t i = 0; i < size; ++i) row[size + i] = wht_sign(i, j);
        lp.add_row(std::move(row), Relation::GreaterEq, 0.0, "sigma eig " + std::to_string(j));
    }
    for (int cut = 0; cut < n; ++cut) {
        const std::vector<int> ps = cut_signs(spec, cut);
        for (std::uint32_t j = 0; j < size; ++j) {
            std::vector<double> row(2 * size, 0.0);
            for (std::uint32_t i = 0; i < size; ++i) {
                const double v = wht_sign(i, j) * ps[i];
                row[i] = v;
                row[size + i] = v;
            }
            lp.add_row(std::move(row), Relation::GreaterEq, 0.0,
                       "pt cut " + std::to_string(cut + 1) + " eig " + std::to_string(j));
        }
    }
    return lp;
}

// Dual program: maximize mu_0 + sum mu_k a_k over mu and one group-diagonal
// operator per cut, written as a minimization. Variable layout:
// [mu_0, mu_1..mu_n, h^(1), ..., h^(n)].
LinearProgram compile_gre_dual(const StabilizerSpec& spec, const std::vector<double>& a) {
    const int n = spec.n;
    const std::uint32_t size = 1u << n;
    const int nvars = 1 + n + n * static_cast<int>(size);
    const auto hbase = [&](int cut) { return 1 + n + cut * static_cast<int>(size); };

    LinearProgram lp;
    lp.objective.assign(static_cast<size_t>(nvars), 0.0);
    lp.objective[0] = -1.0;
    for (int k = 0; k < n; ++k) lp.objective[1 + k] = -a[k];

    std::vector<std::vector<int>> ps(static_cast<size_t>(n));
    for (int cut = 0; cut < n; ++cut) ps[cut] = cut_signs(spec, cut);

    for (int cut = 0; cut < n; ++cut)
        for (std::uint32_t j = 0; j < size; ++j) {
            std::vector<double> row(static_cast<size_t>(nvars), 0.0);
            for (std::uint32_t i = 0; i < size; ++i) row[hbase(cut) + i] = wht_sign(i, j);
            lp.add_row(std::move(row), Relation::GreaterEq, 0.0,
                       "eta cut " + std::to_string(cut + 1) + " eig " + std::to_string(j));
        }
    for (std::uint32_t j = 0; j < size; ++j) {
        std::vector<double> row(static_cast<size_t>(nvars), 0.0);
        for (int cut = 0; cut < n; ++cut)
            for (std::uint32_t i = 0; i < size; ++i)
                row[hbase(cut) + i] += wht_sign(i, j) * ps[cut][i];
        lp.add_row(std::move(row), Relation::LessEq, 1.0, "pt sum eig " + std::to_string(j));
    }
    for (std::uint32_t j = 0; j < size; ++j) {
        std::vector<double> row(static_cast<size_t>(nvars), 0.0);
        for (int cut = 0; cut < n; ++cut)
            for (std::uint32_t i = 0; i < size; ++i)
                row[hbase(cut) + i] += wht_sign(i, j) * ps[cut][i];
        row[0] += 1.0;
        for (int k = 0; k < n; ++k) row[1 + k] += wht_sign(1u << k, j);
        lp.add_row(std::move(row), Relation::LessEq, 0.0, "shifted eig " + std::to_string(j));
    }
    return lp;
}

Certificate certificate_from_dual(const StabilizerSpec& spec, const LpSolution& dual_sol) {
    const int n = spec.n;
    const std::uint32_t size = 1u << n;
    Certificate cert;
    cert.mu.assign(dual_sol.x.begin(), dual_sol.x.begin() + 1 + n);
    for (int cut = 0; cut < n; ++cut) {
        const auto base = dual_sol.x.begin() + 1 + n + cut * static_cast<int>(size);
        cert.cut_coeffs.emplace_back(base, base + static_cast<int>(size));
    }
    cert.dual_objective = -dual_sol.objective_value;
    return cert;
}

CertificateSuiteReport check_gre_dual_point(const StabilizerSpec& spec, std::string name,
                                            const std::vector<double>& mu,
                                            const std::vector<std::vector<double>>& h, double tol) {
    const int n = spec.n;
    const std::uint32_t size = 1u << n;
    CertificateSuiteReport report;
    report.name = std::move(name);
    report.mu = mu;

    double eta_worst = kInf;
    for (int cut = 0; cut < n; ++cut) {
        std::vector<double> eig = h[cut];
        walsh_transform(eig);
        eta_worst = std::min(eta_worst, *std::min_element(eig.begin(), eig.end()));
    }
    report.checks.push_back({"eta operators nonnegative", eta_worst, eta_worst >= -tol});

    std::vector<double> pt_sum(size, 0.0);
    for (int cut = 0; cut < n; ++cut) {
        const std::vector<int> ps = cut_signs(spec, cut);
        for (std::uint32_t i = 0; i < size; ++i) pt_sum[i] += ps[i] * h[cut][i];
    }
    std::vector<double> eig = pt_sum;
    walsh_transform(eig);
    const double below_one = 1.0 - *std::max_element(eig.begin(), eig.end());
    report.checks.push_back({"transposed sum below identity", below_one, below_one >= -tol});

    std::vector<double> shifted = pt_sum;
    shifted[0] += mu[0];
    for (int k = 0; k < n; ++k) shifted[1u << k] += mu[static_cast<size_t>(k) + 1];
    walsh_transform(shifted);
    const double nonpos = -*std::max_element(shifted.begin(), shifted.end());
    report.checks.push_back({"shifted sum nonpositive", nonpos, nonpos >= -tol});

    report.dual_objective = mu[0];
    const double a_ref = std::exp(-0.1);
    for (int k = 0; k < n; ++k) report.dual_objective += mu[static_cast<size_t>(k) + 1] * a_ref;
    report.all_ok = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const OperatorInequalityCheck& c) { return c.ok; });
    return report;
}

BoundResult make_result(Quantity q, Method m, double value) {
    BoundResult r;
    r.quantity = q;
    r.method = m;
    r.value = std::max(0.0, value);
    return r;
}

}  // namespace

MeasurementRecord::MeasurementRecord(StabilizerSpec spec_, std::vector<double> outcomes_,
                                     std::vector<std::pair<PauliString, double>> extras,
                                     std::string label_)
    : spec(std::move(spec_)),
      outcomes(std::move(outcomes_)),
      extra_observables(std::move(extras)),
      label(std::move(label_)) {
    if (outcomes.size() != static_cast<size_t>(spec.n))
        throw std::invalid_argument("need exactly one outcome per generator");
    for (double v : outcomes)
        if (!(std::abs(v) <= 1.0 + kOutcomeSlack))
            throw std::invalid_argument("generator outcome out of physical range [-1, 1]");
    for (const auto& [p, v] : extra_observables) {
        if (p.n != spec.n) throw std::invalid_argument("extra observable qubit count mismatch");
        if (!(std::abs(v) <= 1.0 + kOutcomeSlack))
            throw std::invalid_argument("extra observable out of physical range [-1, 1]");
    }
}

BoundResult fidelity_bound_closed(const MeasurementRecord& m) {
    const int n = m.spec.n;
    double s = abs_sum(m.outcomes);
    BoundResult r = make_result(Quantity::Fidelity, Method::Closed, (s - n + 2.0) / 2.0);
    Certificate cert;
    cert.mu.assign(static_cast<size_t>(n) + 1, 0.5);
    cert.mu[0] = 1.0 - n / 2.0;
    cert.dual_objective = (s - n + 2.0) / 2.0;
    r.certificate = std::move(cert);
    return r;
}

BoundResult fidelity_bound_lp(const MeasurementRecord& m) {
    require_lp_scale(m.spec);
    const int n = m.spec.n;
    const std::uint32_t size = 1u << n;
    const double dim = static_cast<double>(size);

    LinearProgram lp;
    lp.objective.assign(size, 1.0);
    {
        std::vector<double> row(size, 0.0);
        row[0] = 1.0;
        lp.add_row(std::move(row), Relation::Equal, 1.0 / dim, "trace");
    }
    for (int k = 0; k < n; ++k) {
        std::vector<double> row(size, 0.0);
        row[1u << k] = 1.0;
        lp.add_row(std::move(row), Relation::Equal, std::abs(m.outcomes[k]) / dim,
                   "data " + std::to_string(k + 1));
    }
    for (std::uint32_t j = 0; j < size; ++j) {
        std::vector<double> row(size, 0.0);
        for (std::uint32_t i = 0; i < size; ++i) row[i] = wht_sign(i, j);
        lp.add_row(std::move(row), Relation::GreaterEq, 0.0, "eig " + std::to_string(j));
    }

    const LpSolution sol = solve(lp);
    if (sol.status == LpStatus::Infeasible)
        throw InfeasibleDataError("measurement data inconsistent with any quantum state");
    if (sol.status != LpStatus::Optimal) throw std::runtime_error("fidelity lp did not solve");

    BoundResult r = make_result(Quantity::Fidelity, Method::SymmetricLp, sol.objective_value);
    Certificate cert;
    cert.mu.resize(static_cast<size_t>(n) + 1);
    // Row multipliers sit in the coefficient normalization; rescale to the
    // operator convention where the bound reads mu_0 + sum_k mu_k a_k.
    cert.mu[0] = sol.dual_values[0] / dim;
    cert.dual_objective = cert.mu[0];
    for (int k = 0; k < n; ++k) {
        cert.mu[static_cast<size_t>(k) + 1] = sol.dual_values[static_cast<size_t>(k) + 1] / dim;
        cert.dual_objective += cert.mu[static_cast<size_t>(k) + 1] * std::abs(m.outcomes[k]);
    }
    r.certificate = std::move(cert);
    r.diagnostics.primal_dual_gap = sol.duality_gap;
    r.diagnostics.max_primal_residual = sol.max_primal_residual;
    r.diagnostics.max_dual_residual = sol.max_dual_residual;
    r.diagnostics.iterations = sol.iterations;
    return r;
}

FidelityCertificate fidelity_dual_certificate(const StabilizerSpec& spec) {
    const int n = spec.n;
    const std::uint32_t size = 1u << n;
    FidelityCertificate cert;
    cert.n = n;
    cert.lambda_identity = 1.0 - n / 2.0;
    cert.lambda_generator = 0.5;

    // chi - Xi in group coefficients: the projector carries 1/2^n everywhere,
    // the dual operator sits on the identity and the singletons.
    std::vector<double> diff(size, 1.0 / static_cast<double>(size));
    diff[0] -= cert.lambda_identity;
    for (int k = 0; k < n; ++k) diff[1u << k] -= cert.lambda_generator;
    walsh_transform(diff);
    cert.residual_eigenvalues = std::move(diff);
    cert.min_eigenvalue =
        *std::min_element(cert.residual_eigenvalues.begin(), cert.residual_eigenvalues.end());
    cert.valid = cert.min_eigenvalue >= -1e-12 &&
                 std::abs(cert.residual_eigenvalues[0]) <= 1e-12;
    return cert;
}

BoundResult gre_bound_closed(const MeasurementRecord& m) {
    const StabilizerSpec& spec = m.spec;
    std::vector<double> a(m.outcomes.size());
    for (size_t k = 0; k < a.size(); ++k) a[k] = std::abs(m.outcomes[k]);

    double value = 0.0;
    if (spec.n == 2) {
        value = a[0] + a[1] - 1.0;
    } else if (is_triangle(spec)) {
        value = a[0] + a[1] + a[2] - *std::min_element(a.begin(), a.end()) - 1.0;
    } else if (const auto pairs = four_cycle_edges(spec); !pairs.empty()) {
        value = 2.0 * (a[0] + a[1] + a[2] + a[3]) - 5.0;
        for (const auto& [i, j] : pairs) value = std::max(value, a[i] + a[j] - 1.0);
    } else {
        throw std::invalid_argument("no closed form for this stabilizer family; use the lp method");
    }
    return make_result(Quantity::Gre, Method::Closed, value);
}

BoundResult gre_bound_lp(const MeasurementRecord& m) {
    require_lp_scale(m.spec);
    const LinearProgram primal = compile_gre_primal(m.spec, m.outcomes);
    const LpSolution psol = solve(primal);
    if (psol.status == LpStatus::Infeasible)
        throw InfeasibleDataError("measurement data inconsistent with any quantum state");
    if (psol.status != LpStatus::Optimal) throw std::runtime_error("gre lp did not solve");

    const LinearProgram dual = compile_gre_dual(m.spec, m.outcomes);
    const LpSolution dsol = solve(dual);
    if (dsol.status != LpStatus::Optimal) throw std::runtime_error("gre dual lp did not solve");

    const double dual_value = -dsol.objective_value;
    if (std::abs(psol.objective_value - dual_value) > kGapTol)
        throw std::runtime_error("gre primal/dual gap exceeds tolerance");

    BoundResult r = make_result(Quantity::Gre, Method::SymmetricLp, psol.objective_value);
    r.certificate = certificate_from_dual(m.spec, dsol);
    r.diagnostics.primal_dual_gap = std::abs(psol.objective_value - dual_value);
    r.diagnostics.max_primal_residual = std::max(psol.max_primal_residual, dsol.max_primal_residual);
    r.diagnostics.max_dual_residual = std::max(psol.max_dual_residual, dsol.max_dual_residual);
    r.diagnostics.iterations = psol.iterations + dsol.iterations;
    return r;
}

BoundResult gre_exact_symmetric(const SymState& state) {
    require_lp_scale(state.spec);
    const EigenSpectrum spectrum = eigenvalues(state);
    if (spectrum.min() < -1e-9) throw std::invalid_argument("state is not positive semidefinite");
    if (std::abs(trace_of(state) - 1.0) > 1e-6)
        throw std::invalid_argument("state must have unit trace");

    const int n = state.spec.n;
    const std::uint32_t size = 1u << n;
    LinearProgram lp;
    lp.objective.assign(size, 0.0);
    lp.objective[0] = static_cast<double>(size);
    for (std::uint32_t j = 0; j < size; ++j) {
        std::vector<double> row(size, 0.0);
        for (std::uint32_t i = 0; i < size; ++i) row[i] = wht_sign(i, j);
        lp.add_row(std::move(row), Relation::GreaterEq, 0.0, "sigma eig " + std::to_string(j));
    }
    for (int cut = 0; cut < n; ++cut) {
        const std::vector<int> ps = cut_signs(state.spec, cut);
        for (std::uint32_t j = 0; j < size; ++j) {
            std::vector<double> row(size, 0.0);
            double rhs = 0.0;
            for (std::uint32_t i = 0; i < size; ++i) {
                const double v = wht_sign(i, j) * ps[i];
                row[i] = v;
                rhs -= v * state.coeffs[i];
            }
            lp.add_row(std::move(row), Relation::GreaterEq, rhs,
                       "pt cut " + std::to_string(cut + 1) + " eig " + std::to_string(j));
        }
    }

    const LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal) throw std::runtime_error("exact gre lp did not solve");
    BoundResult r = make_result(Quantity::Gre, Method::SymmetricLp, sol.objective_value);
    r.exact = true;
    r.diagnostics.primal_dual_gap = sol.duality_gap;
    r.diagnostics.max_primal_residual = sol.max_primal_residual;
    r.diagnostics.max_dual_residual = sol.max_dual_residual;
    r.diagnostics.iterations = sol.iterations;
    return r;
}

BoundResult gre_bound_general(const MeasurementRecord& m) {
    const int n = m.spec.n;
    if (n > kMaxSdpQubits) throw std::invalid_argument("general sdp path limited to 4 qubits");
    const int dim = 1 << n;

    SdpProblem problem;
    problem.variables.push_back({"rho", dim, CMatrix()});
    problem.variables.push_back({"sigma", dim, CMatrix()});
    CMatrix rho_hint = CMatrix::identity(dim);
    rho_hint *= 1.0 / dim;
    problem.variables[0].initial_hint = std::move(rho_hint);

    problem.objective.resize(2);
    problem.objective[1] = CMatrix::identity(dim);

    {
        SdpProblem::Equality eq;
        eq.coeff.resize(2);
        eq.coeff[0] = CMatrix::identity(dim);
        eq.rhs = 1.0;
        eq.name = "trace";
        problem.equalities.push_back(std::move(eq));
    }
    for (int k = 0; k < n; ++k) {
        SdpProblem::Equality eq;
        eq.coeff.resize(2);
        eq.coeff[0] = to_dense(m.spec.generators[k]);
        eq.rhs = m.outcomes[k];
        eq.name = "generator " + std::to_string(k + 1);
        problem.equalities.push_back(std::move(eq));
    }
    for (const auto& [p, v] : m.extra_observables) {
        SdpProblem::Equality eq;
        eq.coeff.resize(2);
        eq.coeff[0] = to_dense(p);
        eq.rhs = v;
        eq.name = "observable " + p.label();
        problem.equalities.push_back(std::move(eq));
    }
    for (int cut = 0; cut < n; ++cut) {
        SdpProblem::PsdBlock block;
        block.dim = dim;
        const std::uint32_t mask = 1u << cut;
        block.terms.push_back({0, 1.0, mask, n});
        block.terms.push_back({1, 1.0, mask, n});
        block.name = "pt cut " + std::to_string(cut + 1);
        problem.psd_blocks.push_back(std::move(block));
    }

    const SdpSolution sol = solve_sdp(problem);
    if (sol.status == SdpStatus::Infeasible)
        throw InfeasibleDataError("measurement data inconsistent with any quantum state");

    BoundResult r = make_result(Quantity::Gre, Method::GeneralSdp, sol.objective_value);
    r.diagnostics.max_primal_residual = sol.max_equality_residual;
    r.diagnostics.iterations = sol.outer_iterations;
    if (sol.status == SdpStatus::MaxIterations) r.diagnostics.notes = "outer iteration cap reached";
    return r;
}

std::vector<CertificateSuiteReport> verify_box_cluster_certificate(int flip_cut, int flip_index) {
    const StabilizerSpec spec = StabilizerSpec::cycle_cluster(4);
    std::vector<CertificateSuiteReport> reports;

    {
        // The 2-qubit point embedded on the first edge: both cut operators on
        // the transposed parties share the same four nonzero coefficients.
        std::vector<std::vector<double>> h(4, std::vector<double>(16, 0.0));
        for (int cut : {0, 1}) {
            h[cut][0] = 0.25;
            h[cut][1] = -0.25;
            h[cut][2] = -0.25;
            h[cut][3] = 0.25;
        }
        reports.push_back(
            check_gre_dual_point(spec, "pair branch", {-1.0, 1.0, 1.0, 0.0, 0.0}, h, 1e-12));
    }

    {
        // Tabulated coefficients, one column per cut, in units of 1/16;
        // indexed by the group index (generator 1 = least significant bit).
        static const int table[16][4] = {
            {3, 3, 3, 3},   {-1, -2, 1, -2}, {-2, -1, -2, 1}, {1, 1, -1, -1},
            {1, -2, -1, -2}, {-3, 1, -3, 1}, {-1, 1, 1, -1},  {2, -1, 2, 1},
            {-2, 1, -2, -1}, {1, -1, -1, 1}, {1, -3, 1, -3},  {-1, 2, 1, 2},
            {-1, -1, 1, 1},  {2, 1, 2, -1},  {1, 2, -1, 2},   {-1, -1, -1, -1},
        };
        std::vector<std::vector<double>> h(4, std::vector<double>(16, 0.0));
        for (int cut = 0; cut < 4; ++cut)
            for (int i = 0; i < 16; ++i) h[cut][i] = table[i][cut] / 16.0;
        if (flip_cut >= 0 && flip_cut < 4 && flip_index >= 0 && flip_index < 16)
            h[flip_cut][flip_index] = -h[flip_cut][flip_index];
        reports.push_back(check_gre_dual_point(spec, "tabulated", {-5.0, 2.0, 2.0, 2.0, 2.0}, h, 1e-12));
    }
    return reports;
}

CertificateSuiteReport verify_two_qubit_dual_point() {
    const StabilizerSpec spec = StabilizerSpec::line_cluster(2);
    std::vector<std::vector<double>> h(2, std::vector<double>(4, 0.0));
    for (int cut : {0, 1}) {
        h[cut][0] = 0.25;
        h[cut][1] = -0.25;
        h[cut][2] = -0.25;
        h[cut][3] = 0.25;
    }
    return check_gre_dual_point(spec, "two-qubit point", {-1.0, 1.0, 1.0}, h, 1e-12);
}

BoundResult negativity_bound_closed(double ax, double az, std::optional<double> ay,
                                    NegativityVariant variant) {
    if (!(std::abs(ax) <= 1.0 + kOutcomeSlack) || !(std::abs(az) <= 1.0 + kOutcomeSlack) ||
        (ay && !(std::abs(*ay) <= 1.0 + kOutcomeSlack)))
        throw std::invalid_argument("observable values outside [-1, 1]");

    double value;
    if (!ay) {
        value = std::log2(std::abs(ax) + std::abs(az));
    } else {
        const double s = 1.0 + std::abs(ax) + std::abs(*ay) + std::abs(az);
        value = (variant == NegativityVariant::Plain) ? std::log2(s) : std::log2(s / 2.0);
    }
    BoundResult r = make_result(Quantity::LogNegativity, Method::Closed, value);
    r.diagnostics.notes = "log base 2";
    return r;
}

BoundResult compute_bound(const MeasurementRecord& m, Quantity quantity, MethodChoice choice,
                          NegativityVariant variant) {
    switch (quantity) {
        case Quantity::Fidelity:
            if (choice == MethodChoice::Sdp)
                throw std::invalid_argument("fidelity has no sdp path");
            if (choice == MethodChoice::Lp) return fidelity_bound_lp(m);
            return fidelity_bound_closed(m);

        case Quantity::Gre:
            if (choice == MethodChoice::Sdp) return gre_bound_general(m);
            if (choice == MethodChoice::Closed) return gre_bound_closed(m);
            if (choice == MethodChoice::Lp) {
                if (!m.extra_observables.empty())
                    throw std::invalid_argument("extra observables need the sdp method");
                return gre_bound_lp(m);
            }
            if (!m.extra_observables.empty()) return gre_bound_general(m);
            try {
                return gre_bound_closed(m);
            } catch (const std::invalid_argument&) {
                return gre_bound_lp(m);
            }

        case Quantity::LogNegativity: {
            if (choice == MethodChoice::Lp || choice == MethodChoice::Sdp)
                throw std::invalid_argument("negativity has only the closed path");
            if (m.spec.n != 2) throw std::invalid_argument("negativity needs a 2-qubit record");
            std::optional<double> ay;
            for (const auto& [p, v] : m.extra_observables)
                if (p.label() == "YY") ay = std::abs(v);
            return negativity_bound_closed(std::abs(m.outcomes[0]), std::abs(m.outcomes[1]), ay,
                                           variant);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace stabbounds
