#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stabbounds/lp.hpp"

using namespace stabbounds;

TEST_CASE("textbook instances solve to the known optima") {
    SUBCASE("bounded maximization written as minimization") {
        LinearProgram lp;
        lp.objective = {-1.0, -1.0};
        lp.lower = {0.0, 0.0};
        lp.upper = {kInf, kInf};
        lp.add_row({1.0, 1.0}, Relation::LessEq, 1.0, "cap");
        const LpSolution sol = solve(lp);
        REQUIRE(sol.status == LpStatus::Optimal);
        CHECK(sol.objective_value == doctest::Approx(-1.0));
    }
    SUBCASE("equality with free variables") {
        LinearProgram lp;
        lp.objective = {1.0, 2.0};
        lp.add_row({1.0, 1.0}, Relation::Equal, 3.0, "sum");
        lp.add_row({1.0, -1.0}, Relation::Equal, 1.0, "diff");
        const LpSolution sol = solve(lp);
        REQUIRE(sol.status == LpStatus::Optimal);
        CHECK(sol.x[0] == doctest::Approx(2.0));
        CHECK(sol.x[1] == doctest::Approx(1.0));
    }
    SUBCASE("greater-equal rows with negative rhs") {
        LinearProgram lp;
        lp.objective = {1.0};
        lp.add_row({1.0}, Relation::GreaterEq, -2.0, "floor");
        const LpSolution sol = solve(lp);
        REQUIRE(sol.status == LpStatus::Optimal);
        CHECK(sol.objective_value == doctest::Approx(-2.0));
    }
    SUBCASE("infeasible box") {
        LinearProgram lp;
        lp.objective = {1.0};
        lp.add_row({1.0}, Relation::GreaterEq, 1.0, "hi");
        lp.add_row({1.0}, Relation::LessEq, 0.0, "lo");
        CHECK(solve(lp).status == LpStatus::Infeasible);
    }
    SUBCASE("unbounded direction") {
        LinearProgram lp;
        lp.objective = {-1.0, 0.0};
        lp.add_row({0.0, 1.0}, Relation::Equal, 1.0, "pin");
        CHECK(solve(lp).status == LpStatus::Unbounded);
    }
    SUBCASE("beale cycling example terminates") {
        LinearProgram lp;
        lp.objective = {-0.75, 150.0, -0.02, 6.0};
        lp.lower = {0.0, 0.0, 0.0, 0.0};
        lp.upper = {kInf, kInf, kInf, kInf};
        lp.add_row({0.25, -60.0, -0.04, 9.0}, Relation::LessEq, 0.0, "r1");
        lp.add_row({0.5, -90.0, -0.02, 3.0}, Relation::LessEq, 0.0, "r2");
        lp.add_row({0.0, 0.0, 1.0, 0.0}, Relation::LessEq, 1.0, "r3");
        const LpSolution sol = solve(lp);
        REQUIRE(sol.status == LpStatus::Optimal);
        CHECK(sol.objective_value == doctest::Approx(-0.05));
    }
}

TEST_CASE("random boxed instances agree with the vertex-enumeration oracle") {
    std::mt19937 gen(31);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_int_distribution<int> nvars_pick(2, 3);
    std::uniform_int_distribution<int> nrows_pick(2, 5);
    std::uniform_int_distribution<int> rel_pick(0, 2);

    int feasible_seen = 0, infeasible_seen = 0;
    for (int rep = 0; rep < 150; ++rep) {
        const int nv = nvars_pick(gen);
        LinearProgram lp;
        lp.objective.resize(static_cast<size_t>(nv));
        for (double& v : lp.objective) v = coeff(gen);
        lp.lower.assign(static_cast<size_t>(nv), -2.0);
        lp.upper.assign(static_cast<size_t>(nv), 2.0);
        const int nr = nrows_pick(gen);
        for (int r = 0; r < nr; ++r) {
            std::vector<double> row(static_cast<size_t>(nv));
            for (double& v : row) v = coeff(gen);
            const Relation rel = static_cast<Relation>(rel_pick(gen));
            lp.add_row(std::move(row), rel, coeff(gen));
        }

        const oracle::VertexOracleResult reference = oracle::lp_vertex_oracle(lp);
        const LpSolution sol = solve(lp);
        if (reference.feasible) {
            ++feasible_seen;
            REQUIRE(sol.status == LpStatus::Optimal);
            CHECK(sol.objective_value == doctest::Approx(reference.objective).epsilon(1e-7));
            CHECK(sol.max_primal_residual < 1e-8);
            CHECK(sol.max_dual_residual < 1e-7);
            CHECK(std::abs(sol.duality_gap) < 1e-7);
            const CertificateReport report = verify_certificate(lp, sol.x, sol.dual_values, 1e-6);
            CHECK(report.ok);
        } else {
            ++infeasible_seen;
            CHECK(sol.status == LpStatus::Infeasible);
        }
    }
    // The generator must exercise both outcomes.
    CHECK(feasible_seen > 30);
    CHECK(infeasible_seen > 5);
}

TEST_CASE("dual values respect the sign convention") {
    LinearProgram lp;
    lp.objective = {1.0, 1.0};
    lp.lower = {0.0, 0.0};
    lp.upper = {kInf, kInf};
    lp.add_row({1.0, 1.0}, Relation::GreaterEq, 2.0, "floor");
    lp.add_row({1.0, 0.0}, Relation::LessEq, 5.0, "cap");
    const LpSolution sol = solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.dual_values[0] >= -1e-9);
    CHECK(sol.dual_values[1] <= 1e-9);
    const CertificateReport report = verify_certificate(lp, sol.x, sol.dual_values, 1e-8);
    CHECK(report.ok);
    CHECK(report.dual_objective == doctest::Approx(report.primal_objective).epsilon(1e-8));
}

TEST_CASE("verify_point flags violations") {
    LinearProgram lp;
    lp.objective = {1.0};
    lp.add_row({1.0}, Relation::GreaterEq, 1.0, "floor");
    const std::vector<double> bad{0.5};
    const PointReport report = verify_point(lp, bad);
    CHECK_FALSE(report.feasible);
    CHECK(report.max_violation == doctest::Approx(0.5));
    CHECK(report.worst_row == "floor");
}
