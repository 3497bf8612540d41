#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stabbounds/bounds.hpp"
#include "stabbounds/noise.hpp"

using namespace stabbounds;

namespace {

std::vector<double> random_outcomes(std::mt19937& gen, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> a(static_cast<size_t>(n));
    for (double& v : a) v = u(gen);
    return a;
}

// Re-derives the three operator inequalities of a GRE dual certificate from
// scratch via symmetric-state eigenvalues.
bool gre_certificate_feasible(const StabilizerSpec& spec, const Certificate& cert, double tol) {
    const std::uint32_t size = 1u << spec.n;
    if (cert.mu.size() != static_cast<size_t>(spec.n) + 1) return false;
    if (cert.cut_coeffs.size() != static_cast<size_t>(spec.n)) return false;

    std::vector<double> pt_sum(size, 0.0);
    for (int cut = 0; cut < spec.n; ++cut) {
        const SymState eta(spec, cert.cut_coeffs[static_cast<size_t>(cut)]);
        if (eigenvalues(eta).min() < -tol) return false;
        const SymState transposed = partial_transpose(eta, QubitMask{1} << cut);
        for (std::uint32_t i = 0; i < size; ++i) pt_sum[i] += transposed.coeffs[i];
    }
    std::vector<double> shifted = pt_sum;
    walsh_transform(pt_sum);
    for (double v : pt_sum)
        if (v > 1.0 + tol) return false;

    shifted[0] += cert.mu[0];
    for (int k = 0; k < spec.n; ++k) shifted[1u << k] += cert.mu[static_cast<size_t>(k) + 1];
    walsh_transform(shifted);
    for (double v : shifted)
        if (v > tol) return false;
    return true;
}

double certificate_objective(const Certificate& cert, const std::vector<double>& a) {
    double v = cert.mu[0];
    for (size_t k = 0; k < a.size(); ++k) v += cert.mu[k + 1] * a[k];
    return v;
}

double exact_log_negativity(const SymState& state) {
    const CMatrix pt = partial_transpose_dense(to_dense(state), 1u, state.spec.n);
    double trace_norm = 0.0;
    for (double lambda : oracle::hermitian_eigenvalues(pt)) trace_norm += std::abs(lambda);
    return std::log2(trace_norm);
}

const StabilizerSpec kPair = StabilizerSpec::line_cluster(2);
const StabilizerSpec kTriangle = StabilizerSpec::cycle_cluster(3);
const StabilizerSpec kBox = StabilizerSpec::cycle_cluster(4);

}  // namespace

TEST_CASE("fidelity closed form equals the lp on random data") {
    std::mt19937 gen(51);
    for (const StabilizerSpec& spec : {kPair, kTriangle, StabilizerSpec::ghz(4)}) {
        for (int rep = 0; rep < 50; ++rep) {
            const MeasurementRecord m(spec, random_outcomes(gen, spec.n));
            const BoundResult closed = fidelity_bound_closed(m);
            const BoundResult lp = fidelity_bound_lp(m);
            CHECK(closed.value == doctest::Approx(lp.value).epsilon(1e-7).scale(1.0));
            CHECK(lp.diagnostics.primal_dual_gap < 1e-6);
        }
    }
}

TEST_CASE("fidelity reference points") {
    CHECK(fidelity_bound_closed({StabilizerSpec::ghz(3), {1.0, 1.0, 1.0}}).value ==
          doctest::Approx(1.0));
    CHECK(fidelity_bound_closed({StabilizerSpec::ghz(3), {0.9, 0.9, 0.9}}).value ==
          doctest::Approx(0.85));
    CHECK(fidelity_bound_closed({StabilizerSpec::ghz(3), {0.2, 0.2, 0.2}}).value ==
          doctest::Approx(0.0));
    // Lower bound is sound: the dephased pure state has fidelity <XX..>-ish
    // above the bound.
    const SymState noisy = dephase({kTriangle, 0.1, 1.0});
    const MeasurementRecord m(kTriangle, generator_outcomes(noisy));
    const double bound = fidelity_bound_closed(m).value;
    const SymState pure = SymState::pure_state(kTriangle);
    const double true_fidelity = inner_real(to_dense(pure), to_dense(noisy));
    CHECK(bound <= true_fidelity + 1e-12);
}

TEST_CASE("fidelity dual certificate validates for clusters and ghz") {
    for (int n = 2; n <= 6; ++n) {
        for (const StabilizerSpec& spec : {StabilizerSpec::line_cluster(n), StabilizerSpec::ghz(n)}) {
            const FidelityCertificate cert = fidelity_dual_certificate(spec);
            CHECK(cert.valid);
            CHECK(cert.lambda_identity == doctest::Approx(1.0 - n / 2.0));
            CHECK(cert.lambda_generator == doctest::Approx(0.5));
            CHECK(cert.min_eigenvalue >= -1e-12);
            CHECK(std::abs(cert.residual_eigenvalues[0]) <= 1e-12);
        }
    }
}

TEST_CASE("gre closed forms equal the lp on random data") {
    std::mt19937 gen(52);
    for (const StabilizerSpec& spec : {kPair, kTriangle}) {
        for (int rep = 0; rep < 50; ++rep) {
            const MeasurementRecord m(spec, random_outcomes(gen, spec.n));
            const double closed = gre_bound_closed(m).value;
            const double lp = gre_bound_lp(m).value;
            CHECK(closed == doctest::Approx(lp).epsilon(1e-7).scale(1.0));
        }
    }
    for (int rep = 0; rep < 30; ++rep) {
        const MeasurementRecord m(kBox, random_outcomes(gen, 4));
        const double closed = gre_bound_closed(m).value;
        const double lp = gre_bound_lp(m).value;
        CHECK(closed == doctest::Approx(lp).epsilon(1e-7).scale(1.0));
    }
}

TEST_CASE("gre closed-form reference points") {
    CHECK(gre_bound_closed({kPair, {1.0, 1.0}}).value == doctest::Approx(1.0));
    CHECK(gre_bound_closed({kTriangle, {1.0, 1.0, 1.0}}).value == doctest::Approx(1.0));
    CHECK(gre_bound_closed({kBox, {0.8, 0.8, 0.8, 0.8}}).value == doctest::Approx(1.4));
    CHECK(gre_bound_closed({kBox, {1.0, 1.0, 1.0, 1.0}}).value == doctest::Approx(3.0));
    CHECK(gre_bound_closed({kPair, {0.3, 0.3}}).value == doctest::Approx(0.0));
    CHECK_THROWS_AS(gre_bound_closed({StabilizerSpec::line_cluster(4), {1, 1, 1, 1}}),
                    std::invalid_argument);
}

TEST_CASE("gre lp certificates are feasible and match the bound") {
    std::mt19937 gen(53);
    for (const StabilizerSpec& spec : {kPair, kTriangle}) {
        for (int rep = 0; rep < 10; ++rep) {
            const std::vector<double> a = random_outcomes(gen, spec.n);
            const MeasurementRecord m(spec, a);
            const BoundResult r = gre_bound_lp(m);
            REQUIRE(r.certificate.has_value());
            CHECK(gre_certificate_feasible(spec, *r.certificate, 1e-7));
            CHECK(certificate_objective(*r.certificate, a) ==
                  doctest::Approx(r.certificate->dual_objective).epsilon(1e-9));
            CHECK(r.certificate->dual_objective <= r.value + 1e-6);
            CHECK(r.diagnostics.primal_dual_gap <= 1e-6);
        }
    }
}

TEST_CASE("exact symmetric gre reproduces the dephased-cluster table") {
    const double values[3] = {0.8142034, 0.8185150, 2.2995462};
    const StabilizerSpec specs[3] = {kPair, kTriangle, kBox};
    for (int i = 0; i < 3; ++i) {
        const SymState noisy = dephase({specs[i], 0.1, 1.0});
        const BoundResult r = gre_exact_symmetric(noisy);
        CHECK(r.exact);
        CHECK(r.value == doctest::Approx(values[i]).epsilon(1e-5));
        // The measurement-only bound can never exceed the exact value.
        const MeasurementRecord m(specs[i], generator_outcomes(noisy));
        CHECK(gre_bound_lp(m).value <= r.value + 1e-8);
    }
}

TEST_CASE("exact symmetric gre meets the closed form on pure states") {
    for (const StabilizerSpec& spec : {kPair, kTriangle, kBox}) {
        const SymState pure = SymState::pure_state(spec);
        const double exact = gre_exact_symmetric(pure).value;
        const MeasurementRecord m(spec, std::vector<double>(static_cast<size_t>(spec.n), 1.0));
        CHECK(exact == doctest::Approx(gre_bound_closed(m).value).epsilon(1e-7));
    }
}

TEST_CASE("exact symmetric gre rejects invalid states") {
    std::vector<double> coeffs(4, 0.5);  // trace 2
    CHECK_THROWS_AS(gre_exact_symmetric(SymState(kPair, coeffs)), std::invalid_argument);
    std::vector<double> negative{0.25, 0.5, 0.0, 0.0};  // eigenvalue -0.25
    CHECK_THROWS_AS(gre_exact_symmetric(SymState(kPair, negative)), std::invalid_argument);
}

TEST_CASE("general sdp matches the symmetric lp on generator data") {
    const double a = std::exp(-0.1);
    const MeasurementRecord pair(kPair, {a, a});
    const double lp = gre_bound_lp(pair).value;
    const double sdp = gre_bound_general(pair).value;
    CHECK(sdp == doctest::Approx(lp).epsilon(1e-4).scale(1.0));
}

TEST_CASE("local statistics tighten the general sdp bound") {
    const StabilizerSpec ghz2 = StabilizerSpec::ghz(2);
    const MeasurementRecord plain(ghz2, {0.9, 0.7});
    const double base = gre_bound_general(plain).value;
    CHECK(base == doctest::Approx(0.6).epsilon(1e-3).scale(1.0));

    const MeasurementRecord enriched(ghz2, {0.9, 0.7},
                                     {{PauliString::from_label("ZI"), 0.0},
                                      {PauliString::from_label("IZ"), 0.25}});
    const double improved = gre_bound_general(enriched).value;
    CHECK(improved == doctest::Approx(0.667084).epsilon(1e-3).scale(1.0));
    CHECK(improved > base + 0.05);
}

TEST_CASE("impossible extra observables raise infeasible-data") {
    const MeasurementRecord bad(StabilizerSpec::ghz(2), {1.0, 1.0},
                                {{PauliString::from_label("XI"), 0.9}});
    CHECK_THROWS_AS(gre_bound_general(bad), InfeasibleDataError);
}

TEST_CASE("bounds are monotone in the outcome magnitudes") {
    std::mt19937 gen(54);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int rep = 0; rep < 100; ++rep) {
        const StabilizerSpec& spec = (rep % 2 == 0) ? kPair : kTriangle;
        std::vector<double> lo(static_cast<size_t>(spec.n)), hi(static_cast<size_t>(spec.n));
        for (int k = 0; k < spec.n; ++k) {
            hi[static_cast<size_t>(k)] = u(gen);
            lo[static_cast<size_t>(k)] = hi[static_cast<size_t>(k)] * u(gen);
        }
        CHECK(gre_bound_lp({spec, lo}).value <= gre_bound_lp({spec, hi}).value + 1e-8);
        CHECK(fidelity_bound_closed({spec, lo}).value <=
              fidelity_bound_closed({spec, hi}).value + 1e-12);
    }
}

TEST_CASE("bounds are covariant under outcome sign flips") {
    std::mt19937 gen(55);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int rep = 0; rep < 100; ++rep) {
        const StabilizerSpec& spec = (rep % 2 == 0) ? kPair : kTriangle;
        const std::vector<double> a = random_outcomes(gen, spec.n);
        std::vector<double> flipped = a;
        for (double& v : flipped)
            if (coin(gen)) v = -v;
        CHECK(gre_bound_lp({spec, a}).value ==
              doctest::Approx(gre_bound_lp({spec, flipped}).value).epsilon(1e-9).scale(1.0));
        CHECK(fidelity_bound_closed({spec, a}).value ==
              doctest::Approx(fidelity_bound_closed({spec, flipped}).value));
    }
}

TEST_CASE("two-qubit dual point verifies") {
    const CertificateSuiteReport report = verify_two_qubit_dual_point();
    CHECK(report.all_ok);
    REQUIRE(report.mu.size() == 3);
    CHECK(report.mu[0] == doctest::Approx(-1.0));
    CHECK(report.mu[1] == doctest::Approx(1.0));
    CHECK(report.mu[2] == doctest::Approx(1.0));
    CHECK(report.dual_objective == doctest::Approx(2.0 * std::exp(-0.1) - 1.0).epsilon(1e-12));
}

TEST_CASE("box cluster certificates verify") {
    const auto reports = verify_box_cluster_certificate();
    REQUIRE(reports.size() == 2);
    for (const auto& report : reports) {
        CHECK(report.all_ok);
        for (const auto& check : report.checks) CHECK(check.worst >= -1e-12);
    }
    CHECK(reports[0].dual_objective == doctest::Approx(2.0 * std::exp(-0.1) - 1.0).epsilon(1e-12));
    CHECK(reports[1].dual_objective == doctest::Approx(8.0 * std::exp(-0.1) - 5.0).epsilon(1e-12));
    // The tabulated point is the better bound at the reference noise level and
    // stays below the primal optimum.
    CHECK(reports[1].dual_objective > reports[0].dual_objective);
    CHECK(reports[1].dual_objective == doctest::Approx(2.2386989).epsilon(1e-6));
}

TEST_CASE("corrupting a tabulated entry is detected") {
    const auto reports = verify_box_cluster_certificate(1, 5);
    CHECK(reports[0].all_ok);
    CHECK_FALSE(reports[1].all_ok);
}

TEST_CASE("negativity closed forms") {
    CHECK(negativity_bound_closed(1.0, 1.0).value == doctest::Approx(1.0));
    CHECK(negativity_bound_closed(0.5, 0.5).value == doctest::Approx(0.0));
    CHECK(negativity_bound_closed(0.2, 0.3).value == doctest::Approx(0.0));
    CHECK(negativity_bound_closed(-0.8, 0.9).value == doctest::Approx(std::log2(1.7)));
    CHECK(negativity_bound_closed(1.0, 1.0, 1.0, NegativityVariant::Plain).value ==
          doctest::Approx(2.0));
    CHECK(negativity_bound_closed(1.0, 1.0, 1.0, NegativityVariant::Half).value ==
          doctest::Approx(1.0));
    CHECK_THROWS_AS(negativity_bound_closed(1.2, 0.5), std::invalid_argument);
}

TEST_CASE("negativity bound is tight for dephased bell states") {
    for (const double gt : {0.05, 0.2, 0.5}) {
        const SymState noisy = dephase({StabilizerSpec::ghz(2), gt, 1.0});
        const std::vector<double> a = generator_outcomes(noisy);
        const double exact = exact_log_negativity(noisy);
        const double two_obs = negativity_bound_closed(a[0], a[1]).value;
        // The root-finding oracle loses digits on the degenerate pt spectrum.
        CHECK(two_obs == doctest::Approx(exact).epsilon(1e-7));
        // <YY> = -exp(-2 gamma t) on this family; the half variant stays
        // tight, the plain variant sits exactly one unit above it.
        const double ay = std::exp(-2.0 * gt);
        const double half = negativity_bound_closed(a[0], a[1], ay, NegativityVariant::Half).value;
        const double plain = negativity_bound_closed(a[0], a[1], ay, NegativityVariant::Plain).value;
        CHECK(half == doctest::Approx(exact).epsilon(1e-7));
        CHECK(plain == doctest::Approx(half + 1.0).epsilon(1e-9));
    }
}

TEST_CASE("dispatch picks the documented method") {
    const MeasurementRecord pair(kPair, {0.9, 0.9});
    CHECK(compute_bound(pair, Quantity::Fidelity).method == Method::Closed);
    CHECK(compute_bound(pair, Quantity::Fidelity, MethodChoice::Lp).method == Method::SymmetricLp);
    CHECK_THROWS_AS(compute_bound(pair, Quantity::Fidelity, MethodChoice::Sdp),
                    std::invalid_argument);

    CHECK(compute_bound(pair, Quantity::Gre).method == Method::Closed);
    const MeasurementRecord line4(StabilizerSpec::line_cluster(4), {0.9, 0.9, 0.9, 0.9});
    CHECK(compute_bound(line4, Quantity::Gre).method == Method::SymmetricLp);
    const MeasurementRecord with_extras(StabilizerSpec::ghz(2), {0.9, 0.7},
                                        {{PauliString::from_label("ZI"), 0.0}});
    CHECK(compute_bound(with_extras, Quantity::Gre).method == Method::GeneralSdp);
    CHECK_THROWS_AS(compute_bound(with_extras, Quantity::Gre, MethodChoice::Lp),
                    std::invalid_argument);

    const MeasurementRecord ghz2(StabilizerSpec::ghz(2), {0.8, 0.9},
                                 {{PauliString::from_label("YY"), 0.7}});
    const BoundResult neg = compute_bound(ghz2, Quantity::LogNegativity);
    CHECK(neg.method == Method::Closed);
    CHECK(neg.value == doctest::Approx(std::log2(1.0 + 0.8 + 0.9 + 0.7)));
    CHECK(compute_bound(ghz2, Quantity::LogNegativity, MethodChoice::Auto,
                        NegativityVariant::Half)
              .value == doctest::Approx(std::log2((1.0 + 0.8 + 0.9 + 0.7) / 2.0)));
    CHECK_THROWS_AS(compute_bound(ghz2, Quantity::LogNegativity, MethodChoice::Lp),
                    std::invalid_argument);
    const MeasurementRecord triangle(kTriangle, {0.9, 0.9, 0.9});
    CHECK_THROWS_AS(compute_bound(triangle, Quantity::LogNegativity), std::invalid_argument);
}

TEST_CASE("measurement records validate their inputs") {
    CHECK_THROWS_AS(MeasurementRecord(kPair, {1.2, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(MeasurementRecord(kPair, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(MeasurementRecord(kPair, {0.5, 0.5}, {{PauliString::from_label("XXX"), 0.1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(MeasurementRecord(kPair, {0.5, 0.5}, {{PauliString::from_label("XX"), 1.5}}),
                    std::invalid_argument);
}
