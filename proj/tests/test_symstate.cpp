#include <bit>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stabbounds/symstate.hpp"

using namespace stabbounds;

namespace {

std::vector<double> random_coeffs(std::mt19937& gen, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> c(1u << n);
    for (double& v : c) v = u(gen);
    return c;
}

}  // namespace

TEST_CASE("walsh transform is an involution up to 2^n") {
    std::mt19937 gen(21);
    for (int n = 1; n <= 8; ++n) {
        for (int rep = 0; rep < 15; ++rep) {
            const std::vector<double> original = random_coeffs(gen, n);
            std::vector<double> twice = original;
            walsh_transform(twice);
            walsh_transform(twice);
            const double scale = static_cast<double>(1u << n);
            for (size_t i = 0; i < original.size(); ++i)
                CHECK(twice[i] == doctest::Approx(scale * original[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("walsh transform matches the direct double sum") {
    std::mt19937 gen(22);
    for (int n = 1; n <= 4; ++n) {
        const std::vector<double> c = random_coeffs(gen, n);
        std::vector<double> fast = c;
        walsh_transform(fast);
        const std::uint32_t size = 1u << n;
        for (std::uint32_t j = 0; j < size; ++j) {
            double direct = 0.0;
            for (std::uint32_t i = 0; i < size; ++i)
                direct += ((std::popcount(i & j) & 1) ? -1.0 : 1.0) * c[i];
            CHECK(fast[j] == doctest::Approx(direct).epsilon(1e-12));
        }
    }
}

TEST_CASE("eigenvalues match the characteristic-polynomial oracle") {
    std::mt19937 gen(23);
    for (const StabilizerSpec& spec :
         {StabilizerSpec::line_cluster(2), StabilizerSpec::line_cluster(3),
          StabilizerSpec::ghz(3), StabilizerSpec::cycle_cluster(3)}) {
        for (int rep = 0; rep < 10; ++rep) {
            std::vector<double> c = random_coeffs(gen, spec.n);
            const SymState state(spec, c);
            std::vector<double> mine = eigenvalues(state).values;
            std::sort(mine.begin(), mine.end());
            const std::vector<double> reference = oracle::hermitian_eigenvalues(to_dense(state));
            REQUIRE(mine.size() == reference.size());
            for (size_t i = 0; i < mine.size(); ++i)
                CHECK(mine[i] == doctest::Approx(reference[i]).epsilon(1e-6).scale(1.0));
        }
    }
}

TEST_CASE("trace matches the dense trace") {
    std::mt19937 gen(24);
    const StabilizerSpec spec = StabilizerSpec::line_cluster(3);
    for (int rep = 0; rep < 20; ++rep) {
        const SymState state(spec, random_coeffs(gen, 3));
        const cdouble dense_trace = trace(to_dense(state));
        CHECK(trace_of(state) == doctest::Approx(dense_trace.real()).epsilon(1e-12));
        CHECK(std::abs(dense_trace.imag()) < 1e-12);
    }
}

TEST_CASE("pure state has a single unit eigenvalue") {
    for (const StabilizerSpec& spec :
         {StabilizerSpec::line_cluster(4), StabilizerSpec::ghz(4), StabilizerSpec::cycle_cluster(4)}) {
        const SymState pure = SymState::pure_state(spec);
        const EigenSpectrum spectrum = eigenvalues(pure);
        CHECK(spectrum.values[0] == doctest::Approx(1.0));
        for (size_t j = 1; j < spectrum.values.size(); ++j)
            CHECK(spectrum.values[j] == doctest::Approx(0.0).scale(1.0));
        CHECK(trace_of(pure) == doctest::Approx(1.0));
        CHECK(spectrum.sum() == doctest::Approx(1.0));
    }
}

TEST_CASE("maximally mixed state is flat") {
    const SymState mixed = SymState::maximally_mixed(StabilizerSpec::line_cluster(3));
    for (double v : eigenvalues(mixed).values) CHECK(v == doctest::Approx(1.0 / 8.0));
    CHECK(trace_of(mixed) == doctest::Approx(1.0));
}

TEST_CASE("partial transpose is an involution and matches the dense map") {
    std::mt19937 gen(25);
    const StabilizerSpec spec = StabilizerSpec::cycle_cluster(3);
    std::uniform_int_distribution<std::uint32_t> masks(0, 7);
    for (int rep = 0; rep < 40; ++rep) {
        const SymState state(spec, random_coeffs(gen, 3));
        const QubitMask parties = masks(gen);
        const SymState once = partial_transpose(state, parties);
        const SymState twice = partial_transpose(once, parties);
        for (size_t i = 0; i < state.coeffs.size(); ++i)
            CHECK(twice.coeffs[i] == doctest::Approx(state.coeffs[i]).epsilon(1e-15));
        CHECK(max_abs_diff(to_dense(once), partial_transpose_dense(to_dense(state), parties, 3)) <
              1e-13);
    }
}

TEST_CASE("coefficient vectors must match the group size") {
    CHECK_THROWS_AS(SymState(StabilizerSpec::line_cluster(2), {1.0, 2.0}), std::invalid_argument);
}
