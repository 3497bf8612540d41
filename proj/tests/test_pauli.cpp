#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stabbounds/pauli.hpp"

using namespace stabbounds;

namespace {

PauliString random_pauli(std::mt19937& gen, int n) {
    std::uniform_int_distribution<std::uint32_t> bits(0, (1u << n) - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    return PauliString(n, bits(gen), bits(gen), coin(gen) ? 1 : -1);
}

}  // namespace

TEST_CASE("labels round-trip through the symplectic form") {
    for (const char* label : {"X", "Z", "Y", "I", "XZ", "ZX", "XZIZY", "IIII", "YXZI"}) {
        const PauliString p = PauliString::from_label(label);
        CHECK(p.label() == label);
        CHECK(p.sign == 1);
    }
    const PauliString m = PauliString::from_label("XY", -1);
    CHECK(m.sign == -1);
    CHECK(m.label() == "XY");
    CHECK_THROWS_AS(PauliString::from_label("XQ"), std::invalid_argument);
    CHECK_THROWS_AS(PauliString::from_label(""), std::invalid_argument);
}

TEST_CASE("dense form matches the letter-by-letter construction") {
    std::mt19937 gen(11);
    for (int n = 1; n <= 4; ++n) {
        for (int rep = 0; rep < 40; ++rep) {
            const PauliString p = random_pauli(gen, n);
            CMatrix expect = oracle::dense_from_letters(p.label());
            expect *= static_cast<double>(p.sign);
            CHECK(max_abs_diff(to_dense(p), expect) < 1e-15);
        }
    }
}

TEST_CASE("commutation matches the dense commutator") {
    std::mt19937 gen(12);
    for (int n = 1; n <= 3; ++n) {
        for (int rep = 0; rep < 60; ++rep) {
            const PauliString a = random_pauli(gen, n);
            const PauliString b = random_pauli(gen, n);
            const CMatrix ab = matmul(to_dense(a), to_dense(b));
            const CMatrix ba = matmul(to_dense(b), to_dense(a));
            CHECK(a.commutes_with(b) == (max_abs_diff(ab, ba) < 1e-12));
        }
    }
}

TEST_CASE("products of commuting strings match dense multiplication") {
    std::mt19937 gen(13);
    int checked = 0;
    for (int n = 1; n <= 4 && checked < 150; ++n) {
        for (int rep = 0; rep < 200 && checked < 150; ++rep) {
            const PauliString a = random_pauli(gen, n);
            const PauliString b = random_pauli(gen, n);
            if (!a.commutes_with(b)) continue;
            const PauliString prod = multiply(a, b);
            const CMatrix dense = matmul(to_dense(a), to_dense(b));
            CHECK(max_abs_diff(to_dense(prod), dense) < 1e-15);
            ++checked;
        }
    }
    CHECK(checked == 150);
}

TEST_CASE("multiplying anticommuting strings is rejected") {
    const PauliString x = PauliString::from_label("X");
    const PauliString z = PauliString::from_label("Z");
    CHECK_THROWS_AS(multiply(x, z), std::invalid_argument);
}

TEST_CASE("partial-transpose sign matches the dense partial transpose") {
    std::mt19937 gen(14);
    for (int n = 1; n <= 3; ++n) {
        std::uniform_int_distribution<std::uint32_t> masks(0, (1u << n) - 1);
        for (int rep = 0; rep < 60; ++rep) {
            const PauliString p = random_pauli(gen, n);
            const QubitMask parties = masks(gen);
            CMatrix expect = to_dense(p);
            expect *= static_cast<double>(pt_sign(p, parties));
            const CMatrix got = partial_transpose_dense(to_dense(p), parties, n);
            CHECK(max_abs_diff(got, expect) < 1e-15);
        }
    }
}

TEST_CASE("dephasing weight counts X and Y letters") {
    std::mt19937 gen(15);
    for (int rep = 0; rep < 100; ++rep) {
        const PauliString p = random_pauli(gen, 4);
        int expected = 0;
        for (char c : p.label())
            if (c == 'X' || c == 'Y') ++expected;
        CHECK(dephasing_weight(p) == expected);
    }
}

TEST_CASE("generator labels for the standard families") {
    const StabilizerSpec line2 = StabilizerSpec::line_cluster(2);
    CHECK(line2.generators[0].label() == "XZ");
    CHECK(line2.generators[1].label() == "ZX");

    const StabilizerSpec box = StabilizerSpec::cycle_cluster(4);
    CHECK(box.generators[0].label() == "XZIZ");
    CHECK(box.generators[1].label() == "ZXZI");
    CHECK(box.generators[2].label() == "IZXZ");
    CHECK(box.generators[3].label() == "ZIZX");

    const StabilizerSpec ghz3 = StabilizerSpec::ghz(3);
    CHECK(ghz3.generators[0].label() == "XXX");
    CHECK(ghz3.generators[1].label() == "ZZI");
    CHECK(ghz3.generators[2].label() == "IZZ");
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(StabilizerSpec::graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(StabilizerSpec::graph(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(StabilizerSpec::graph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(StabilizerSpec::cycle_cluster(2), std::invalid_argument);
}

TEST_CASE("generators commute pairwise and are independent") {
    for (const StabilizerSpec& spec :
         {StabilizerSpec::line_cluster(5), StabilizerSpec::cycle_cluster(5),
          StabilizerSpec::ghz(5)}) {
        for (int i = 0; i < spec.n; ++i)
            for (int j = i + 1; j < spec.n; ++j)
                CHECK(spec.generators[i].commutes_with(spec.generators[j]));
        for (std::uint32_t idx = 1; idx < (1u << spec.n); ++idx)
            CHECK_FALSE(group_element(spec, idx).is_identity());
    }
}

TEST_CASE("group elements compose by index xor") {
    std::mt19937 gen(16);
    const StabilizerSpec spec = StabilizerSpec::cycle_cluster(4);
    std::uniform_int_distribution<std::uint32_t> idx(0, 15);
    for (int rep = 0; rep < 100; ++rep) {
        const std::uint32_t i = idx(gen), j = idx(gen);
        const PauliString prod = multiply(group_element(spec, i), group_element(spec, j));
        CHECK(prod == group_element(spec, i ^ j));
    }
}

TEST_CASE("ghz pair product picks up the minus sign on YY") {
    const StabilizerSpec ghz2 = StabilizerSpec::ghz(2);
    const PauliString prod = group_element(ghz2, 3);
    CHECK(prod.label() == "YY");
    CHECK(prod.sign == -1);
}

TEST_CASE("box cluster pair element transposes with the expected signs") {
    const StabilizerSpec box = StabilizerSpec::cycle_cluster(4);
    const PauliString g = group_element(box, 0b0011);
    CHECK(g.label() == "YYZZ");
    CHECK(pt_sign(g, 1u << 0) == -1);
    CHECK(pt_sign(g, 1u << 1) == -1);
    CHECK(pt_sign(g, 1u << 2) == 1);
    CHECK(pt_sign(g, 1u << 3) == 1);
}
