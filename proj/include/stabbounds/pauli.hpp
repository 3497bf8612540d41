#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stabbounds/dense.hpp"

namespace stabbounds {

inline constexpr int kMaxQubits = 16;

// Bit k (LSB first) refers to qubit k+1 throughout: masks, group indices and
// computational-basis indices all share that convention. String labels such as
// "XZI" put qubit 1 leftmost.
using QubitMask = std::uint32_t;

// Hermitian Pauli string in symplectic form with an explicit overall sign.
// A set x and z bit on the same qubit means Y (no factor of i is stored).
struct PauliString {
    int n = 1;
    QubitMask x = 0;
    QubitMask z = 0;
    int sign = +1;

    PauliString() = default;
    explicit PauliString(int n_qubits);
    PauliString(int n_qubits, QubitMask x_bits, QubitMask z_bits, int sign_ = +1);

    static PauliString from_label(std::string_view label, int sign_ = +1);

    bool is_identity() const { return x == 0 && z == 0; }
    bool commutes_with(const PauliString& o) const;
    std::string label() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;
};

// Product of two commuting Hermitian Pauli strings (always Hermitian again).
// Throws std::invalid_argument on anticommuting operands or size mismatch.
PauliString multiply(const PauliString& a, const PauliString& b);

// Sign picked up under partial transposition of the qubits in `parties`:
// -1 iff an odd number of transposed qubits carry Y.
int pt_sign(const PauliString& p, QubitMask parties);

// Number of qubits acted on by X or Y; invariant rate of decay under
// independent dephasing.
int dephasing_weight(const PauliString& p);

CMatrix to_dense(const PauliString& p);

struct StabilizerSpec {
    enum class Family { Graph, Ghz };

    Family family = Family::Graph;
    int n = 1;
    std::vector<std::pair<int, int>> edges;  // graph family, 1-based endpoints
    std::vector<PauliString> generators;

    static StabilizerSpec graph(int n, const std::vector<std::pair<int, int>>& edges);
    static StabilizerSpec ghz(int n);
    static StabilizerSpec line_cluster(int n);
    static StabilizerSpec cycle_cluster(int n);
};

// Group element K_1^{i_1} ... K_n^{i_n} for index bits i, sign tracked.
PauliString group_element(const StabilizerSpec& spec, std::uint32_t index);

}  // namespace stabbounds
