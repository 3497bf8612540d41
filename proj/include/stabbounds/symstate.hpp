#pragma once

#include <span>
#include <vector>

#include "stabbounds/pauli.hpp"

namespace stabbounds {

// In-place Walsh transform: y[j] = sum_i (-1)^{popcount(i & j)} x[i].
// Self-inverse up to a factor 2^n. Length must be a power of two.
void walsh_transform(std::span<double> data);

// Operator diagonal in a stabilizer group basis:
//   A = sum_i coeffs[i] * G(i),   i = 0 .. 2^n - 1,
// with G(i) = group_element(spec, i). No normalization factor is folded in;
// the maximally mixed state has coeffs[0] = 1/2^n and a pure stabilizer state
// has all coefficients equal to 1/2^n.
struct SymState {
    StabilizerSpec spec;
    std::vector<double> coeffs;

    SymState() = default;
    SymState(StabilizerSpec s, std::vector<double> c);

    static SymState pure_state(const StabilizerSpec& spec);
    static SymState maximally_mixed(const StabilizerSpec& spec);

    int qubit_count() const { return spec.n; }
};

// All 2^n eigenvalues, one per joint generator eigenspace, in index order
// (index j flips the sign of every G(i) with odd popcount(i & j)):
//   lambda_j = sum_i (-1)^{popcount(i & j)} coeffs[i].
struct EigenSpectrum {
    std::vector<double> values;

    double min() const;
    double sum() const;
};

EigenSpectrum eigenvalues(const SymState& state);

double trace_of(const SymState& state);

// Partial transpose over the qubits in `parties`; closed under the symmetric
// form (each group coefficient picks up pt_sign of its element).
SymState partial_transpose(const SymState& state, QubitMask parties);

// Materializes the dense matrix; guarded to n <= 8.
CMatrix to_dense(const SymState& state);

}  // namespace stabbounds
