#include "stabbounds/symstate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stabbounds {

void walsh_transform(std::span<double> data) {
    const size_t len = data.size();
    if (len == 0 || (len & (len - 1)) != 0) throw std::invalid_argument("length must be a power of two");
    for (size_t half = 1; half < len; half <<= 1) {
        for (size_t block = 0; block < len; block += half << 1) {
            for (size_t i = block; i < block + half; ++i) {
                const double a = data[i], b = data[i + half];
                data[i] = a + b;
                data[i + half] = a - b;
            }
        }
    }
}

SymState::SymState(StabilizerSpec s, std::vector<double> c) : spec(std::move(s)), coeffs(std::move(c)) {
    if (coeffs.size() != (size_t{1} << spec.n))
        throw std::invalid_argument("coefficient vector must have length 2^n");
}

SymState SymState::pure_state(const StabilizerSpec& spec) {
    const size_t size = size_t{1} << spec.n;
    return SymState(spec, std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

SymState SymState::maximally_mixed(const StabilizerSpec& spec) {
    const size_t size = size_t{1} << spec.n;
    std::vector<double> c(size, 0.0);
    c[0] = 1.0 / static_cast<double>(size);
    return SymState(spec, std::move(c));
}

double EigenSpectrum::min() const { return *std::min_element(values.begin(), values.end()); }

double EigenSpectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

EigenSpectrum eigenvalues(const SymState& state) {
    EigenSpectrum spectrum;
    spectrum.values = state.coeffs;
    walsh_transform(spectrum.values);
    return spectrum;
}

double trace_of(const SymState& state) {
    return static_cast<double>(size_t{1} << state.spec.n) * state.coeffs[0];
}

SymState partial_transpose(const SymState& state, QubitMask parties) {
    std::vector<double> c(state.coeffs.size());
    for (std::uint32_t i = 0; i < c.size(); ++i)
        c[i] = state.coeffs[i] * pt_sign(group_element(state.spec, i), parties);
    return SymState(state.spec, std::move(c));
}

CMatrix to_dense(const SymState& state) {
    if (state.spec.n > 8) throw std::invalid_argument("dense form limited to 8 qubits");
    CMatrix out(1 << state.spec.n);
    for (std::uint32_t i = 0; i < state.coeffs.size(); ++i) {
        if (state.coeffs[i] == 0.0) continue;
        out += state.coeffs[i] * to_dense(group_element(state.spec, i));
    }
    return out;
}

}  // namespace stabbounds
