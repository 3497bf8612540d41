#include "stabbounds/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace stabbounds {

SymState dephase(const DephasingScenario& scenario) {
    if (scenario.gamma < 0.0 || scenario.time < 0.0)
        throw std::invalid_argument("gamma and time must be nonnegative");
    const double gt = scenario.gamma * scenario.time;
    const size_t size = size_t{1} << scenario.spec.n;
    std::vector<double> coeffs(size);
    const double norm = 1.0 / static_cast<double>(size);
    for (std::uint32_t i = 0; i < size; ++i) {
        const int weight = dephasing_weight(group_element(scenario.spec, i));
        coeffs[i] = std::exp(-gt * weight) * norm;
    }
    return SymState(scenario.spec, std::move(coeffs));
}

std::vector<double> generator_outcomes(const SymState& state) {
    // <G(i)> = 2^n c_i for a trace-one symmetric operator; generators sit at
    // the one-hot indices.
    const double dim = static_cast<double>(size_t{1} << state.spec.n);
    std::vector<double> outcomes(static_cast<size_t>(state.spec.n));
    for (int k = 0; k < state.spec.n; ++k)
        outcomes[k] = dim * state.coeffs[size_t{1} << k];
    return outcomes;
}

}  // namespace stabbounds
