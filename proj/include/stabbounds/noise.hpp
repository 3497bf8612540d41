#pragma once

#include "stabbounds/symstate.hpp"

namespace stabbounds {

// Independent single-qubit dephasing at rate gamma acting for duration t on
// the pure stabilizer state of `spec`. Each group element decays by
// exp(-gamma*t * dephasing_weight(G(i))).
struct DephasingScenario {
    StabilizerSpec spec;
    double gamma = 0.1;
    double time = 1.0;
};

SymState dephase(const DephasingScenario& scenario);

// Expectation values of the n generators of the state's group.
std::vector<double> generator_outcomes(const SymState& state);

}  // namespace stabbounds
