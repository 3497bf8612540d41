#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stabbounds/dense.hpp"

namespace stabbounds {

// Full eigensystem of a Hermitian matrix, eigenvalues ascending, eigenvectors
// as the columns of `vectors` (m = vectors * diag(values) * vectors^dagger).
struct EigenSystem {
    std::vector<double> values;
    CMatrix vectors;
};

// Cyclic complex Jacobi rotations; backbone of the barrier solver and of all
// PSD residual checks.
EigenSystem eigendecompose(const CMatrix& m);

// min sum_v <objective[v], X_v>
//   s.t. sum_v <equalities[e].coeff[v], X_v> = rhs_e
//        each psd block  constant + sum_t scale_t * PT_{mask_t}(X_{var_t}) >= 0
//        X_v Hermitian PSD (an identity block is added per variable).
struct SdpProblem {
    struct Variable {
        std::string name;
        int dim = 1;
        CMatrix initial_hint;  // optional strictly-PD seed; 0.5*I if empty
    };
    struct Equality {
        std::vector<CMatrix> coeff;  // one per variable, empty matrix = zero
        double rhs = 0.0;
        std::string name;
    };
    struct BlockTerm {
        int var = 0;
        double scale = 1.0;
        std::uint32_t pt_mask = 0;  // partial transpose of these qubits, 0 = none
        int n_qubits = 0;           // needed only when pt_mask != 0
    };
    struct PsdBlock {
        int dim = 1;
        std::vector<BlockTerm> terms;
        CMatrix constant;  // empty matrix = zero
        std::string name;
    };

    std::vector<Variable> variables;
    std::vector<CMatrix> objective;
    std::vector<Equality> equalities;
    std::vector<PsdBlock> psd_blocks;
};

enum class SdpStatus { Optimal, Infeasible, MaxIterations };

struct SdpSolution {
    SdpStatus status = SdpStatus::Optimal;
    std::vector<CMatrix> values;
    double objective_value = 0.0;
    double min_block_eigenvalue = 0.0;
    double max_equality_residual = 0.0;
    int outer_iterations = 0;
};

// Log-det barrier method: Newton steps restricted to the affine manifold of
// the equality constraints, mu shrunk by 0.2 per outer iteration.
SdpSolution solve_sdp(const SdpProblem& problem);

}  // namespace stabbounds
