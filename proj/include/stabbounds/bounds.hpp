#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stabbounds/lp.hpp"
#include "stabbounds/noise.hpp"
#include "stabbounds/sdp.hpp"
#include "stabbounds/symstate.hpp"

namespace stabbounds {

// Measurement data is inconsistent with any quantum state.
struct InfeasibleDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generator expectation values for a stabilizer target, optionally augmented
// with further Pauli expectations (used by the general SDP path).
struct MeasurementRecord {
    StabilizerSpec spec;
    std::vector<double> outcomes;  // outcomes[k] = <K_{k+1}>, one per generator
    std::vector<std::pair<PauliString, double>> extra_observables;
    std::string label;

    MeasurementRecord(StabilizerSpec spec_, std::vector<double> outcomes_,
                      std::vector<std::pair<PauliString, double>> extras = {},
                      std::string label_ = "");
};

enum class Quantity { Fidelity, Gre, LogNegativity };
enum class Method { Closed, SymmetricLp, GeneralSdp };
enum class MethodChoice { Auto, Closed, Lp, Sdp };

// Dual solution in group coordinates: mu[0] multiplies the identity, mu[k]
// the k-th generator outcome; cut_coeffs holds the group coefficients of one
// auxiliary operator per single-qubit cut (GRE only).
struct Certificate {
    std::vector<double> mu;
    std::vector<std::vector<double>> cut_coeffs;
    double dual_objective = 0.0;
};

struct Diagnostics {
    double primal_dual_gap = 0.0;
    double max_primal_residual = 0.0;
    double max_dual_residual = 0.0;
    int iterations = 0;
    std::string notes;
};

struct BoundResult {
    Quantity quantity = Quantity::Fidelity;
    Method method = Method::Closed;
    double value = 0.0;
    bool exact = false;  // true when computed from the full state, not a bound
    std::optional<Certificate> certificate;
    Diagnostics diagnostics;
};

// ---- fidelity ----

// LP lower bound on the overlap with the target stabilizer state.
BoundResult fidelity_bound_lp(const MeasurementRecord& m);

// max((sum_k a_k - n + 2) / 2, 0); equals the LP value for every record.
BoundResult fidelity_bound_closed(const MeasurementRecord& m);

// The universal dual point lambda_0 = 1 - n/2, lambda_k = 1/2, checked by
// expanding the residual operator in the joint eigenbasis.
struct FidelityCertificate {
    int n = 0;
    double lambda_identity = 0.0;
    double lambda_generator = 0.0;
    std::vector<double> residual_eigenvalues;  // all must be >= 0
    double min_eigenvalue = 0.0;
    bool valid = false;
};

FidelityCertificate fidelity_dual_certificate(const StabilizerSpec& spec);

// ---- global robustness of entanglement (base-independent, via PPT) ----

// Symmetric LP relaxation: exact for states diagonal in the group basis,
// a certified lower bound otherwise. Carries the dual certificate.
BoundResult gre_bound_lp(const MeasurementRecord& m);

// Closed forms for the 2-qubit cluster, the triangle and the box cluster.
// Throws std::invalid_argument for other specs.
BoundResult gre_bound_closed(const MeasurementRecord& m);

// Exact value for an operator in the symmetric class (full knowledge).
BoundResult gre_exact_symmetric(const SymState& state);

// General SDP (no symmetry assumption): consumes the generator outcomes and
// any extra observables. Guarded to n <= 4.
BoundResult gre_bound_general(const MeasurementRecord& m);

// ---- tabulated dual certificates ----

struct OperatorInequalityCheck {
    std::string name;
    double worst = 0.0;  // most negative slack; >= -tol means satisfied
    bool ok = false;
};

struct CertificateSuiteReport {
    std::string name;
    std::vector<double> mu;
    std::vector<OperatorInequalityCheck> checks;
    double dual_objective = 0.0;  // at the dephased outcomes gamma*t = 0.1
    bool all_ok = false;
};

// The tabulated 4-qubit box-cluster dual solution (16 coefficients per cut,
// in units of 1/16) plus the pair-branch point embedded from the 2-qubit
// case. flip_cut/flip_index >= 0 negates one tabulated entry first; used by
// the CLI self-test to demonstrate that corruption is detected.
std::vector<CertificateSuiteReport> verify_box_cluster_certificate(int flip_cut = -1,
                                                                   int flip_index = -1);

// The 2-qubit dual point mu = (-1, 1, 1) with the cut operator split evenly
// across both single-qubit cuts; feasible for every outcome vector and tight
// at perfect outcomes.
CertificateSuiteReport verify_two_qubit_dual_point();

// ---- logarithmic negativity (base 2) ----

enum class NegativityVariant { Plain, Half };

// Two observables: max(0, log2(|ax| + |az|)). With a third outcome supplied
// the Plain variant evaluates log2(1 + |ax| + |ay| + |az|) and Half evaluates
// log2((1 + |ax| + |ay| + |az|) / 2); Half is the one that matches the
// underlying minimization.
BoundResult negativity_bound_closed(double ax, double az, std::optional<double> ay = std::nullopt,
                                    NegativityVariant variant = NegativityVariant::Plain);

// ---- dispatch ----

BoundResult compute_bound(const MeasurementRecord& m, Quantity quantity,
                          MethodChoice choice = MethodChoice::Auto,
                          NegativityVariant variant = NegativityVariant::Plain);

}  // namespace stabbounds
