"""Certified fidelity and entanglement bounds from stabilizer measurements."""

from ._core import (
    BoundResult,
    Certificate,
    CertificateSuiteReport,
    Diagnostics,
    FidelityCertificate,
    InfeasibleDataError,
    MeasurementParseError,
    MeasurementRecord,
    Method,
    MethodChoice,
    NegativityVariant,
    OperatorInequalityCheck,
    PauliString,
    Quantity,
    StabilizerSpec,
    SymState,
    compute_bound,
    dephase,
    dephasing_weight,
    eigenvalues,
    fidelity_bound_closed,
    fidelity_bound_lp,
    fidelity_dual_certificate,
    format_measurement_record,
    generator_outcomes,
    gre_bound_closed,
    gre_bound_general,
    gre_bound_lp,
    gre_exact_symmetric,
    group_element,
    load_measurement_file,
    multiply,
    negativity_bound_closed,
    parse_measurement_text,
    partial_transpose,
    pauli_matrix,
    pt_sign,
    save_measurement_file,
    state_matrix,
    trace_of,
    verify_box_cluster_certificate,
    verify_two_qubit_dual_point,
    walsh_transform,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
