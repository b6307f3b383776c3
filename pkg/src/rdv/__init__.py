"""Exact potential theory on finite kernel spaces.

Minimax potential levels, rendezvous values, Chebyshev constants,
extremal energies, equilibrium and invariant measures, and spectral
negative-type tests — all with explicit certificates and tolerances.
"""
from .chebyshev import (
    ChebyshevTable,
    ChebyshevWitness,
    chebyshev_limit_bounds,
    chebyshev_n,
    chebyshev_table,
    dual_chebyshev_n,
    multiset_count,
    rendezvous_n,
)
from .core import (
    AsymmetricKernelError,
    CapExceededError,
    ConstantTooSmallError,
    DimensionMismatchError,
    DisconnectedAfterRetriesError,
    DualMismatchError,
    EmptyInputError,
    EmptySubsetError,
    EnumerationCapExceededError,
    IndexOutOfRangeError,
    InvalidMeasureError,
    KernelSpace,
    Measure,
    MetricViolationError,
    NegativeEntryError,
    NonFiniteEntryError,
    NumericalBreakdownError,
    ParseError,
    RdvError,
    SchemaError,
    SubsetPair,
    TooLargeError,
    UniquenessViolatedError,
    ValueInterval,
    dual_kernel,
    interval_hull,
    validate_kernel,
)
from .energy import (
    EnergyResult,
    FrostmanReport,
    MaxEnergyResult,
    WolfReport,
    frostman_check,
    maximal_energy,
    wiener_energy,
    wolf_relations,
)
from .minimax import (
    AverageResult,
    ChainReport,
    EltonMeasures,
    average_interval,
    elton_measures,
    inequality_chain,
    q_lower_value,
    q_value,
    rendezvous_number,
)
from .potential import PotentialProfile, energy, potential_at, profile
from .report import AnalysisReport
from .spaces import (
    SpaceDescriptor,
    circle,
    generate,
    hypercube,
    interval_grid,
    load_report,
    load_space,
    load_space_file,
    point_cap,
    random_graph,
    report_to_csv,
    save_report,
    save_space,
    space_to_document,
)
from .structure import (
    ConverseReport,
    InvarianceResult,
    NegativeTypeCertificate,
    QuasiReport,
    converse_check,
    invariant_measure,
    min_invariance_gap,
    negative_type_test,
    quasi_invariant_convergence,
)
from .suites import SuiteReport, run_suite, run_suites

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "AsymmetricKernelError",
    "AverageResult",
    "CapExceededError",
    "ChainReport",
    "ChebyshevTable",
    "ChebyshevWitness",
    "ConstantTooSmallError",
    "ConverseReport",
    "DimensionMismatchError",
    "DisconnectedAfterRetriesError",
    "DualMismatchError",
    "EltonMeasures",
    "EmptyInputError",
    "EmptySubsetError",
    "EnergyResult",
    "EnumerationCapExceededError",
    "FrostmanReport",
    "IndexOutOfRangeError",
    "InvalidMeasureError",
    "InvarianceResult",
    "KernelSpace",
    "MaxEnergyResult",
    "Measure",
    "MetricViolationError",
    "NegativeEntryError",
    "NegativeTypeCertificate",
    "NonFiniteEntryError",
    "NumericalBreakdownError",
    "ParseError",
    "PotentialProfile",
    "QuasiReport",
    "RdvError",
    "SchemaError",
    "SpaceDescriptor",
    "SubsetPair",
    "SuiteReport",
    "TooLargeError",
    "UniquenessViolatedError",
    "ValueInterval",
    "WolfReport",
    "average_interval",
    "chebyshev_limit_bounds",
    "chebyshev_n",
    "chebyshev_table",
    "circle",
    "converse_check",
    "dual_chebyshev_n",
    "dual_kernel",
    "elton_measures",
    "energy",
    "frostman_check",
    "generate",
    "hypercube",
    "inequality_chain",
    "interval_grid",
    "interval_hull",
    "invariant_measure",
    "load_report",
    "load_space",
    "load_space_file",
    "maximal_energy",
    "min_invariance_gap",
    "multiset_count",
    "negative_type_test",
    "point_cap",
    "potential_at",
    "profile",
    "q_lower_value",
    "q_value",
    "quasi_invariant_convergence",
    "random_graph",
    "rendezvous_n",
    "rendezvous_number",
    "report_to_csv",
    "run_suite",
    "run_suites",
    "save_report",
    "save_space",
    "space_to_document",
    "validate_kernel",
    "wiener_energy",
    "wolf_relations",
]
