"""Hopf-fibration geometry of 1-3 qubit pure states.

Pure states pack into pairs of complex numbers, quaternions or octonions;
the fibration base coordinates generalize the Bloch sphere and detect
separability, and the squared norm of the entanglement-sensitive
coordinates quantifies entanglement (1 for GHZ, 8/9 for W).
"""

from .division_algebra import (
    CYCLES,
    HyperComplex,
    PolarForm,
    conj,
    exp_imaginary,
    inverse,
    mul,
    polar,
    scalar_part,
    vector_part,
)
from .entanglement import (
    DensityMatrix2,
    EntanglementReport,
    bloch_density,
    classify,
    e_avg,
    e_hopf,
    minor_measure,
    partial_trace_keep,
    separability_2qubit,
    separability_conditions,
)
from .errors import ContractViolationError, SeparabilityError, UnsupportedSizeError
from .hopf_maps import (
    INFINITY,
    BasePoint,
    ChainStage,
    ExtendedValue,
    FiberChart,
    IteratedReport,
    fiber_chart,
    fiber_decompose,
    h1_value,
    hopf_base,
    hopf_inverse,
    is_infinite,
    iterated_analysis,
    state_from_chart,
    stereographic,
    stereographic_inverse,
)
from .qubit_states import (
    AlgebraPair,
    PureState,
    pack,
    random_state,
    reshape_matrix,
    state_from_bloch,
    tensor,
    unpack,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraPair",
    "BasePoint",
    "CYCLES",
    "ChainStage",
    "ContractViolationError",
    "DensityMatrix2",
    "EntanglementReport",
    "ExtendedValue",
    "FiberChart",
    "HyperComplex",
    "INFINITY",
    "IteratedReport",
    "PolarForm",
    "PureState",
    "SeparabilityError",
    "UnsupportedSizeError",
    "bloch_density",
    "classify",
    "conj",
    "e_avg",
    "e_hopf",
    "exp_imaginary",
    "fiber_chart",
    "fiber_decompose",
    "h1_value",
    "hopf_base",
    "hopf_inverse",
    "inverse",
    "is_infinite",
    "iterated_analysis",
    "minor_measure",
    "mul",
    "pack",
    "partial_trace_keep",
    "polar",
    "random_state",
    "reshape_matrix",
    "scalar_part",
    "separability_2qubit",
    "separability_conditions",
    "state_from_bloch",
    "state_from_chart",
    "stereographic",
    "stereographic_inverse",
    "tensor",
    "unpack",
    "vector_part",
]
