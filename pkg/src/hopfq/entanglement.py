"""Entanglement measures, partial traces and separability classification.

The per-cut measure E is the squared norm of the entanglement-sensitive
base coordinates of the fibration with the cut qubit in the base role; it
equals 4 det(rho) of the reduced single-qubit density matrix and vanishes
exactly on states separable across that cut.  GHZ gives E = 1 on every
cut, W gives E = 8/9.

The minor-sum measure sums |2x2 minor|^2 of the reshaped amplitude matrix
over all ordered column pairs and all three cuts; with normalization 2/3
it coincides with the average of E over the cuts (Cauchy-Binet: det of a
2x4 Gram matrix is the sum of its squared minors).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContractViolationError
from .hopf_maps import BasePoint, base_entanglement, hopf_base
from .qubit_states import PureState, cut_minors, cut_state, reshape_matrix
from .tolerances import ABS_TOL, SEPARABILITY_TOL

#: Normalization of the minor-sum measure, fixed so that it equals the
#: average of the per-cut E values for every state.
MINOR_SUM_NORMALIZATION = 2.0 / 3.0

CUTS = (1, 2, 3)


class DensityMatrix2:
    """Hermitian, trace-1, positive-semidefinite 2x2 matrix."""

    __slots__ = ("_matrix",)

    def __init__(self, matrix) -> None:
        m = np.array(matrix, dtype=complex)
        if m.shape != (2, 2):
            raise ContractViolationError(f"expected a 2x2 matrix, got shape {m.shape}")
        if np.abs(m - m.conj().T).max() > ABS_TOL:
            raise ContractViolationError("matrix is not Hermitian")
        if abs(m[0, 0] + m[1, 1] - 1.0) > ABS_TOL:
            raise ContractViolationError("matrix trace must be 1")
        det = (m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]).real
        if det < -ABS_TOL:
            raise ContractViolationError(f"matrix determinant {det!r} is negative")
        m.setflags(write=False)
        self._matrix = m

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def det(self) -> float:
        m = self._matrix
        return float((m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]).real)

    def bloch(self) -> tuple[float, float, float]:
        """Bloch vector (x, y, z) with rho = (1 + x sx + y sy + z sz)/2."""
        m = self._matrix
        return (
            float(2.0 * m[0, 1].real),
            float(-2.0 * m[0, 1].imag),
            float((m[0, 0] - m[1, 1]).real),
        )

    def __repr__(self) -> str:
        return f"DensityMatrix2({np.array2string(self._matrix, separator=', ')})"


def partial_trace_keep(state: PureState, keep: int) -> DensityMatrix2:
    """Reduced density matrix of one qubit of a 3-qubit state."""
    m = reshape_matrix(state, keep)
    return DensityMatrix2(m @ m.conj().T)


def bloch_density(base: BasePoint) -> DensityMatrix2:
    """Density matrix read off a base point's Bloch coordinates.

    Uses (X_1, X_2, X_last); for a base point computed from a state this
    equals the partial trace keeping the packed-first qubit.
    """
    x, y = base.coords[0], base.coords[1]
    z = base.coords[-1]
    return DensityMatrix2(
        0.5 * np.array([[1.0 + z, x - 1j * y], [x + 1j * y, 1.0 - z]])
    )


# ---------------------------------------------------------------------------
# Measures
# ---------------------------------------------------------------------------

def e_hopf(state: PureState, cut: int) -> float:
    """Per-cut entanglement E in [0, 1] of a 3-qubit state."""
    return base_entanglement(hopf_base(cut_state(state, cut)))


def e_avg(state: PureState) -> float:
    """Mean of e_hopf over the three cuts."""
    values = [e_hopf(state, cut) for cut in CUTS]
    return float(np.mean(values))


def minor_measure(state: PureState) -> float:
    """Minor-sum entanglement measure, equal to e_avg by construction.

    Sums the squared moduli of the 2x2 minors of the cut-reshaped
    amplitude matrix over all ordered column pairs (each unordered minor
    counted twice) and over the three cuts, scaled by
    MINOR_SUM_NORMALIZATION.
    """
    total = 0.0
    for cut in CUTS:
        minors = cut_minors(state, cut)
        total += 2.0 * float(np.sum(np.abs(minors) ** 2))
    return MINOR_SUM_NORMALIZATION * total


def separability_conditions(state: PureState, cut: int) -> np.ndarray:
    """The six bilinear residuals |minor| for the given cut (all < tol
    exactly when the cut qubit separates)."""
    return np.abs(cut_minors(state, cut))


def separability_2qubit(state: PureState) -> float:
    """|alpha0*beta1 - alpha1*beta0| of a 2-qubit state; 0 iff separable."""
    if state.n != 2:
        raise ContractViolationError("separability_2qubit expects a 2-qubit state")
    a = state.amplitudes
    return float(abs(a[0] * a[3] - a[1] * a[2]))


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

FULLY_SEPARABLE = "fully-separable"
ENTANGLED = "entangled"


def biseparable(cut: int) -> str:
    return f"biseparable(cut {cut})"


@dataclass(frozen=True)
class EntanglementReport:
    """Per-cut E values, averaged measures and separability class."""

    e_per_cut: tuple[float, float, float]
    e_avg: float
    minor_measure: float
    classification: str
    residuals_per_cut: tuple[tuple[float, ...], ...]


def classify(state: PureState, tol: float = SEPARABILITY_TOL) -> EntanglementReport:
    """Full entanglement report for a 3-qubit state.

    fully-separable when every cut's residuals pass, biseparable(cut k)
    when exactly the k-th cut passes, entangled otherwise.
    """
    if state.n != 3:
        raise ContractViolationError("classify expects a 3-qubit state")
    residuals = tuple(
        tuple(float(r) for r in separability_conditions(state, cut)) for cut in CUTS
    )
    passes = [max(res) <= tol for res in residuals]
    if all(passes):
        label = FULLY_SEPARABLE
    elif sum(passes) == 1:
        label = biseparable(CUTS[passes.index(True)])
    else:
        label = ENTANGLED
    per_cut = tuple(e_hopf(state, cut) for cut in CUTS)
    return EntanglementReport(
        e_per_cut=per_cut,
        e_avg=float(np.mean(per_cut)),
        minor_measure=minor_measure(state),
        classification=label,
        residuals_per_cut=residuals,
    )
