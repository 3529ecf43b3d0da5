"""Pure states of 1-3 qubits and their packing into algebra pairs.

Amplitudes are stored in binary-ascending basis order (|000> first).  For
three qubits the eight amplitudes are named, in order,

    alpha0 alpha1 beta0 beta1 delta0 delta1 gamma0 gamma1
    (|000>  |001>  |010> |011> |100>  |101>  |110>  |111>)

and are packed into an octonion pair via four quaternions

    q1 = alpha0 + alpha1 i2        q3 = delta0 + delta1 i2
    q2 = beta0  + beta1* i2        q4 = gamma0 + gamma1* i2
    o1 = q1 + q2 i4                o2 = q3 + q4 i4

The conjugations on beta1 and gamma1 are required for the pair ratio to be
sensitive to entanglement across the first-qubit cut.  Two qubits pack the
same way without conjugations (q1 = alpha0 + alpha1 i2, q2 = beta0 +
beta1 i2); one qubit packs as the plain complex pair (alpha0, alpha1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .division_algebra import HyperComplex
from .errors import ContractViolationError, UnsupportedSizeError
from .tolerances import ABS_TOL, STATE_NORM_TOL

QUBIT_COUNTS = (1, 2, 3)


class PureState:
    """Normalized vector of 2**n complex amplitudes, n in {1, 2, 3}."""

    __slots__ = ("_n", "_amplitudes")

    def __init__(self, amplitudes) -> None:
        arr = np.array(amplitudes, dtype=complex)
        sizes = {2: 1, 4: 2, 8: 3}
        if arr.ndim != 1 or arr.shape[0] not in sizes:
            raise ContractViolationError(
                f"amplitude vector must have length 2, 4 or 8, got shape {arr.shape}"
            )
        norm_sq = float(np.sum(np.abs(arr) ** 2))
        if abs(norm_sq - 1.0) > STATE_NORM_TOL:
            raise ContractViolationError(
                f"state is not normalized: sum |amplitude|^2 = {norm_sq!r}"
            )
        arr.setflags(write=False)
        self._n = sizes[arr.shape[0]]
        self._amplitudes = arr

    @property
    def n(self) -> int:
        return self._n

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amplitudes

    def amplitude(self, *bits: int) -> complex:
        """Coefficient of the basis ket labelled by the given bits."""
        if len(bits) != self._n or any(b not in (0, 1) for b in bits):
            raise ContractViolationError(f"expected {self._n} bits, got {bits}")
        index = 0
        for b in bits:
            index = 2 * index + b
        return complex(self._amplitudes[index])

    def __repr__(self) -> str:
        return f"PureState({np.array2string(self._amplitudes, separator=', ')})"

    # -- named states --------------------------------------------------------

    @classmethod
    def basis(cls, label: str) -> "PureState":
        """Computational basis state from a bit string such as '010'."""
        if not label or any(ch not in "01" for ch in label) or len(label) > 3:
            raise ContractViolationError(f"bad basis label {label!r}")
        amps = np.zeros(2 ** len(label), dtype=complex)
        amps[int(label, 2)] = 1.0
        return cls(amps)

    @classmethod
    def ghz(cls) -> "PureState":
        amps = np.zeros(8, dtype=complex)
        amps[0] = amps[7] = 1.0 / math.sqrt(2.0)
        return cls(amps)

    @classmethod
    def w(cls) -> "PureState":
        amps = np.zeros(8, dtype=complex)
        amps[1] = amps[2] = amps[4] = 1.0 / math.sqrt(3.0)
        return cls(amps)

    @classmethod
    def bell00(cls) -> "PureState":
        amps = np.zeros(4, dtype=complex)
        amps[0] = amps[3] = 1.0 / math.sqrt(2.0)
        return cls(amps)


NAMED_STATES = {
    "ghz": PureState.ghz,
    "w": PureState.w,
    "bell00": PureState.bell00,
}


@dataclass(frozen=True)
class AlgebraPair:
    """Pair of same-level Cayley-Dickson numbers with unit combined norm."""

    first: HyperComplex
    second: HyperComplex

    def __post_init__(self) -> None:
        if self.first.level != self.second.level:
            raise ContractViolationError("pair members must share a level")
        total = self.first.norm_sq() + self.second.norm_sq()
        if abs(total - 1.0) > ABS_TOL:
            raise ContractViolationError(
                f"pair norms must sum to 1, got {total!r}"
            )

    @property
    def level(self) -> int:
        return self.first.level


# ---------------------------------------------------------------------------
# Packing
# ---------------------------------------------------------------------------

def pack_coeffs(amplitudes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Coefficient arrays (first, second) of the packed pair.

    Works on a single amplitude vector or a batch with the basis index as
    the trailing axis.  Length 8 applies the beta1/gamma1 conjugations;
    length 4 and 2 are the plain quaternion and complex packings.
    """
    a = np.asarray(amplitudes, dtype=complex)
    size = a.shape[-1]
    if size == 2:
        first = np.stack([a[..., 0].real, a[..., 0].imag], axis=-1)
        second = np.stack([a[..., 1].real, a[..., 1].imag], axis=-1)
    elif size == 4:
        first = np.stack(
            [a[..., 0].real, a[..., 0].imag, a[..., 1].real, a[..., 1].imag], axis=-1
        )
        second = np.stack(
            [a[..., 2].real, a[..., 2].imag, a[..., 3].real, a[..., 3].imag], axis=-1
        )
    elif size == 8:
        a0, a1, b0, b1 = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
        d0, d1, g0, g1 = a[..., 4], a[..., 5], a[..., 6], a[..., 7]
        first = np.stack(
            [a0.real, a0.imag, a1.real, a1.imag, b0.real, b1.imag, b1.real, b0.imag],
            axis=-1,
        )
        second = np.stack(
            [d0.real, d0.imag, d1.real, d1.imag, g0.real, g1.imag, g1.real, g0.imag],
            axis=-1,
        )
    else:
        raise ContractViolationError(f"cannot pack amplitude vector of length {size}")
    return first, second


def unpack_coeffs(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """Inverse of pack_coeffs; returns the complex amplitude array."""
    f = np.asarray(first, dtype=float)
    s = np.asarray(second, dtype=float)
    dim = f.shape[-1]
    if dim == 2:
        cols = [f[..., 0] + 1j * f[..., 1], s[..., 0] + 1j * s[..., 1]]
    elif dim == 4:
        cols = [
            f[..., 0] + 1j * f[..., 1],
            f[..., 2] + 1j * f[..., 3],
            s[..., 0] + 1j * s[..., 1],
            s[..., 2] + 1j * s[..., 3],
        ]
    elif dim == 8:
        cols = [
            f[..., 0] + 1j * f[..., 1],
            f[..., 2] + 1j * f[..., 3],
            f[..., 4] + 1j * f[..., 7],
            f[..., 6] + 1j * f[..., 5],
            s[..., 0] + 1j * s[..., 1],
            s[..., 2] + 1j * s[..., 3],
            s[..., 4] + 1j * s[..., 7],
            s[..., 6] + 1j * s[..., 5],
        ]
    else:
        raise ContractViolationError(f"cannot unpack coefficient vectors of length {dim}")
    return np.stack(cols, axis=-1)


def pack(state: PureState) -> AlgebraPair:
    """Pack a state into its complex/quaternion/octonion pair."""
    first, second = pack_coeffs(state.amplitudes)
    level = state.n
    return AlgebraPair(HyperComplex(level, first), HyperComplex(level, second))


def unpack(pair: AlgebraPair) -> PureState:
    """Recover the state whose packing is the given pair."""
    return PureState(unpack_coeffs(pair.first.coeffs, pair.second.coeffs))


# ---------------------------------------------------------------------------
# Construction and sampling
# ---------------------------------------------------------------------------

def tensor(a: PureState, b: PureState) -> PureState:
    """Tensor product in basis-label concatenation order."""
    if a.n + b.n > 3:
        raise UnsupportedSizeError(f"tensor product would have {a.n + b.n} qubits")
    return PureState(np.outer(a.amplitudes, b.amplitudes).reshape(-1))


def random_state(n: int, seed: int) -> PureState:
    """Haar-uniform random state: normalized i.i.d. complex Gaussians."""
    if n not in QUBIT_COUNTS:
        raise ContractViolationError(f"qubit count must be in {QUBIT_COUNTS}, got {n}")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(2 ** n) + 1j * rng.standard_normal(2 ** n)
    return PureState(z / np.linalg.norm(z))


def state_from_bloch(x: float, y: float, z: float) -> PureState:
    """Single-qubit state with the given Bloch vector (unit length)."""
    r = math.sqrt(x * x + y * y + z * z)
    if abs(r - 1.0) > 1e-9:
        raise ContractViolationError(f"Bloch vector must be unit length, |v| = {r!r}")
    theta = math.acos(max(-1.0, min(1.0, z / r)))
    phi = math.atan2(y, x)
    amps = np.array(
        [math.cos(theta / 2.0), math.sin(theta / 2.0) * complex(math.cos(phi), math.sin(phi))],
        dtype=complex,
    )
    return PureState(amps / np.linalg.norm(amps))


def reshape_matrix(state: PureState, cut: int) -> np.ndarray:
    """2x4 matrix of a 3-qubit state with the cut qubit as the row index.

    Columns run over the remaining two qubits in their original order.
    """
    if state.n != 3:
        raise ContractViolationError("reshape_matrix requires a 3-qubit state")
    cube = state.amplitudes.reshape(2, 2, 2)
    if cut == 1:
        return cube.reshape(2, 4)
    if cut == 2:
        return cube.transpose(1, 0, 2).reshape(2, 4)
    if cut == 3:
        return cube.transpose(2, 0, 1).reshape(2, 4)
    raise ContractViolationError(f"cut must be 1, 2 or 3, got {cut}")


def cut_state(state: PureState, cut: int) -> PureState:
    """3-qubit state with the cut qubit moved to the front."""
    return PureState(reshape_matrix(state, cut).reshape(-1))


# Column pairs of the six 2x2 minors of the reshaped matrix, ordered to match
# the bilinear separability conditions for cut 1:
# a0*g1 - d0*b1, a0*g0 - d0*b0, a0*d1 - d0*a1, a1*g1 - d1*b1, a1*g0 - d1*b0,
# b0*g1 - g0*b1.
_MINOR_PAIRS = ((0, 3), (0, 2), (0, 1), (1, 3), (1, 2), (2, 3))


def cut_minors(state: PureState, cut: int) -> np.ndarray:
    """The six 2x2 minors of reshape_matrix(state, cut), as complex values.

    All six vanish exactly when the cut qubit separates from the other two.
    """
    m = reshape_matrix(state, cut)
    return np.array(
        [m[0, j] * m[1, k] - m[0, k] * m[1, j] for j, k in _MINOR_PAIRS],
        dtype=complex,
    )


# ---------------------------------------------------------------------------
# Text format (shared with the CLI)
# ---------------------------------------------------------------------------

def parse_amplitudes(spec: str) -> np.ndarray:
    """Parse a state spec into a raw (possibly unnormalized) amplitude array.

    Accepted forms: named constants (ghz, w, bell00), basis labels such as
    |010> or |010⟩, '@path' reading the same grammar from a file, and
    whitespace-separated re,im pairs in basis order.
    """
    text = spec.strip()
    if not text:
        raise ValueError("empty state spec")
    if text.startswith("@"):
        path = Path(text[1:])
        try:
            text = path.read_text().strip()
        except OSError as exc:
            raise ValueError(f"cannot read state file {path}: {exc}") from exc
    lowered = text.lower()
    if lowered in NAMED_STATES:
        return NAMED_STATES[lowered]().amplitudes.copy()
    if text.startswith("|") and text[-1] in (">", "⟩"):
        label = text[1:-1]
        if not label or any(ch not in "01" for ch in label) or len(label) > 3:
            raise ValueError(f"bad basis label {text!r}")
        return PureState.basis(label).amplitudes.copy()
    tokens = text.split()
    values = []
    for token in tokens:
        parts = token.split(",")
        if len(parts) != 2:
            raise ValueError(f"bad amplitude token {token!r}, expected re,im")
        try:
            values.append(complex(float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise ValueError(f"bad amplitude token {token!r}: {exc}") from exc
    if len(values) not in (2, 4, 8):
        raise ValueError(
            f"expected 2, 4 or 8 amplitudes, got {len(values)}"
        )
    return np.array(values, dtype=complex)


def format_number(x: float) -> str:
    """Render a float at 12 significant digits (canonical document format)."""
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return f"{x:.12g}"


def format_amplitudes(amplitudes: np.ndarray) -> str:
    return " ".join(
        f"{format_number(z.real)},{format_number(z.imag)}" for z in amplitudes
    )
