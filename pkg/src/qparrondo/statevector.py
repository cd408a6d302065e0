"""Dense complex statevector storage and gate kernels for small registers.

Bit-order convention used throughout the package: qubit indices are 1-based
and qubit 1 is the *most significant* bit of a basis label, so for three
qubits the label "110" is basis index 6.  This makes a state written
|q1 q2 q3> read left to right in both math and code.

States are treated as immutable: every gate application returns a new,
re-validated StateVector.  There is no circuit IR here beyond what the
wiring module provides; kernels act directly on basis indices.

Capacity is capped at MAX_QUBITS = 24 (about 256 MiB of amplitudes), which
comfortably covers every register this package needs.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tolerances import STRUCTURAL_TOL

MAX_QUBITS = 24


@dataclass(frozen=True)
class StateVector:
    """A normalized pure state over ``num_qubits`` qubits.

    Invariants (enforced at construction): the amplitude array has length
    ``2**num_qubits`` and unit norm within STRUCTURAL_TOL.
    """

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        n = self.num_qubits
        _check_register_size(n)
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (1 << n,):
            raise ValueError(
                f"amplitude array has shape {amps.shape}, expected ({1 << n},) for {n} qubits"
            )
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > STRUCTURAL_TOL:
            raise ValueError(f"state is not normalized: |psi|^2 = {norm_sq!r}")
        amps = amps.copy()
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "num_qubits", int(n))

    @property
    def dim(self) -> int:
        return 1 << self.num_qubits


def check_unitary2(u: np.ndarray) -> np.ndarray:
    """Validate a 2x2 unitary with |det| = 1; returns it as a complex array."""
    m = np.asarray(u, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    if not np.allclose(m.conj().T @ m, np.eye(2), atol=STRUCTURAL_TOL, rtol=0.0):
        raise ValueError("matrix is not unitary within tolerance")
    if abs(abs(np.linalg.det(m)) - 1.0) > STRUCTURAL_TOL:
        raise ValueError("matrix determinant does not have unit modulus")
    return m


def _check_register_size(num_qubits: int) -> None:
    if not isinstance(num_qubits, (int, np.integer)) or num_qubits < 1:
        raise ValueError(f"num_qubits must be a positive integer, got {num_qubits!r}")
    if num_qubits > MAX_QUBITS:
        raise ValueError(f"num_qubits={num_qubits} exceeds the {MAX_QUBITS}-qubit capacity cap")


def make_basis_state(num_qubits: int, label: str) -> StateVector:
    """Computational basis state |label>, with label[0] the qubit-1 (MSB) bit."""
    _check_register_size(num_qubits)
    if len(label) != num_qubits:
        raise ValueError(f"label {label!r} has length {len(label)}, expected {num_qubits}")
    if any(ch not in "01" for ch in label):
        raise ValueError(f"label {label!r} must contain only '0' and '1'")
    amps = np.zeros(1 << num_qubits, dtype=complex)
    amps[int(label, 2)] = 1.0
    return StateVector(num_qubits, amps)


def make_ghz(num_qubits: int) -> StateVector:
    """Maximally entangled state (|00...0> + |11...1>) / sqrt(2)."""
    _check_register_size(num_qubits)
    amps = np.zeros(1 << num_qubits, dtype=complex)
    amps[0] = amps[-1] = 1.0 / np.sqrt(2.0)
    return StateVector(num_qubits, amps)


def _check_qubit_index(num_qubits: int, qubit: int, name: str) -> None:
    if not 1 <= qubit <= num_qubits:
        raise ValueError(f"{name}={qubit} out of range for a {num_qubits}-qubit state")


def _pair_indices(num_qubits: int, target: int) -> tuple[np.ndarray, np.ndarray]:
    """Basis-index pairs (i0, i1) differing only in the target bit (i0 has 0)."""
    bit = 1 << (num_qubits - target)
    half = np.arange(1 << (num_qubits - 1), dtype=np.int64)
    low = half & (bit - 1)
    i0 = ((half ^ low) << 1) | low
    return i0, i0 | bit


def apply_single_qubit(state: StateVector, target: int, u: np.ndarray) -> StateVector:
    """Apply a 2x2 unitary to one qubit; returns a new state."""
    _check_qubit_index(state.num_qubits, target, "target")
    m = check_unitary2(u)
    i0, i1 = _pair_indices(state.num_qubits, target)
    a = state.amplitudes[i0]
    b = state.amplitudes[i1]
    out = np.empty(state.dim, dtype=complex)
    out[i0] = m[0, 0] * a + m[0, 1] * b
    out[i1] = m[1, 0] * a + m[1, 1] * b
    return StateVector(state.num_qubits, out)


def apply_two_controlled_multiplexed(
    state: StateVector,
    control_hi: int,
    control_lo: int,
    target: int,
    branch_units: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray],
) -> StateVector:
    """Apply one of four 2x2 unitaries to the target, selected by the controls.

    Branch selection: (control_hi, control_lo) bits (0,0) pick branch_units[0],
    (0,1) -> [1], (1,0) -> [2], (1,1) -> [3].  Control bits are never altered.
    """
    n = state.num_qubits
    for name, q in (("control_hi", control_hi), ("control_lo", control_lo), ("target", target)):
        _check_qubit_index(n, q, name)
    if len({control_hi, control_lo, target}) != 3:
        raise ValueError(
            f"control/target qubits must be distinct, got ({control_hi}, {control_lo}, {target})"
        )
    if len(branch_units) != 4:
        raise ValueError(f"expected 4 branch unitaries, got {len(branch_units)}")
    mats = [check_unitary2(u) for u in branch_units]

    p_hi = n - control_hi
    p_lo = n - control_lo
    i0, i1 = _pair_indices(n, target)
    branch = (((i0 >> p_hi) & 1) << 1) | ((i0 >> p_lo) & 1)
    out = state.amplitudes.copy()
    for k, m in enumerate(mats):
        sel = branch == k
        j0 = i0[sel]
        j1 = i1[sel]
        a = state.amplitudes[j0]
        b = state.amplitudes[j1]
        out[j0] = m[0, 0] * a + m[0, 1] * b
        out[j1] = m[1, 0] * a + m[1, 1] * b
    return StateVector(n, out)
