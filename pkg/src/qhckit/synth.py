"""Synthesis of a single continuous gate from a Boolean truth table.

The construction handles totally symmetric functions: tables whose output
depends only on how many inputs are set.  Each input-weight class is mapped
to one computational basis state of the output register, the weight-ordered
output states are threaded into one cyclic orbit starting at the all-zero
state, and the cycle's principal logarithm supplies a Hermitian generator.
Driving ``exp(-i s H)`` with ``s`` equal to the number of asserted inputs
then reproduces the table on basis states, while non-integer ``s`` sweeps
the gate continuously between them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionError,
    InitialStateMismatch,
    InvalidOrbit,
    NonEmbeddable,
    NotSymmetric,
    ValidationError,
)
from .linalg import (
    SpectralDecomposition,
    cycle_spectrum,
    exp_from_spectrum,
    hermitian_generator,
)


def format_bits(bits: tuple[int, ...]) -> str:
    return "".join(str(b) for b in bits)


def label_to_index(label: str) -> int:
    """Basis index of a bit-string label, most significant bit first."""
    return int(label, 2)


def index_to_label(index: int, bits: int) -> str:
    """Bit-string label of a basis index, zero-padded to ``bits`` places."""
    return format(index, f"0{bits}b")


@dataclass(frozen=True)
class TruthTable:
    """Complete Boolean function on ``input_count`` bits.

    ``rows`` maps every input combination, as a tuple of 0/1 ints, to the
    output register's basis-state label, a string of ``output_qubits`` bits
    with the most significant bit first.
    """

    input_count: int
    output_qubits: int
    rows: dict[tuple[int, ...], str]

    def __post_init__(self) -> None:
        if self.input_count < 1:
            raise ValidationError(f"input count must be positive, got {self.input_count}")
        if self.output_qubits < 1:
            raise ValidationError(f"output qubit count must be positive, got {self.output_qubits}")
        expected = set(itertools.product((0, 1), repeat=self.input_count))
        for key in sorted(expected):
            if key not in self.rows:
                raise ValidationError(f"missing input row '{format_bits(key)}'")
        for key in self.rows:
            if key not in expected:
                raise ValidationError(f"unexpected input row {key!r} for {self.input_count} inputs")
        for key, label in sorted(self.rows.items()):
            if len(label) != self.output_qubits or set(label) - {"0", "1"}:
                raise ValidationError(
                    f"row '{format_bits(key)}' has bad output label {label!r}; "
                    f"expected {self.output_qubits} bits"
                )

    @property
    def dim(self) -> int:
        return 2**self.output_qubits


@dataclass(frozen=True)
class SymmetryProfile:
    """Whether a table is totally symmetric, and its per-weight outputs.

    ``weight_outputs[w]`` is the shared output label of all inputs with
    exactly ``w`` ones; it is None when the table is not symmetric.
    """

    is_symmetric: bool
    weight_outputs: tuple[str, ...] | None


@dataclass(frozen=True)
class CyclePermutation:
    """A permutation acting as one cyclic orbit anchored at index 0."""

    dim: int
    orbit: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.orbit or self.orbit[0] != 0:
            raise InvalidOrbit(f"orbit must start at index 0, got {self.orbit}")
        if len(set(self.orbit)) != len(self.orbit):
            raise InvalidOrbit(f"orbit {self.orbit} repeats an index")
        bad = [i for i in self.orbit if not 0 <= i < self.dim]
        if bad:
            raise InvalidOrbit(f"orbit indices {bad} outside [0, {self.dim})")

    @property
    def length(self) -> int:
        return len(self.orbit)

    def matrix(self) -> np.ndarray:
        """Dense permutation matrix: column ``orbit[j]`` maps to ``orbit[j+1]``."""
        m = np.eye(self.dim, dtype=complex)
        for index in self.orbit:
            m[index, index] = 0.0
        for step, index in enumerate(self.orbit):
            m[self.orbit[(step + 1) % self.length], index] = 1.0
        return m


@dataclass(frozen=True)
class QhcGate:
    """A synthesized continuous gate and the data it was built from."""

    cycle: CyclePermutation
    spectrum: SpectralDecomposition
    input_count: int

    @property
    def dim(self) -> int:
        return self.cycle.dim

    @property
    def length(self) -> int:
        return self.cycle.length

    def unitary(self, s: float) -> np.ndarray:
        """The gate's unitary at evolution parameter ``s``."""
        return exp_from_spectrum(self.spectrum, s)

    @property
    def generator(self) -> np.ndarray:
        """Hermitian matrix ``H`` with ``unitary(s) == exp(-i s H)``."""
        return hermitian_generator(self.spectrum)


def analyze_symmetry(table: TruthTable) -> SymmetryProfile:
    """Group rows by input weight and check each class agrees on its output."""
    by_weight: dict[int, set[str]] = {}
    for bits, label in table.rows.items():
        by_weight.setdefault(sum(bits), set()).add(label)
    if any(len(labels) != 1 for labels in by_weight.values()):
        return SymmetryProfile(is_symmetric=False, weight_outputs=None)
    outputs = tuple(by_weight[w].pop() for w in range(table.input_count + 1))
    return SymmetryProfile(is_symmetric=True, weight_outputs=outputs)


def find_cycle(profile: SymmetryProfile, output_qubits: int) -> CyclePermutation:
    """Shortest cyclic orbit through the weight-ordered output states.

    The orbit must start at the all-zero state, and the state for weight
    ``w`` must sit at orbit position ``w mod L``.  Candidate lengths are
    tried smallest first, so wrap-around reuse (e.g. the half adder's
    weight-2 output landing back near the start of a longer orbit than the
    distinct-output count alone would suggest) is only accepted when no
    shorter orbit works.
    """
    if not profile.is_symmetric:
        raise NotSymmetric("outputs differ within an input-weight class")
    assert profile.weight_outputs is not None
    labels = profile.weight_outputs
    dim = 2**output_qubits
    if label_to_index(labels[0]) != 0:
        raise InitialStateMismatch(
            f"weight-0 output must be the all-zero state, got '{labels[0]}'"
        )
    targets = [label_to_index(label) for label in labels]
    for length in range(1, min(len(targets), dim) + 1):
        orbit = targets[:length]
        if len(set(orbit)) != length:
            continue
        if all(targets[w] == orbit[w % length] for w in range(len(targets))):
            return CyclePermutation(dim=dim, orbit=tuple(orbit))
    raise NonEmbeddable(
        f"weight outputs {labels} do not trace a single cyclic orbit from 0"
    )


def synthesize(table: TruthTable) -> QhcGate:
    """Build the continuous gate realizing a symmetric truth table."""
    cycle = find_cycle(analyze_symmetry(table), table.output_qubits)
    spectrum = cycle_spectrum(cycle.orbit, cycle.dim)
    return QhcGate(cycle=cycle, spectrum=spectrum, input_count=table.input_count)


@dataclass(frozen=True)
class RowCheck:
    """Outcome of replaying one truth-table row through the gate."""

    inputs: tuple[int, ...]
    expected: str
    obtained: str
    deviation: float


@dataclass(frozen=True)
class VerificationReport:
    rows: tuple[RowCheck, ...]
    passed: bool
    max_deviation: float


def verify(gate: QhcGate, table: TruthTable, tolerance: float = 1e-9) -> VerificationReport:
    """Replay every table row through the gate's unitary at integer ``s``.

    For each row the all-zero state is evolved with ``s`` equal to the input
    weight; the result must match the expected basis state entrywise within
    ``tolerance``.
    """
    if gate.dim != table.dim:
        raise DimensionError(
            f"gate dimension {gate.dim} does not match table dimension {table.dim}"
        )
    checks = []
    worst = 0.0
    start = np.zeros(gate.dim, dtype=complex)
    start[0] = 1.0
    for bits, label in sorted(table.rows.items()):
        state = gate.unitary(float(sum(bits))) @ start
        target = np.zeros(gate.dim, dtype=complex)
        target[label_to_index(label)] = 1.0
        deviation = float(np.max(np.abs(state - target)))
        obtained = index_to_label(int(np.argmax(np.abs(state) ** 2)), table.output_qubits)
        checks.append(
            RowCheck(inputs=bits, expected=label, obtained=obtained, deviation=deviation)
        )
        worst = max(worst, deviation)
    passed = worst <= tolerance and all(c.obtained == c.expected for c in checks)
    return VerificationReport(rows=tuple(checks), passed=passed, max_deviation=worst)


def qubit_count(table: TruthTable) -> int:
    """Fewest output qubits whose basis can hold the table's distinct outputs.

    Equals ceil(log2 of the distinct-output count); a constant table needs
    zero qubits even though its labels may be written wider.
    """
    distinct = len(set(table.rows.values()))
    return (distinct - 1).bit_length()
