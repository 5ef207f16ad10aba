"""Dense complex linear algebra for small Hilbert spaces.

The centerpiece is the exact eigensystem of a cycle permutation: the matrix
that cyclically shifts a chosen orbit of basis indices and fixes the rest.
Its eigenvectors are discrete Fourier vectors supported on the orbit, so the
spectrum is written down directly instead of going through a general-purpose
eigensolver, and the eigenangles land on the principal branch (-pi, pi] by
construction.  From that spectrum the one-parameter unitary family
``U(s) = exp(-i s H)`` and its Hermitian generator ``H`` follow in closed
form.

Everything here is a pure function over immutable values; results can be
shared across threads freely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionError, InvalidOrbit, InvalidParameter


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigensystem of a permutation acting as one cyclic orbit.

    ``vectors`` holds one orthonormal eigenvector per column; column ``j``
    belongs to eigenangle ``angles[j]``, so the decomposed matrix is
    ``vectors @ diag(exp(i * angles)) @ vectors.conj().T``.  ``fixed_indices``
    lists the basis states the permutation leaves untouched; each appears as
    a standard-basis column with angle exactly 0.
    """

    dim: int
    angles: np.ndarray
    vectors: np.ndarray
    fixed_indices: tuple[int, ...]

    def __post_init__(self) -> None:
        # Shared, long-lived spectral data must never be mutated in place.
        self.angles.setflags(write=False)
        self.vectors.setflags(write=False)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of two square matrices of equal dimension."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"left operand is not square: shape {a.shape}")
    if b.shape != a.shape:
        raise DimensionError(f"operand shapes differ: {a.shape} vs {b.shape}")
    return a @ b


def adjoint(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose; an exact involution."""
    return np.asarray(a).conj().T.copy()


def unitarity_defect(a: np.ndarray) -> float:
    """Largest entry of ``|a.H a - I|``; zero exactly when ``a`` is unitary."""
    a = np.asarray(a)
    gram = a.conj().T @ a
    return float(np.max(np.abs(gram - np.eye(gram.shape[0]))))


def cycle_spectrum(orbit: Sequence[int], dim: int) -> SpectralDecomposition:
    """Exact eigensystem of the permutation that cyclically shifts ``orbit``.

    The permutation sends ``orbit[j]`` to ``orbit[j + 1]`` (wrapping at the
    end) and fixes every other index.  On an orbit of length L the
    eigenvalues are the L-th roots of unity; their angles ``2*pi*j/L`` are
    reduced to (-pi, pi], with the eigenvalue -1 assigned +pi.  Off-orbit
    indices contribute angle 0 with standard-basis eigenvectors.
    """
    if dim < 1:
        raise InvalidOrbit(f"dimension must be positive, got {dim}")
    orbit = tuple(int(i) for i in orbit)
    if not orbit:
        raise InvalidOrbit("orbit is empty")
    if len(set(orbit)) != len(orbit):
        raise InvalidOrbit(f"orbit {orbit} repeats an index")
    out_of_range = [i for i in orbit if not 0 <= i < dim]
    if out_of_range:
        raise InvalidOrbit(f"orbit indices {out_of_range} outside [0, {dim})")

    length = len(orbit)
    modes = np.arange(length)
    # Signed numerator keeps the wrapped angles exactly representable
    # (e.g. 0, pi/2, pi, -pi/2 for a 4-cycle).
    signed = np.where(2 * modes > length, modes - length, modes)
    angles = np.zeros(dim)
    angles[:length] = 2.0 * np.pi * signed / length

    vectors = np.zeros((dim, dim), dtype=complex)
    steps = np.arange(length)
    vectors[np.array(orbit)[:, None], modes[None, :]] = np.exp(
        -2j * np.pi * np.outer(steps, modes) / length
    ) / math.sqrt(length)

    fixed = tuple(i for i in range(dim) if i not in set(orbit))
    for column, index in enumerate(fixed, start=length):
        vectors[index, column] = 1.0
    return SpectralDecomposition(dim=dim, angles=angles, vectors=vectors, fixed_indices=fixed)


def exp_from_spectrum(spectrum: SpectralDecomposition, s: float) -> np.ndarray:
    """Evaluate the one-parameter unitary family ``U(s)`` of a spectrum.

    ``U(s)`` applies the phase ``exp(i * s * angle)`` to each eigenvector, so
    ``U(0)`` is the identity, ``U(1)`` is the decomposed permutation itself,
    and the family obeys the group law ``U(s1) @ U(s2) == U(s1 + s2)``.
    """
    s = float(s)
    if not math.isfinite(s):
        raise InvalidParameter(f"evolution parameter must be finite, got {s}")
    phases = np.exp(1j * s * spectrum.angles)
    return (spectrum.vectors * phases) @ spectrum.vectors.conj().T


def hermitian_generator(spectrum: SpectralDecomposition) -> np.ndarray:
    """Hermitian ``H`` with ``exp_from_spectrum(spectrum, s) == exp(-i s H)``.

    ``H`` weights each eigenvector by minus its eigenangle; it equals i times
    the principal logarithm of the decomposed permutation.
    """
    return (spectrum.vectors * -spectrum.angles) @ spectrum.vectors.conj().T
