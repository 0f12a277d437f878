"""Polynomial arithmetic and the small dense solver behind coefficient fitting.

Coefficients are stored in ascending power order, so ``coeffs[k]`` multiplies
``t**k``. Everything here is an immutable value; functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

PIVOT_TOLERANCE = 1e-12


class SingularSystem(Exception):
    """Raised when elimination hits a pivot below tolerance.

    In this package that almost always means degenerate boundary conditions,
    e.g. a maneuver duration of zero.
    """


@dataclass(frozen=True)
class Polynomial:
    """Real polynomial in time, ascending coefficient order."""

    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t):
        """Evaluate at ``t`` (scalar or ndarray) by Horner's scheme."""
        acc = 0.0 if np.isscalar(t) else np.zeros_like(np.asarray(t, dtype=float))
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self, order: int = 1) -> "Polynomial":
        """Exact ``order``-th derivative; orders past the degree give zero."""
        if order < 0:
            raise ValueError(f"derivative order must be >= 0, got {order}")
        coeffs = self.coeffs
        for _ in range(order):
            if len(coeffs) == 1:
                coeffs = (0.0,)
                break
            coeffs = tuple(k * coeffs[k] for k in range(1, len(coeffs)))
        return Polynomial(coeffs)


@dataclass(frozen=True)
class LinearSystem:
    """Square dense system ``A x = b`` with A stored row-major."""

    matrix: tuple[tuple[float, ...], ...]
    rhs: tuple[float, ...]

    def __post_init__(self) -> None:
        n = len(self.rhs)
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise ValueError("matrix must be square and match rhs length")
        object.__setattr__(
            self, "matrix", tuple(tuple(float(v) for v in row) for row in self.matrix)
        )
        object.__setattr__(self, "rhs", tuple(float(v) for v in self.rhs))

    @property
    def dimension(self) -> int:
        return len(self.rhs)


def solve(system: LinearSystem) -> list[float]:
    """Solve the system by Gaussian elimination with partial pivoting.

    Sized for the coefficient systems in this package (dimension <= 8);
    no iterative refinement is applied. Raises :class:`SingularSystem`
    when the best available pivot falls below ``PIVOT_TOLERANCE``.
    """
    a = np.array(system.matrix, dtype=float)
    b = np.array(system.rhs, dtype=float)
    n = system.dimension
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) < PIVOT_TOLERANCE:
            raise SingularSystem(
                f"pivot {a[p, k]:.3e} below tolerance at column {k}; "
                "boundary conditions are degenerate"
            )
        if p != k:
            a[[k, p]] = a[[p, k]]
            b[[k, p]] = b[[p, k]]
        for i in range(k + 1, n):
            factor = a[i, k] / a[k, k]
            if factor != 0.0:
                a[i, k:] -= factor * a[k, k:]
                b[i] -= factor * b[k]
    x = np.zeros(n)
    for k in range(n - 1, -1, -1):
        x[k] = (b[k] - float(np.dot(a[k, k + 1 :], x[k + 1 :]))) / a[k, k]
    return [float(v) for v in x]
