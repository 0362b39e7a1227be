"""Arithmetic on general elements of a finite system.

A ``HypercomplexNumber`` is an exact-rational coefficient vector bound to a
``FiniteHNS``.  Multiplication is the bilinear extension of the structure
tensor, with the left-regular matrix representation kept alongside as an
independent oracle for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .finite_systems import FiniteHNS


@dataclass(frozen=True)
class HypercomplexNumber:
    system: FiniteHNS
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != self.system.dimension:
            raise ValueError(
                f"{len(coeffs)} coefficients for a dimension-{self.system.dimension} system"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def basis(cls, system: FiniteHNS, k: int) -> "HypercomplexNumber":
        """The basis element e_k (1-based)."""
        if not 1 <= k <= system.dimension:
            raise ValueError(f"basis index {k} out of range 1..{system.dimension}")
        return cls(system, system.unit_row(k))

    @classmethod
    def zero(cls, system: FiniteHNS) -> "HypercomplexNumber":
        return cls(system, (Fraction(0),) * system.dimension)

    def __repr__(self) -> str:
        return f"HypercomplexNumber({self.coeffs})"


def _require_same_system(x: HypercomplexNumber, y: HypercomplexNumber) -> None:
    if x.system != y.system:
        raise ValueError("operands belong to different systems")


def hnum_add(x: HypercomplexNumber, y: HypercomplexNumber) -> HypercomplexNumber:
    """Componentwise sum; both operands must share the system."""
    _require_same_system(x, y)
    return HypercomplexNumber(x.system, tuple(a + b for a, b in zip(x.coeffs, y.coeffs)))


def hnum_multiply(x: HypercomplexNumber, y: HypercomplexNumber) -> HypercomplexNumber:
    """Bilinear product: coefficient k of the result is sum_ij x_i y_j C[i][j][k]."""
    _require_same_system(x, y)
    M = x.system.dimension
    C = x.system.constants
    out = [Fraction(0)] * M
    for i in range(M):
        xi = x.coeffs[i]
        if not xi:
            continue
        for j in range(M):
            yj = y.coeffs[j]
            if not yj:
                continue
            w = xi * yj
            row = C[i][j]
            for k in range(M):
                if row[k]:
                    out[k] += w * row[k]
    return HypercomplexNumber(x.system, tuple(out))


def left_regular_matrix(x: HypercomplexNumber) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix of y -> x*y on coefficient vectors; column j is x e_{j+1}."""
    M = x.system.dimension
    cols = [hnum_multiply(x, HypercomplexNumber.basis(x.system, j + 1)).coeffs for j in range(M)]
    return tuple(tuple(cols[c][r] for c in range(M)) for r in range(M))
