"""Finite quotient number systems and checks on their structure constants.

A ``FiniteHNS`` is an M-dimensional algebra given by an M x M x M tensor of
exact rationals: ``C[i][j][k]`` is the coefficient of basis element
``e_{k+1}`` in the product ``e_{i+1} e_{j+1}``.  Storage is 0-based; every
public operation speaks 1-based basis labels ``e_1 .. e_M`` so the emitted
tables line up with the usual presentation, with the unit at ``e_1``.

``build_quotient_system`` collapses the half-line convolution modulo M:
with n = i-1 and m = j-1, the product ``e_i e_j`` puts 1/2 on basis index
((n+m) mod M)+1 and 1/2 on ((|n-m|) mod M)+1, merging to 1 when the two
coincide.  The checker operations never assume the generated tables behave;
they scan exhaustively and report what actually holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, NamedTuple

HALF = Fraction(1, 2)

InvolutionChoice = Literal["identity", "reflection"]


def _as_tensor(dimension: int, constants) -> tuple:
    rows = tuple(constants)
    if len(rows) != dimension:
        raise ValueError(f"tensor has {len(rows)} rows, expected {dimension}")
    out = []
    for i, plane in enumerate(rows):
        plane = tuple(plane)
        if len(plane) != dimension:
            raise ValueError(f"row {i + 1} has {len(plane)} columns, expected {dimension}")
        new_plane = []
        for j, row in enumerate(plane):
            row = tuple(Fraction(v) for v in row)
            if len(row) != dimension:
                raise ValueError(
                    f"entry ({i + 1},{j + 1}) has {len(row)} coefficients, expected {dimension}"
                )
            new_plane.append(row)
        out.append(tuple(new_plane))
    return tuple(out)


@dataclass(frozen=True)
class FiniteHNS:
    """Dimension M plus the exact-rational structure tensor, unit label e_1."""

    dimension: int
    constants: tuple

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dimension}")
        object.__setattr__(self, "constants", _as_tensor(self.dimension, self.constants))

    def unit_row(self, j: int) -> tuple[Fraction, ...]:
        """Coefficient row of e_j itself: 1 at position j."""
        return tuple(Fraction(1) if k == j - 1 else Fraction(0) for k in range(self.dimension))

    def __repr__(self) -> str:
        return f"FiniteHNS(dimension={self.dimension})"


class ConditionWitness(NamedTuple):
    i: int
    j: int
    k: int
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the three structure-constant conditions, with witnesses."""

    positivity_holds: bool
    unit_diagonal_holds: bool
    adjoint_symmetry_holds: bool
    failure_witnesses: tuple[ConditionWitness, ...]


class LawWitness(NamedTuple):
    indices: tuple[int, ...]
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class LawReport:
    """Exhaustive unitality / commutativity / associativity scan results."""

    unital: bool
    commutative: bool
    associative: bool
    unit_witnesses: tuple[LawWitness, ...] = ()
    commutativity_witnesses: tuple[LawWitness, ...] = ()
    associativity_witnesses: tuple[LawWitness, ...] = ()

    @property
    def all_hold(self) -> bool:
        return self.unital and self.commutative and self.associative


def build_quotient_system(dimension: int) -> FiniteHNS:
    """Collapse the half-line convolution modulo ``dimension``."""
    if dimension < 1:
        raise ValueError(f"dimension must be >= 1, got {dimension}")
    M = dimension
    tensor = [[[Fraction(0)] * M for _ in range(M)] for _ in range(M)]
    for n in range(M):
        for m in range(M):
            row = tensor[n][m]
            row[(n + m) % M] += HALF
            row[abs(n - m) % M] += HALF
    return FiniteHNS(M, tensor)


def project_index(n: int, dimension: int) -> int:
    """Class of half-line index ``n`` modulo ``dimension``, as a 1-based label."""
    if n < 0:
        raise ValueError(f"half-line index must be >= 0, got {n}")
    if dimension < 1:
        raise ValueError(f"dimension must be >= 1, got {dimension}")
    return n % dimension + 1


def project_element(x, dimension: int):
    """Linear extension of ``project_index``: sum coefficients classwise.

    Returns a ``HypercomplexNumber`` bound to ``build_quotient_system(dimension)``.
    """
    from .hnum_arithmetic import HypercomplexNumber  # deferred: avoids circular import

    coeffs = [Fraction(0)] * dimension
    for n, c in x.coefficients.items():
        coeffs[project_index(n, dimension) - 1] += c
    return HypercomplexNumber(build_quotient_system(dimension), tuple(coeffs))


def _check_basis_index(i: int, dimension: int) -> None:
    if not 1 <= i <= dimension:
        raise ValueError(f"basis index {i} out of range 1..{dimension}")


def multiply_basis(sys: FiniteHNS, i: int, j: int) -> tuple[Fraction, ...]:
    """Coefficient row of the basis product e_i e_j."""
    _check_basis_index(i, sys.dimension)
    _check_basis_index(j, sys.dimension)
    return sys.constants[i - 1][j - 1]


def is_canonical(sys: FiniteHNS) -> bool:
    """True iff every basis product is a single basis element with coefficient in {-1, 0, +1}."""
    allowed = (Fraction(-1), Fraction(1))
    for plane in sys.constants:
        for row in plane:
            nonzero = [v for v in row if v]
            if len(nonzero) > 1:
                return False
            if nonzero and nonzero[0] not in allowed:
                return False
    return True


def involution_index(i: int, dimension: int, choice: InvolutionChoice) -> int:
    """Image of basis label ``i`` under the chosen star map.

    The construction fixes no star map on the finite systems, so both
    natural candidates are exposed: identity, and reflection of the
    underlying index class (n goes to -n mod M).
    """
    _check_basis_index(i, dimension)
    if choice == "identity":
        return i
    if choice == "reflection":
        return (dimension - (i - 1)) % dimension + 1
    raise ValueError(f"unknown involution {choice!r}; expected 'identity' or 'reflection'")


def check_structure_conditions(sys: FiniteHNS, choice: InvolutionChoice = "identity") -> ConditionReport:
    """Exhaustively evaluate positivity, the unit-diagonal bound, and adjoint symmetry.

    Findings are reported, never raised: the generated tables are known to
    violate adjoint symmetry, and making that observable is the point.
    """
    M = sys.dimension
    C = sys.constants
    star = [involution_index(i, M, choice) for i in range(1, M + 1)]

    witnesses: list[ConditionWitness] = []

    positivity = True
    for i in range(1, M + 1):
        for j in range(1, M + 1):
            for k in range(1, M + 1):
                v = C[i - 1][j - 1][k - 1]
                if v < 0:
                    positivity = False
                    witnesses.append(ConditionWitness(i, j, k, v, Fraction(0)))

    unit_diagonal = True
    for i in range(1, M + 1):
        v = C[i - 1][star[i - 1] - 1][0]
        if v <= 0:
            unit_diagonal = False
            witnesses.append(ConditionWitness(i, star[i - 1], 1, v, Fraction(0)))

    adjoint = True
    for i in range(1, M + 1):
        for j in range(1, M + 1):
            for k in range(1, M + 1):
                lhs = C[i - 1][j - 1][k - 1]
                rhs = C[k - 1][star[i - 1] - 1][j - 1]
                if lhs != rhs:
                    adjoint = False
                    witnesses.append(ConditionWitness(i, j, k, lhs, rhs))

    return ConditionReport(positivity, unit_diagonal, adjoint, tuple(witnesses))


def check_algebra_laws(sys: FiniteHNS) -> LawReport:
    """Exhaustive unitality, commutativity, and associativity scan.

    Associativity is checked through the tensor identity
    sum_r C[i][j][r] C[r][k][s] = sum_r C[j][k][r] C[i][r][s] for all s.
    """
    M = sys.dimension
    C = sys.constants

    unit_witnesses: list[LawWitness] = []
    for j in range(1, M + 1):
        expected = sys.unit_row(j)
        for k in range(1, M + 1):
            got = C[0][j - 1][k - 1]
            if got != expected[k - 1]:
                unit_witnesses.append(LawWitness((1, j, k), got, expected[k - 1]))
            got = C[j - 1][0][k - 1]
            if got != expected[k - 1]:
                unit_witnesses.append(LawWitness((j, 1, k), got, expected[k - 1]))

    comm_witnesses: list[LawWitness] = []
    for i in range(1, M + 1):
        for j in range(i + 1, M + 1):
            for k in range(1, M + 1):
                lhs = C[i - 1][j - 1][k - 1]
                rhs = C[j - 1][i - 1][k - 1]
                if lhs != rhs:
                    comm_witnesses.append(LawWitness((i, j, k), lhs, rhs))

    assoc_witnesses: list[LawWitness] = []
    for i in range(M):
        for j in range(M):
            for k in range(M):
                for s in range(M):
                    lhs = sum(C[i][j][r] * C[r][k][s] for r in range(M))
                    rhs = sum(C[j][k][r] * C[i][r][s] for r in range(M))
                    if lhs != rhs:
                        assoc_witnesses.append(
                            LawWitness((i + 1, j + 1, k + 1, s + 1), lhs, rhs)
                        )

    return LawReport(
        unital=not unit_witnesses,
        commutative=not comm_witnesses,
        associative=not assoc_witnesses,
        unit_witnesses=tuple(unit_witnesses),
        commutativity_witnesses=tuple(comm_witnesses),
        associativity_witnesses=tuple(assoc_witnesses),
    )
