"""Brute-force permutation isomorphism and automorphism search.

Only unit-fixing basis relabelings are considered: a permutation p of the
labels 1..M with p(1) = 1 such that relabeling one tensor reproduces the
other exactly.  Dimensions are capped (default 8) since the search is a
plain factorial scan; that is ample for relating halved systems to directly
built ones.

Permutations are tuples of length M with 1-based images: p[i-1] is the
image of label i, so the identity is (1, 2, ..., M).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .finite_systems import FiniteHNS

Permutation = tuple[int, ...]


class CapacityError(ValueError):
    """Search dimension exceeds the configured cap."""


def _check_cap(dimension: int, cap: int) -> None:
    if dimension > cap:
        raise CapacityError(
            f"dimension {dimension} exceeds the search cap {cap}; "
            "raise the cap explicitly to force the factorial scan"
        )


def _check_permutation(perm: Permutation, dimension: int) -> None:
    if sorted(perm) != list(range(1, dimension + 1)):
        raise ValueError(f"{perm!r} is not a permutation of 1..{dimension}")


def relabel_system(sys: FiniteHNS, perm: Permutation) -> FiniteHNS:
    """Relabel basis indices: new tensor has C'[p(i)][p(j)][p(k)] = C[i][j][k]."""
    M = sys.dimension
    _check_permutation(perm, M)
    C = sys.constants
    out = [[[Fraction(0)] * M for _ in range(M)] for _ in range(M)]
    for i in range(M):
        for j in range(M):
            row = C[i][j]
            target = out[perm[i] - 1][perm[j] - 1]
            for k in range(M):
                target[perm[k] - 1] = row[k]
    return FiniteHNS(M, out)


def _preserves(a: FiniteHNS, b: FiniteHNS, perm: Permutation) -> bool:
    Ca, Cb = a.constants, b.constants
    M = a.dimension
    for i in range(M):
        pi = perm[i] - 1
        for j in range(M):
            pj = perm[j] - 1
            row, target = Ca[i][j], Cb[pi][pj]
            for k in range(M):
                if row[k] != target[perm[k] - 1]:
                    return False
    return True


def _unit_fixing_permutations(M: int):
    # itertools yields lexicographic order for sorted input, so the first
    # hit is automatically the lexicographically smallest permutation
    for rest in permutations(range(2, M + 1)):
        yield (1,) + rest


def find_permutation_isomorphism(
    a: FiniteHNS, b: FiniteHNS, cap: int = 8
) -> Permutation | None:
    """Lexicographically smallest unit-fixing relabeling of ``a`` onto ``b``, if any."""
    if a.dimension != b.dimension:
        raise ValueError(f"dimension mismatch: {a.dimension} vs {b.dimension}")
    _check_cap(a.dimension, cap)
    for perm in _unit_fixing_permutations(a.dimension):
        if _preserves(a, b, perm):
            if relabel_system(a, perm) != b:  # paranoid re-check of the fast scan
                continue
            return perm
    return None


def automorphism_group(sys: FiniteHNS, cap: int = 8) -> list[Permutation]:
    """All unit-fixing self-relabelings, in lexicographic order."""
    _check_cap(sys.dimension, cap)
    return [perm for perm in _unit_fixing_permutations(sys.dimension) if _preserves(sys, sys, perm)]
