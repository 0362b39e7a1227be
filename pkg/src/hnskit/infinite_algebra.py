"""Convolution algebra of the integers and its reflection-folded half-line.

Two sparse element types live here: formal rational sums over signed
integer indices (``ZElement``) and over nonnegative indices
(``GammaElement``).  Convolving deltas on the signed line adds indices;
after folding by the reflection n <-> -n, the surviving product rule on
the half-line is the cosine-type rule

    delta_n * delta_m  =  1/2 (delta_{n+m} + delta_{|n-m|})

which is the generator identity everything downstream quotients from.
All coefficients are exact ``Fraction`` values; no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping


def _canonical(items, *, index_check=None) -> dict[int, Fraction]:
    # canonical sparse form: exact rationals, no stored zeros
    out: dict[int, Fraction] = {}
    for n, c in items:
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError(f"index {n!r} is not an integer")
        if index_check is not None:
            index_check(n)
        c = Fraction(c)
        if c:
            out[n] = c
    return out


class ZElement:
    """Finitely supported rational formal sum over signed integer indices."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Mapping[int, Fraction | int] | None = None):
        items = coefficients.items() if coefficients else ()
        self._coeffs = _canonical(items)

    @property
    def coefficients(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self._coeffs.get(n, Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        body = ", ".join(f"{n}: {c}" for n, c in sorted(self._coeffs.items()))
        return f"ZElement({{{body}}})"


class GammaElement:
    """Finitely supported rational formal sum over nonnegative integer indices."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Mapping[int, Fraction | int] | None = None):
        items = coefficients.items() if coefficients else ()
        self._coeffs = _canonical(items, index_check=_require_nonnegative)

    @property
    def coefficients(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self._coeffs.get(n, Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GammaElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        body = ", ".join(f"{n}: {c}" for n, c in sorted(self._coeffs.items()))
        return f"GammaElement({{{body}}})"


def _require_nonnegative(n: int) -> None:
    if n < 0:
        raise ValueError(f"negative index {n} not allowed on the folded half-line")


def z_delta(n: int) -> ZElement:
    """Basis element: coefficient 1 at signed index ``n``."""
    return ZElement({n: 1})


def z_convolve(a: ZElement, b: ZElement) -> ZElement:
    """Bilinear extension of delta_n * delta_m = delta_{n+m}."""
    out: dict[int, Fraction] = {}
    for n, cn in a.coefficients.items():
        for m, cm in b.coefficients.items():
            key = n + m
            out[key] = out.get(key, Fraction(0)) + cn * cm
    return ZElement(out)


def z_involute(a: ZElement) -> ZElement:
    """Reflection involution: the coefficient at n moves to -n."""
    return ZElement({-n: c for n, c in a.coefficients.items()})


def symmetrize(a: ZElement) -> ZElement:
    """Average of an element with its reflection; the result is reflection-fixed."""
    half = Fraction(1, 2)
    out: dict[int, Fraction] = {}
    for n, c in a.coefficients.items():
        out[n] = out.get(n, Fraction(0)) + half * c
        out[-n] = out.get(-n, Fraction(0)) + half * c
    return ZElement(out)


def fold(a: ZElement) -> GammaElement:
    """Push a reflection-invariant element down to the half-line.

    The coefficient at n > 0 becomes a[n] + a[-n]; index 0 is kept as is.
    Rejects elements that are not fixed by ``z_involute`` rather than
    symmetrizing silently; compose with ``symmetrize`` first if needed.
    """
    coeffs = a.coefficients
    if z_involute(a) != a:
        raise ValueError("fold requires a reflection-invariant element")
    out: dict[int, Fraction] = {}
    for n, c in coeffs.items():
        key = abs(n)  # n and -n land on the same key; 0 appears only once
        out[key] = out.get(key, Fraction(0)) + c
    return GammaElement(out)


def gamma_delta(n: int) -> GammaElement:
    """Basis element of the half-line: coefficient 1 at index ``n`` >= 0."""
    if n < 0:
        raise ValueError(f"negative index {n} not allowed on the folded half-line")
    return GammaElement({n: 1})


def gamma_convolve(a: GammaElement, b: GammaElement) -> GammaElement:
    """Bilinear extension of delta_n * delta_m = 1/2(delta_{n+m} + delta_{|n-m|}).

    When n + m and |n - m| coincide (only possible for n = 0 or m = 0)
    the two halves accumulate to a single coefficient 1.
    """
    half = Fraction(1, 2)
    out: dict[int, Fraction] = {}
    for n, cn in a.coefficients.items():
        for m, cm in b.coefficients.items():
            w = half * cn * cm
            for key in (n + m, abs(n - m)):
                out[key] = out.get(key, Fraction(0)) + w
    return GammaElement(out)
