"""Basis partitions, congruence checking, and quotients to lower dimension.

Even-dimensional systems built by ``build_quotient_system`` carry an
off-unit basis element whose square is the unit; pairing each ``e_i`` with
``e_{i+M/2}`` then collapses the table to half dimension.  The quotient is
computed by classwise summation over each class's minimal representatives,
which reproduces the directly built lower-dimensional table for every
divisor-induced partition.

``verify_congruence`` is the honest well-definedness check: classwise sums
must not depend on the chosen representatives.  That property genuinely
fails for divisor partitions with 2 < d < M (first case: dimension 6,
three classes), so ``quotient_system`` gates on it by default but can be
told to proceed with the canonical minimal-representative rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .finite_systems import FiniteHNS, multiply_basis


@dataclass(frozen=True)
class BasisPartition:
    """Disjoint nonempty classes of basis labels covering 1..M; unit class first."""

    classes: tuple[frozenset[int], ...]

    def __post_init__(self):
        classes = tuple(frozenset(c) for c in self.classes)
        object.__setattr__(self, "classes", classes)
        if not classes or any(not c for c in classes):
            raise ValueError("partition classes must be nonempty")
        seen: set[int] = set()
        for c in classes:
            if seen & c:
                raise ValueError(f"classes overlap on {sorted(seen & c)}")
            seen |= c
        m = len(seen)
        if seen != set(range(1, m + 1)):
            raise ValueError(f"classes must cover exactly 1..{m}, got {sorted(seen)}")
        if 1 not in classes[0]:
            raise ValueError("the class containing basis index 1 must come first")

    @property
    def dimension(self) -> int:
        return sum(len(c) for c in self.classes)

    def class_index(self, i: int) -> int:
        """0-based position of the class containing basis label ``i``."""
        for pos, c in enumerate(self.classes):
            if i in c:
                return pos
        raise ValueError(f"basis index {i} not covered by the partition")


@dataclass(frozen=True)
class CongruenceWitness:
    """Two representative pairs from the same class pair whose classwise sums differ."""

    class_a: frozenset[int]
    class_b: frozenset[int]
    first_pair: tuple[int, int]
    second_pair: tuple[int, int]
    target_class: frozenset[int]
    first_sum: Fraction
    second_sum: Fraction


@dataclass(frozen=True)
class CongruenceCheck:
    holds: bool
    witness: CongruenceWitness | None = None

    def __bool__(self) -> bool:
        return self.holds


class CongruenceError(ValueError):
    """Raised when a quotient is requested over a partition that is not a congruence."""

    def __init__(self, witness: CongruenceWitness):
        self.witness = witness
        super().__init__(
            "partition is not a congruence: classes "
            f"{sorted(witness.class_a)} x {sorted(witness.class_b)}, representatives "
            f"{witness.first_pair} and {witness.second_pair} disagree on class "
            f"{sorted(witness.target_class)} ({witness.first_sum} != {witness.second_sum})"
        )


def find_self_inverse_elements(sys: FiniteHNS) -> list[int]:
    """Off-unit basis labels whose square is exactly the unit row."""
    unit = sys.unit_row(1)
    return [t for t in range(2, sys.dimension + 1) if multiply_basis(sys, t, t) == unit]


def divisor_partition(dimension: int, divisor: int) -> BasisPartition:
    """Group labels by (i-1) mod divisor: d classes of size M/d.

    For divisor = M/2 this is the pairing of e_i with e_{i+M/2}; for
    divisor = M it is the identity partition.
    """
    if divisor < 1:
        raise ValueError(f"divisor must be >= 1, got {divisor}")
    if dimension % divisor:
        raise ValueError(f"{divisor} does not divide {dimension}")
    classes = [
        frozenset(range(r + 1, dimension + 1, divisor)) for r in range(divisor)
    ]
    return BasisPartition(tuple(classes))


def _class_sums(sys: FiniteHNS, partition: BasisPartition, i: int, j: int) -> tuple[Fraction, ...]:
    row = sys.constants[i - 1][j - 1]
    return tuple(sum(row[k - 1] for k in cls) for cls in partition.classes)


def verify_congruence(sys: FiniteHNS, partition: BasisPartition) -> CongruenceCheck:
    """Check that classwise-summed product rows are representative-independent.

    For every pair of classes, the classwise sums of e_i e_j must agree for
    all representative pairs (i, j).  Returns the first disagreement found,
    scanning classes in partition order and representatives in ascending
    order.
    """
    if partition.dimension != sys.dimension:
        raise ValueError(
            f"partition covers 1..{partition.dimension} but the system has dimension {sys.dimension}"
        )
    for P in partition.classes:
        for Q in partition.classes:
            reps = [(i, j) for i in sorted(P) for j in sorted(Q)]
            base_pair = reps[0]
            base = _class_sums(sys, partition, *base_pair)
            for pair in reps[1:]:
                sums = _class_sums(sys, partition, *pair)
                if sums != base:
                    c = next(idx for idx in range(len(base)) if sums[idx] != base[idx])
                    return CongruenceCheck(
                        False,
                        CongruenceWitness(
                            class_a=P,
                            class_b=Q,
                            first_pair=base_pair,
                            second_pair=pair,
                            target_class=partition.classes[c],
                            first_sum=base[c],
                            second_sum=sums[c],
                        ),
                    )
    return CongruenceCheck(True)


def quotient_system(
    sys: FiniteHNS,
    partition: BasisPartition,
    *,
    require_congruence: bool = True,
) -> FiniteHNS:
    """Collapse the table along the partition by classwise summation.

    New constants come from each class's minimal representative:
    C'[a][b][c] = sum over k in class c of C[min class a][min class b][k].
    Under a true congruence every representative gives the same answer; with
    ``require_congruence=False`` the minimal-representative rule is applied
    regardless, which is the construction the halving workflow relies on.
    """
    check = verify_congruence(sys, partition)
    if require_congruence and not check:
        raise CongruenceError(check.witness)
    reps = [min(c) for c in partition.classes]
    d = len(partition.classes)
    tensor = [
        [list(_class_sums(sys, partition, reps[a], reps[b])) for b in range(d)]
        for a in range(d)
    ]
    return FiniteHNS(d, tensor)
