"""Finitely generated abelian groups presented by integer relation matrices.

A group is Z^g modulo the column span of a relation matrix. Elements are
coordinate vectors; equality, order and invariant factors are all decided
exactly through the cached Smith form of the relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import BadDimensions
from .linalg import IntMatrix, SmithForm, hermite_row_basis, hstack, integer_kernel, smith_normal_form

__all__ = [
    "FgAbelianGroup",
    "GroupElement",
    "group_from_relations",
    "element_order",
    "subgroup_invariant_factors",
]


class FgAbelianGroup:
    """Z^generator_count modulo the columns of ``relations``.

    invariant_factors lists the nontrivial torsion factors in divisibility
    order followed by one 0 per free factor; unit factors are dropped.
    """

    def __init__(self, generator_count: int, relations: IntMatrix, labels=None):
        if relations.rows != generator_count:
            raise BadDimensions(
                f"relation matrix has {relations.rows} rows for {generator_count} generators"
            )
        if labels is not None and len(labels) != generator_count:
            raise BadDimensions("one label per generator required")
        self.generator_count = generator_count
        self.relations = relations
        self.labels = tuple(labels) if labels is not None else None
        self._snf: SmithForm = smith_normal_form(relations)
        diag = self._snf.diagonal
        nonzero = [d for d in diag if d != 0]
        torsion = tuple(d for d in nonzero if d != 1)
        free = generator_count - len(nonzero)
        self.invariant_factors: tuple[int, ...] = torsion + (0,) * free

    def order(self) -> int | None:
        """Group order, or None when the group is infinite."""
        n = 1
        for d in self.invariant_factors:
            if d == 0:
                return None
            n *= d
        return n

    def is_trivial(self) -> bool:
        return self.invariant_factors == ()

    def element(self, coords) -> "GroupElement":
        coords = tuple(int(x) for x in coords)
        if len(coords) != self.generator_count:
            raise BadDimensions(
                f"coordinate vector of length {len(coords)} in a group with "
                f"{self.generator_count} generators"
            )
        return GroupElement(self, coords)

    def zero(self) -> "GroupElement":
        return self.element((0,) * self.generator_count)

    def is_zero_vector(self, coords) -> bool:
        """Whether the coordinate vector lies in the column span of the relations."""
        u = self._snf.u.mul_vector(coords)
        diag = self._snf.diagonal
        for i, x in enumerate(u):
            d = diag[i] if i < len(diag) else 0
            if d:
                if x % d:
                    return False
            elif x:
                return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, FgAbelianGroup):
            return NotImplemented
        return self.generator_count == other.generator_count and self.relations == other.relations

    def __repr__(self) -> str:
        return f"FgAbelianGroup(generators={self.generator_count}, invariant_factors={self.invariant_factors})"


@dataclass(frozen=True, eq=False)
class GroupElement:
    """An element of an FgAbelianGroup, held as a generator-coordinate vector."""

    group: FgAbelianGroup
    coords: tuple[int, ...]

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.group, tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> "GroupElement":
        return GroupElement(self.group, tuple(k * a for a in self.coords))

    def is_zero(self) -> bool:
        return self.group.is_zero_vector(self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        if self.group is not other.group and self.group != other.group:
            return NotImplemented
        return self.group.is_zero_vector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    __hash__ = None  # coset equality is not hash-compatible with coordinates

    def _check(self, other: "GroupElement") -> None:
        if self.group is not other.group and self.group != other.group:
            raise BadDimensions("elements of different groups")


def group_from_relations(generator_count: int, relations: IntMatrix, labels=None) -> FgAbelianGroup:
    """Build Z^g modulo the integer column span of ``relations``."""
    return FgAbelianGroup(generator_count, relations, labels=labels)


def element_order(e: GroupElement) -> int | None:
    """Smallest n >= 1 with n*e = 0, or None when e has infinite order."""
    snf = e.group._snf
    u = snf.u.mul_vector(e.coords)
    diag = snf.diagonal
    n = 1
    for i, x in enumerate(u):
        d = diag[i] if i < len(diag) else 0
        if d:
            step = d // gcd(d, x)
            n = n * step // gcd(n, step)
        elif x:
            return None
    return n


def subgroup_invariant_factors(group: FgAbelianGroup, vectors) -> tuple[int, ...]:
    """Invariant factors of the subgroup generated by the given coordinate vectors."""
    vectors = [tuple(int(x) for x in v) for v in vectors]
    k = len(vectors)
    if k == 0:
        return ()
    gen_matrix = IntMatrix.from_columns([list(v) for v in vectors], rows=group.generator_count)
    combined = hstack(gen_matrix, group.relations)
    ker = integer_kernel(combined)
    proj = [[ker[i, j] for i in range(k)] for j in range(ker.cols)]
    basis = hermite_row_basis(proj)
    rel = IntMatrix.from_columns([list(b) for b in basis], rows=k)
    return FgAbelianGroup(k, rel).invariant_factors
