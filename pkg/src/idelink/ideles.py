"""Ideles on a marked link and the principal-idele machinery.

An idele assigns a peripheral class to finitely many marked knots. The
reassembly map rho sends an idele supported on a sublink L into H1(M - L)
through the peripheral table; its kernel is the lattice of principal ideles.
A divisor (integer coefficients on knots) whose class vanishes in H1(M) has
a unique principal idele with those longitude coefficients: the meridian
corrections are forced because the surgery matrix is nonsingular. Every
principal idele arises this way, so the kernel-equals-boundary-image
equality is checked in both directions by the tests rather than assumed.

The global pairing of two ideles is the sum over knots of the local
intersection numbers; reciprocity (vanishing on principal pairs) is
verified exactly by the test-suite and the fuzz harness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import FgAbelianGroup, GroupElement
from .errors import BadInput, DivisorNotPrincipal, SupportOutsideLink
from .linalg import IntMatrix, hermite_row_basis, hstack, integer_kernel, solve_integer
from .local import ComplementHomology, PeripheralClass, local_intersection

__all__ = [
    "Idele",
    "Divisor",
    "ClassGroupData",
    "embed_local",
    "rho_tilde",
    "is_principal",
    "delta_from_divisor",
    "principal_lattice_basis",
    "idele_class_group",
    "global_pairing",
]


@dataclass(frozen=True)
class Idele:
    """Finitely supported family of peripheral classes, one per knot.

    Stored as (knot, meridian, longitude) triples sorted by knot name with
    zero components dropped, so equal ideles compare and hash equal.
    """

    parts: tuple[tuple[str, int, int], ...]

    @staticmethod
    def of(components) -> "Idele":
        """Build from {knot: (meridian, longitude)} or an iterable of such pairs."""
        items = components.items() if isinstance(components, dict) else list(components)
        acc: dict[str, tuple[int, int]] = {}
        for name, pair in items:
            x, y = int(pair[0]), int(pair[1])
            px, py = acc.get(name, (0, 0))
            acc[name] = (px + x, py + y)
        parts = tuple(
            (name, x, y) for name, (x, y) in sorted(acc.items()) if x != 0 or y != 0
        )
        return Idele(parts)

    @staticmethod
    def zero() -> "Idele":
        return Idele(())

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(k for k, _, _ in self.parts)

    def component(self, knot: str) -> PeripheralClass:
        for k, x, y in self.parts:
            if k == knot:
                return PeripheralClass(k, x, y)
        return PeripheralClass(knot, 0, 0)

    def __add__(self, other: "Idele") -> "Idele":
        acc = {k: (x, y) for k, x, y in self.parts}
        for k, x, y in other.parts:
            px, py = acc.get(k, (0, 0))
            acc[k] = (px + x, py + y)
        return Idele.of(acc)

    def __sub__(self, other: "Idele") -> "Idele":
        return self + (-1) * other

    def __neg__(self) -> "Idele":
        return (-1) * self

    def __rmul__(self, k: int) -> "Idele":
        return Idele.of({name: (k * x, k * y) for name, x, y in self.parts})

    def to_dict(self) -> dict:
        return {k: [x, y] for k, x, y in self.parts}

    @staticmethod
    def from_dict(data) -> "Idele":
        if not isinstance(data, dict):
            raise BadInput("idele must be a JSON object mapping knots to [meridian, longitude]")
        out = {}
        for k, v in data.items():
            if not isinstance(v, (list, tuple)) or len(v) != 2:
                raise BadInput(f"idele component at {k!r} must be a pair [meridian, longitude]")
            try:
                out[str(k)] = (int(v[0]), int(v[1]))
            except (TypeError, ValueError) as exc:
                raise BadInput(f"idele component at {k!r} must hold integers") from exc
        return Idele.of(out)


def embed_local(a: PeripheralClass) -> Idele:
    """The idele concentrated at one knot."""
    return Idele.of({a.knot: (a.meridian, a.longitude)})


@dataclass(frozen=True)
class Divisor:
    """Integer coefficients on finitely many marked knots."""

    parts: tuple[tuple[str, int], ...]

    @staticmethod
    def of(components) -> "Divisor":
        items = components.items() if isinstance(components, dict) else list(components)
        acc: dict[str, int] = {}
        for name, c in items:
            acc[name] = acc.get(name, 0) + int(c)
        return Divisor(tuple((k, c) for k, c in sorted(acc.items()) if c != 0))

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(k for k, _ in self.parts)

    def coefficient(self, knot: str) -> int:
        for k, c in self.parts:
            if k == knot:
                return c
        return 0

    def to_dict(self) -> dict:
        return dict(self.parts)

    @staticmethod
    def from_dict(data) -> "Divisor":
        if not isinstance(data, dict):
            raise BadInput("divisor must be a JSON object mapping knots to integers")
        try:
            return Divisor.of({str(k): int(v) for k, v in data.items()})
        except (TypeError, ValueError) as exc:
            raise BadInput("divisor coefficients must be integers") from exc


@dataclass(frozen=True)
class ClassGroupData:
    """Invariant factors of the idele class lattice and of coker(rho) at a stage."""

    link: tuple[str, ...]
    class_invariants: tuple[int, ...]
    coker_invariants: tuple[int, ...]


def _require_support(comp: ComplementHomology, support) -> None:
    allowed = set(comp.link)
    for k in support:
        if k not in allowed:
            raise SupportOutsideLink(f"component at {k!r} lies outside the sublink {list(comp.link)}")


def idele_coords(comp: ComplementHomology, a: Idele) -> tuple[int, ...]:
    """Coordinate vector of the reassembled idele in H1(M - L), pre-quotient."""
    _require_support(comp, a.support)
    n = comp.group.generator_count
    total = [0] * n
    for k, x, y in a.parts:
        mu = comp.meridian_coords(k)
        l0 = comp.longitude_coords(k)
        for i in range(n):
            total[i] += x * mu[i] + y * l0[i]
    return tuple(total)


def rho_tilde(comp: ComplementHomology, a: Idele) -> GroupElement:
    """Reassemble an idele supported on L into H1(M - L)."""
    return comp.group.element(idele_coords(comp, a))


def is_principal(comp: ComplementHomology, a: Idele) -> bool:
    """Whether the idele reassembles to zero in H1(M - L)."""
    return rho_tilde(comp, a).is_zero()


def _delta_solution(comp: ComplementHomology, divisor: Divisor) -> tuple[list[int], Idele]:
    """Solve for the principal idele with the divisor's longitude coefficients.

    Returns (t, idele) where t solves surgery_matrix @ t = lk_with_surgery^T d;
    raises DivisorNotPrincipal when the divisor class is nonzero in H1(M).
    """
    _require_support(comp, divisor.support)
    man = comp.manifold
    pres = man.presentation
    s = len(man.surgery_names)
    link = comp.link
    d = [divisor.coefficient(k) for k in link]
    rows = [man.knot_index(k) for k in link]
    rhs = [sum(pres.lk_with_surgery[rows[a], j] * d[a] for a in range(len(link))) for j in range(s)]
    t = solve_integer(pres.surgery_matrix, rhs)
    if t is None:
        raise DivisorNotPrincipal(
            "the divisor's class in H1(M) is nonzero, so no 2-chain bounds it"
        )
    parts = {}
    for a, k in enumerate(link):
        i = rows[a]
        x = sum(pres.lk_with_surgery[i, j] * t[j] for j in range(s))
        x -= sum(pres.lk_mutual[i, rows[b]] * d[b] for b in range(len(link)) if b != a)
        parts[k] = (x, d[a])
    return list(t), Idele.of(parts)


def delta_from_divisor(comp: ComplementHomology, divisor: Divisor) -> Idele:
    """The unique principal idele whose longitude coefficients are the divisor."""
    _, idele = _delta_solution(comp, divisor)
    return idele


def _principal_basis_rows(comp: ComplementHomology) -> list[list[int]]:
    """Hermite basis rows of ker(rho) in (meridian, longitude) pair coordinates."""
    p = comp.peripheral_matrix()
    combined = hstack(p, comp.relations)
    kernel = integer_kernel(combined)
    width = p.cols
    proj = [[kernel[i, j] for i in range(width)] for j in range(kernel.cols)]
    return hermite_row_basis(proj)


def _idele_from_pairs(link, vec) -> Idele:
    return Idele.of({k: (vec[2 * i], vec[2 * i + 1]) for i, k in enumerate(link)})


def principal_lattice_basis(comp: ComplementHomology) -> list[Idele]:
    """Basis of the lattice of principal ideles supported on the sublink."""
    return [_idele_from_pairs(comp.link, row) for row in _principal_basis_rows(comp)]


def idele_class_group(comp: ComplementHomology) -> ClassGroupData:
    """Invariant factors of ideles mod principal ideles, and of coker(rho)."""
    width = 2 * len(comp.link)
    basis = _principal_basis_rows(comp)
    rel = IntMatrix.from_columns([list(b) for b in basis], rows=width)
    class_invariants = FgAbelianGroup(width, rel).invariant_factors
    coker_rel = hstack(comp.relations, comp.peripheral_matrix())
    coker_invariants = FgAbelianGroup(comp.group.generator_count, coker_rel).invariant_factors
    return ClassGroupData(
        link=comp.link,
        class_invariants=class_invariants,
        coker_invariants=coker_invariants,
    )


def global_pairing(a: Idele, b: Idele) -> int:
    """Sum over knots of the local intersection pairings. Exact integer."""
    knots = sorted(set(a.support) | set(b.support))
    return sum(local_intersection(a.component(k), b.component(k)) for k in knots)
