"""Ideles, the principal lattice, the divisor map, and global reciprocity."""

import random

import pytest

from idelink.errors import BadInput, DivisorNotPrincipal, SupportOutsideLink
from idelink.ideles import (
    Divisor,
    Idele,
    delta_from_divisor,
    embed_local,
    global_pairing,
    idele_class_group,
    is_principal,
    principal_lattice_basis,
    rho_tilde,
)
from idelink.linalg import hermite_row_basis
from idelink.local import PeripheralClass, complement_homology

from conftest import manifold


def test_idele_normalization():
    a = Idele.of({"B": (1, 2), "A": (0, 3)})
    assert a.parts == (("A", 0, 3), ("B", 1, 2))
    assert Idele.of([("K", (1, 0)), ("K", (-1, 0))]) == Idele.zero()
    assert Idele.of({"K": (0, 0)}).support == ()
    assert a.component("B") == PeripheralClass("B", 1, 2)
    assert a.component("missing").is_zero()


def test_idele_arithmetic():
    a = Idele.of({"K1": (1, 2)})
    b = Idele.of({"K1": (-1, 0), "K2": (4, 4)})
    assert (a + b).to_dict() == {"K1": [0, 2], "K2": [4, 4]}
    assert (a - a) == Idele.zero()
    assert (2 * b).to_dict() == {"K1": [-2, 0], "K2": [8, 8]}
    assert embed_local(PeripheralClass("K", 3, -1)).to_dict() == {"K": [3, -1]}


def test_idele_dict_round_trip():
    a = Idele.of({"K1": (1, 2), "K2": (0, -3)})
    assert Idele.from_dict(a.to_dict()) == a
    with pytest.raises(BadInput):
        Idele.from_dict([1, 2])
    with pytest.raises(BadInput):
        Idele.from_dict({"K": [1]})
    with pytest.raises(BadInput):
        Idele.from_dict({"K": ["a", "b"]})


def test_divisor_normalization():
    d = Divisor.of({"B": 2, "A": 0})
    assert d.parts == (("B", 2),)
    assert d.coefficient("B") == 2
    assert d.coefficient("A") == 0
    assert Divisor.of([("K", 1), ("K", -1)]).support == ()


def test_rho_and_principality_lens5(lens5):
    comp = complement_homology(lens5)
    mu = Idele.of({"K": (1, 0)})
    assert not is_principal(comp, mu)
    assert rho_tilde(comp, Idele.zero()).is_zero()
    lam = Idele.of({"K": (1, 5)})
    assert is_principal(comp, lam)


def test_delta_lens5(lens5):
    comp = complement_homology(lens5)
    assert delta_from_divisor(comp, Divisor.of({"K": 5})).to_dict() == {"K": [1, 5]}
    with pytest.raises(DivisorNotPrincipal):
        delta_from_divisor(comp, Divisor.of({"K": 1}))
    assert delta_from_divisor(comp, Divisor.of({})) == Idele.zero()


def test_delta_hopf(hopf):
    comp = complement_homology(hopf)
    d1 = delta_from_divisor(comp, Divisor.of({"K1": 1}))
    d2 = delta_from_divisor(comp, Divisor.of({"K2": 1}))
    assert d1.to_dict() == {"K1": [0, 1], "K2": [-1, 0]}
    assert d2.to_dict() == {"K1": [-1, 0], "K2": [0, 1]}
    # boundaries of the two obvious disks pair to zero globally, with
    # canceling local contributions
    assert global_pairing(d1, d2) == 0
    assert local_intersection_at(d1, d2, "K1") == 1
    assert local_intersection_at(d1, d2, "K2") == -1


def local_intersection_at(a, b, knot):
    from idelink.local import local_intersection

    return local_intersection(a.component(knot), b.component(knot))


def test_delta_is_linear_on_principal_divisors(hopf):
    comp = complement_homology(hopf)
    da = Divisor.of({"K1": 2, "K2": -1})
    db = Divisor.of({"K1": -1, "K2": 3})
    lhs = delta_from_divisor(comp, Divisor.of({"K1": 1, "K2": 2}))
    assert lhs == delta_from_divisor(comp, da) + delta_from_divisor(comp, db)


def test_principal_basis_lattice_hopf(hopf):
    comp = complement_homology(hopf)
    basis = principal_lattice_basis(comp)
    got = [
        [b.component("K1").meridian, b.component("K1").longitude,
         b.component("K2").meridian, b.component("K2").longitude]
        for b in basis
    ]
    # same lattice as the one spanned by the two disk boundaries
    expected = hermite_row_basis([[0, 1, -1, 0], [-1, 0, 0, 1]])
    assert got == expected
    for b in basis:
        assert is_principal(comp, b)


def test_principal_basis_lens5(lens5):
    comp = complement_homology(lens5)
    basis = principal_lattice_basis(comp)
    assert [b.to_dict() for b in basis] == [{"K": [1, 5]}]


def test_class_group_data(lens5, hopf):
    data = idele_class_group(complement_homology(lens5))
    # ideles at one knot mod the rank-one principal lattice leave a free factor
    assert data.class_invariants == (0,)
    assert data.coker_invariants == ()

    data = idele_class_group(complement_homology(hopf))
    assert data.class_invariants == (0, 0)
    assert data.coker_invariants == ()


def test_cokernel_detects_non_admissible_stage():
    man = manifold(
        {
            "surgery": {"components": ["L1"], "matrix": [[5]]},
            "link": {"components": ["K"], "lk_with_surgery": [[0]], "lk_mutual": [[0]]},
        }
    )
    data = idele_class_group(complement_homology(man))
    assert data.coker_invariants == (5,)


def test_support_validation(hopf):
    comp = complement_homology(hopf, ["K1"])
    with pytest.raises(SupportOutsideLink):
        rho_tilde(comp, Idele.of({"K2": (1, 0)}))
    with pytest.raises(SupportOutsideLink):
        delta_from_divisor(comp, Divisor.of({"K2": 1}))


def test_reciprocity_on_random_principal_pairs():
    rng = random.Random(101)
    instances = [
        {
            "surgery": {"components": ["L1"], "matrix": [[5]]},
            "link": {
                "components": ["J", "K"],
                "lk_with_surgery": [[1], [2]],
                "lk_mutual": [[0, -1], [-1, 0]],
            },
        },
        {
            "surgery": {"components": ["L1", "L2"], "matrix": [[2, 1], [1, 2]]},
            "link": {
                "components": ["K1", "K2", "K3"],
                "lk_with_surgery": [[1, 0], [0, 1], [2, -1]],
                "lk_mutual": [[0, 1, 0], [1, 0, -2], [0, -2, 0]],
            },
        },
    ]
    for data in instances:
        comp = complement_homology(manifold(data))
        basis = principal_lattice_basis(comp)
        for _ in range(50):
            a = sum_combo(basis, rng)
            b = sum_combo(basis, rng)
            assert global_pairing(a, b) == 0
            assert is_principal(comp, a)


def sum_combo(basis, rng):
    acc = Idele.zero()
    for b in basis:
        acc = acc + rng.randint(-6, 6) * b
    return acc


def test_linking_corollary_in_the_three_sphere():
    # with no surgery curves every divisor bounds, and pairing the probe
    # longitude against the bounding idele reads off total linking
    man = manifold(
        {
            "surgery": {"components": [], "matrix": []},
            "link": {
                "components": ["A", "B", "C"],
                "lk_with_surgery": [[], [], []],
                "lk_mutual": [[0, 2, -1], [2, 0, 4], [-1, 4, 0]],
            },
        }
    )
    comp = complement_homology(man)
    d = Divisor.of({"A": 3, "B": -2})
    bounding = delta_from_divisor(comp, d)
    probe = embed_local(PeripheralClass("C", 0, 1))
    expected = 3 * (-1) + (-2) * 4
    assert global_pairing(probe, bounding) == expected
