"""Finite abelian covers: symbols, the product formula, decomposition, Kummer theory."""

import random

import pytest

from idelink.covers import (
    CoverSpec,
    FiniteAbelianGroup,
    decomposition_data,
    global_symbol,
    hilbert_symbol,
    kummer_cover,
    local_symbol,
    make_cover,
)
from idelink.errors import (
    BadDimensions,
    BadInput,
    BadModulus,
    CoverIllDefined,
    KnotOutsideLink,
    NotAdmissible,
)
from idelink.ideles import Divisor, Idele, delta_from_divisor, global_pairing, principal_lattice_basis
from idelink.local import PeripheralClass, complement_homology

from conftest import manifold


def test_finite_abelian_group_basics():
    g = FiniteAbelianGroup((4, 6))
    assert g.order() == 24
    assert g.identity() == (0, 0)
    assert g.reduce((5, -1)) == (1, 5)
    assert g.add((3, 5), (1, 1)) == (0, 0)
    assert g.element_order((2, 0)) == 2
    assert g.element_order((1, 1)) == 12
    assert g.element_order((0, 0)) == 1
    assert g.subgroup_order([(2, 0), (0, 3)]) == 4
    assert g.subgroup_order([]) == 1
    assert g.is_surjective([(1, 0), (0, 1)])
    assert not g.is_surjective([(2, 0), (0, 1)])
    with pytest.raises(BadInput):
        FiniteAbelianGroup((0,))


def test_make_cover_checks_relations(lens5):
    comp = complement_homology(lens5)
    target = FiniteAbelianGroup((5,))
    cover = make_cover(comp, target, [[1], [0]])
    assert cover.values == ((1,), (0,))
    with pytest.raises(CoverIllDefined):
        make_cover(comp, target, [[0], [1]])
    with pytest.raises(BadDimensions):
        make_cover(comp, target, [[1]])


def test_cover_dict_round_trip(hopf):
    comp = complement_homology(hopf)
    cover = make_cover(comp, FiniteAbelianGroup((2,)), [[1], [0]])
    data = cover.to_dict()
    assert data == {"branch_link": ["K1", "K2"], "target": [2], "phi": [[1], [0]]}
    again = CoverSpec.from_dict(hopf, data)
    assert again.values == cover.values
    with pytest.raises(BadInput):
        CoverSpec.from_dict(hopf, {"target": [2]})


def test_symbols_hopf(hopf):
    comp = complement_homology(hopf)
    cover = make_cover(comp, FiniteAbelianGroup((2,)), [[1], [0]])
    assert global_symbol(Idele.of({"K1": (0, 1)}), cover) == (0,)
    assert global_symbol(Idele.of({"K1": (1, 0)}), cover) == (1,)
    assert local_symbol(PeripheralClass("K2", 0, 1), cover) == (1,)
    principal = Idele.of({"K1": (0, 1), "K2": (-1, 0)})
    assert global_symbol(principal, cover) == (0,)
    with pytest.raises(KnotOutsideLink):
        local_symbol(PeripheralClass("nope", 1, 0), cover)
    with pytest.raises(KnotOutsideLink):
        decomposition_data(cover, "nope")


def test_decomposition_hopf(hopf):
    comp = complement_homology(hopf)
    cover = make_cover(comp, FiniteAbelianGroup((2,)), [[1], [0]])
    d1 = decomposition_data(cover, "K1")
    d2 = decomposition_data(cover, "K2")
    assert (d1.ramification_index, d1.residue_degree, d1.component_count) == (2, 1, 1)
    assert (d2.ramification_index, d2.residue_degree, d2.component_count) == (1, 2, 1)


def test_decomposition_identity_randomized(hopf, lens5):
    rng = random.Random(7)
    for man in (hopf, lens5):
        comp = complement_homology(man)
        for _ in range(60):
            cover = sample_cover(comp, rng)
            for k in comp.link:
                dd = decomposition_data(cover, k)
                assert (
                    dd.ramification_index * dd.residue_degree * dd.component_count
                    == cover.target.order()
                )


def sample_cover(comp, rng):
    # brute-force sampling: try random value tables until one is well defined
    orders = tuple(rng.randint(1, 6) for _ in range(rng.randint(1, 2)))
    target = FiniteAbelianGroup(orders)
    while True:
        values = [
            [rng.randrange(n) for n in orders]
            for _ in range(comp.group.generator_count)
        ]
        try:
            return make_cover(comp, target, values)
        except CoverIllDefined:
            continue


def test_product_formula_randomized(hopf, lens5):
    rng = random.Random(13)
    for man in (hopf, lens5):
        comp = complement_homology(man)
        basis = principal_lattice_basis(comp)
        for _ in range(40):
            cover = sample_cover(comp, rng)
            a = Idele.of(
                {
                    k: (rng.randint(-9, 9), rng.randint(-9, 9))
                    for k in comp.link
                    if rng.random() < 0.7
                }
            )
            total = cover.target.identity()
            for k in a.support:
                total = cover.target.add(total, local_symbol(a.component(k), cover))
            assert global_symbol(a, cover) == total
            principal = Idele.zero()
            for b in basis:
                principal = principal + rng.randint(-4, 4) * b
            assert global_symbol(principal, cover) == cover.target.identity()


def test_kummer_cover_hopf(hopf):
    comp = complement_homology(hopf)
    kc = kummer_cover(comp, Divisor.of({"K1": 1}), 2)
    assert kc.cover.to_dict() == {
        "branch_link": ["K1", "K2"],
        "target": [2],
        "phi": [[1], [0]],
    }
    assert kc.branch_locus == ("K1",)
    assert kc.boundary_idele == delta_from_divisor(comp, Divisor.of({"K1": 1}))
    # branch locus is exactly where ramification happens
    for k in comp.link:
        dd = decomposition_data(kc.cover, k)
        assert (k in kc.branch_locus) == (dd.ramification_index > 1)


def test_kummer_cover_lens5(lens5):
    comp = complement_homology(lens5)
    kc = kummer_cover(comp, Divisor.of({"K": 5}), 5)
    # the bounding chain passes once over the surgery handle: psi(m) = -1 mod 5
    assert kc.cover.to_dict()["phi"] == [[4], [0]]
    assert kc.branch_locus == ()
    with pytest.raises(BadModulus):
        kummer_cover(comp, Divisor.of({"K": 5}), 1)
    from idelink.errors import DivisorNotPrincipal

    with pytest.raises(DivisorNotPrincipal):
        kummer_cover(comp, Divisor.of({"K": 1}), 5)


def test_kummer_symbol_is_pairing_with_boundary(hopf):
    comp = complement_homology(hopf)
    n = 3
    kc = kummer_cover(comp, Divisor.of({"K1": 2, "K2": 1}), n)
    rng = random.Random(29)
    for _ in range(40):
        gamma = Idele.of(
            {k: (rng.randint(-6, 6), rng.randint(-6, 6)) for k in comp.link}
        )
        assert global_symbol(gamma, kc.cover) == (
            global_pairing(gamma, kc.boundary_idele) % n,
        )


def test_kummer_requires_admissible_stage():
    man = manifold(
        {
            "surgery": {"components": ["L1"], "matrix": [[5]]},
            "link": {"components": ["K"], "lk_with_surgery": [[0]], "lk_mutual": [[0]]},
        }
    )
    comp = complement_homology(man)
    with pytest.raises(NotAdmissible):
        kummer_cover(comp, Divisor.of({}), 2)


def test_hilbert_symbol(hopf):
    comp = complement_homology(hopf)
    a = delta_from_divisor(comp, Divisor.of({"K2": 1}))
    b = delta_from_divisor(comp, Divisor.of({"K1": 1}))
    assert hilbert_symbol(a, b, "K1", 3) == 2
    assert hilbert_symbol(a, b, "K2", 3) == 1
    # symbols at the two crossings cancel mod any modulus
    assert (hilbert_symbol(a, b, "K1", 7) + hilbert_symbol(a, b, "K2", 7)) % 7 == 0
    with pytest.raises(BadModulus):
        hilbert_symbol(a, b, "K1", 0)
