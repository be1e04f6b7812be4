import pytest
from hypothesis import given, strategies as st

from strata.errors import InconsistentProfile, TooFewZeros
from strata.combinatorics import (BackbonePart, configurations,
                                  enumerate_backbones, enumerate_rooted_trees,
                                  genus_of, signatures_of_genus,
                                  spin_assignments, validate_signature)


def test_genus_of():
    assert genus_of((0,)) == 1
    assert genus_of((2,)) == 2
    assert genus_of((1, 1)) == 2
    assert genus_of((2, 2, 1, 1)) == 4
    with pytest.raises(ValueError):
        genus_of((1,))


def test_validate_signature():
    assert validate_signature((2, 0)) == (2, 0)
    with pytest.raises(ValueError):
        validate_signature((-1, 3))


def test_signatures_of_genus():
    assert signatures_of_genus(1) == []   # no positive orders sum to zero
    assert signatures_of_genus(2) == [(2,), (1, 1)]
    assert signatures_of_genus(3) == [(4,), (3, 1), (2, 2), (2, 1, 1),
                                      (1, 1, 1, 1)]
    capped = signatures_of_genus(3, max_zeros=2)
    assert capped == [(4,), (3, 1), (2, 2)]
    padded = signatures_of_genus(2, max_zeros=3, allow_zero_orders=True)
    assert (2, 0) in padded and (2, 0, 0) in padded and (1, 1, 0) in padded
    genus1 = signatures_of_genus(1, max_zeros=2, allow_zero_orders=True)
    assert genus1 == [(0,), (0, 0)]


def test_backbone_part_signature():
    part = BackbonePart(2, (1, 1), 3)
    assert part.signature == (1, 1, 2)


def test_enumerate_backbones_2_2():
    decs = enumerate_backbones((2, 2))
    assert len(decs) == 4
    singles = [d for d in decs if d.k == 1]
    assert len(singles) == 1
    assert singles[0].parts[0] == BackbonePart(3, (), 5)
    assert all(d.count == 1 for d in decs)  # no zeros left to route
    # two blocks carry genera (1,2) or (2,1); twist is always 2g-1 here
    twists = sorted(tuple(sorted(d.twists)) for d in decs if d.k == 2)
    assert twists == [(1, 3), (1, 3)]
    triples = [d for d in decs if d.k == 3]
    assert len(triples) == 1 and triples[0].twists == (1, 1, 1)


def test_configurations_2_2():
    configs = configurations((2, 2))
    assert len(configs) == 3
    by_k = {c.k: c for c in configs}
    assert set(by_k) == {1, 2, 3}
    assert by_k[1].ordered_count == 1
    assert by_k[2].ordered_count == 2   # the (1,3) twists come in two orders
    assert by_k[3].ordered_count == 1


def test_twist_positivity():
    for dec in enumerate_backbones((3, 1, 2)):
        for part in dec.parts:
            assert part.pole_twist >= 1
            assert part.pole_twist == 2 * part.genus - 1 - sum(part.zeros)


def test_labeled_multiplicity():
    # two order-1 zeros routed to two distinct blocks can swap: count 2
    decs = enumerate_backbones((2, 2, 1, 1))
    split = [d for d in decs
             if d.k == 2 and all(p.zeros == (1,) for p in d.parts)]
    assert split and all(d.count == 2 for d in split)
    # both zeros in one block: nothing to swap
    lump = [d for d in decs
            if d.k == 2 and any(p.zeros == (1, 1) for p in d.parts)]
    assert lump and all(d.count == 1 for d in lump)


def test_labeled_multiplicity_sums_to_assignments():
    # per (k, genera, twists) class, counts add up to the number of maps
    # from labeled zeros to blocks realizing the class
    decs = enumerate_backbones((1, 1, 1, 1))
    total = sum(d.count for d in decs)
    distinct = len(decs)
    assert total >= distinct


def test_enumerate_backbones_requires_two_zeros():
    with pytest.raises(TooFewZeros):
        enumerate_backbones((2,))
    with pytest.raises(ValueError):
        enumerate_backbones((2, 2), 1, 1)


def test_spin_assignments():
    assert spin_assignments(1, 0) == [(0,)]
    assert spin_assignments(1, 1) == [(1,)]
    for k in (2, 3, 4):
        for parity in (0, 1):
            assigns = spin_assignments(k, parity)
            assert len(assigns) == 2 ** (k - 1)
            assert all(sum(a) % 2 == parity for a in assigns)


def test_rooted_trees_degree_relation():
    with pytest.raises(InconsistentProfile):
        enumerate_rooted_trees((1, 1, 2), (2, 3))


def test_rooted_trees_single_extra_zero():
    # degree relation: sum(zeros) + 2 == sum(p + 1 for p in poles)
    trees = enumerate_rooted_trees((1, 1, 2), (1, 3))
    assert trees
    for tree in trees:
        assert len(tree.parent) == 1
        assert all(t >= 1 for v, t in enumerate(tree.twists) if v >= 1)


@given(st.integers(1, 6))
def test_signatures_have_right_genus(g):
    for mu in signatures_of_genus(g, max_zeros=3):
        assert genus_of(mu) == g
        assert mu == tuple(sorted(mu, reverse=True))
