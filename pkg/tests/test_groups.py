import itertools

import pytest

from hyperfields.groups import AbelianGroupSpec, abelian_groups, invariant_factor_lists


@pytest.mark.parametrize(
    "m, expected",
    [(1, [()]), (4, [(2, 2), (4,)]), (8, [(2, 2, 2), (2, 4), (8,)]), (12, [(2, 6), (12,)]), (9, [(3, 3), (9,)])],
)
def test_invariant_factor_lists(m, expected):
    assert invariant_factor_lists(m) == expected


def brute_automorphism_count(G):
    # every bijection of the nonzero indices that respects multiplication
    count = 0
    elems = list(G.elements())
    for images in itertools.permutations(elems):
        f = dict(zip(elems, images))
        if all(f[G.mul(a, b)] == G.mul(f[a], f[b]) for a in elems for b in elems):
            count += 1
    return count


@pytest.mark.parametrize("factors", [(), (2,), (3,), (4,), (2, 2), (5,), (6,), (2, 4), (7,)])
def test_automorphisms_against_brute_force(factors):
    G = AbelianGroupSpec(factors)
    assert len(G.automorphisms) == brute_automorphism_count(G)
    assert G.automorphisms[0] == tuple(range(G.order + 1))


def test_automorphism_count_z2_cubed():
    assert len(AbelianGroupSpec((2, 2, 2)).automorphisms) == 168


def test_group_laws():
    for m in range(1, 10):
        for G in abelian_groups(m):
            for a in G.elements():
                assert G.mul(a, 1) == a
                assert G.mul(a, G.inv(a)) == 1
                for b in G.elements():
                    assert G.mul(a, b) == G.mul(b, a)


def test_labels():
    G = AbelianGroupSpec.cyclic(4)
    assert [G.label(a) for a in range(5)] == ["0", "1", "g", "g²", "g³"]
    H = AbelianGroupSpec((2, 2))
    assert [H.label(a) for a in range(5)] == ["0", "1", "g₁", "g₂", "g₁g₂"]


def test_bad_factors_rejected():
    with pytest.raises(ValueError):
        AbelianGroupSpec((4, 2))
    with pytest.raises(ValueError):
        AbelianGroupSpec((1,))
