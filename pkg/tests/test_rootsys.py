from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stringcones.rootsys import (
    EpsVector,
    LieType,
    Weight,
    cartan_matrix,
    coroot,
    fundamental_coweights,
    fundamental_weights,
    pairing,
    positive_roots,
    rho,
    simple_coroots,
    simple_roots,
)

ALL_TYPES = [
    LieType("A", 1), LieType("A", 2), LieType("A", 3), LieType("A", 4),
    LieType("B", 2), LieType("B", 3), LieType("B", 4),
    LieType("C", 2), LieType("C", 3), LieType("C", 4),
    LieType("D", 3), LieType("D", 4), LieType("D", 5),
]


def test_rank_floors():
    with pytest.raises(ValueError):
        LieType("B", 1)
    with pytest.raises(ValueError):
        LieType("C", 1)
    with pytest.raises(ValueError):
        LieType("D", 2)
    with pytest.raises(ValueError):
        LieType("E", 6)


def test_cartan_matrices_frozen():
    assert cartan_matrix(LieType("A", 2)) == ((2, -1), (-1, 2))
    assert cartan_matrix(LieType("B", 2)) == ((2, -1), (-2, 2))
    assert cartan_matrix(LieType("C", 2)) == ((2, -2), (-1, 2))
    assert cartan_matrix(LieType("B", 3)) == ((2, -1, 0), (-1, 2, -1), (0, -2, 2))
    assert cartan_matrix(LieType("C", 3)) == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))
    # trivalent node 2 in D4
    assert cartan_matrix(LieType("D", 4)) == (
        (2, -1, 0, 0),
        (-1, 2, -1, -1),
        (0, -1, 2, 0),
        (0, -1, 0, 2),
    )


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_pairing_table_is_cartan(t):
    al = simple_roots(t)
    av = simple_coroots(t)
    a = cartan_matrix(t)
    for i in range(t.rank):
        for j in range(t.rank):
            assert pairing(al[j], av[i]) == a[i][j]


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_fundamental_weights_dual_to_coroots(t):
    fw = fundamental_weights(t)
    av = simple_coroots(t)
    for i in range(t.rank):
        for j in range(t.rank):
            assert pairing(fw[i], av[j]) == (1 if i == j else 0)


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_fundamental_coweights_dual_to_roots(t):
    cw = fundamental_coweights(t)
    al = simple_roots(t)
    for i in range(t.rank):
        for j in range(t.rank):
            assert pairing(al[j], cw[i]) == (1 if i == j else 0)


def test_fundamental_weights_frozen():
    b2 = fundamental_weights(LieType("B", 2))
    assert b2[0].coords() == (1, 0)
    assert b2[1].coords() == (Fraction(1, 2), Fraction(1, 2))
    d4 = fundamental_weights(LieType("D", 4))
    assert d4[2].coords() == (
        Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(-1, 2)
    )
    assert d4[3].coords() == (
        Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)
    )


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_positive_root_counts(t):
    n = t.rank
    expect = {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
    }[t.family]
    pos = positive_roots(t)
    assert len(pos) == expect
    assert len(set(pos)) == expect


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_rho_is_sum_of_fundamental_weights(t):
    acc = EpsVector.zero(t.eps_dim)
    for w in fundamental_weights(t):
        acc = acc + w
    assert rho(t) == acc
    for c in simple_coroots(t):
        assert pairing(rho(t), c) == 1


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_coroot_pairs_to_two(t):
    for a in positive_roots(t):
        assert pairing(a, coroot(a)) == 2


def test_weight_roundtrip():
    t = LieType("D", 4)
    lam = Weight(t, (1, 0, 2, 1))
    assert Weight.from_eps(t, lam.eps) == lam
    assert lam.is_dominant
    assert not Weight(t, (1, -1, 0, 0)).is_dominant


@given(st.lists(st.integers(-6, 6), min_size=3, max_size=3),
       st.lists(st.integers(-6, 6), min_size=3, max_size=3),
       st.integers(-4, 4))
def test_epsvector_arithmetic(a, b, c):
    va, vb = EpsVector.from_ints(tuple(a)), EpsVector.from_ints(tuple(b))
    assert (va + vb) - vb == va
    assert -(-va) == va
    assert va.scale(c).dot(vb) == c * va.dot(vb)
    assert va.dot(vb) == vb.dot(va)
