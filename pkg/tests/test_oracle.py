import itertools

import pytest

from stringcones.cones import string_cone_explicit
from stringcones.oracle import (
    brute_force_cone,
    freudenthal_multiplicities,
    project_to_a,
    restrict_and_decompose,
    weyl_dim,
    weyl_invariant,
)
from stringcones.rootsys import EpsVector, LieType, Weight
from stringcones.weyl import canonical_word


def test_weyl_dim_frozen_values():
    cases = [
        (("A", 2), (1, 1), 8),       # adjoint of sl3
        (("A", 3), (1, 0, 0), 4),
        (("B", 2), (0, 1), 4),       # spin rep of so5
        (("B", 3), (0, 0, 1), 8),    # spin rep of so7
        (("C", 3), (1, 0, 0), 6),    # vector rep of sp6
        (("D", 3), (1, 0, 0), 6),    # vector rep of so6
        (("D", 4), (0, 1, 0, 0), 28),  # adjoint of so8
    ]
    for spec, coeffs, dim in cases:
        t = LieType(*spec)
        assert weyl_dim(t, Weight(t, coeffs)) == dim


def test_weyl_dim_rejects_nondominant():
    t = LieType("B", 2)
    with pytest.raises(ValueError):
        weyl_dim(t, Weight(t, (-1, 0)))


def test_freudenthal_a2_adjoint():
    t = LieType("A", 2)
    lam = Weight(t, (1, 1))
    mult = freudenthal_multiplicities(t, lam)
    assert sum(mult.values()) == 8
    # six roots with multiplicity one, zero weight (in gl coordinates) twice
    assert mult[(2, 2, 2)] == 2
    assert sorted(mult.values()) == [1, 1, 1, 1, 1, 1, 2]


def test_freudenthal_mass_and_invariance():
    for spec, coeffs in [(("B", 2), (1, 1)), (("C", 3), (1, 0, 0)),
                         (("D", 3), (0, 1, 1))]:
        t = LieType(*spec)
        lam = Weight(t, coeffs)
        mult = freudenthal_multiplicities(t, lam)
        assert sum(mult.values()) == weyl_dim(t, lam)
        assert weyl_invariant(t, mult)


def test_weyl_invariant_detects_corruption():
    t = LieType("B", 2)
    mult = dict(freudenthal_multiplicities(t, Weight(t, (1, 0))))
    key = next(k for k in mult if any(x != 0 for x in k))
    mult[key] += 1
    assert not weyl_invariant(t, mult)


def test_freudenthal_cap():
    t = LieType("B", 4)
    with pytest.raises(ValueError):
        freudenthal_multiplicities(t, Weight(t, (2, 2, 2, 2)), cap=100)


def test_project_to_a():
    t = LieType("B", 3)
    # e1 pairs to 1 with e1-e2 and 0 with e2-e3
    assert project_to_a(t, EpsVector.from_ints((1, 0, 0))) == (1, 0)
    assert project_to_a(t, EpsVector.from_ints((0, 0, -1))) == (0, 1)
    assert project_to_a(t, EpsVector.from_ints((0, 1, 0))) == (-1, 1)


def test_restrict_and_decompose_c2_frozen():
    t = LieType("C", 2)
    assert restrict_and_decompose(t, Weight(t, (1, 0))) == {(1,): 2}


def test_restrict_and_decompose_d3_frozen():
    t = LieType("D", 3)
    assert restrict_and_decompose(t, Weight(t, (1, 0, 0))) == {(1, 0): 1, (0, 1): 1}


def test_brute_force_cone_d3_box():
    t = LieType("D", 3)
    w = canonical_word(t)
    got = brute_force_cone(w, 1)
    cone = string_cone_explicit(t)
    want = {
        pt for pt in itertools.product(range(2), repeat=6) if cone.member(pt)
    }
    assert got == want


def test_brute_force_cone_budget():
    w = canonical_word(LieType("D", 4))
    with pytest.raises(ValueError):
        brute_force_cone(w, 4, budget=1000)
