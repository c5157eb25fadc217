import pytest

from stringcones.cones import index_map, littelmann_member
from stringcones.oracle import weyl_dim
from stringcones.polytopes import (
    lusztig_branching_h_rep,
    lusztig_branching_points,
    lusztig_polytope_h_rep,
    lusztig_polytope_points,
    lusztig_to_string,
    string_polytope_points,
    string_to_lusztig,
    weight_bound,
)
from stringcones.rootsys import LieType, Weight
from stringcones.weyl import canonical_word, dual_weight

BCD_TYPES = [
    LieType("B", 2), LieType("B", 3),
    LieType("C", 2), LieType("C", 3),
    LieType("D", 3), LieType("D", 4),
]


def test_weight_bound_chain_top():
    t = LieType("D", 3)
    w = canonical_word(t)
    lam = Weight(t, (1, 0, 0))
    # empty suffix: bound for t_N is <lam, alpha_{i_N}^vee>
    assert weight_bound(w, lam, (), len(w.letters)) == 0
    assert weight_bound(w, Weight(t, (0, 1, 1)), (), len(w.letters)) == 1


def test_string_points_d3_vector_rep_frozen():
    t = LieType("D", 3)
    pts = string_polytope_points(t, Weight(t, (1, 0, 0)))
    assert pts == [
        (0, 0, 0, 0, 0, 0),
        (0, 0, 0, 1, 1, 0),
        (0, 1, 0, 0, 0, 0),
        (0, 1, 1, 1, 1, 0),
        (1, 0, 0, 1, 1, 0),
        (1, 1, 0, 0, 0, 0),
    ]


def test_string_points_b2_spin_frozen():
    t = LieType("B", 2)
    pts = string_polytope_points(t, Weight(t, (0, 1)))
    assert pts == [(0, 0, 0, 0), (0, 1, 0, 0), (0, 1, 1, 1), (1, 1, 0, 0)]


@pytest.mark.parametrize("t", BCD_TYPES + [LieType("A", 2), LieType("A", 3)],
                         ids=str)
def test_point_counts_match_weyl_dim(t):
    for coeffs in [(1,) + (0,) * (t.rank - 1), (0,) * (t.rank - 1) + (1,),
                   (1,) * t.rank]:
        lam = Weight(t, coeffs)
        pts = string_polytope_points(t, lam)
        assert len(pts) == weyl_dim(t, lam)
        assert len(set(pts)) == len(pts)


def test_recheck_littelmann_agrees():
    t = LieType("C", 3)
    lam = Weight(t, (1, 1, 0))
    assert string_polytope_points(t, lam) == string_polytope_points(
        t, lam, recheck_littelmann=True
    )


@pytest.mark.parametrize("t", BCD_TYPES, ids=str)
def test_transition_maps_are_inverse_bijections(t):
    lam = Weight(t, (1,) * t.rank if t.rank <= 2 else (1, 0) + (1,) * (t.rank - 2))
    star = dual_weight(lam)
    pts = string_polytope_points(t, lam)
    imgs = [string_to_lusztig(t, lam, p) for p in pts]
    assert all(min(u) >= 0 for u in imgs)
    # phi lands in the polytope cut out for the dual weight, psi comes back
    assert sorted(imgs) == lusztig_polytope_points(t, star)
    for p, u in zip(pts, imgs):
        assert lusztig_to_string(t, star, u) == p


def test_lusztig_points_count_matches_weyl_dim():
    for t in BCD_TYPES:
        lam = Weight(t, (1,) + (0,) * (t.rank - 1))
        assert len(lusztig_polytope_points(t, lam)) == weyl_dim(t, lam)


def test_lusztig_h_rep_landmark_facets():
    # the single boundary facet u+_{last} <= lam_n survives verbatim
    for t, lam_idx in [(LieType("D", 4), 4), (LieType("B", 3), 3),
                       (LieType("C", 3), 3)]:
        n = t.rank
        im = index_map(t)
        pos = im.position("+", n - 1, n - 1) if t.family == "D" else im.position(
            "+", n, n
        )
        forms = lusztig_polytope_h_rep(t)
        lam_vec = tuple(1 if k == lam_idx else 0 for k in range(1, n + 1))
        matches = [
            f
            for f in forms
            if f.lam_coeffs == lam_vec
            and f.coeffs == tuple(-1 if k == pos else 0 for k in range(1, im.N + 1))
        ]
        assert len(matches) == 1


def test_lusztig_h_rep_rejects_family_a():
    with pytest.raises(ValueError):
        lusztig_polytope_h_rep(LieType("A", 2))
    with pytest.raises(ValueError):
        lusztig_branching_h_rep(LieType("A", 2))


def test_lusztig_branching_points_d3_frozen():
    t = LieType("D", 3)
    star = dual_weight(Weight(t, (0, 0, 1)))
    assert lusztig_branching_points(t, star) == [(0, 0, 0), (1, 0, 0)]


def test_zero_weight_polytopes_are_origin():
    for t in BCD_TYPES:
        lam = Weight(t, (0,) * t.rank)
        N = len(canonical_word(t).letters)
        assert string_polytope_points(t, lam) == [(0,) * N]
        assert lusztig_polytope_points(t, lam) == [(0,) * N]


def test_string_points_satisfy_recursion():
    t = LieType("B", 3)
    w = canonical_word(t)
    for pt in string_polytope_points(t, Weight(t, (0, 1, 0))):
        assert littelmann_member(w, pt)[0]
