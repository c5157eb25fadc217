import pytest
from hypothesis import given
from hypothesis import strategies as st

from stringcones.rootsys import LieType, Weight, positive_roots
from stringcones.weyl import (
    ReducedWord,
    a_canonical_word,
    canonical_tilde_word,
    canonical_word,
    dual_weight,
    identity,
    is_reduced,
    length,
    longest_element,
    minimal_coset_rep,
    minimal_coset_rep_closed,
    positive_root_order,
    reduced_subwords,
    simple_reflection,
    word_to_element,
)

TYPES = [
    LieType("A", 2), LieType("A", 3),
    LieType("B", 2), LieType("B", 3), LieType("B", 4),
    LieType("C", 2), LieType("C", 3), LieType("C", 4),
    LieType("D", 3), LieType("D", 4), LieType("D", 5),
]


def test_canonical_words_frozen():
    assert a_canonical_word(3) == (3, 2, 3, 1, 2, 3)
    assert canonical_word(LieType("A", 2)).letters == (2, 1, 2)
    assert canonical_word(LieType("B", 2)).letters == (1, 2, 1, 2)
    assert canonical_word(LieType("C", 3)).letters == (2, 1, 2, 3, 2, 3, 1, 2, 3)
    assert canonical_word(LieType("D", 3)).letters == (2, 1, 2, 3, 1, 2)
    assert canonical_word(LieType("D", 4)).letters == (
        3, 2, 3, 1, 2, 3, 4, 2, 3, 1, 2, 4
    )
    # the last letter of each tilde block alternates with block parity
    assert canonical_tilde_word(LieType("D", 4)) == (4, 2, 3, 1, 2, 4)
    assert canonical_tilde_word(LieType("D", 5)) == (5, 3, 4, 2, 3, 5, 1, 2, 3, 4)
    assert canonical_tilde_word(LieType("B", 3)) == (3, 2, 3, 1, 2, 3)


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_canonical_word_is_reduced_for_w0(t):
    w = canonical_word(t)
    assert len(w.letters) == len(positive_roots(t))
    assert is_reduced(w)
    elem = word_to_element(w)
    assert length(t, elem) == len(w.letters)
    assert elem == longest_element(t)


def test_longest_element_images_frozen():
    assert longest_element(LieType("B", 2)).image == (-1, -2)
    assert longest_element(LieType("C", 3)).image == (-1, -2, -3)
    # w0 of D_n is -1 only for even n
    assert longest_element(LieType("D", 3)).image == (-1, -2, 3)
    assert longest_element(LieType("D", 4)).image == (-1, -2, -3, -4)


def test_appending_repeated_letter_breaks_reducedness():
    for t in TYPES:
        w = canonical_word(t)
        doubled = ReducedWord(t, w.letters + (w.letters[-1],))
        assert not is_reduced(doubled)


def test_positive_root_order_d3_frozen():
    order = positive_root_order(canonical_word(LieType("D", 3)))
    assert [tuple(b.coords()) for b in order] == [
        (0, 1, -1),
        (1, 0, -1),
        (1, -1, 0),
        (1, 1, 0),
        (1, 0, 1),
        (0, 1, 1),
    ]


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_positive_root_order_is_bijection(t):
    order = positive_root_order(canonical_word(t))
    assert {b.doubled for b in order} == {r.doubled for r in positive_roots(t)}


def test_minimal_coset_rep_d3_frozen():
    z = minimal_coset_rep(LieType("D", 3), 1)
    assert z.image == (2, -1, -3)


@pytest.mark.parametrize("t", [LieType("B", 3), LieType("C", 3), LieType("D", 4),
                               LieType("D", 5)], ids=str)
def test_minimal_coset_rep_matches_closed_form(t):
    for i in range(1, t.rank + 1):
        closed = minimal_coset_rep_closed(t, i)
        if closed is not None:
            assert minimal_coset_rep(t, i) == closed


def test_reduced_subwords_a2():
    t = LieType("A", 2)
    w = canonical_word(t)  # (2, 1, 2)
    s1 = simple_reflection(t, 1)
    assert reduced_subwords(w, s1) == [(1,)]
    s2 = simple_reflection(t, 2)
    assert reduced_subwords(w, s2) == [(0,), (2,)]
    full = reduced_subwords(w, longest_element(t))
    assert full == [(0, 1, 2)]


def test_dual_weight():
    # -w0 is trivial for B/C and even-rank D
    b = LieType("B", 3)
    assert dual_weight(Weight(b, (1, 2, 0))) == Weight(b, (1, 2, 0))
    d4 = LieType("D", 4)
    assert dual_weight(Weight(d4, (0, 1, 2, 3))) == Weight(d4, (0, 1, 2, 3))
    # odd-rank D swaps the two spin nodes
    d3 = LieType("D", 3)
    assert dual_weight(Weight(d3, (1, 2, 3))) == Weight(d3, (1, 3, 2))
    assert dual_weight(dual_weight(Weight(d3, (0, 2, 1)))) == Weight(d3, (0, 2, 1))
    a3 = LieType("A", 3)
    assert dual_weight(Weight(a3, (1, 0, 2))) == Weight(a3, (2, 0, 1))


@given(st.data())
def test_signed_permutation_group_laws(data):
    t = data.draw(st.sampled_from(TYPES))
    letters = data.draw(st.lists(st.integers(1, t.rank), max_size=8))
    w = identity(t.eps_dim)
    for l in letters:
        w = w * simple_reflection(t, l)
    assert w * w.inverse() == identity(t.eps_dim)
    assert (w.inverse()).inverse() == w
    for l in letters:
        s = simple_reflection(t, l)
        assert s * s == identity(t.eps_dim)


@given(st.data())
def test_length_of_inverse(data):
    t = data.draw(st.sampled_from(TYPES))
    letters = data.draw(st.lists(st.integers(1, t.rank), max_size=8))
    w = word_to_element(ReducedWord(t, tuple(letters)))
    assert length(t, w) == length(t, w.inverse())
    assert length(t, w) <= len(letters)
