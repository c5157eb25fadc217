"""Independent ground truth: Weyl dimension formula, Freudenthal weight
multiplicities, character-restriction branching, and exhaustive box scans of
the min/Delta recursion.  Everything here is exact rational arithmetic."""

from __future__ import annotations

import itertools
import os
from fractions import Fraction
from functools import lru_cache

from .rootsys import (
    EpsVector,
    LieType,
    Weight,
    coroot,
    pairing,
    positive_roots,
    rho,
    simple_roots,
)
from .weyl import ReducedWord

DEFAULT_DIM_CAP = int(os.environ.get("STRINGCONES_DIM_CAP", "20000"))


@lru_cache(maxsize=None)
def weyl_dim(t: LieType, lam: Weight) -> int:
    """dim V(lambda) = prod_{alpha>0} <lam+rho, alpha^vee> / <rho, alpha^vee>."""
    if not lam.is_dominant:
        raise ValueError(f"lambda {lam} is not dominant")
    r = rho(t)
    top = lam.eps + r
    out = Fraction(1)
    for a in positive_roots(t):
        av = coroot(a)
        out *= Fraction(top.dot(av), r.dot(av))
    assert out.denominator == 1 and out > 0
    return int(out)


@lru_cache(maxsize=None)
def freudenthal_multiplicities(t: LieType, lam: Weight, cap: int = DEFAULT_DIM_CAP):
    """Multiplicity of every weight of V(lambda), as {doubled eps tuple: m}."""
    if not lam.is_dominant:
        raise ValueError(f"lambda {lam} is not dominant")
    dim = weyl_dim(t, lam)
    if dim > cap:
        raise ValueError(f"dim V(lambda) = {dim} exceeds cap {cap}")
    r = rho(t)
    pos = positive_roots(t)
    top = lam.eps + r
    top_norm = top.dot(top)
    mult = {lam.eps.doubled: 1}
    al = [a.doubled for a in simple_roots(t)]
    level = [lam.eps.doubled]
    height = 0  # height of lam - mu for the current level
    while level:
        height += 1
        candidates = set()
        for mu_d in level:
            for a in al:
                candidates.add(tuple(x - y for x, y in zip(mu_d, a)))
        nxt = []
        for mu_d in sorted(candidates):
            if mu_d in mult:
                continue
            mu = EpsVector(mu_d)
            mur = mu + r
            denom = top_norm - mur.dot(mur)
            if denom <= 0:
                continue
            num = Fraction(0)
            for a in pos:
                # mu + k*alpha sits at height >= 0 only for k <= height
                for k in range(1, height + 1):
                    up = mu + a.scale(k)
                    m_up = mult.get(up.doubled, 0)
                    if m_up:
                        num += m_up * up.dot(a)
            m = 2 * num / denom
            assert m.denominator == 1 and m >= 0
            if m > 0:
                mult[mu_d] = int(m)
                nxt.append(mu_d)
        level = nxt
    return mult


def weyl_invariant(t: LieType, mult: dict) -> bool:
    """Check multiplicities are constant along simple-reflection images."""
    from .weyl import simple_reflection

    for i in range(1, t.rank + 1):
        s = simple_reflection(t, i)
        for mu_d, m in mult.items():
            if mult.get(s.act(EpsVector(mu_d)).doubled, 0) != m:
                return False
    return True


def _a_sub_coroots(t: LieType):
    """Simple coroots e_i - e_{i+1} of the embedded A_{n-1}, i = 1..n-1."""
    n = t.rank
    out = []
    for i in range(n - 1):
        d = [0] * t.eps_dim
        d[i], d[i + 1] = 2, -2
        out.append(EpsVector(tuple(d)))
    return out


def project_to_a(t: LieType, mu: EpsVector):
    """A_{n-1} fundamental coordinates of a g-weight."""
    coords = []
    for c in _a_sub_coroots(t):
        v = pairing(mu, c)
        assert isinstance(v, int)
        coords.append(v)
    return tuple(coords)


@lru_cache(maxsize=None)
def _a_character(rank: int, fund_coeffs: tuple):
    """Character of the A_rank module V(mu) as {A fund-coord tuple: m}."""
    t = LieType("A", rank)
    lam = Weight(t, fund_coeffs)
    raw = freudenthal_multiplicities(t, lam, cap=10**9)
    cor = [EpsVector(tuple(2 if k == i else -2 if k == i + 1 else 0
                           for k in range(rank + 1))) for i in range(rank)]
    out = {}
    for mu_d, m in raw.items():
        mu = EpsVector(mu_d)
        key = tuple(int(pairing(mu, c)) for c in cor)
        out[key] = out.get(key, 0) + m
    return out


@lru_cache(maxsize=None)
def _a_inverse_cartan(rank: int):
    """Rows of the inverse Cartan matrix of A_rank, as Fractions."""
    from .rootsys import cartan_matrix

    cm = cartan_matrix(LieType("A", rank))
    n = rank
    aug = [
        [Fraction(cm[i][j]) for j in range(n)]
        + [Fraction(1 if i == k else 0) for k in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _a_dominates(rank: int, f1, f2) -> bool:
    """f1 >= f2 in dominance order (difference a nonnegative root combo)."""
    inv = _a_inverse_cartan(rank)
    diff = [a - b for a, b in zip(f1, f2)]
    # simple-root coordinates c with f = C c, i.e. c = C^{-1} f
    return all(sum(row[j] * diff[j] for j in range(rank)) >= 0 for row in inv)


def restrict_and_decompose(t: LieType, lam: Weight, cap: int = DEFAULT_DIM_CAP):
    """Decompose V(lambda)|_{A_{n-1}} by character restriction and stripping."""
    n = t.rank
    rank_a = n - 1
    mult = freudenthal_multiplicities(t, lam, cap=cap)
    counts = {}
    for mu_d, m in mult.items():
        key = project_to_a(t, EpsVector(mu_d))
        counts[key] = counts.get(key, 0) + m
    result = {}
    while any(counts.values()):
        dominant = [f for f, m in counts.items() if m > 0 and all(c >= 0 for c in f)]
        assert dominant, f"no dominant weight among remaining {counts}"
        maximal = [
            f
            for f in dominant
            if not any(g != f and _a_dominates(rank_a, g, f) for g in dominant)
        ]
        mu = max(maximal)  # lexicographic tie-break among incomparable maxima
        m = counts[mu]
        result[mu] = result.get(mu, 0) + m
        for key, cm in _a_character(rank_a, mu).items():
            counts[key] = counts.get(key, 0) - m * cm
            assert counts[key] >= 0, f"negative multiplicity at {key}"
    return result


def brute_force_cone(w: ReducedWord, box_bound: int, budget: int = 2_000_000):
    """All points of [0, box_bound]^N passing the min/Delta recursion."""
    from .cones import littelmann_member

    N = len(w.letters)
    total = (box_bound + 1) ** N
    if total > budget:
        raise ValueError(f"box scan of {total} points exceeds budget {budget}")
    out = set()
    for p in itertools.product(range(box_bound + 1), repeat=N):
        if littelmann_member(w, p)[0]:
            out.add(p)
    return out
