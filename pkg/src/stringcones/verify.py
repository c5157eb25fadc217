"""Verification sweeps: each criterion pits two independent computation routes
against each other and reports a pass/fail ledger entry.

* cone_equivalence  — explicit H-rep vs. the min/Delta recursion on boxes
* bz_containment    — subword-generated inequalities vs. explicit cone; A-type equality
* dimension_counts  — lattice point counts vs. the Weyl dimension formula
* branching_oracle  — plus-block branching vs. character restriction/stripping
* phi_psi_bijection — string points vs. Lusztig H-rep points under phi/psi
* product_decomposition — full recursion vs. A-recursion x tilde-cone
* poset_fidelity    — emitted cover relations vs. the hand-transcribed D_6 diagram
* oracle_consistency — Freudenthal mass and Weyl invariance
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import branching as br
from . import oracle
from .cones import (
    a_string_cone,
    bz_inequalities,
    cone_poset,
    littelmann_member_batch,
    plus_block_cone,
    string_cone_explicit,
)
from .polytopes import (
    lusztig_branching_points,
    lusztig_polytope_points,
    lusztig_to_string,
    plus_string_to_lusztig,
    string_polytope_points,
    string_to_lusztig,
)
from .rootsys import LieType, Weight
from .weyl import canonical_word, dual_weight

BOX_TYPES = (
    LieType("B", 2),
    LieType("B", 3),
    LieType("C", 2),
    LieType("C", 3),
    LieType("D", 3),
    LieType("D", 4),
)

SWEEP_TYPES = (
    LieType("B", 2),
    LieType("B", 3),
    LieType("B", 4),
    LieType("C", 2),
    LieType("C", 3),
    LieType("C", 4),
    LieType("D", 3),
    LieType("D", 4),
)

# Plus-block cover relations of the intro's D_6 diagram, transcribed by hand:
# an entry (a, b) means t+_a covers t+_b (i.e. t+_b -> t+_a in the drawing).
D6_PLUS_EDGES = (
    ((1, 1), (1, 2)),
    ((1, 2), (1, 3)),
    ((1, 2), (2, 2)),
    ((1, 3), (1, 4)),
    ((1, 3), (2, 3)),
    ((2, 2), (2, 3)),
    ((1, 4), (1, 5)),
    ((1, 4), (2, 4)),
    ((2, 3), (2, 4)),
    ((2, 3), (3, 3)),
    ((1, 5), (2, 5)),
    ((2, 4), (2, 5)),
    ((2, 4), (3, 4)),
    ((3, 3), (3, 4)),
    ((2, 5), (3, 5)),
    ((3, 4), (3, 5)),
    ((3, 4), (4, 4)),
    ((4, 5), (5, 5)),
    ((3, 5), (4, 5)),
    ((4, 4), (4, 5)),
)


@dataclass(frozen=True)
class CriterionResult:
    name: str
    theorem: str
    passed: bool
    detail: str


def _box_points(N: int, bound: int):
    import numpy as np

    ranges = [np.arange(bound + 1)] * N
    grid = np.meshgrid(*ranges, indexing="ij")
    return np.stack([g.ravel() for g in grid], axis=1)


def _form_matrix(forms, N):
    import numpy as np

    return np.array([f.coeffs for f in forms], dtype=np.int64).reshape(-1, N)


def _box_bound(N: int) -> int:
    return 1 if N >= 14 else 2


@lru_cache(maxsize=None)
def _box_data(t: LieType):
    """(points, explicit_mask, recursion_mask) on the criterion box for t."""
    w = canonical_word(t)
    N = len(w.letters)
    pts = _box_points(N, _box_bound(N))
    F = _form_matrix(string_cone_explicit(t).forms, N)
    explicit = (pts @ F.T >= 0).all(axis=1)
    recursion = littelmann_member_batch(w, pts)
    return pts, explicit, recursion


def cone_equivalence(types=BOX_TYPES) -> CriterionResult:
    details = []
    bad = 0
    for t in types:
        pts, explicit, recursion = _box_data(t)
        mism = int((explicit != recursion).sum())
        bad += mism
        details.append(f"{t}: {len(pts)} pts, {mism} mismatches")
    return CriterionResult(
        "cone_equivalence",
        "explicit string cone inequalities == string parametrization recursion",
        bad == 0,
        "; ".join(details),
    )


def bz_containment(types=BOX_TYPES) -> CriterionResult:
    details = []
    ok = True
    for t in types:
        w = canonical_word(t)
        pts, explicit, _ = _box_data(t)
        B = _form_matrix(bz_inequalities(w).forms, len(w.letters))
        viol = int((pts[explicit] @ B.T < 0).any(axis=1).sum())
        ok &= viol == 0
        details.append(f"{t}: {viol} violations")
    for rank in (2, 3):
        ta = LieType("A", rank)
        w = canonical_word(ta)
        N = len(w.letters)
        pts = _box_points(N, 2)
        B = _form_matrix(bz_inequalities(w).forms, N)
        S = _form_matrix(a_string_cone(rank).forms, N)
        same = ((pts @ B.T >= 0).all(axis=1) == (pts @ S.T >= 0).all(axis=1)).all()
        ok &= bool(same)
        details.append(f"A{rank}: generated == string cone on box: {bool(same)}")
    return CriterionResult(
        "bz_containment",
        "subword-generated inequalities hold on the cone; A-type systems coincide",
        ok,
        "; ".join(details),
    )


def sweep(cap: int, types=SWEEP_TYPES):
    """All (type, lambda, dim) with fundamental coefficients <= 2, dim <= cap."""
    for t in types:
        for c in itertools.product(range(3), repeat=t.rank):
            lam = Weight(t, c)
            d = oracle.weyl_dim(t, lam)
            if d <= cap:
                yield t, lam, d


def dimension_counts(cap: int = oracle.DEFAULT_DIM_CAP) -> CriterionResult:
    bad = []
    n_checked = 0
    for t, lam, d in sweep(cap):
        n_checked += 1
        got = len(string_polytope_points(t, lam))
        if got != d:
            bad.append(f"{t} {lam}: {got} != {d}")
    return CriterionResult(
        "dimension_counts",
        "lattice point count == Weyl dimension formula",
        not bad,
        f"{n_checked} weights checked" + ("; " + "; ".join(bad[:5]) if bad else ""),
    )


def branching_oracle(cap: int = oracle.DEFAULT_DIM_CAP) -> CriterionResult:
    bad = []
    n_checked = 0
    for t, lam, d in sweep(cap):
        n_checked += 1
        res = br.branch_multiplicities(t, lam)
        mult = res.multiplicities()
        ora = oracle.restrict_and_decompose(t, lam, cap=cap)
        if mult != ora:
            bad.append(f"{t} {lam}: multiplicities {mult} != oracle {ora}")
            continue
        ta = LieType("A", t.rank - 1)
        dimsum = sum(m * oracle.weyl_dim(ta, Weight(ta, mu)) for mu, m in mult.items())
        if dimsum != d:
            bad.append(f"{t} {lam}: dimension sum {dimsum} != {d}")
            continue
        rep = br.decomposition_report(t, lam)
        if br.reassemble(t, rep) != string_polytope_points(t, lam):
            bad.append(f"{t} {lam}: fiber reassembly mismatch")
    return CriterionResult(
        "branching_oracle",
        "plus-block branching == character restriction; fibers reassemble",
        not bad,
        f"{n_checked} weights checked" + ("; " + "; ".join(bad[:5]) if bad else ""),
    )


def phi_psi_bijection(cap: int = oracle.DEFAULT_DIM_CAP) -> CriterionResult:
    bad = []
    n_checked = 0
    for t, lam, d in sweep(cap):
        n_checked += 1
        # phi_lam lands in the Lusztig polytope of the dual weight lam*,
        # with psi_{lam*} as its inverse
        star = dual_weight(lam)
        pts = string_polytope_points(t, lam)
        imgs = [string_to_lusztig(t, lam, p) for p in pts]
        if any(min(u) < 0 for u in imgs if u):
            bad.append(f"{t} {lam}: negative phi image")
            continue
        if sorted(imgs) != lusztig_polytope_points(t, star):
            bad.append(f"{t} {lam}: phi image != Lusztig H-rep points")
            continue
        if any(lusztig_to_string(t, star, u) != p for p, u in zip(pts, imgs)):
            bad.append(f"{t} {lam}: psi(phi(t)) != t")
            continue
        if any(
            string_to_lusztig(t, lam, lusztig_to_string(t, star, u)) != u
            for u in imgs
        ):
            bad.append(f"{t} {lam}: phi(psi(u)) != u")
            continue
        # branching side: plus projections land in the branching H-rep
        plus_imgs = sorted(
            {plus_string_to_lusztig(t, lam, p) for p in br.branching_points(t, lam)}
        )
        if plus_imgs != lusztig_branching_points(t, star):
            bad.append(f"{t} {lam}: branching H-rep mismatch")
    return CriterionResult(
        "phi_psi_bijection",
        "phi/psi are inverse bijections onto the explicit Lusztig polytopes",
        not bad,
        f"{n_checked} weights checked" + ("; " + "; ".join(bad[:5]) if bad else ""),
    )


def product_decomposition(types=BOX_TYPES) -> CriterionResult:
    import numpy as np

    details = []
    ok = True
    for t in types:
        pts, _, recursion = _box_data(t)
        n = t.rank
        nm = n * (n - 1) // 2
        wa = canonical_word(LieType("A", n - 1))
        minus_ok = littelmann_member_batch(wa, pts[:, :nm])
        plus_forms, entries = plus_block_cone(t)
        P = _form_matrix(plus_forms, len(entries))
        plus_ok = (pts[:, nm:] @ P.T >= 0).all(axis=1)
        mism = int((recursion != (minus_ok & plus_ok)).sum())
        ok &= mism == 0
        details.append(f"{t}: {mism} mismatches")
    return CriterionResult(
        "product_decomposition",
        "recursion membership factors through the A-prefix x tilde-suffix split",
        ok,
        "; ".join(details),
    )


def poset_fidelity() -> CriterionResult:
    t = LieType("D", 6)
    got = {
        ((hi, hj), (li, lj))
        for (hc, hi, hj, hs), (lc, li, lj, ls) in cone_poset(t)
        if hs == "+"
    }
    want = set(D6_PLUS_EDGES)
    ok = got == want
    nodes = {a for e in got for a in e}
    return CriterionResult(
        "poset_fidelity",
        "D_6 plus-block cover relations match the reference diagram",
        ok,
        f"{len(got)} edges over {len(nodes)} nodes"
        + ("" if ok else f"; extra {got - want}, missing {want - got}"),
    )


def oracle_consistency(cap: int = oracle.DEFAULT_DIM_CAP) -> CriterionResult:
    bad = []
    n_checked = 0
    for t, lam, d in sweep(cap):
        n_checked += 1
        mult = oracle.freudenthal_multiplicities(t, lam, cap=cap)
        if sum(mult.values()) != d:
            bad.append(f"{t} {lam}: mass {sum(mult.values())} != {d}")
            continue
        if not oracle.weyl_invariant(t, mult):
            bad.append(f"{t} {lam}: multiset not Weyl-invariant")
    return CriterionResult(
        "oracle_consistency",
        "Freudenthal mass == Weyl dimension; multisets Weyl-invariant",
        not bad,
        f"{n_checked} weights checked" + ("; " + "; ".join(bad[:5]) if bad else ""),
    )


CRITERIA = {
    "cone_equivalence": cone_equivalence,
    "bz_containment": bz_containment,
    "dimension_counts": dimension_counts,
    "branching_oracle": branching_oracle,
    "phi_psi_bijection": phi_psi_bijection,
    "product_decomposition": product_decomposition,
    "poset_fidelity": poset_fidelity,
    "oracle_consistency": oracle_consistency,
}

# criteria that take a dimension cap
_CAPPED = {
    "dimension_counts",
    "branching_oracle",
    "phi_psi_bijection",
    "oracle_consistency",
}


def run(names=None, cap: int = oracle.DEFAULT_DIM_CAP):
    names = list(names) if names else list(CRITERIA)
    unknown = [n for n in names if n not in CRITERIA]
    if unknown:
        raise ValueError(f"unknown criteria: {unknown}")
    results = []
    for name in names:
        fn = CRITERIA[name]
        results.append(fn(cap) if name in _CAPPED else fn())
    return results
