"""A_{n-1} branching through the tilde (plus) block of the canonical word.

The plus-block inequalities and the plus-block part of the weight-bound chain
involve plus coordinates only, so the branching polytope is enumerated
directly; each lattice point t gives the A_{n-1} highest weight
mu = lambda - sum_k t_k alpha_{i_k} (plus positions), projected onto the
embedded A_{n-1} simple coroots e_i - e_{i+1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cones import plus_block_cone
from .oracle import project_to_a
from .polytopes import _chain_enumerate, _word_vectors, string_polytope_points
from .rootsys import LieType, Weight, simple_roots
from .weyl import canonical_tilde_word


def branching_points(t: LieType, lam: Weight):
    """Lattice points of the string branching polytope (plus block)."""
    if t.family == "A":
        raise ValueError("branching defined for B/C/D only")
    if not lam.is_dominant:
        raise ValueError(f"lambda {lam} is not dominant")
    letters = canonical_tilde_word(t)
    forms, _ = plus_block_cone(t)
    cors, roots = _word_vectors(t, letters)
    return sorted(_chain_enumerate(letters, cors, roots, forms, lam))


def branch_weight(t: LieType, lam: Weight, plus_pt):
    """mu = lambda - t . alpha^T over the plus block, in A_{n-1} coordinates."""
    letters = canonical_tilde_word(t)
    al = simple_roots(t)
    mu = lam.eps
    for letter, v in zip(letters, plus_pt):
        if v:
            mu = mu - al[letter - 1].scale(v)
    return project_to_a(t, mu)


@dataclass(frozen=True)
class BranchingResult:
    lam: Weight
    entries: dict  # A fund-coord tuple -> (multiplicity, tuple of witnesses)

    def multiplicities(self):
        return {mu: m for mu, (m, _) in self.entries.items()}


def branch_multiplicities(t: LieType, lam: Weight) -> BranchingResult:
    grouped = {}
    for pt in branching_points(t, lam):
        mu = branch_weight(t, lam, pt)
        grouped.setdefault(mu, []).append(pt)
    for mu in grouped:
        if any(c < 0 for c in mu):
            raise AssertionError(f"non-dominant branching weight {mu} for {t}, {lam}")
    return BranchingResult(
        lam, {mu: (len(pts), tuple(pts)) for mu, pts in sorted(grouped.items())}
    )


def decomposition_report(t: LieType, lam: Weight):
    """Per branching point: the A_{n-1} fiber and the reassembled full points.

    Returns a list of (plus_point, mu, fiber_points) sorted by plus_point; the
    disjoint union of {minus} x {plus_point} equals the full enumeration.
    """
    n = t.rank
    ta = LieType("A", n - 1)
    out = []
    for pt in branching_points(t, lam):
        mu = branch_weight(t, lam, pt)
        fiber = string_polytope_points(ta, Weight(ta, mu))
        out.append((pt, mu, fiber))
    return out


def reassemble(t: LieType, report):
    """Glue fibers back into full-length points through the shared IndexMap."""
    pts = []
    for plus_pt, _, fiber in report:
        for minus_pt in fiber:
            pts.append(tuple(minus_pt) + tuple(plus_pt))
    return sorted(pts)
